"""Exception hierarchy shared across the package.

Everything raised on bad *data* (corrupt snapshots, schema violations,
malformed queries) derives from EESMatchError so callers, in particular the
CLI, can separate data errors from genuine bugs.
"""

from __future__ import annotations


class EESMatchError(Exception):
    """Base class for all data-level errors raised by this package."""


class GraphError(EESMatchError):
    """Graph operation violated the store's schema or referenced a missing node."""


class SnapshotError(EESMatchError):
    """Snapshot file is malformed or internally inconsistent."""


class QuerySyntaxError(EESMatchError):
    """Query text rejected by the parser.

    Carries the character offset of the failure and, when known, the set of
    token descriptions that would have been accepted there.
    """

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        detail = f"at offset {position}: {message}"
        if expected:
            detail += " (expected " + " | ".join(expected) + ")"
        super().__init__(detail)
        self.position = position
        self.expected = expected


class RecordError(EESMatchError):
    """A record document failed schema validation.

    ``path`` locates the offending field (e.g. ``events[2].entity_names``)
    and ``rule`` names the violated constraint.
    """

    def __init__(self, path: str, rule: str, message: str = ""):
        super().__init__(f"{path}: {rule}" + (f": {message}" if message else ""))
        self.path = path
        self.rule = rule


class EmbeddingServiceError(EESMatchError):
    """Remote embedding endpoint returned an unusable response."""
