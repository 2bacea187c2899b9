"""Exception hierarchy shared by the model, editor, analysis, and I/O layers.

The CLI maps these onto its stable exit codes and the HTTP service onto
status codes, so new error types should subclass one of the existing
branches rather than ``Exception`` directly.
"""

from __future__ import annotations

# Alert text shown when a menu is asked to hold more buttons than its
# type allows. Reused verbatim by the editor, CLI, and HTTP service.
CAPACITY_ALERT = "the number of buttons exceeds the maximum"


class VRMenuError(Exception):
    """Base class for all toolkit errors."""


class UnknownIdError(VRMenuError):
    """An id does not resolve to a menu or button in the document."""

    def __init__(self, node_id: str, message: str | None = None):
        self.node_id = node_id
        super().__init__(message or f"unknown id: {node_id!r}")


class EditError(VRMenuError):
    """An edit transaction was rejected; the document is unchanged."""


class CapacityExceededError(EditError):
    def __init__(self, menu_id: str, attempted: int, capacity: int):
        self.menu_id = menu_id
        self.attempted = attempted
        self.capacity = capacity
        super().__init__(CAPACITY_ALERT)


class BadSubMenuRefError(EditError):
    """Submenu reference is unknown, a root menu, already bound, or cyclic."""

    def __init__(self, target_id: str, reason: str):
        self.target_id = target_id
        self.reason = reason
        super().__init__(f"bad submenu reference {target_id!r}: {reason}")


class DepthViolationError(EditError):
    """A submenu button was requested on a menu type capped at depth 1."""

    def __init__(self, menu_id: str, menu_type: str):
        self.menu_id = menu_id
        self.menu_type = menu_type
        super().__init__(
            f"{menu_type} menu {menu_id!r} cannot hold submenu buttons"
        )


class InvalidRequestError(EditError):
    """A request or button spec violates its own field coupling rules."""


class InvalidMenuError(VRMenuError):
    """Layout was asked for a menu that fails validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        detail = "; ".join(v.message for v in self.violations)
        super().__init__(f"menu fails validation: {detail}")


class AnalysisError(VRMenuError):
    """Base for usability-analysis failures."""


class NonPositiveWidthError(AnalysisError):
    def __init__(self, width: float):
        self.width = width
        super().__init__(f"target width must be positive, got {width}")


class BehindViewerError(AnalysisError):
    def __init__(self, detail: str = "target is behind the viewer"):
        super().__init__(detail)


class EmptyMenuError(AnalysisError):
    def __init__(self, menu_id: str):
        self.menu_id = menu_id
        super().__init__(f"menu {menu_id!r} has no buttons to analyze")


class DocumentIOError(VRMenuError):
    """Base for document parse/serialize failures."""


class DocumentSyntaxError(DocumentIOError):
    """The document text is not well-formed."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"syntax error at line {line}, column {column}: {message}")


class DocumentSchemaError(DocumentIOError):
    """The document text is well-formed but violates the schema."""

    def __init__(self, field_path: str, message: str):
        self.field_path = field_path
        super().__init__(f"{field_path}: {message}")


class DocumentConstraintError(DocumentIOError):
    """The document parsed cleanly but fails structural validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        detail = "; ".join(v.message for v in self.violations)
        super().__init__(f"document violates constraints: {detail}")


class RevisionConflictError(VRMenuError):
    """A mutation cited a revision that is no longer current."""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"revision conflict: expected {expected}, document is at {actual}"
        )
