"""Engine-agnostic toolkit for hierarchical VR menus.

Build menu documents, validate their structure, lay the four menu
archetypes out in 3D, score selection difficulty with an angular
aimed-movement model, and drive it all from a CLI or an HTTP service.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .editor import (
    ButtonSpec,
    CreateMenuRequest,
    EditOutcome,
    SelectionKind,
    add_button,
    create_menu,
    remove_button,
    resolve_selection,
    set_button_icon,
    set_button_text,
    set_button_type,
    set_menu_title,
)
from .errors import (
    CAPACITY_ALERT,
    AnalysisError,
    BadSubMenuRefError,
    BehindViewerError,
    CapacityExceededError,
    DepthViolationError,
    DocumentConstraintError,
    DocumentIOError,
    DocumentSchemaError,
    DocumentSyntaxError,
    EditError,
    EmptyMenuError,
    InvalidMenuError,
    InvalidRequestError,
    NonPositiveWidthError,
    RevisionConflictError,
    UnknownIdError,
    VRMenuError,
)
from .layout import (
    DEFAULT_STYLE,
    Frame,
    LayoutResult,
    StyleParams,
    Transform,
    layout,
    relayout_after_edit,
)
from .model import (
    DEFAULT_CAPACITIES,
    FORMAT_VERSION,
    ButtonNode,
    ButtonType,
    MenuDocument,
    MenuNode,
    MenuType,
    PositionMode,
    TriggerMethod,
    allows_submenus,
    depth_of,
    max_button_num,
    switch_active,
)
from .persist import (
    canonical_json,
    export_scene,
    parse_create_request,
    parse_document,
    parse_style,
    serialize_document,
)
from .usability import (
    ButtonUsability,
    FittsParams,
    SimulationResult,
    UsabilityReport,
    ViewerConfig,
    angular_distance,
    angular_width,
    default_viewer,
    index_of_difficulty,
    menu_usability_report,
    movement_time,
    simulate_selections,
)
from .validation import Rule, Violation, validate

__version__ = "0.1.0"

__all__ = [
    "ButtonNode",
    "ButtonSpec",
    "ButtonType",
    "ButtonUsability",
    "CAPACITY_ALERT",
    "CreateMenuRequest",
    "DEFAULT_CAPACITIES",
    "DEFAULT_STYLE",
    "EditOutcome",
    "FORMAT_VERSION",
    "FittsParams",
    "Frame",
    "KERNEL_BACKEND",
    "LayoutResult",
    "MenuDocument",
    "MenuNode",
    "MenuType",
    "PositionMode",
    "Rule",
    "SelectionKind",
    "SimulationResult",
    "StyleParams",
    "Transform",
    "TriggerMethod",
    "UsabilityReport",
    "ViewerConfig",
    "Violation",
    "add_button",
    "allows_submenus",
    "angular_distance",
    "angular_width",
    "canonical_json",
    "create_menu",
    "default_viewer",
    "depth_of",
    "export_scene",
    "index_of_difficulty",
    "layout",
    "max_button_num",
    "menu_usability_report",
    "movement_time",
    "parse_create_request",
    "parse_document",
    "parse_style",
    "relayout_after_edit",
    "remove_button",
    "resolve_selection",
    "serialize_document",
    "set_button_icon",
    "set_button_text",
    "set_button_type",
    "set_menu_title",
    "simulate_selections",
    "switch_active",
    "validate",
    # error types
    "AnalysisError",
    "BadSubMenuRefError",
    "BehindViewerError",
    "CapacityExceededError",
    "DepthViolationError",
    "DocumentConstraintError",
    "DocumentIOError",
    "DocumentSchemaError",
    "DocumentSyntaxError",
    "EditError",
    "EmptyMenuError",
    "InvalidMenuError",
    "InvalidRequestError",
    "NonPositiveWidthError",
    "RevisionConflictError",
    "UnknownIdError",
    "VRMenuError",
]
