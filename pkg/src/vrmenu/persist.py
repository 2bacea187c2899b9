"""Document file format, request payloads, and scene export.

Documents travel as UTF-8 JSON: ``{formatVersion, revision, menus: [...],
buttons: [...]}`` with lowerCamelCase field names. Serialization is
canonical (sorted object keys, arrays in document order, trailing
newline), so equal documents always produce identical bytes, and the
CLI and the HTTP service can share output byte for byte.

Parsing is strict: malformed text raises :class:`DocumentSyntaxError`
with a position, structural problems raise :class:`DocumentSchemaError`
with a field path like ``menus[2].menuType``, and well-formed documents
that break model invariants raise :class:`DocumentConstraintError`
carrying the violations.
"""

from __future__ import annotations

import json
from dataclasses import replace
from enum import Enum
from typing import Any, Type, TypeVar

from .editor import ButtonSpec, CreateMenuRequest, EditOutcome
from .errors import (
    DocumentConstraintError,
    DocumentSchemaError,
    DocumentSyntaxError,
)
from .layout import DEFAULT_STYLE, LayoutResult, StyleParams, Transform, layout
from .model import (
    FORMAT_VERSION,
    ButtonNode,
    ButtonType,
    MenuDocument,
    MenuNode,
    MenuType,
    PositionMode,
    derive_next_id,
)
from .usability import (
    FittsParams,
    SimulationResult,
    UsabilityReport,
    ViewerConfig,
)
from .validation import Violation, validate

_EnumT = TypeVar("_EnumT", bound=Enum)


# ---------------------------------------------------------------------
# Canonical rendering
# ---------------------------------------------------------------------


def canonical_json(payload: Any) -> str:
    """Render a payload as canonical text: sorted keys, two-space
    indent, trailing newline. Equal payloads give equal bytes."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------
# Schema helpers
# ---------------------------------------------------------------------


def _expect_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise DocumentSchemaError(path, f"expected an object, got {type(value).__name__}")
    return value


def _expect_array(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise DocumentSchemaError(path, f"expected an array, got {type(value).__name__}")
    return value


def _expect_string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise DocumentSchemaError(path, f"expected a string, got {type(value).__name__}")
    return value


def _expect_bool(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise DocumentSchemaError(path, f"expected a boolean, got {type(value).__name__}")
    return value


def _expect_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentSchemaError(path, f"expected an integer, got {type(value).__name__}")
    return value


def _expect_number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentSchemaError(path, f"expected a number, got {type(value).__name__}")
    return float(value)


def _expect_enum(value: Any, enum_cls: Type[_EnumT], path: str) -> _EnumT:
    text = _expect_string(value, path)
    try:
        return enum_cls(text)
    except ValueError:
        allowed = ", ".join(member.value for member in enum_cls)
        raise DocumentSchemaError(path, f"must be one of: {allowed}; got {text!r}") from None


def _reject_unknown_keys(payload: dict, allowed: set[str], path: str) -> None:
    unknown = sorted(set(payload) - allowed)
    if unknown:
        raise DocumentSchemaError(path, f"unknown keys: {', '.join(unknown)}")


def _require(payload: dict, key: str, path: str) -> Any:
    if key not in payload:
        raise DocumentSchemaError(f"{path}.{key}" if path else key, "missing required field")
    return payload[key]


def _optional_string(payload: dict, key: str, path: str) -> str | None:
    value = payload.get(key)
    if value is None:
        return None
    return _expect_string(value, f"{path}.{key}")


# ---------------------------------------------------------------------
# Document payloads
# ---------------------------------------------------------------------

_MENU_KEYS = {"id", "name", "menuType", "isRoot", "title", "positionMode", "active", "buttons"}
_BUTTON_KEYS = {"id", "parentMenu", "name", "text", "iconRef", "buttonType", "subMenuId", "functionId"}


def _menu_payload(menu: MenuNode) -> dict:
    return {
        "id": menu.id,
        "name": menu.name,
        "menuType": menu.menu_type.value,
        "isRoot": menu.is_root,
        "title": menu.title,
        "positionMode": menu.position_mode.value,
        "active": menu.active,
        "buttons": list(menu.buttons),
    }


def _button_payload(button: ButtonNode) -> dict:
    payload = {
        "id": button.id,
        "parentMenu": button.parent_menu,
        "name": button.name,
        "text": button.text,
        "buttonType": button.button_type.value,
    }
    if button.icon_ref is not None:
        payload["iconRef"] = button.icon_ref
    if button.sub_menu_id is not None:
        payload["subMenuId"] = button.sub_menu_id
    if button.function_id is not None:
        payload["functionId"] = button.function_id
    return payload


def document_payload(doc: MenuDocument) -> dict:
    return {
        "formatVersion": doc.format_version,
        "revision": doc.revision,
        "menus": [_menu_payload(menu) for menu in doc.menus.values()],
        "buttons": [_button_payload(button) for button in doc.buttons.values()],
    }


def serialize_document(doc: MenuDocument) -> str:
    return canonical_json(document_payload(doc))


def _menu_from_payload(value: Any, path: str) -> MenuNode:
    payload = _expect_object(value, path)
    _reject_unknown_keys(payload, _MENU_KEYS, path)
    buttons = [
        _expect_string(item, f"{path}.buttons[{index}]")
        for index, item in enumerate(_expect_array(payload.get("buttons", []), f"{path}.buttons"))
    ]
    return MenuNode(
        id=_expect_string(_require(payload, "id", path), f"{path}.id"),
        name=_expect_string(_require(payload, "name", path), f"{path}.name"),
        menu_type=_expect_enum(_require(payload, "menuType", path), MenuType, f"{path}.menuType"),
        is_root=_expect_bool(_require(payload, "isRoot", path), f"{path}.isRoot"),
        title=_expect_string(_require(payload, "title", path), f"{path}.title"),
        position_mode=_expect_enum(
            _require(payload, "positionMode", path), PositionMode, f"{path}.positionMode"
        ),
        active=_expect_bool(payload.get("active", True), f"{path}.active"),
        buttons=buttons,
    )


def _button_from_payload(value: Any, path: str) -> ButtonNode:
    payload = _expect_object(value, path)
    _reject_unknown_keys(payload, _BUTTON_KEYS, path)
    return ButtonNode(
        id=_expect_string(_require(payload, "id", path), f"{path}.id"),
        parent_menu=_expect_string(_require(payload, "parentMenu", path), f"{path}.parentMenu"),
        name=_expect_string(_require(payload, "name", path), f"{path}.name"),
        text=_expect_string(payload.get("text", ""), f"{path}.text"),
        icon_ref=_optional_string(payload, "iconRef", path),
        button_type=_expect_enum(
            _require(payload, "buttonType", path), ButtonType, f"{path}.buttonType"
        ),
        sub_menu_id=_optional_string(payload, "subMenuId", path),
        function_id=_optional_string(payload, "functionId", path),
    )


def document_from_payload(value: Any) -> MenuDocument:
    """Build a document from parsed JSON without constraint checking."""
    payload = _expect_object(value, "$")
    _reject_unknown_keys(payload, {"formatVersion", "revision", "menus", "buttons"}, "$")
    version = _expect_int(_require(payload, "formatVersion", ""), "formatVersion")
    if version != FORMAT_VERSION:
        raise DocumentSchemaError(
            "formatVersion", f"unsupported version {version}, expected {FORMAT_VERSION}"
        )
    revision = _expect_int(payload.get("revision", 0), "revision")
    if revision < 0:
        raise DocumentSchemaError("revision", f"must be >= 0, got {revision}")

    menus: dict[str, MenuNode] = {}
    for index, item in enumerate(_expect_array(payload.get("menus", []), "menus")):
        menu = _menu_from_payload(item, f"menus[{index}]")
        if menu.id in menus:
            raise DocumentSchemaError(f"menus[{index}].id", f"duplicate id {menu.id!r}")
        menus[menu.id] = menu
    buttons: dict[str, ButtonNode] = {}
    for index, item in enumerate(_expect_array(payload.get("buttons", []), "buttons")):
        button = _button_from_payload(item, f"buttons[{index}]")
        if button.id in buttons or button.id in menus:
            raise DocumentSchemaError(f"buttons[{index}].id", f"duplicate id {button.id!r}")
        buttons[button.id] = button

    return MenuDocument(
        format_version=version,
        revision=revision,
        menus=menus,
        buttons=buttons,
        next_id=derive_next_id(menus, buttons),
    )


def parse_document(text: str) -> MenuDocument:
    """Parse and fully check a document file."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    doc = document_from_payload(payload)
    violations = validate(doc)
    if violations:
        raise DocumentConstraintError(violations)
    return doc


# ---------------------------------------------------------------------
# Style / request / config payloads
# ---------------------------------------------------------------------

_STYLE_FIELDS = {
    "buttonWidth": "button_width",
    "buttonHeight": "button_height",
    "gap": "gap",
    "titleHeight": "title_height",
    "planeDistance": "plane_distance",
    "ringRadius": "ring_radius",
    "pieRadius": "pie_radius",
    "matrixCell": "matrix_cell",
}


def style_from_payload(value: Any) -> StyleParams:
    payload = _expect_object(value, "style")
    _reject_unknown_keys(payload, set(_STYLE_FIELDS), "style")
    overrides = {
        field: _expect_number(raw, f"style.{key}")
        for key, field in _STYLE_FIELDS.items()
        if (raw := payload.get(key)) is not None
    }
    try:
        return replace(DEFAULT_STYLE, **overrides)
    except ValueError as exc:
        raise DocumentSchemaError("style", str(exc)) from None


def parse_style(text: str) -> StyleParams:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    return style_from_payload(payload)


_SPEC_KEYS = {"name", "text", "iconRef", "buttonType", "subMenuRef", "functionId"}
_REQUEST_KEYS = {"menuName", "menuType", "isRootMenu", "menuTitle", "buttonSpecs", "positionMode"}


def button_spec_from_payload(value: Any, path: str = "buttonSpec") -> ButtonSpec:
    payload = _expect_object(value, path)
    _reject_unknown_keys(payload, _SPEC_KEYS, path)
    return ButtonSpec(
        name=_expect_string(_require(payload, "name", path), f"{path}.name"),
        button_type=_expect_enum(
            _require(payload, "buttonType", path), ButtonType, f"{path}.buttonType"
        ),
        text=_expect_string(payload.get("text", ""), f"{path}.text"),
        icon_ref=_optional_string(payload, "iconRef", path),
        sub_menu_ref=_optional_string(payload, "subMenuRef", path),
        function_id=_optional_string(payload, "functionId", path),
    )


def create_request_from_payload(value: Any) -> CreateMenuRequest:
    payload = _expect_object(value, "request")
    _reject_unknown_keys(payload, _REQUEST_KEYS, "request")
    specs = tuple(
        button_spec_from_payload(item, f"request.buttonSpecs[{index}]")
        for index, item in enumerate(
            _expect_array(payload.get("buttonSpecs", []), "request.buttonSpecs")
        )
    )
    position = payload.get("positionMode")
    return CreateMenuRequest(
        menu_name=_expect_string(_require(payload, "menuName", "request"), "request.menuName"),
        menu_type=_expect_enum(
            _require(payload, "menuType", "request"), MenuType, "request.menuType"
        ),
        is_root_menu=_expect_bool(
            _require(payload, "isRootMenu", "request"), "request.isRootMenu"
        ),
        menu_title=_expect_string(
            _require(payload, "menuTitle", "request"), "request.menuTitle"
        ),
        button_specs=specs,
        position_mode=(
            _expect_enum(position, PositionMode, "request.positionMode")
            if position is not None
            else None
        ),
    )


def parse_create_request(text: str) -> CreateMenuRequest:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    return create_request_from_payload(payload)


# ---------------------------------------------------------------------
# Outbound payloads
# ---------------------------------------------------------------------


def transform_payload(transform: Transform) -> dict:
    return {
        "position": [float(component) for component in transform.position],
        "yaw": float(transform.yaw),
        "pitch": float(transform.pitch),
        "size": [float(component) for component in transform.size],
    }


def layout_payload(result: LayoutResult) -> dict:
    return {
        "frame": result.frame.value,
        "titleTransform": transform_payload(result.title_transform),
        "buttonTransforms": [transform_payload(t) for t in result.button_transforms],
    }


def report_payload(report: UsabilityReport) -> dict:
    return {
        "menuId": report.menu_id,
        "perButton": [
            {
                "buttonId": entry.button_id,
                "D": float(entry.distance),
                "W": float(entry.width),
                "ID": float(entry.difficulty_bits),
                "MT": float(entry.movement_time),
            }
            for entry in report.per_button
        ],
        "meanMT": float(report.mean_movement_time),
        "maxMT": float(report.max_movement_time),
        "meanID": float(report.mean_difficulty_bits),
        "notes": list(report.notes),
        "viewer": viewer_payload(report.viewer),
        "params": {"a": float(report.params.a), "b": float(report.params.b)},
    }


def viewer_payload(viewer: ViewerConfig) -> dict:
    return {
        "eyePosition": [float(component) for component in viewer.eye_position],
        "startDirection": [float(component) for component in viewer.start_direction],
    }


def simulation_payload(result: SimulationResult) -> dict:
    return {
        "empiricalMeanMT": float(result.empirical_mean_movement_time),
        "perButtonHits": list(result.per_button_hits),
        "trials": result.trials,
        "seed": result.seed,
    }


def violations_payload(violations: list[Violation]) -> list[dict]:
    return [
        {"rule": violation.rule.value, "nodeId": violation.node_id, "message": violation.message}
        for violation in violations
    ]


def outcome_payload(outcome: EditOutcome) -> dict:
    return {
        "createdIds": list(outcome.created_ids),
        "warnings": list(outcome.warnings),
        "revision": outcome.document.revision,
    }


# ---------------------------------------------------------------------
# Scene export
# ---------------------------------------------------------------------


def export_scene(doc: MenuDocument, style: StyleParams = DEFAULT_STYLE) -> dict:
    """Flatten a document into engine-neutral placement data.

    One node per menu title and one per button, transforms straight from
    the layout engine, grouped under per-menu frame tags. Menus whose
    subtree is switched off are exported with an ``inactive`` flag
    rather than dropped, so the host can keep them loaded but hidden.
    """
    shaded: set[str] = set()
    for menu in doc.menus.values():
        if not menu.active:
            shaded.update(doc.subtree_menu_ids(menu.id))

    frames: dict[str, str] = {}
    nodes: list[dict] = []
    for menu in doc.menus.values():
        result = layout(menu, style)
        frames[menu.id] = result.frame.value
        title_node = {
            "id": menu.id,
            "kind": "title",
            "transform": transform_payload(result.title_transform),
            "text": menu.title,
        }
        if menu.id in shaded:
            title_node["inactive"] = True
        nodes.append(title_node)
        for button_id, transform in zip(menu.buttons, result.button_transforms):
            button = doc.buttons[button_id]
            node = {
                "id": button_id,
                "kind": "button",
                "transform": transform_payload(transform),
                "text": button.text,
            }
            if button.icon_ref is not None:
                node["iconRef"] = button.icon_ref
            if menu.id in shaded:
                node["inactive"] = True
            nodes.append(node)
    return {"frames": frames, "nodes": nodes}
