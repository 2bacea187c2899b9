"""Validated, revision-bumping edit transactions on menu documents.

Every operation takes a document, returns an :class:`EditOutcome` whose
document passes validation, and bumps the revision by exactly one. Inputs
are never mutated, so a failed call (any :class:`EditError` subclass)
simply leaves the caller holding the unchanged original.

Binding rules for submenus: a bindable target must exist, must not be a
root menu, must not already hang under another button, and must not
contain the would-be host menu in its own subtree (that would close a
reference cycle). Releasing a submenu promotes it to a root menu rather
than deleting it; destructive cleanup is the business of
:func:`remove_button`, which takes the whole subtree with it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .errors import (
    CAPACITY_ALERT,
    BadSubMenuRefError,
    CapacityExceededError,
    DepthViolationError,
    InvalidRequestError,
)
from .model import (
    ALLOWED_POSITIONS,
    ButtonNode,
    ButtonType,
    DEFAULT_POSITION,
    MenuDocument,
    MenuNode,
    MenuType,
    PositionMode,
    allows_submenus,
    max_button_num,
)


@dataclass(frozen=True)
class ButtonSpec:
    """Requested contents of one button."""

    name: str
    button_type: ButtonType
    text: str = ""
    icon_ref: str | None = None
    sub_menu_ref: str | None = None
    function_id: str | None = None


@dataclass(frozen=True)
class CreateMenuRequest:
    """Everything the creator needs to instantiate one menu."""

    menu_name: str
    menu_type: MenuType
    is_root_menu: bool
    menu_title: str
    button_specs: tuple[ButtonSpec, ...] = ()
    position_mode: PositionMode | None = None


@dataclass(frozen=True)
class EditOutcome:
    document: MenuDocument
    created_ids: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()


class SelectionKind(str, Enum):
    MENU = "menu"
    BUTTON = "button"
    NONE = "none"


# ---------------------------------------------------------------------
# Creator
# ---------------------------------------------------------------------


def create_menu(
    doc: MenuDocument,
    request: CreateMenuRequest,
    capacities: Mapping[MenuType, int] | None = None,
) -> EditOutcome:
    """Instantiate a menu and its buttons from a creation request.

    Requests longer than the menu type's capacity are truncated to the
    leading specs and a warning is emitted; everything else about the
    request must already be consistent.
    """
    capacity = max_button_num(request.menu_type, capacities)
    specs = list(request.button_specs)
    warnings = []
    if len(specs) > capacity:
        specs = specs[:capacity]
        warnings.append(CAPACITY_ALERT)

    position = request.position_mode or DEFAULT_POSITION[request.menu_type]
    if position not in ALLOWED_POSITIONS[request.menu_type]:
        raise InvalidRequestError(
            f"position mode {position.value} is not allowed for "
            f"{request.menu_type.value} menus"
        )

    bound: set[str] = set()
    for spec in specs:
        _check_spec(spec)
        if spec.button_type is ButtonType.SUBMENU:
            if not allows_submenus(request.menu_type):
                raise DepthViolationError("<new>", request.menu_type.value)
            _check_bind_target(doc, spec.sub_menu_ref, host_menu_id=None)
            if spec.sub_menu_ref in bound:
                raise BadSubMenuRefError(
                    spec.sub_menu_ref, "referenced twice in one request"
                )
            bound.add(spec.sub_menu_ref)

    new = doc.clone()
    menu_id = new.allocate_id("m")
    menu = MenuNode(
        id=menu_id,
        name=request.menu_name,
        menu_type=request.menu_type,
        is_root=request.is_root_menu,
        title=request.menu_title,
        position_mode=position,
    )
    new.menus[menu_id] = menu
    created = [menu_id]
    for spec in specs:
        button_id = new.allocate_id("b")
        new.buttons[button_id] = ButtonNode(
            id=button_id,
            parent_menu=menu_id,
            name=spec.name,
            text=spec.text,
            icon_ref=spec.icon_ref,
            button_type=spec.button_type,
            sub_menu_id=spec.sub_menu_ref,
            function_id=spec.function_id,
        )
        menu.buttons.append(button_id)
        if spec.sub_menu_ref is not None:
            new.menus[spec.sub_menu_ref].is_root = False
        created.append(button_id)
    new.revision += 1
    return EditOutcome(new, tuple(created), tuple(warnings))


# ---------------------------------------------------------------------
# Modifier
# ---------------------------------------------------------------------


def resolve_selection(doc: MenuDocument, node_id: str) -> SelectionKind:
    """Classify an id so a modifier panel knows which mode to enter."""
    if node_id in doc.menus:
        return SelectionKind.MENU
    if node_id in doc.buttons:
        return SelectionKind.BUTTON
    return SelectionKind.NONE


def set_button_type(
    doc: MenuDocument,
    button_id: str,
    new_type: ButtonType,
    sub_menu_ref: str | None = None,
    function_id: str | None = None,
) -> EditOutcome:
    """Retype a button, binding or releasing its submenu reference.

    Switching to ``Function`` releases the old submenu, which becomes a
    root menu of its own. Switching to ``SubMenu`` binds ``sub_menu_ref``
    and marks it non-root.
    """
    button = doc.button(button_id)
    if new_type is ButtonType.SUBMENU:
        host = doc.menu(button.parent_menu)
        if not allows_submenus(host.menu_type):
            raise DepthViolationError(host.id, host.menu_type.value)
        if sub_menu_ref is None:
            raise InvalidRequestError(
                f"retyping {button_id!r} to SubMenu needs a submenu reference"
            )
        if sub_menu_ref != button.sub_menu_id:
            _check_bind_target(doc, sub_menu_ref, host_menu_id=host.id)
    else:
        if function_id is None:
            raise InvalidRequestError(
                f"retyping {button_id!r} to Function needs a function id"
            )

    new = doc.clone()
    target = new.buttons[button_id]
    released = target.sub_menu_id
    if new_type is ButtonType.SUBMENU:
        target.button_type = ButtonType.SUBMENU
        target.sub_menu_id = sub_menu_ref
        target.function_id = None
        new.menus[sub_menu_ref].is_root = False
        if released is not None and released != sub_menu_ref:
            new.menus[released].is_root = True
    else:
        target.button_type = ButtonType.FUNCTION
        target.function_id = function_id
        target.sub_menu_id = None
        if released is not None:
            new.menus[released].is_root = True
    new.revision += 1
    return EditOutcome(new)


def set_button_text(doc: MenuDocument, button_id: str, text: str) -> EditOutcome:
    doc.button(button_id)
    new = doc.clone()
    new.buttons[button_id].text = text
    new.revision += 1
    return EditOutcome(new)


def set_button_icon(
    doc: MenuDocument, button_id: str, icon_ref: str | None
) -> EditOutcome:
    doc.button(button_id)
    new = doc.clone()
    new.buttons[button_id].icon_ref = icon_ref
    new.revision += 1
    return EditOutcome(new)


def set_menu_title(doc: MenuDocument, menu_id: str, title: str) -> EditOutcome:
    doc.menu(menu_id)
    new = doc.clone()
    new.menus[menu_id].title = title
    new.revision += 1
    return EditOutcome(new)


def remove_button(doc: MenuDocument, button_id: str) -> EditOutcome:
    """Delete a button; a bound submenu goes with it, subtree and all."""
    button = doc.button(button_id)
    new = doc.clone()
    owner = new.menus.get(button.parent_menu)
    if owner is not None and button_id in owner.buttons:
        owner.buttons.remove(button_id)
    if button.sub_menu_id is not None:
        for menu_id in new.subtree_menu_ids(button.sub_menu_id):
            for child_button in new.menus[menu_id].buttons:
                new.buttons.pop(child_button, None)
            del new.menus[menu_id]
    del new.buttons[button_id]
    new.revision += 1
    return EditOutcome(new)


def add_button(
    doc: MenuDocument,
    menu_id: str,
    spec: ButtonSpec,
    capacities: Mapping[MenuType, int] | None = None,
) -> EditOutcome:
    """Append one button to an existing menu, capacity checked first."""
    menu = doc.menu(menu_id)
    capacity = max_button_num(menu.menu_type, capacities)
    if len(menu.buttons) >= capacity:
        raise CapacityExceededError(menu_id, len(menu.buttons) + 1, capacity)
    _check_spec(spec)
    if spec.button_type is ButtonType.SUBMENU:
        if not allows_submenus(menu.menu_type):
            raise DepthViolationError(menu_id, menu.menu_type.value)
        _check_bind_target(doc, spec.sub_menu_ref, host_menu_id=menu_id)

    new = doc.clone()
    button_id = new.allocate_id("b")
    new.buttons[button_id] = ButtonNode(
        id=button_id,
        parent_menu=menu_id,
        name=spec.name,
        text=spec.text,
        icon_ref=spec.icon_ref,
        button_type=spec.button_type,
        sub_menu_id=spec.sub_menu_ref,
        function_id=spec.function_id,
    )
    new.menus[menu_id].buttons.append(button_id)
    if spec.sub_menu_ref is not None:
        new.menus[spec.sub_menu_ref].is_root = False
    new.revision += 1
    return EditOutcome(new, (button_id,))


# ---------------------------------------------------------------------
# Shared checks
# ---------------------------------------------------------------------


def _check_spec(spec: ButtonSpec) -> None:
    if spec.button_type is ButtonType.SUBMENU:
        if spec.sub_menu_ref is None:
            raise InvalidRequestError(
                f"submenu button {spec.name!r} needs a submenu reference"
            )
        if spec.function_id is not None:
            raise InvalidRequestError(
                f"submenu button {spec.name!r} must not carry a function id"
            )
    else:
        if spec.function_id is None:
            raise InvalidRequestError(
                f"function button {spec.name!r} needs a function id"
            )
        if spec.sub_menu_ref is not None:
            raise InvalidRequestError(
                f"function button {spec.name!r} must not carry a submenu reference"
            )


def _check_bind_target(
    doc: MenuDocument, target_id: str, host_menu_id: str | None
) -> None:
    target = doc.menus.get(target_id)
    if target is None:
        raise BadSubMenuRefError(target_id, "no such menu")
    if target.is_root:
        raise BadSubMenuRefError(target_id, "a root menu cannot be a submenu")
    if doc.parent_button_of(target_id) is not None:
        raise BadSubMenuRefError(target_id, "already bound to another button")
    if host_menu_id is not None and host_menu_id in doc.subtree_menu_ids(target_id):
        raise BadSubMenuRefError(target_id, "binding would create a cycle")
