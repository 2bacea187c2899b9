"""Document model for hierarchical VR menu systems.

A :class:`MenuDocument` holds a forest of menus. Each menu owns an ordered
list of buttons; a button either triggers a host-application function or
opens exactly one submenu, which makes the submenu references a forest.
Documents are treated as values: every operation here and in
:mod:`vrmenu.editor` returns a new document and leaves its input untouched,
so callers may freely share documents across threads as long as they
serialize replacement of their own reference.

The capacity, depth, placement, and trigger tables below are the fixed
characteristics of the four built-in menu archetypes.
"""

from __future__ import annotations

import copy
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping

from .errors import UnknownIdError

FORMAT_VERSION = 1


class MenuType(str, Enum):
    LIST = "List"
    MATRIX = "Matrix"
    PIE = "Pie"
    RING = "Ring"


class PositionMode(str, Enum):
    FIXED = "Fixed"
    HAND_REFERENCED = "HandReferenced"
    HEAD_REFERENCED = "HeadReferenced"


class ButtonType(str, Enum):
    SUBMENU = "SubMenu"
    FUNCTION = "Function"


class TriggerMethod(str, Enum):
    RAY_CASTING = "RayCasting"
    TOUCHPAD = "Touchpad"


# ---------------------------------------------------------------------
# Built-in menu characteristics
# ---------------------------------------------------------------------

#: Maximum number of buttons per menu type. List and Ring are exposed as
#: config overrides (see ``max_button_num``); Matrix is pinned by its
#: 3x3 grid and Pie by its four-sector touchpad design.
DEFAULT_CAPACITIES: Mapping[MenuType, int] = {
    MenuType.LIST: 10,
    MenuType.MATRIX: 9,
    MenuType.PIE: 4,
    MenuType.RING: 12,
}

#: Maximum depth of the subtree rooted at a menu of this type.
#: ``None`` means unbounded.
MAX_DEPTH: Mapping[MenuType, int | None] = {
    MenuType.LIST: None,
    MenuType.MATRIX: None,
    MenuType.PIE: 1,
    MenuType.RING: 1,
}

ALLOWED_POSITIONS: Mapping[MenuType, frozenset[PositionMode]] = {
    MenuType.LIST: frozenset({PositionMode.FIXED, PositionMode.HEAD_REFERENCED}),
    MenuType.MATRIX: frozenset({PositionMode.FIXED, PositionMode.HEAD_REFERENCED}),
    MenuType.PIE: frozenset({PositionMode.HAND_REFERENCED}),
    MenuType.RING: frozenset({PositionMode.HEAD_REFERENCED}),
}

DEFAULT_POSITION: Mapping[MenuType, PositionMode] = {
    MenuType.LIST: PositionMode.FIXED,
    MenuType.MATRIX: PositionMode.FIXED,
    MenuType.PIE: PositionMode.HAND_REFERENCED,
    MenuType.RING: PositionMode.HEAD_REFERENCED,
}

TRIGGER_METHODS: Mapping[MenuType, TriggerMethod] = {
    MenuType.LIST: TriggerMethod.RAY_CASTING,
    MenuType.MATRIX: TriggerMethod.RAY_CASTING,
    MenuType.PIE: TriggerMethod.TOUCHPAD,
    MenuType.RING: TriggerMethod.RAY_CASTING,
}


def max_button_num(
    menu_type: MenuType, capacities: Mapping[MenuType, int] | None = None
) -> int:
    """Return the button capacity for ``menu_type``.

    ``capacities`` may override individual entries (useful for List and
    Ring, whose limits are conventions rather than geometry).
    """
    if capacities is not None and menu_type in capacities:
        return capacities[menu_type]
    return DEFAULT_CAPACITIES[menu_type]


def allows_submenus(menu_type: MenuType) -> bool:
    """Whether buttons on this menu type may open submenus."""
    return MAX_DEPTH[menu_type] is None


# ---------------------------------------------------------------------
# Nodes
# ---------------------------------------------------------------------


@dataclass
class MenuNode:
    id: str
    name: str
    menu_type: MenuType
    is_root: bool
    title: str
    position_mode: PositionMode
    active: bool = True
    buttons: list[str] = field(default_factory=list)


@dataclass
class ButtonNode:
    id: str
    parent_menu: str
    name: str
    text: str = ""
    icon_ref: str | None = None
    button_type: ButtonType = ButtonType.FUNCTION
    sub_menu_id: str | None = None
    function_id: str | None = None


@dataclass
class MenuDocument:
    """The whole menu forest plus its revision counter.

    ``next_id`` feeds the deterministic ``m<n>``/``b<n>`` id generator and
    is excluded from equality so that documents which differ only in how
    many ids they have burned compare equal.
    """

    format_version: int = FORMAT_VERSION
    revision: int = 0
    menus: dict[str, MenuNode] = field(default_factory=dict)
    buttons: dict[str, ButtonNode] = field(default_factory=dict)
    next_id: int = field(default=1, compare=False)

    # -- id management -------------------------------------------------

    def allocate_id(self, prefix: str) -> str:
        """Return a fresh ``<prefix><counter>`` id, skipping taken ones."""
        while True:
            candidate = f"{prefix}{self.next_id}"
            self.next_id += 1
            if candidate not in self.menus and candidate not in self.buttons:
                return candidate

    # -- lookups -------------------------------------------------------

    def menu(self, menu_id: str) -> MenuNode:
        try:
            return self.menus[menu_id]
        except KeyError:
            raise UnknownIdError(menu_id) from None

    def button(self, button_id: str) -> ButtonNode:
        try:
            return self.buttons[button_id]
        except KeyError:
            raise UnknownIdError(button_id) from None

    def parent_button_of(self, menu_id: str) -> str | None:
        """Id of the button that opens ``menu_id``, or None for top-level menus."""
        for button in self.buttons.values():
            if button.sub_menu_id == menu_id:
                return button.id
        return None

    def child_menu_ids(self, menu_id: str) -> list[str]:
        """Submenu ids opened by this menu's buttons, in button order."""
        menu = self.menu(menu_id)
        children = []
        for button_id in menu.buttons:
            button = self.buttons.get(button_id)
            if button is not None and button.sub_menu_id is not None:
                children.append(button.sub_menu_id)
        return children

    def subtree_menu_ids(self, menu_id: str) -> list[str]:
        """Menu ids in the subtree rooted at ``menu_id``, root first.

        Tolerates malformed documents (missing references, cycles) so that
        validation itself can rely on it.
        """
        self.menu(menu_id)
        seen: list[str] = []
        stack = [menu_id]
        visited = set()
        while stack:
            current = stack.pop()
            if current in visited or current not in self.menus:
                continue
            visited.add(current)
            seen.append(current)
            stack.extend(reversed(self.child_menu_ids(current)))
        return seen

    def root_menu_ids(self) -> list[str]:
        return [m.id for m in self.menus.values() if m.is_root]

    def iter_menus(self) -> Iterator[MenuNode]:
        return iter(self.menus.values())

    def clone(self) -> MenuDocument:
        return copy.deepcopy(self)


# ---------------------------------------------------------------------
# Document operations
# ---------------------------------------------------------------------


def switch_active(doc: MenuDocument, menu_id: str) -> MenuDocument:
    """Toggle a menu's activation state.

    Deactivating hides the whole subtree, so every descendant menu is
    deactivated as well. Re-activating is deliberately not cascaded:
    children stay hidden until they are re-opened individually.
    Structure is never touched.
    """
    doc.menu(menu_id)
    new = doc.clone()
    menu = new.menus[menu_id]
    menu.active = not menu.active
    if not menu.active:
        for sub_id in new.subtree_menu_ids(menu_id):
            new.menus[sub_id].active = False
    new.revision += 1
    return new


def depth_of(doc: MenuDocument, menu_id: str) -> int:
    """Number of menu levels in the subtree rooted at ``menu_id``.

    A childless menu has depth 1.
    """
    doc.menu(menu_id)

    def walk(current: str, visiting: frozenset[str]) -> int:
        if current in visiting or current not in doc.menus:
            return 0
        children = doc.child_menu_ids(current)
        below = visiting | {current}
        return 1 + max((walk(c, below) for c in children), default=0)

    return walk(menu_id, frozenset())


_ID_SUFFIX = re.compile(r"^[mb](\d+)$")


def derive_next_id(menus: Mapping[str, object], buttons: Mapping[str, object]) -> int:
    """Counter value that cannot collide with any generator-style id."""
    highest = 0
    for node_id in (*menus, *buttons):
        match = _ID_SUFFIX.match(node_id)
        if match:
            highest = max(highest, int(match.group(1)))
    return highest + 1
