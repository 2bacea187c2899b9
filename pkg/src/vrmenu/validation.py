"""Structural validation of menu documents.

Violations are data, not exceptions: ``validate`` always returns a list,
and an empty list is the definition of a well-formed document. The editor
keeps this invariant closed over all its transactions, so any non-empty
result here means a document was built or mutated outside the editor.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .model import (
    ALLOWED_POSITIONS,
    ButtonType,
    MenuDocument,
    MenuType,
    allows_submenus,
    max_button_num,
)


class Rule(str, Enum):
    UNKNOWN_REFERENCE = "UnknownReference"
    OWNERSHIP = "Ownership"
    DOUBLE_PARENT = "DoubleParent"
    CYCLE = "Cycle"
    ROOT_REFERENCED = "RootReferenced"
    CAPACITY_EXCEEDED = "CapacityExceeded"
    TYPE_REF_MISMATCH = "TypeRefMismatch"
    DEPTH_VIOLATION = "DepthViolation"
    POSITION_MODE = "PositionMode"


@dataclass(frozen=True)
class Violation:
    rule: Rule
    node_id: str
    message: str


def validate(
    doc: MenuDocument, capacities: Mapping[MenuType, int] | None = None
) -> list[Violation]:
    """Check every structural invariant; return one Violation per breach.

    Rules enforced:

    * every ``buttons`` entry and every ``subMenuId``/``parentMenu``
      resolves to an existing node of the right kind
    * each button is owned by exactly one menu, and that menu is its
      ``parentMenu``
    * no menu has more buttons than its type's capacity
    * a menu's position mode is allowed for its type
    * ``SubMenu`` buttons carry a submenu reference and no function id;
      ``Function`` buttons the reverse
    * submenu references form a forest: no menu has two parent buttons,
      no reference chain cycles, and no root menu is referenced
    * depth-1 menu types (Pie, Ring) hold no submenu buttons

    A menu that is neither root nor referenced is legal: it is a pending
    submenu waiting to be bound.
    """
    violations: list[Violation] = []
    owners: dict[str, str] = {}

    for menu in doc.menus.values():
        capacity = max_button_num(menu.menu_type, capacities)
        if len(menu.buttons) > capacity:
            violations.append(
                Violation(
                    Rule.CAPACITY_EXCEEDED,
                    menu.id,
                    f"menu {menu.id!r} has {len(menu.buttons)} buttons, "
                    f"capacity of {menu.menu_type.value} is {capacity}",
                )
            )
        if menu.position_mode not in ALLOWED_POSITIONS[menu.menu_type]:
            violations.append(
                Violation(
                    Rule.POSITION_MODE,
                    menu.id,
                    f"position mode {menu.position_mode.value} is not allowed "
                    f"for {menu.menu_type.value} menus",
                )
            )
        for button_id in menu.buttons:
            if button_id not in doc.buttons:
                violations.append(
                    Violation(
                        Rule.UNKNOWN_REFERENCE,
                        menu.id,
                        f"menu {menu.id!r} lists unknown button {button_id!r}",
                    )
                )
                continue
            if button_id in owners:
                violations.append(
                    Violation(
                        Rule.OWNERSHIP,
                        button_id,
                        f"button {button_id!r} is listed by both "
                        f"{owners[button_id]!r} and {menu.id!r}",
                    )
                )
                continue
            owners[button_id] = menu.id

    parents: dict[str, list[str]] = {}
    for button in doc.buttons.values():
        owner = owners.get(button.id)
        if owner is None:
            violations.append(
                Violation(
                    Rule.OWNERSHIP,
                    button.id,
                    f"button {button.id!r} is not listed by any menu",
                )
            )
        elif button.parent_menu != owner:
            violations.append(
                Violation(
                    Rule.OWNERSHIP,
                    button.id,
                    f"button {button.id!r} names parent {button.parent_menu!r} "
                    f"but is listed by {owner!r}",
                )
            )
        if button.parent_menu not in doc.menus:
            violations.append(
                Violation(
                    Rule.UNKNOWN_REFERENCE,
                    button.id,
                    f"button {button.id!r} names unknown parent menu "
                    f"{button.parent_menu!r}",
                )
            )

        violations.extend(_check_type_coupling(button))

        if button.sub_menu_id is not None:
            violations.extend(_check_submenu_edge(doc, button, parents))

    for menu_id, referrers in parents.items():
        if len(referrers) > 1:
            violations.append(
                Violation(
                    Rule.DOUBLE_PARENT,
                    menu_id,
                    f"menu {menu_id!r} is referenced as submenu by "
                    f"{len(referrers)} buttons: {', '.join(sorted(referrers))}",
                )
            )

    violations.extend(_find_cycles(doc))
    return violations


def _check_type_coupling(button) -> list[Violation]:
    problems = []
    if button.button_type is ButtonType.SUBMENU:
        if button.sub_menu_id is None:
            problems.append(
                f"submenu button {button.id!r} has no submenu reference"
            )
        if button.function_id is not None:
            problems.append(
                f"submenu button {button.id!r} carries a function id"
            )
    else:
        if button.function_id is None:
            problems.append(
                f"function button {button.id!r} has no function id"
            )
        if button.sub_menu_id is not None:
            problems.append(
                f"function button {button.id!r} carries a submenu reference"
            )
    return [Violation(Rule.TYPE_REF_MISMATCH, button.id, m) for m in problems]


def _check_submenu_edge(
    doc: MenuDocument, button, parents: dict[str, list[str]]
) -> list[Violation]:
    violations = []
    target_id = button.sub_menu_id
    target = doc.menus.get(target_id)
    if target is None:
        return [
            Violation(
                Rule.UNKNOWN_REFERENCE,
                button.id,
                f"button {button.id!r} references unknown submenu {target_id!r}",
            )
        ]
    parents.setdefault(target_id, []).append(button.id)
    if target.is_root:
        violations.append(
            Violation(
                Rule.ROOT_REFERENCED,
                target_id,
                f"root menu {target_id!r} is referenced as submenu by "
                f"button {button.id!r}",
            )
        )
    host = doc.menus.get(button.parent_menu)
    if host is not None and not allows_submenus(host.menu_type):
        violations.append(
            Violation(
                Rule.DEPTH_VIOLATION,
                button.id,
                f"button {button.id!r} opens a submenu from a "
                f"{host.menu_type.value} menu, which is capped at depth 1",
            )
        )
    return violations


def _find_cycles(doc: MenuDocument) -> list[Violation]:
    # Submenu edges only; a cycle means some menu is its own ancestor.
    state: dict[str, int] = {}  # 0 in progress, 1 done
    on_cycle: set[str] = set()

    def visit(menu_id: str, path: list[str]) -> None:
        if menu_id not in doc.menus:
            return
        if state.get(menu_id) == 1:
            return
        if state.get(menu_id) == 0:
            on_cycle.update(path[path.index(menu_id):])
            return
        state[menu_id] = 0
        path.append(menu_id)
        for child in doc.child_menu_ids(menu_id):
            visit(child, path)
        path.pop()
        state[menu_id] = 1

    for menu_id in doc.menus:
        if menu_id not in state:
            visit(menu_id, [])
    return [
        Violation(
            Rule.CYCLE,
            menu_id,
            f"menu {menu_id!r} is part of a submenu reference cycle",
        )
        for menu_id in sorted(on_cycle)
    ]
