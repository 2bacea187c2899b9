"""Shared test machinery: random documents and random edit sequences.

Documents are grown exclusively through editor transactions, so every
generated document is valid by construction. The op driver deliberately
aims some operations at bad targets (unknown ids, full menus, root
menus) to exercise the failure paths; callers see which ops succeeded
and which raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from vrmenu import editor
from vrmenu.errors import EditError, UnknownIdError
from vrmenu.model import (
    DEFAULT_CAPACITIES,
    FORMAT_VERSION,
    ButtonType,
    MenuDocument,
    MenuType,
)

_MENU_TYPES = tuple(MenuType)
_WORDS = ("alpha", "beta", "gamma", "delta", "omega", "save", "open", "tools", "view")


def function_spec(rng: random.Random, tag: str = "fn") -> editor.ButtonSpec:
    return editor.ButtonSpec(
        name=rng.choice(_WORDS),
        button_type=ButtonType.FUNCTION,
        text=rng.choice(("", rng.choice(_WORDS).title())),
        icon_ref=rng.choice((None, f"icons/{rng.choice(_WORDS)}")),
        function_id=f"{tag}.{rng.randrange(1000)}",
    )


def submenu_spec(rng: random.Random, target_id: str) -> editor.ButtonSpec:
    return editor.ButtonSpec(
        name=rng.choice(_WORDS),
        button_type=ButtonType.SUBMENU,
        text=rng.choice(("", rng.choice(_WORDS).title())),
        sub_menu_ref=target_id,
    )


def random_create_request(
    rng: random.Random, doc: MenuDocument, is_root: bool | None = None
) -> editor.CreateMenuRequest:
    menu_type = rng.choice(_MENU_TYPES)
    capacity = DEFAULT_CAPACITIES[menu_type]
    count = rng.randrange(0, capacity + 1)
    specs = []
    bindable = _bindable_menus(doc)
    for _ in range(count):
        if (
            bindable
            and menu_type in (MenuType.LIST, MenuType.MATRIX)
            and rng.random() < 0.25
        ):
            specs.append(submenu_spec(rng, bindable.pop(rng.randrange(len(bindable)))))
        else:
            specs.append(function_spec(rng))
    return editor.CreateMenuRequest(
        menu_name=rng.choice(_WORDS),
        menu_type=menu_type,
        is_root_menu=rng.random() < 0.7 if is_root is None else is_root,
        menu_title=rng.choice(_WORDS).title(),
        button_specs=tuple(specs),
    )


def _bindable_menus(doc: MenuDocument) -> list[str]:
    """Menus a submenu button may legally reference right now."""
    bound = {b.sub_menu_id for b in doc.buttons.values() if b.sub_menu_id}
    return [
        menu_id
        for menu_id, menu in doc.menus.items()
        if not menu.is_root and menu_id not in bound
    ]


@dataclass
class OpResult:
    op: str
    outcome: editor.EditOutcome | None
    error: Exception | None


def apply_random_op(doc: MenuDocument, rng: random.Random) -> OpResult:
    """Attempt one randomly chosen edit; some attempts are doomed on
    purpose so failure atomicity gets exercised too."""
    menus = list(doc.menus)
    buttons = list(doc.buttons)
    ops = ["create"]
    if menus:
        ops += ["add", "title"]
    if buttons:
        ops += ["remove", "retype", "text", "icon"]
    op = rng.choice(ops)

    def pick_menu() -> str:
        if rng.random() < 0.05:
            return "no-such-menu"
        return rng.choice(menus)

    def pick_button() -> str:
        if rng.random() < 0.05:
            return "no-such-button"
        return rng.choice(buttons)

    try:
        if op == "create":
            outcome = editor.create_menu(doc, random_create_request(rng, doc))
        elif op == "add":
            menu_id = pick_menu()
            bindable = _bindable_menus(doc)
            if bindable and rng.random() < 0.25:
                spec = submenu_spec(rng, rng.choice(bindable))
            else:
                spec = function_spec(rng)
            outcome = editor.add_button(doc, menu_id, spec)
        elif op == "title":
            outcome = editor.set_menu_title(doc, pick_menu(), rng.choice(_WORDS).title())
        elif op == "remove":
            outcome = editor.remove_button(doc, pick_button())
        elif op == "retype":
            button_id = pick_button()
            if rng.random() < 0.5:
                outcome = editor.set_button_type(
                    doc, button_id, ButtonType.FUNCTION, function_id=f"fn.{rng.randrange(100)}"
                )
            else:
                bindable = _bindable_menus(doc)
                target = rng.choice(bindable) if bindable and rng.random() < 0.8 else pick_menu()
                outcome = editor.set_button_type(
                    doc, button_id, ButtonType.SUBMENU, sub_menu_ref=target
                )
        elif op == "text":
            outcome = editor.set_button_text(doc, pick_button(), rng.choice(_WORDS))
        else:
            outcome = editor.set_button_icon(
                doc, pick_button(), rng.choice((None, f"icons/{rng.choice(_WORDS)}"))
            )
    except (EditError, UnknownIdError) as exc:
        return OpResult(op, None, exc)
    return OpResult(op, outcome, None)


def random_document(seed: int, ops: int = 8) -> MenuDocument:
    """Grow a valid document by applying random edits from empty."""
    rng = random.Random(seed)
    doc = MenuDocument(format_version=FORMAT_VERSION)
    for _ in range(ops):
        result = apply_random_op(doc, rng)
        if result.outcome is not None:
            doc = result.outcome.document
    return doc
