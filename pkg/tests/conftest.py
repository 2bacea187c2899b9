from __future__ import annotations

import random
import sys

import pytest

from vrmenu import editor
from vrmenu.model import ButtonType, FORMAT_VERSION, MenuDocument, MenuType


def pytest_runtest_logreport(report):
    """One PASS/FAIL line per acceptance check, bypassing capture."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    verdict = "PASS" if report.passed else "FAIL"
    detail = dict(report.user_properties).get("detail")
    suffix = f" ({detail})" if detail else ""
    sys.stderr.write(f"[acceptance] {name}: {verdict}{suffix}\n")


def build_menu(menu_type: MenuType, count: int, title: str = "Menu"):
    """Document with one root menu of ``count`` function buttons.

    Returns (document, menu_id).
    """
    doc = MenuDocument(format_version=FORMAT_VERSION)
    specs = tuple(
        editor.ButtonSpec(
            name=f"item{i}",
            button_type=ButtonType.FUNCTION,
            text=f"Item {i}",
            function_id=f"fn.{i}",
        )
        for i in range(count)
    )
    outcome = editor.create_menu(
        doc,
        editor.CreateMenuRequest(
            menu_name="menu",
            menu_type=menu_type,
            is_root_menu=True,
            menu_title=title,
            button_specs=specs,
        ),
    )
    return outcome.document, outcome.created_ids[0]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


@pytest.fixture
def list_doc():
    return build_menu(MenuType.LIST, 4)


@pytest.fixture
def matrix_doc():
    return build_menu(MenuType.MATRIX, 9)


@pytest.fixture
def ring_doc():
    return build_menu(MenuType.RING, 4)


@pytest.fixture
def pie_doc():
    return build_menu(MenuType.PIE, 4)


@pytest.fixture
def two_level_doc():
    """Root list whose second button opens a child list."""
    doc = MenuDocument(format_version=FORMAT_VERSION)
    child = editor.create_menu(
        doc,
        editor.CreateMenuRequest(
            menu_name="child",
            menu_type=MenuType.LIST,
            is_root_menu=False,
            menu_title="Child",
            button_specs=(
                editor.ButtonSpec(
                    name="leaf", button_type=ButtonType.FUNCTION, function_id="fn.leaf"
                ),
            ),
        ),
    )
    child_id = child.created_ids[0]
    root = editor.create_menu(
        child.document,
        editor.CreateMenuRequest(
            menu_name="root",
            menu_type=MenuType.LIST,
            is_root_menu=True,
            menu_title="Root",
            button_specs=(
                editor.ButtonSpec(
                    name="fn", button_type=ButtonType.FUNCTION, function_id="fn.0"
                ),
                editor.ButtonSpec(
                    name="sub", button_type=ButtonType.SUBMENU, sub_menu_ref=child_id
                ),
            ),
        ),
    )
    return root.document, root.created_ids[0], child_id
