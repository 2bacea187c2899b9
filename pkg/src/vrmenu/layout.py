"""Deterministic 3D layout for the four built-in menu archetypes.

All transforms are expressed in the menu's own reference frame, chosen by
its position mode: world for fixed menus, head for head-referenced ones
(origin at the HMD), hand for the touchpad plane of hand-referenced pies.

Conventions: y is up, "straight ahead" is -z, and planar panels sit in a
plane of constant z facing the frame origin. Ring items live on a
horizontal circle around the origin and face inward; their width is
treated as arc length along that circle, which is what makes their
angular width constant for a viewer at the center. Pie items are sectors
of the touchpad disc, anchored at the sector bisector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidMenuError
from .model import (
    ALLOWED_POSITIONS,
    MenuNode,
    MenuType,
    PositionMode,
    max_button_num,
)
from .validation import Rule, Violation

Vec3 = tuple[float, float, float]
Size2 = tuple[float, float]


class Frame(str, Enum):
    WORLD = "world"
    HEAD = "head"
    HAND = "hand"


FRAME_OF_POSITION: dict[PositionMode, Frame] = {
    PositionMode.FIXED: Frame.WORLD,
    PositionMode.HEAD_REFERENCED: Frame.HEAD,
    PositionMode.HAND_REFERENCED: Frame.HAND,
}


def normalize_angle(angle: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    wrapped = math.fmod(angle + math.pi, 2.0 * math.pi)
    if wrapped < 0.0:
        wrapped += 2.0 * math.pi
    wrapped -= math.pi
    if wrapped == -math.pi:
        return math.pi
    return wrapped


@dataclass(frozen=True)
class Transform:
    """Placement of one element: position, facing, and face size.

    ``yaw``/``pitch`` orient the element's front normal, which is +z at
    (0, 0): planar panels face the viewer standing at the frame origin.
    ``arc_radius`` is set for elements whose width wraps a viewer-centered
    circle (ring items, pie sectors); it is the circle's radius and lets
    the usability model measure their width as an arc rather than a chord.
    """

    position: Vec3
    yaw: float = 0.0
    pitch: float = 0.0
    size: Size2 = (1.0, 1.0)
    arc_radius: float | None = None

    def __post_init__(self):
        if self.size[0] <= 0.0 or self.size[1] <= 0.0:
            raise ValueError(f"size components must be positive: {self.size}")
        for name in ("yaw", "pitch"):
            value = getattr(self, name)
            if not (-math.pi < value <= math.pi):
                raise ValueError(f"{name} must lie in (-pi, pi]: {value}")

    def local_axes(self) -> tuple[Vec3, Vec3, Vec3]:
        """Return (right, up, normal) unit vectors of the element."""
        cy, sy = math.cos(self.yaw), math.sin(self.yaw)
        cp, sp = math.cos(self.pitch), math.sin(self.pitch)
        normal = (cp * sy, sp, cp * cy)
        right = (cy, 0.0, -sy)
        up = (
            normal[1] * right[2] - normal[2] * right[1],
            normal[2] * right[0] - normal[0] * right[2],
            normal[0] * right[1] - normal[1] * right[0],
        )
        return right, up, normal


@dataclass(frozen=True)
class StyleParams:
    """Dimensions, in meters, used by every layout computation.

    Defaults put a comfortable panel two meters ahead: 0.6 x 0.15 list
    rows, 0.3 x 0.3 matrix cells (the same button area), and a ring at
    arm's-length-plus radius. ``pie_radius`` is touchpad-scale.
    """

    button_width: float = 0.6
    button_height: float = 0.15
    gap: float = 0.05
    title_height: float = 0.2
    plane_distance: float = 2.0
    ring_radius: float = 2.0
    pie_radius: float = 0.02
    matrix_cell: float = 0.3

    def __post_init__(self):
        for name in (
            "button_width",
            "button_height",
            "gap",
            "title_height",
            "plane_distance",
            "ring_radius",
            "pie_radius",
            "matrix_cell",
        ):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"style parameter {name} must be positive")


DEFAULT_STYLE = StyleParams()


@dataclass(frozen=True)
class LayoutResult:
    frame: Frame
    title_transform: Transform
    button_transforms: tuple[Transform, ...]


def layout(menu: MenuNode, style: StyleParams = DEFAULT_STYLE) -> LayoutResult:
    """Compute transforms for a menu's title and each of its buttons.

    Pure function of (menu, style); button transforms are returned in the
    menu's button order. Raises :class:`InvalidMenuError` if the menu
    breaks its own capacity or placement rules.
    """
    _check_menu(menu)
    builder = _BUILDERS[menu.menu_type]
    title, buttons = builder(len(menu.buttons), style)
    return LayoutResult(
        frame=FRAME_OF_POSITION[menu.position_mode],
        title_transform=title,
        button_transforms=tuple(buttons),
    )


def relayout_after_edit(
    menu: MenuNode, style: StyleParams = DEFAULT_STYLE
) -> LayoutResult:
    """Recompute the layout after an add/remove.

    Layout is stateless, so this is exactly ``layout`` on the new menu:
    removing button i shifts later buttons into its slots.
    """
    return layout(menu, style)


def _check_menu(menu: MenuNode) -> None:
    violations = []
    capacity = max_button_num(menu.menu_type)
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
    if violations:
        raise InvalidMenuError(violations)


# ---------------------------------------------------------------------
# Per-type builders
# ---------------------------------------------------------------------


def _layout_list(count: int, style: StyleParams):
    # Buttons stack downward, the block vertically centered on the frame
    # axis; the title band sits on top of the block.
    step = style.button_height + style.gap
    y_top = style.title_height + count * step / 2.0
    z = -style.plane_distance
    title = Transform(
        position=(0.0, y_top - style.title_height / 2.0, z),
        size=(style.button_width, style.title_height),
    )
    buttons = [
        Transform(
            position=(0.0, y_top - style.title_height - (i + 0.5) * step, z),
            size=(style.button_width, style.button_height),
        )
        for i in range(count)
    ]
    return title, buttons


def _layout_matrix(count: int, style: StyleParams):
    # Fixed 3x3 grid of square cells, centered on the frame axis; buttons
    # fill cells row-major from the top left.
    step = style.matrix_cell + style.gap
    z = -style.plane_distance
    grid_top = step + style.matrix_cell / 2.0
    title = Transform(
        position=(0.0, grid_top + style.gap + style.title_height / 2.0, z),
        size=(3 * style.matrix_cell + 2 * style.gap, style.title_height),
    )
    buttons = []
    for k in range(count):
        row, col = divmod(k, 3)
        buttons.append(
            Transform(
                position=((col - 1) * step, (1 - row) * step, z),
                size=(style.matrix_cell, style.matrix_cell),
            )
        )
    return title, buttons


def _layout_pie(count: int, style: StyleParams):
    # The touchpad disc is split into `count` equal sectors; item k covers
    # [k, k+1) * 2pi/count measured clockwise from straight up, anchored
    # at the sector bisector. Sector width is stored as arc length so the
    # angular width of a sector is exactly its angular extent.
    radius = style.pie_radius
    title = Transform(
        position=(0.0, radius + style.gap + style.title_height / 2.0, 0.0),
        size=(2 * radius, style.title_height),
    )
    buttons = []
    if count:
        sector = 2.0 * math.pi / count
        for k in range(count):
            bisector = (k + 0.5) * sector
            buttons.append(
                Transform(
                    position=(
                        radius * math.sin(bisector),
                        radius * math.cos(bisector),
                        0.0,
                    ),
                    size=(sector * radius, radius),
                    arc_radius=radius,
                )
            )
    return title, buttons


def _layout_ring(count: int, style: StyleParams):
    # Items sit on a horizontal circle around the frame origin (the
    # user's head), equally spaced starting straight ahead, each facing
    # inward. Width is arc length on that circle, so every item subtends
    # the same angle at the center.
    radius = style.ring_radius
    title = Transform(
        position=(
            0.0,
            style.button_height / 2.0 + style.gap + style.title_height / 2.0,
            -radius,
        ),
        size=(style.button_width, style.title_height),
    )
    buttons = []
    if count:
        for k in range(count):
            azimuth = k * 2.0 * math.pi / count
            buttons.append(
                Transform(
                    position=(
                        radius * math.sin(azimuth),
                        0.0,
                        -radius * math.cos(azimuth),
                    ),
                    yaw=normalize_angle(-azimuth),
                    size=(style.button_width, style.button_height),
                    arc_radius=radius,
                )
            )
    return title, buttons


_BUILDERS = {
    MenuType.LIST: _layout_list,
    MenuType.MATRIX: _layout_matrix,
    MenuType.PIE: _layout_pie,
    MenuType.RING: _layout_ring,
}
