"""Layout geometry: placement, facing, spacing, and overlap freedom."""

from __future__ import annotations

import math

import pytest

from vrmenu.errors import InvalidMenuError
from vrmenu.layout import (
    DEFAULT_STYLE,
    Frame,
    LayoutResult,
    StyleParams,
    Transform,
    layout,
    normalize_angle,
    relayout_after_edit,
)
from vrmenu.model import DEFAULT_POSITION, MenuNode, MenuType, PositionMode
from vrmenu.validation import Rule


def make_menu(
    menu_type: MenuType, count: int, position: PositionMode | None = None
) -> MenuNode:
    return MenuNode(
        id="m1",
        name="menu",
        menu_type=menu_type,
        is_root=True,
        title="Menu",
        position_mode=position or DEFAULT_POSITION[menu_type],
        buttons=[f"b{i}" for i in range(count)],
    )


def approx_vec(v, expect, abs_tol=1e-12):
    assert len(v) == len(expect)
    for got, want in zip(v, expect):
        assert got == pytest.approx(want, abs=abs_tol)


# ---------------------------------------------------------------------
# Frames
# ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "menu_type,position,frame",
    [
        (MenuType.LIST, PositionMode.FIXED, Frame.WORLD),
        (MenuType.LIST, PositionMode.HEAD_REFERENCED, Frame.HEAD),
        (MenuType.MATRIX, PositionMode.FIXED, Frame.WORLD),
        (MenuType.PIE, PositionMode.HAND_REFERENCED, Frame.HAND),
        (MenuType.RING, PositionMode.HEAD_REFERENCED, Frame.HEAD),
    ],
)
def test_frame_follows_position_mode(menu_type, position, frame):
    result = layout(make_menu(menu_type, 2, position))
    assert result.frame is frame


# ---------------------------------------------------------------------
# List panels
# ---------------------------------------------------------------------


class TestListLayout:
    def test_default_stack(self):
        result = layout(make_menu(MenuType.LIST, 4))
        # 0.15 rows with a 0.05 gap stack on a 0.2 pitch
        ys = [t.position[1] for t in result.button_transforms]
        assert ys == pytest.approx([0.3, 0.1, -0.1, -0.3])
        for t in result.button_transforms:
            assert t.position[0] == 0.0
            assert t.position[2] == -2.0
            assert t.size == (0.6, 0.15)
            assert t.yaw == 0.0 and t.pitch == 0.0
            assert t.arc_radius is None

    def test_block_vertically_centered(self):
        for count in (1, 2, 5, 10):
            ys = [
                t.position[1]
                for t in layout(make_menu(MenuType.LIST, count)).button_transforms
            ]
            assert sum(ys) == pytest.approx(0.0, abs=1e-12)

    def test_title_above_first_row(self):
        result = layout(make_menu(MenuType.LIST, 4))
        title = result.title_transform
        assert title.size == (0.6, 0.2)
        approx_vec(title.position, (0.0, 0.5, -2.0))
        first = result.button_transforms[0]
        # rows are centered in 0.2 slots, so half a gap pads the title
        title_bottom = title.position[1] - 0.1
        first_top = first.position[1] + 0.075
        assert title_bottom - first_top == pytest.approx(0.025)

    def test_constant_spacing(self):
        result = layout(make_menu(MenuType.LIST, 7))
        ys = [t.position[1] for t in result.button_transforms]
        steps = [a - b for a, b in zip(ys, ys[1:])]
        assert steps == pytest.approx([0.2] * 6)

    def test_custom_style(self):
        style = StyleParams(button_height=0.3, gap=0.1, plane_distance=1.0)
        result = layout(make_menu(MenuType.LIST, 2), style)
        ys = [t.position[1] for t in result.button_transforms]
        assert ys[0] - ys[1] == pytest.approx(0.4)
        assert result.button_transforms[0].position[2] == -1.0


# ---------------------------------------------------------------------
# Matrix panels
# ---------------------------------------------------------------------


class TestMatrixLayout:
    def test_center_cell_on_axis(self):
        result = layout(make_menu(MenuType.MATRIX, 9))
        approx_vec(result.button_transforms[4].position, (0.0, 0.0, -2.0))

    def test_row_major_grid(self):
        result = layout(make_menu(MenuType.MATRIX, 9))
        step = 0.35  # cell 0.3 + gap 0.05
        for k, t in enumerate(result.button_transforms):
            row, col = divmod(k, 3)
            approx_vec(t.position, ((col - 1) * step, (1 - row) * step, -2.0))
            assert t.size == (0.3, 0.3)

    def test_partial_fill_keeps_slots(self):
        full = layout(make_menu(MenuType.MATRIX, 9))
        part = layout(make_menu(MenuType.MATRIX, 5))
        assert part.button_transforms == full.button_transforms[:5]

    def test_title_spans_grid(self):
        result = layout(make_menu(MenuType.MATRIX, 9))
        title = result.title_transform
        assert title.size[0] == pytest.approx(3 * 0.3 + 2 * 0.05)
        top_row_edge = result.button_transforms[0].position[1] + 0.15
        assert title.position[1] - 0.1 > top_row_edge


# ---------------------------------------------------------------------
# Ring menus
# ---------------------------------------------------------------------


class TestRingLayout:
    def test_positions_on_circle(self):
        result = layout(make_menu(MenuType.RING, 4))
        expected = [(0.0, 0.0, -2.0), (2.0, 0.0, 0.0), (0.0, 0.0, 2.0), (-2.0, 0.0, 0.0)]
        for t, want in zip(result.button_transforms, expected):
            approx_vec(t.position, want)
            assert math.hypot(*t.position) == pytest.approx(2.0)
            assert t.arc_radius == 2.0
            assert t.size == (0.6, 0.15)

    @pytest.mark.parametrize("count", [1, 2, 3, 5, 8, 12])
    def test_equal_azimuth_spacing(self, count):
        result = layout(make_menu(MenuType.RING, count))
        for k, t in enumerate(result.button_transforms):
            azimuth = k * 2.0 * math.pi / count
            assert t.position[0] == pytest.approx(2.0 * math.sin(azimuth), abs=1e-12)
            assert t.position[2] == pytest.approx(-2.0 * math.cos(azimuth), abs=1e-12)

    @pytest.mark.parametrize("count", [2, 4, 7, 12])
    def test_items_face_the_center(self, count):
        result = layout(make_menu(MenuType.RING, count))
        for t in result.button_transforms:
            _, _, normal = t.local_axes()
            norm = math.hypot(*t.position)
            inward = tuple(-c / norm for c in t.position)
            dot = sum(a * b for a, b in zip(normal, inward))
            assert dot == pytest.approx(1.0, abs=1e-12)

    def test_custom_radius(self):
        style = StyleParams(ring_radius=5.0)
        result = layout(make_menu(MenuType.RING, 3), style)
        for t in result.button_transforms:
            assert math.hypot(*t.position) == pytest.approx(5.0)
            assert t.arc_radius == 5.0


# ---------------------------------------------------------------------
# Pie menus
# ---------------------------------------------------------------------


class TestPieLayout:
    def test_sectors_cover_disc(self):
        for count in (1, 2, 3, 4):
            result = layout(make_menu(MenuType.PIE, count))
            extents = [t.size[0] / t.arc_radius for t in result.button_transforms]
            assert sum(extents) == pytest.approx(2.0 * math.pi)
            assert extents == pytest.approx([2.0 * math.pi / count] * count)

    def test_anchor_at_sector_bisector(self):
        result = layout(make_menu(MenuType.PIE, 4))
        radius = DEFAULT_STYLE.pie_radius
        sector = math.pi / 2.0
        for k, t in enumerate(result.button_transforms):
            bisector = (k + 0.5) * sector
            approx_vec(
                t.position,
                (radius * math.sin(bisector), radius * math.cos(bisector), 0.0),
            )
            assert t.size == (sector * radius, radius)

    def test_sectors_touch_without_overlap(self):
        result = layout(make_menu(MenuType.PIE, 4))
        radius = DEFAULT_STYLE.pie_radius
        edges = []
        for k, t in enumerate(result.button_transforms):
            half = t.size[0] / t.arc_radius / 2.0
            bisector = (k + 0.5) * (math.pi / 2.0)
            edges.append((bisector - half, bisector + half))
        for (_, hi), (lo, _) in zip(edges, edges[1:]):
            assert hi == pytest.approx(lo, abs=1e-12)


# ---------------------------------------------------------------------
# Overlap freedom
# ---------------------------------------------------------------------


def _rects_disjoint(a: Transform, b: Transform) -> bool:
    dx = abs(a.position[0] - b.position[0])
    dy = abs(a.position[1] - b.position[1])
    return (
        dx >= (a.size[0] + b.size[0]) / 2.0 - 1e-12
        or dy >= (a.size[1] + b.size[1]) / 2.0 - 1e-12
    )


@pytest.mark.parametrize(
    "menu_type,count",
    [(MenuType.LIST, 10), (MenuType.MATRIX, 9)],
)
def test_panel_buttons_do_not_overlap(menu_type, count):
    transforms = layout(make_menu(menu_type, count)).button_transforms
    for i, a in enumerate(transforms):
        for b in transforms[i + 1 :]:
            assert _rects_disjoint(a, b)


def test_ring_items_do_not_overlap():
    transforms = layout(make_menu(MenuType.RING, 12)).button_transforms
    half = 0.6 / 2.0 / 2.0  # half angular extent: (w / r) / 2
    azimuths = [k * 2.0 * math.pi / 12 for k in range(12)]
    for i in range(12):
        gap_to_next = azimuths[1] - 2.0 * half
        assert gap_to_next > 0.0
    for i, t in enumerate(transforms):
        assert t.size[0] / t.arc_radius < 2.0 * math.pi / 12


# ---------------------------------------------------------------------
# General contract
# ---------------------------------------------------------------------


class TestContract:
    def test_deterministic(self):
        menu = make_menu(MenuType.MATRIX, 7)
        assert layout(menu) == layout(menu)

    def test_relayout_is_plain_layout(self):
        menu = make_menu(MenuType.LIST, 5)
        assert relayout_after_edit(menu) == layout(menu)

    def test_removal_shifts_later_buttons(self):
        # Matrix slots are fixed, so survivors move up into earlier cells.
        before = make_menu(MenuType.MATRIX, 5)
        after = make_menu(MenuType.MATRIX, 4)
        assert layout(after).button_transforms == layout(before).button_transforms[:4]

    def test_list_recenters_after_removal(self):
        ys = [t.position[1] for t in layout(make_menu(MenuType.LIST, 4)).button_transforms]
        assert sum(ys) == pytest.approx(0.0, abs=1e-12)
        ys = [t.position[1] for t in layout(make_menu(MenuType.LIST, 3)).button_transforms]
        assert sum(ys) == pytest.approx(0.0, abs=1e-12)

    def test_empty_menu_keeps_title(self):
        result = layout(make_menu(MenuType.RING, 0))
        assert result.button_transforms == ()
        assert isinstance(result.title_transform, Transform)

    def test_transform_count_matches_buttons(self):
        for count in range(0, 10):
            result = layout(make_menu(MenuType.LIST, count))
            assert len(result.button_transforms) == count

    def test_over_capacity_raises(self):
        with pytest.raises(InvalidMenuError) as err:
            layout(make_menu(MenuType.PIE, 5))
        assert {v.rule for v in err.value.violations} == {Rule.CAPACITY_EXCEEDED}

    def test_disallowed_position_raises(self):
        with pytest.raises(InvalidMenuError) as err:
            layout(make_menu(MenuType.RING, 2, PositionMode.FIXED))
        assert {v.rule for v in err.value.violations} == {Rule.POSITION_MODE}

    def test_result_is_frozen(self):
        result = layout(make_menu(MenuType.LIST, 1))
        with pytest.raises(AttributeError):
            result.frame = Frame.HAND  # type: ignore[misc]


# ---------------------------------------------------------------------
# Primitives
# ---------------------------------------------------------------------


class TestPrimitives:
    def test_normalize_angle(self):
        assert normalize_angle(0.0) == 0.0
        assert normalize_angle(math.pi) == math.pi
        assert normalize_angle(-math.pi) == math.pi
        assert normalize_angle(3.0 * math.pi) == pytest.approx(math.pi)
        assert normalize_angle(2.0 * math.pi) == pytest.approx(0.0, abs=1e-12)
        assert normalize_angle(-math.pi / 2.0) == pytest.approx(-math.pi / 2.0)

    def test_local_axes_identity(self):
        right, up, normal = Transform(position=(0, 0, 0)).local_axes()
        approx_vec(right, (1.0, 0.0, 0.0))
        approx_vec(up, (0.0, 1.0, 0.0))
        approx_vec(normal, (0.0, 0.0, 1.0))

    def test_local_axes_quarter_yaw(self):
        right, up, normal = Transform(position=(0, 0, 0), yaw=math.pi / 2).local_axes()
        approx_vec(normal, (1.0, 0.0, 0.0))
        approx_vec(right, (0.0, 0.0, -1.0))
        approx_vec(up, (0.0, 1.0, 0.0))

    def test_local_axes_pitch(self):
        _, up, normal = Transform(position=(0, 0, 0), pitch=math.pi / 2).local_axes()
        approx_vec(normal, (0.0, 1.0, 0.0))

    @pytest.mark.parametrize("size", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
    def test_transform_rejects_bad_size(self, size):
        with pytest.raises(ValueError):
            Transform(position=(0, 0, 0), size=size)

    def test_transform_rejects_wild_angles(self):
        with pytest.raises(ValueError):
            Transform(position=(0, 0, 0), yaw=4.0)
        with pytest.raises(ValueError):
            Transform(position=(0, 0, 0), pitch=-math.pi)

    @pytest.mark.parametrize(
        "field", ["button_width", "button_height", "gap", "title_height",
                  "plane_distance", "ring_radius", "pie_radius", "matrix_cell"]
    )
    def test_style_rejects_non_positive(self, field):
        with pytest.raises(ValueError):
            StyleParams(**{field: 0.0})

    def test_layout_result_shape(self):
        result = layout(make_menu(MenuType.LIST, 2))
        assert isinstance(result, LayoutResult)
        assert isinstance(result.button_transforms, tuple)
