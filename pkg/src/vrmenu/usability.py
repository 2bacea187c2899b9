"""Selection-difficulty analysis for laid-out menus.

Difficulty follows the classic aimed-movement law, reinterpreted for
ray-casting: both the distance to a button and the button's effective
width are angles of ray rotation seen from the viewer, not metric
lengths. A flat button's angular width is measured along the approach
direction: the ray sweeps a great circle from its start pose toward the
button center, and the width is the angle between the two rays through
the points where that sweep enters and leaves the button rectangle.
Curved buttons (ring segments, pie sectors) subtend their arc length
over the arc radius, which is the same for every button of the menu.

A small Monte-Carlo simulator cross-checks the closed-form report by
drawing selection targets uniformly with a seeded generator. The same
seed always reproduces the same result, bit for bit, on either kernel
backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import accumulate_trials
from .errors import BehindViewerError, EmptyMenuError, NonPositiveWidthError
from .layout import LayoutResult, Transform, Vec3
from .model import MenuNode, MenuType

# Trials per kernel batch. The running total threads through batches in
# trial order, so batch size never affects a result bit.
_CHUNK_TRIALS = 1_000_000

_TINY = 1e-12


# ---------------------------------------------------------------------
# Small tuple-vector helpers
# ---------------------------------------------------------------------


def _dot(a: Vec3, b: Vec3) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _add(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _sub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _scale(a: Vec3, factor: float) -> Vec3:
    return (a[0] * factor, a[1] * factor, a[2] * factor)


def _norm(a: Vec3) -> float:
    return math.sqrt(_dot(a, a))


def _normalize(a: Vec3) -> Vec3:
    length = _norm(a)
    return _scale(a, 1.0 / length)


def _reject(a: Vec3, unit: Vec3) -> Vec3:
    """Component of ``a`` perpendicular to the unit vector."""
    return _sub(a, _scale(unit, _dot(a, unit)))


def _angle_between_units(a: Vec3, b: Vec3) -> float:
    return math.acos(min(1.0, max(-1.0, _dot(a, b))))


# ---------------------------------------------------------------------
# Parameters and results
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class FittsParams:
    """Device constants: intercept (seconds) and slope (seconds/bit)."""

    a: float = 0.0
    b: float = 1.0

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ValueError(f"intercept a must be >= 0, got {self.a}")
        if self.b <= 0:
            raise ValueError(f"slope b must be > 0, got {self.b}")


@dataclass(frozen=True)
class ViewerConfig:
    """Ray origin and the direction it points before movement begins."""

    eye_position: Vec3 = (0.0, 0.0, 0.0)
    start_direction: Vec3 = (0.0, 0.0, -1.0)

    def __post_init__(self) -> None:
        if abs(_norm(self.start_direction) - 1.0) > 1e-9:
            raise ValueError(
                f"start_direction must be a unit vector, got {self.start_direction}"
            )


@dataclass(frozen=True)
class ButtonUsability:
    """Angles in radians, difficulty in bits, movement time in seconds."""

    button_id: str
    distance: float
    width: float
    difficulty_bits: float
    movement_time: float


@dataclass(frozen=True)
class UsabilityReport:
    menu_id: str
    per_button: tuple[ButtonUsability, ...]
    mean_movement_time: float
    max_movement_time: float
    mean_difficulty_bits: float
    viewer: ViewerConfig
    params: FittsParams
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class SimulationResult:
    empirical_mean_movement_time: float
    per_button_hits: tuple[int, ...]
    trials: int
    seed: int


PIE_EXTRAPOLATION_NOTE = (
    "pie menu scored by extrapolation: the angular model is applied in "
    "the touchpad plane with the thumb pivot as ray origin"
)


# ---------------------------------------------------------------------
# Core formulas
# ---------------------------------------------------------------------


def index_of_difficulty(distance: float, width: float) -> float:
    """Difficulty in bits: log2(1 + 2*distance/width)."""
    if width <= 0:
        raise NonPositiveWidthError(width)
    if distance < 0:
        raise ValueError(f"distance must be >= 0, got {distance}")
    return math.log2(1.0 + 2.0 * distance / width)


def movement_time(params: FittsParams, distance: float, width: float) -> float:
    """Predicted selection time: a + b * difficulty."""
    return params.a + params.b * index_of_difficulty(distance, width)


def angular_distance(viewer: ViewerConfig, target: Transform) -> float:
    """Rotation angle from the start direction to the target center."""
    offset = _sub(target.position, viewer.eye_position)
    length = _norm(offset)
    if length <= _TINY:
        return 0.0
    return _angle_between_units(viewer.start_direction, _scale(offset, 1.0 / length))


def angular_width(viewer: ViewerConfig, target: Transform, approach: Vec3) -> float:
    """Rotation angle the target spans along the approach direction.

    Curved targets subtend their arc length over the arc radius. Flat
    targets are cut by the sweep plane (spanned by the center ray and
    the approach direction); the cut is a chord of the button rectangle
    and the width is the angle between the rays through its endpoints.
    """
    if target.arc_radius is not None:
        return target.size[0] / target.arc_radius

    offset = _sub(target.position, viewer.eye_position)
    length = _norm(offset)
    if length <= _TINY:
        raise BehindViewerError("target coincides with the eye position")
    center_ray = _scale(offset, 1.0 / length)
    if _dot(center_ray, viewer.start_direction) <= 0.0:
        raise BehindViewerError(
            "target has no positive projection on the view direction"
        )

    right, up, normal = target.local_axes()
    sweep = _reject(approach, center_ray)
    if _norm(sweep) <= _TINY:
        # Approach is (anti)parallel to the center ray; sweep along the
        # button's own vertical, or horizontal if that is degenerate too.
        sweep = _reject(up, center_ray)
        if _norm(sweep) <= _TINY:
            sweep = _reject(right, center_ray)
    sweep = _normalize(sweep)

    chord = _cross(_cross(center_ray, sweep), normal)
    chord_len = _norm(chord)
    if chord_len <= _TINY:
        # Sweep plane coincides with the button plane: edge-on target.
        raise NonPositiveWidthError(0.0)
    chord = _scale(chord, 1.0 / chord_len)

    along_right = abs(_dot(chord, right))
    along_up = abs(_dot(chord, up))
    half_w, half_h = target.size[0] / 2.0, target.size[1] / 2.0
    reach_w = half_w / along_right if along_right > _TINY else math.inf
    reach_h = half_h / along_up if along_up > _TINY else math.inf
    reach = min(reach_w, reach_h)

    edge_a = _sub(_add(target.position, _scale(chord, reach)), viewer.eye_position)
    edge_b = _sub(_add(target.position, _scale(chord, -reach)), viewer.eye_position)
    return _angle_between_units(_normalize(edge_a), _normalize(edge_b))


# ---------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------


def menu_usability_report(
    menu: MenuNode,
    layout_result: LayoutResult,
    viewer: ViewerConfig,
    params: FittsParams,
) -> UsabilityReport:
    """Score every button of a laid-out menu.

    The approach for each button is the great-circle path from the
    start direction toward the button center, so the width of off-axis
    buttons is measured along the direction the ray actually travels.
    """
    if not menu.buttons:
        raise EmptyMenuError(menu.id)
    per_button = []
    for button_id, transform in zip(menu.buttons, layout_result.button_transforms):
        distance = angular_distance(viewer, transform)
        width = angular_width(viewer, transform, viewer.start_direction)
        bits = index_of_difficulty(distance, width)
        per_button.append(
            ButtonUsability(
                button_id=button_id,
                distance=distance,
                width=width,
                difficulty_bits=bits,
                movement_time=params.a + params.b * bits,
            )
        )
    notes = ()
    if menu.menu_type is MenuType.PIE:
        notes = (PIE_EXTRAPOLATION_NOTE,)
    count = len(per_button)
    return UsabilityReport(
        menu_id=menu.id,
        per_button=tuple(per_button),
        mean_movement_time=math.fsum(b.movement_time for b in per_button) / count,
        max_movement_time=max(b.movement_time for b in per_button),
        mean_difficulty_bits=math.fsum(b.difficulty_bits for b in per_button) / count,
        viewer=viewer,
        params=params,
        notes=notes,
    )


def default_viewer(menu: MenuNode, layout_result: LayoutResult) -> ViewerConfig:
    """Start pose used when the caller does not supply one.

    Planar menus are viewed from the origin looking at the panel center.
    The ring wraps around the viewer, so the start points at the first
    button; likewise the pie pivots around the thumb, so the start
    points at the first sector's bisector.
    """
    if menu.menu_type in (MenuType.RING, MenuType.PIE) and layout_result.button_transforms:
        first = layout_result.button_transforms[0].position
        return ViewerConfig(start_direction=_normalize(first))
    return ViewerConfig()


def simulate_selections(
    menu: MenuNode,
    layout_result: LayoutResult,
    viewer: ViewerConfig,
    params: FittsParams,
    trials: int,
    seed: int,
) -> SimulationResult:
    """Draw targets uniformly and accumulate per-selection times.

    Deterministic for a given seed: draws come from a seeded generator
    and are tallied in a fixed order, so repeated runs agree exactly.
    """
    if trials <= 0:
        raise ValueError(f"trials must be positive, got {trials}")
    report = menu_usability_report(menu, layout_result, viewer, params)
    times = np.array([b.movement_time for b in report.per_button], dtype=np.float64)
    hits = np.zeros(len(times), dtype=np.int64)
    rng = np.random.default_rng(seed)
    total = 0.0
    remaining = trials
    while remaining > 0:
        batch = min(remaining, _CHUNK_TRIALS)
        draws = rng.integers(0, len(times), size=batch, dtype=np.int64)
        total, batch_hits = accumulate_trials(times, draws, total)
        hits += batch_hits
        remaining -= batch
    return SimulationResult(
        empirical_mean_movement_time=total / trials,
        per_button_hits=tuple(int(count) for count in hits),
        trials=trials,
        seed=seed,
    )
