"""Geometry, trajectories, instances, and observation state.

Conventions used throughout the package:

* time is discrete: positions are known exactly at t = 0, queries happen at
  integer steps t = 1, 2, ... and one unit of time elapses between steps;
* a query returns the exact position at the instant of the query;
* points are plain tuples of floats, one entry per dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import InvalidInstanceError

Point = tuple[float, ...]

#: relative tolerance for the per-segment speed-bound check
SPEED_TOLERANCE = 1e-9


class CenterKind(str, Enum):
    ONE_CENTER = "one_center"
    CENTROID = "centroid"
    CENTER_OF_MASS = "center_of_mass"
    ONE_MEDIAN = "one_median"


def as_point(coords: Iterable[float]) -> Point:
    return tuple(float(c) for c in coords)


def distance(p: Point, q: Point) -> float:
    return math.dist(p, q)


@dataclass(frozen=True)
class Trajectory:
    """Piecewise-linear motion: ordered (time, position) waypoints.

    The object holds its last waypoint position forever after the final
    time.  Times must start at 0 and be strictly increasing.
    """

    waypoints: tuple[tuple[float, Point], ...]

    @staticmethod
    def of(waypoints: Sequence[tuple[float, Sequence[float]]]) -> "Trajectory":
        return Trajectory(tuple((float(t), as_point(p)) for t, p in waypoints))

    @staticmethod
    def static(position: Sequence[float]) -> "Trajectory":
        return Trajectory.of([(0.0, position)])

    @property
    def dim(self) -> int:
        return len(self.waypoints[0][1])

    @property
    def end_time(self) -> float:
        return self.waypoints[-1][0]


def position_at(trajectory: Trajectory, t: float) -> Point:
    """Position at time t: linear interpolation between waypoints, hold
    after the last one."""
    if t < 0:
        raise ValueError(f"time must be non-negative, got {t}")
    pts = trajectory.waypoints
    if t >= pts[-1][0]:
        return pts[-1][1]
    lo = 0
    hi = len(pts) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pts[mid][0] <= t:
            lo = mid
        else:
            hi = mid
    t0, p0 = pts[lo]
    t1, p1 = pts[hi]
    if t == t0:
        return p0
    w = (t - t0) / (t1 - t0)
    return tuple(a + w * (b - a) for a, b in zip(p0, p1))


@dataclass(frozen=True)
class MovingObject:
    """One tracked object: 1-based id, positive weight, speed bound, motion."""

    id: int
    weight: float
    max_speed: float
    trajectory: Trajectory


@dataclass(frozen=True)
class UncertaintyBall:
    """Ball of possible current locations of one object.

    In 1-D the ball is the interval [start, end]."""

    center: Point
    radius: float

    @property
    def start(self) -> float:
        assert len(self.center) == 1, "start/end are 1-D accessors"
        return self.center[0] - self.radius

    @property
    def end(self) -> float:
        assert len(self.center) == 1, "start/end are 1-D accessors"
        return self.center[0] + self.radius

    def contains(self, p: Point, tol: float = 1e-9) -> bool:
        return distance(self.center, p) <= self.radius + tol


def region_size(ball: UncertaintyBall) -> float:
    """Size of a region = maximum pairwise distance = diameter."""
    return 2.0 * ball.radius


@dataclass(frozen=True)
class Instance:
    dim: int
    objects: tuple[MovingObject, ...]
    center_kind: CenterKind
    queries_per_step: int = 1
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return len(self.objects)

    def object(self, oid: int) -> MovingObject:
        obj = self.objects[oid - 1]
        assert obj.id == oid
        return obj

    @property
    def weights(self) -> tuple[float, ...]:
        return tuple(o.weight for o in self.objects)


def make_instance(
    dim: int,
    objects: Sequence[MovingObject],
    center_kind: CenterKind | str,
    queries_per_step: int = 1,
    meta: Optional[dict] = None,
) -> Instance:
    return Instance(
        dim=dim,
        objects=tuple(objects),
        center_kind=CenterKind(center_kind),
        queries_per_step=queries_per_step,
        meta=dict(meta or {}),
    )


def validate_instance(instance: Instance) -> list[str]:
    """Check all structural invariants; returns a list of violation
    messages (empty means valid)."""
    out: list[str] = []
    if instance.dim < 1:
        out.append(f"dim must be >= 1, got {instance.dim}")
    if instance.n < 2:
        out.append(f"need at least 2 objects, got {instance.n}")
    if instance.queries_per_step < 1:
        out.append(f"queries_per_step must be >= 1, got {instance.queries_per_step}")
    elif instance.queries_per_step > instance.n:
        out.append(
            f"queries_per_step {instance.queries_per_step} exceeds object count {instance.n}"
        )
    for idx, obj in enumerate(instance.objects, start=1):
        tag = f"object {obj.id}"
        if obj.id != idx:
            out.append(f"{tag}: id out of order (expected {idx})")
        if not (obj.weight > 0):
            out.append(f"{tag}: weight must be positive, got {obj.weight}")
        if instance.center_kind is CenterKind.CENTROID and obj.weight != 1:
            out.append(f"{tag}: centroid instances require unit weights")
        if obj.max_speed < 0:
            out.append(f"{tag}: max_speed must be non-negative")
        out.extend(_validate_trajectory(obj, instance.dim, tag))
    return out


def _validate_trajectory(obj: MovingObject, dim: int, tag: str) -> list[str]:
    out: list[str] = []
    pts = obj.trajectory.waypoints
    if not pts:
        return [f"{tag}: trajectory has no waypoints"]
    if pts[0][0] != 0:
        out.append(f"{tag}: first waypoint time must be 0, got {pts[0][0]}")
    for t, p in pts:
        if len(p) != dim:
            out.append(f"{tag}: waypoint at t={t} has dimension {len(p)}, expected {dim}")
            return out
        if not all(math.isfinite(c) for c in p) or not math.isfinite(t):
            out.append(f"{tag}: non-finite waypoint at t={t}")
            return out
    for j in range(1, len(pts)):
        t0, p0 = pts[j - 1]
        t1, p1 = pts[j]
        if not t1 > t0:
            out.append(f"{tag}: waypoint times not strictly increasing at segment {j}")
            continue
        speed = distance(p0, p1) / (t1 - t0)
        if speed > obj.max_speed * (1 + SPEED_TOLERANCE) + 1e-300:
            out.append(
                f"{tag}: segment {j} speed {speed:.6g} exceeds max_speed {obj.max_speed:.6g}"
            )
    return out


def ensure_valid(instance: Instance) -> Instance:
    violations = validate_instance(instance)
    if violations:
        raise InvalidInstanceError(violations)
    return instance


class ObservationState:
    """Last known exact position and query time per object.

    Owned by a single simulation run; everything else in this module is
    immutable.
    """

    def __init__(self, instance: Instance):
        self.instance = instance
        self.last_known: dict[int, Point] = {}
        self.last_time: dict[int, float] = {}
        for obj in instance.objects:
            self.last_known[obj.id] = position_at(obj.trajectory, 0.0)
            self.last_time[obj.id] = 0.0

    def query(self, oid: int, t: float) -> Point:
        obj = self.instance.object(oid)
        pos = position_at(obj.trajectory, t)
        self.last_known[oid] = pos
        self.last_time[oid] = t
        return pos

    def region(self, oid: int, t: float) -> UncertaintyBall:
        obj = self.instance.object(oid)
        return region_of(obj, self, t)

    def regions(self, t: float) -> list[UncertaintyBall]:
        return [self.region(obj.id, t) for obj in self.instance.objects]

    def age(self, oid: int, t: float) -> float:
        return t - self.last_time[oid]


def region_of(obj: MovingObject, state: ObservationState, t: float) -> UncertaintyBall:
    """Uncertainty region of obj at time t: ball around the last known
    position with radius max_speed * elapsed time."""
    last_t = state.last_time[obj.id]
    if t < last_t:
        raise ValueError(f"clock regression: t={t} < last query time {last_t} for object {obj.id}")
    return UncertaintyBall(state.last_known[obj.id], obj.max_speed * (t - last_t))
