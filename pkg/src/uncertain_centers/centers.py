"""Uncertainty regions of center functions.

Exact results are available for order-statistic centers in 1-D (max, min,
k-th smallest, 1-center, 1-median) and for the center of mass in any
dimension.  For the 1-center and 1-median in d >= 2 no exact region
algorithm exists; `sampled_center_size_lower_bound` produces certified
lower bounds on the region size by evaluating the center on explicit
realizations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import CenterKind, Point, UncertaintyBall


@dataclass(frozen=True)
class Interval:
    """Closed 1-D region [start, end] of possible center positions."""

    start: float
    end: float

    @property
    def size(self) -> float:
        return self.end - self.start

    def contains(self, x: float, tol: float = 1e-9) -> bool:
        return self.start - tol <= x <= self.end + tol


def _starts_ends(balls: list[UncertaintyBall]) -> tuple[list[float], list[float]]:
    if not balls:
        raise ValueError("need at least one ball")
    return [b.start for b in balls], [b.end for b in balls]


def region_max_1d(balls: list[UncertaintyBall]) -> Interval:
    """Region of the maximum of the realized points: [max s_i, max e_i]."""
    starts, ends = _starts_ends(balls)
    return Interval(max(starts), max(ends))


def region_min_1d(balls: list[UncertaintyBall]) -> Interval:
    """Region of the minimum: [min s_i, min e_i]."""
    starts, ends = _starts_ends(balls)
    return Interval(min(starts), min(ends))


def region_one_center_1d(balls: list[UncertaintyBall]) -> Interval:
    """1-center region in 1-D: midpoints of the min/max regions.

    Its size is exactly the average of the max-region and min-region sizes.
    """
    if len(balls) < 2:
        raise ValueError("1-center needs at least 2 objects")
    hi = region_max_1d(balls)
    lo = region_min_1d(balls)
    return Interval((lo.start + hi.start) / 2.0, (lo.end + hi.end) / 2.0)


def region_kth_smallest(balls: list[UncertaintyBall], k: int) -> Interval:
    """Region of the k-th smallest realized point (1-based):
    [k-th smallest start, k-th smallest end]."""
    starts, ends = _starts_ends(balls)
    if not 1 <= k <= len(balls):
        raise ValueError(f"k={k} out of range 1..{len(balls)}")
    return Interval(sorted(starts)[k - 1], sorted(ends)[k - 1])


def region_one_median_1d(balls: list[UncertaintyBall]) -> Interval:
    """1-median region in 1-D.

    Odd n: the ceil(n/2)-th smallest region.  Even n: midpoint of the
    (n/2)-th and (n/2+1)-th smallest regions.
    """
    n = len(balls)
    if n < 2:
        raise ValueError("1-median needs at least 2 objects")
    if n % 2 == 1:
        return region_kth_smallest(balls, (n + 1) // 2)
    a = region_kth_smallest(balls, n // 2)
    b = region_kth_smallest(balls, n // 2 + 1)
    return Interval((a.start + b.start) / 2.0, (a.end + b.end) / 2.0)


def region_center_of_mass(
    balls: list[UncertaintyBall], weights: list[float]
) -> UncertaintyBall:
    """Center-of-mass region: ball at the weighted average of the centers,
    radius the weighted average of the radii."""
    if len(balls) != len(weights):
        raise ValueError("weights and balls must have the same length")
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    total = float(sum(weights))
    dim = len(balls[0].center)
    center = tuple(
        sum(w * b.center[axis] for w, b in zip(weights, balls)) / total
        for axis in range(dim)
    )
    radius = sum(w * b.radius for w, b in zip(weights, balls)) / total
    return UncertaintyBall(center, radius)


def center_region_size(
    balls: list[UncertaintyBall], kind: CenterKind, weights: list[float]
) -> float:
    """Exact region size for the given center kind (1-D for order-statistic
    centers, any dimension for centroid / center of mass)."""
    if kind in (CenterKind.CENTROID, CenterKind.CENTER_OF_MASS):
        return 2.0 * region_center_of_mass(balls, weights).radius
    if any(len(b.center) != 1 for b in balls):
        raise ValueError(f"{kind.value} region is only exact in 1-D")
    if kind is CenterKind.ONE_CENTER:
        return region_one_center_1d(balls).size
    if kind is CenterKind.ONE_MEDIAN:
        return region_one_median_1d(balls).size
    raise ValueError(f"unknown center kind {kind}")


# ---------------------------------------------------------------------------
# exact smallest enclosing ball (Welzl), for demo-scale point sets
# ---------------------------------------------------------------------------


def _circumball(points: list[Point]) -> tuple[Point, float]:
    """Smallest ball with all given points on its boundary (the points must
    be affinely independent; up to d+1 of them)."""
    if not points:
        return (), 0.0
    p0 = np.asarray(points[0], dtype=float)
    if len(points) == 1:
        return tuple(p0), 0.0
    rows = [np.asarray(p, dtype=float) - p0 for p in points[1:]]
    a = np.array([[2.0 * np.dot(u, w) for w in rows] for u in rows])
    b = np.array([np.dot(u, u) for u in rows])
    lam = np.linalg.solve(a, b)
    center = p0 + sum(l * u for l, u in zip(lam, rows))
    return tuple(center), float(np.linalg.norm(center - p0))


def smallest_enclosing_ball(points: list[Point], seed: int = 0) -> UncertaintyBall:
    """Exact minimum enclosing ball via Welzl's randomized recursion.

    Intended for demo sizes (n <= a few hundred, small d).  Deterministic
    for a given seed.
    """
    if not points:
        raise ValueError("need at least one point")
    pts = [tuple(float(c) for c in p) for p in points]
    rng = np.random.default_rng(seed)
    order = list(rng.permutation(len(pts)))
    shuffled = [pts[i] for i in order]
    d = len(pts[0])

    def welzl(i: int, boundary: list[Point]) -> tuple[Point, float]:
        if i == len(shuffled) or len(boundary) == d + 1:
            try:
                return _circumball(boundary)
            except np.linalg.LinAlgError:
                # affinely dependent boundary set: drop the oldest point
                return _circumball(boundary[1:])
        p = shuffled[i]
        center, radius = welzl(i + 1, boundary)
        if center and math.dist(center, p) <= radius * (1 + 1e-12) + 1e-12:
            return center, radius
        return welzl(i + 1, boundary + [p])

    center, radius = welzl(0, [])
    return UncertaintyBall(center, radius)


# ---------------------------------------------------------------------------
# geometric median (Weiszfeld), for demo-scale point sets
# ---------------------------------------------------------------------------

_WEISZFELD_TOL = 1e-9
_WEISZFELD_MAX_ITER = 200


def _median_collinear(pts: np.ndarray) -> np.ndarray:
    """1-median of collinear points: order statistics along the line,
    midpoint of the two middle points for even counts."""
    base = pts[0]
    direction = None
    for p in pts[1:]:
        v = p - base
        norm = np.linalg.norm(v)
        if norm > 1e-12:
            direction = v / norm
            break
    if direction is None:
        return base.copy()
    coords = np.sort((pts - base) @ direction)
    n = len(coords)
    if n % 2 == 1:
        c = coords[n // 2]
    else:
        c = (coords[n // 2 - 1] + coords[n // 2]) / 2.0
    return base + c * direction


def _is_collinear(pts: np.ndarray, tol: float = 1e-9) -> bool:
    if len(pts) <= 2:
        return True
    centered = pts - pts.mean(axis=0)
    svals = np.linalg.svd(centered, compute_uv=False)
    return bool(svals[1] <= tol * max(svals[0], 1.0)) if len(svals) > 1 else True


def _vertex_is_median(pts: np.ndarray, vertex: np.ndarray) -> bool:
    """Optimality test at an input point: the pull of the other points must
    not exceed the vertex multiplicity."""
    dists = np.linalg.norm(pts - vertex, axis=1)
    at_vertex = dists <= 1e-12
    multiplicity = int(at_vertex.sum())
    others = pts[~at_vertex]
    if len(others) == 0:
        return True
    units = (others - vertex) / np.linalg.norm(others - vertex, axis=1)[:, None]
    return bool(np.linalg.norm(units.sum(axis=0)) <= multiplicity + 1e-12)


def geometric_median(points: list[Point]) -> Point:
    """1-median (Fermat-Weber point) by Weiszfeld iteration.

    Collinear inputs use the midpoint convention for even counts.  An
    iterate landing on an input point is either certified optimal or
    perturbed and iteration continues.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or len(pts) == 0:
        raise ValueError("need a non-empty list of points")
    if len(pts) == 1:
        return tuple(pts[0])
    if _is_collinear(pts):
        return tuple(_median_collinear(pts))
    x = pts.mean(axis=0)
    for _ in range(_WEISZFELD_MAX_ITER):
        dists = np.linalg.norm(pts - x, axis=1)
        stuck = dists <= 1e-12
        if stuck.any():
            if _vertex_is_median(pts, x):
                return tuple(x)
            x = x + 1e-6
            continue
        inv = 1.0 / dists
        nxt = (pts * inv[:, None]).sum(axis=0) / inv.sum()
        if np.linalg.norm(nxt - x) <= _WEISZFELD_TOL:
            x = nxt
            break
        x = nxt
    # snap to an input point when it is the certified optimum nearby
    dists = np.linalg.norm(pts - x, axis=1)
    j = int(np.argmin(dists))
    if dists[j] <= 1e-6 and _vertex_is_median(pts, pts[j]):
        return tuple(pts[j])
    return tuple(x)


# ---------------------------------------------------------------------------
# sampled lower bounds for centers without exact regions (d >= 2)
# ---------------------------------------------------------------------------


def _corner_realizations(balls: list[UncertaintyBall]) -> list[list[Point]]:
    """Deterministic realizations: all balls at their centers, plus every
    single-object axis-extreme deviation.  These include the witness pairs
    used by the unboundedness constructions."""
    centers = [b.center for b in balls]
    out = [list(centers)]
    dim = len(centers[0])
    for i, b in enumerate(balls):
        if b.radius == 0:
            continue
        for axis in range(dim):
            for sign in (1.0, -1.0):
                moved = list(b.center)
                moved[axis] += sign * b.radius
                real = list(centers)
                real[i] = tuple(moved)
                out.append(real)
    return out


def _uniform_in_ball(rng: np.random.Generator, ball: UncertaintyBall) -> Point:
    d = len(ball.center)
    v = rng.normal(size=d)
    norm = np.linalg.norm(v)
    if norm == 0 or ball.radius == 0:
        return ball.center
    r = ball.radius * rng.uniform() ** (1.0 / d)
    return tuple(c + r * vi / norm for c, vi in zip(ball.center, v))


def realization_center(points: list[Point], kind: CenterKind, seed: int = 0) -> Point:
    if kind is CenterKind.ONE_CENTER:
        return smallest_enclosing_ball(points, seed=seed).center
    if kind is CenterKind.ONE_MEDIAN:
        return geometric_median(points)
    raise ValueError(f"sampled bounds support one_center/one_median, got {kind.value}")


def sampled_center_size_lower_bound(
    balls: list[UncertaintyBall],
    center_kind: CenterKind,
    sample_count: int = 64,
    seed: int = 0,
) -> float:
    """Certified lower bound on the center's region size.

    Draws `sample_count` random realizations (one point per ball, uniform),
    adds the deterministic corner realizations, computes the exact center of
    each realization, and returns the maximum pairwise distance among the
    computed centers.  Every computed center is a possible center position,
    so the result never exceeds the true region size.
    """
    if sample_count < 2:
        raise ValueError("sample_count must be >= 2")
    if len(balls[0].center) < 2:
        raise ValueError("sampled bounds are for d >= 2; 1-D regions are exact")
    rng = np.random.default_rng(seed)
    realizations = _corner_realizations(balls)
    for _ in range(sample_count):
        realizations.append([_uniform_in_ball(rng, b) for b in balls])
    centers = [realization_center(r, center_kind, seed=seed) for r in realizations]
    best = 0.0
    for a, b in itertools.combinations(centers, 2):
        best = max(best, math.dist(a, b))
    return best
