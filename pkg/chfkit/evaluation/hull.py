"""Convex-hull coverage checks for test points against the training distribution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from ..errors import DegenerateHull

Point = Tuple[float, float]

# Relative tolerance on orientation tests; points this close to an edge count as on it.
_EPS = 1e-12


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Hull2:
    """Strictly convex hull, vertices counter-clockwise, no repeated first vertex."""

    vertices: Tuple[Point, ...]

    @property
    def area(self) -> float:
        pts = np.asarray(self.vertices)
        x, y = pts[:, 0], pts[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))

    def contains(self, point: Sequence[float]) -> bool:
        """Inside or on the boundary."""

        p = (float(point[0]), float(point[1]))
        extent = max(max(abs(c) for v in self.vertices for c in v), abs(p[0]), abs(p[1]), 1.0)
        tol = _EPS * extent * extent
        n = len(self.vertices)
        for i in range(n):
            if _cross(self.vertices[i], self.vertices[(i + 1) % n], p) < -tol:
                return False
        return True


def convex_hull(points: Sequence[Sequence[float]]) -> Hull2:
    """Andrew's monotone chain; collinear points are dropped from the vertex list."""

    pts = sorted({(float(p[0]), float(p[1])) for p in points})
    if len(pts) < 3:
        raise DegenerateHull(f"need at least 3 distinct points, got {len(pts)}")

    def half(sequence: List[Point]) -> List[Point]:
        chain: List[Point] = []
        for p in sequence:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(pts[::-1])
    vertices = lower[:-1] + upper[:-1]
    if len(vertices) < 3:
        raise DegenerateHull("training projections are collinear")
    return Hull2(vertices=tuple(vertices))


def hull_and_containment(
    train: Sequence[Sequence[float]], test: Sequence[Sequence[float]]
) -> Tuple[Hull2, List[bool]]:
    """Hull of ``train`` and, for each test point, whether it lies inside or on it."""

    hull = convex_hull(train)
    return hull, [hull.contains(p) for p in test]


def hull5d_contains(train: np.ndarray, test: np.ndarray) -> List[bool]:
    """Membership of each test row in the convex hull of the training rows (any dimension).

    A point is inside when it is a convex combination of training rows, checked
    as a linear-programming feasibility problem.
    """

    x = np.asarray(train, dtype=np.float64)
    queries = np.atleast_2d(np.asarray(test, dtype=np.float64))
    n = x.shape[0]
    a_eq = np.vstack([x.T, np.ones((1, n))])
    cost = np.zeros(n)
    inside: List[bool] = []
    for q in queries:
        result = linprog(cost, A_eq=a_eq, b_eq=np.append(q, 1.0), bounds=(0, None), method="highs")
        inside.append(bool(result.status == 0))
    return inside
