"""Goal-mouth zone model.

The goal is split into a ``cols x rows`` lattice of zone centers. Zones are
numbered from 1 with x varying fastest, so under the default 3x3 grid::

    7 8 9      (top, y = 2.44)
    4 5 6
    1 2 3      (ground, y = 0)

Zone extents are the Voronoi cells of the centers: an impact point belongs to
its nearest center, ties going to the lowest zone id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np
from scipy.spatial.distance import cdist

from .errors import GeometryError, ZoneError

GOAL_WIDTH = 7.32
GOAL_HEIGHT = 2.44

METRIC_NAMES = ("euclidean", "maximum", "manhattan", "canberra", "binary", "minkowski")

# relative slack when deciding that two candidate centers are equally near
_TIE_RTOL = 1e-12


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class DistanceMetric:
    """One of the six supported center-to-center distances.

    ``p`` is only meaningful for ``minkowski``; it is normalised to 2.0 for the
    other metrics so that equal metrics compare equal.
    """

    name: str = "euclidean"
    p: float = 2.0

    def __post_init__(self):
        if self.name not in METRIC_NAMES:
            raise GeometryError(
                f"unknown distance metric {self.name!r}; expected one of {', '.join(METRIC_NAMES)}"
            )
        if self.name == "minkowski":
            if not (math.isfinite(self.p) and self.p > 0):
                raise GeometryError(f"minkowski exponent must be a finite number > 0, got {self.p!r}")
        else:
            object.__setattr__(self, "p", 2.0)

    def __str__(self):
        if self.name == "minkowski":
            return f"minkowski(p={self.p:g})"
        return self.name

    def pairwise(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Distance matrix between the rows of ``a`` and the rows of ``b``."""
        if self.name == "euclidean":
            return cdist(a, b, "euclidean")
        if self.name == "maximum":
            return cdist(a, b, "chebyshev")
        if self.name == "manhattan":
            return cdist(a, b, "cityblock")
        if self.name == "canberra":
            # scipy drops 0/0 terms, which is the convention we want
            return cdist(a, b, "canberra")
        if self.name == "binary":
            # share of coordinates where exactly one side is nonzero, among
            # coordinates where at least one side is nonzero
            return cdist(a != 0, b != 0, "jaccard")
        return cdist(a, b, "minkowski", p=self.p)


EUCLIDEAN = DistanceMetric("euclidean")


@dataclass(frozen=True)
class ClusterGeometry:
    cols: int = 3
    rows: int = 3
    goal_width: float = GOAL_WIDTH
    goal_height: float = GOAL_HEIGHT
    metric: DistanceMetric = field(default=EUCLIDEAN)

    def __post_init__(self):
        if isinstance(self.cols, bool) or isinstance(self.rows, bool):
            raise GeometryError("grid dimensions must be integers")
        if int(self.cols) != self.cols or int(self.rows) != self.rows:
            raise GeometryError(f"grid dimensions must be integers, got {self.cols}x{self.rows}")
        object.__setattr__(self, "cols", int(self.cols))
        object.__setattr__(self, "rows", int(self.rows))
        if self.cols < 2 or self.rows < 2:
            raise GeometryError(f"grid must be at least 2x2, got {self.cols}x{self.rows}")
        for label, value in (("goal_width", self.goal_width), ("goal_height", self.goal_height)):
            if not (math.isfinite(value) and value > 0):
                raise GeometryError(f"{label} must be a finite positive length, got {value!r}")
        if not isinstance(self.metric, DistanceMetric):
            raise GeometryError(f"metric must be a DistanceMetric, got {type(self.metric).__name__}")

    @property
    def k(self) -> int:
        """Number of zones."""
        return self.cols * self.rows

    @cached_property
    def centers(self) -> np.ndarray:
        """``(k, 2)`` array of center coordinates; row ``i - 1`` is zone ``i``."""
        xs = np.linspace(0.0, self.goal_width, self.cols)
        ys = np.linspace(0.0, self.goal_height, self.rows)
        pts = np.column_stack([np.tile(xs, self.rows), np.repeat(ys, self.cols)])
        pts.flags.writeable = False
        return pts

    @cached_property
    def distances(self) -> np.ndarray:
        """``(k, k)`` matrix of center-to-center distances under ``metric``."""
        d = self.metric.pairwise(self.centers, self.centers)
        # exact symmetry, whatever the backend rounding
        d = np.minimum(d, d.T)
        np.fill_diagonal(d, 0.0)
        d.flags.writeable = False
        return d

    @cached_property
    def row_max(self) -> np.ndarray:
        """Largest distance from each zone's center to any center."""
        m = self.distances.max(axis=1)
        m.flags.writeable = False
        return m

    @cached_property
    def center_zone(self) -> int:
        """Zone nearest the middle of the goal; used when the keeper does not move."""
        return assign_zone(self, Point(self.goal_width / 2, self.goal_height / 2))

    def check_zone(self, zone: int) -> int:
        if isinstance(zone, bool) or not isinstance(zone, (int, np.integer)):
            raise ZoneError(f"zone id must be an integer, got {zone!r}")
        if not 1 <= zone <= self.k:
            raise ZoneError(f"zone {zone} out of range 1..{self.k}")
        return int(zone)

    def center(self, zone: int) -> Point:
        zone = self.check_zone(zone)
        x, y = self.centers[zone - 1]
        return Point(float(x), float(y))


DEFAULT_GEOMETRY = ClusterGeometry()


def build_geometry(
    cols: int = 3,
    rows: int = 3,
    goal_width: float = GOAL_WIDTH,
    goal_height: float = GOAL_HEIGHT,
    metric: DistanceMetric | str = EUCLIDEAN,
    p: float = 2.0,
) -> ClusterGeometry:
    """Build a zone grid. ``metric`` may be given by name, with ``p`` for minkowski."""
    if isinstance(metric, str):
        metric = DistanceMetric(metric, p)
    return ClusterGeometry(cols, rows, goal_width, goal_height, metric)


def center_distance(g: ClusterGeometry, i: int, j: int) -> float:
    i, j = g.check_zone(i), g.check_zone(j)
    return float(g.distances[i - 1, j - 1])


def max_distance_from(g: ClusterGeometry, i: int) -> float:
    i = g.check_zone(i)
    return float(g.row_max[i - 1])


def assign_zone(g: ClusterGeometry, p: Point) -> int:
    """Nearest-center zone for an impact point (lowest id wins ties).

    Points outside the goal rectangle are accepted; whether the ball was on
    target is recorded separately by the caller.
    """
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise GeometryError(f"impact point must have finite coordinates, got ({x}, {y})")
    d = g.metric.pairwise(np.array([[x, y]]), g.centers)[0]
    best = d.min()
    tied = np.flatnonzero(d <= best + _TIE_RTOL * max(best, 1.0))
    return int(tied[0]) + 1
