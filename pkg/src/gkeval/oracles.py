"""Slow reference implementations used to cross-check the metric kernels.

Nothing here goes through the contingency table or the geometry's cached
distance matrix. Only the raw center coordinates are shared.
"""

from __future__ import annotations

import math
from itertools import combinations

import numpy as np

from .errors import MetricError
from .geometry import DEFAULT_GEOMETRY, ClusterGeometry
from .model import GsiWeights, ShootoutRecord


def ri_by_enumeration(true_zones, detected_zones) -> float:
    t, e = list(true_zones), list(detected_zones)
    if len(t) != len(e):
        raise MetricError("labelings differ in length")
    if len(t) < 2:
        raise MetricError("RI requires at least 2 kicks")
    a = b = c = d = 0
    for i, j in combinations(range(len(t)), 2):
        same_t = t[i] == t[j]
        same_e = e[i] == e[j]
        if same_t and same_e:
            a += 1
        elif not same_t and not same_e:
            b += 1
        elif same_t:
            c += 1
        else:
            d += 1
    return (a + b) / (a + b + c + d)


def ri_by_sign_matrix(true_zones, detected_zones) -> float:
    """RI from the signs of the two label-difference matrices."""
    x = np.asarray(true_zones, dtype=float)
    y = np.asarray(detected_zones, dtype=float)
    n = x.size
    if n < 2 or y.size != n:
        raise MetricError("RI requires two labelings of equal length >= 2")
    dx = np.abs(x[:, None] - x[None, :])
    dy = np.abs(y[:, None] - y[None, :])
    return 1.0 - np.abs(np.sign(dx) - np.sign(dy)).sum() / (n * (n - 1))


def _distance(metric, u, v) -> float:
    name = metric.name
    diffs = [abs(a - b) for a, b in zip(u, v)]
    if name == "euclidean":
        return math.sqrt(sum(x * x for x in diffs))
    if name == "maximum":
        return max(diffs)
    if name == "manhattan":
        return sum(diffs)
    if name == "minkowski":
        return sum(x ** metric.p for x in diffs) ** (1.0 / metric.p)
    if name == "canberra":
        total = 0.0
        for a, b in zip(u, v):
            den = abs(a) + abs(b)
            if den > 0:
                total += abs(a - b) / den
        return total
    if name == "binary":
        used = [(a != 0, b != 0) for a, b in zip(u, v) if a != 0 or b != 0]
        if not used:
            return 0.0
        return sum(p != q for p, q in used) / len(used)
    raise MetricError(f"unsupported metric {name!r}")


def ddi_by_literal_sum(true_zones, detected_zones, g: ClusterGeometry = DEFAULT_GEOMETRY) -> float:
    t, e = list(true_zones), list(detected_zones)
    if not t or len(t) != len(e):
        raise MetricError("need two non-empty labelings of equal length")
    centers = [tuple(float(c) for c in row) for row in g.centers]
    k = len(centers)
    acc = 0.0
    for zt, ze in zip(t, e):
        if not (1 <= zt <= k and 1 <= ze <= k):
            raise MetricError(f"zone out of range 1..{k}")
        here = centers[zt - 1]
        farthest = max(_distance(g.metric, here, other) for other in centers)
        acc += _distance(g.metric, here, centers[ze - 1]) / farthest
    return 1.0 - acc / len(t)


def gsi_by_reclassification(records: ShootoutRecord, w: GsiWeights) -> float:
    kicks = records.kicks
    if not kicks:
        raise MetricError("no kicks")
    n = len(kicks)
    n_s = len([k for k in kicks if k.on_target and k.outcome == "saved"])
    n_ie = len([k for k in kicks if k.on_target and k.true_zone == k.detected_zone])
    n_oe = len([k for k in kicks if not k.on_target and k.true_zone == k.detected_zone])
    n_id = len([k for k in kicks if k.on_target and k.true_zone != k.detected_zone])
    n_od = len([k for k in kicks if not k.on_target and k.true_zone != k.detected_zone])
    score = (n_s + w.omega_e * (n_ie + n_oe) - w.omega_d * (n_id + n_od)) / n
    return min(1.0, max(0.0, score))
