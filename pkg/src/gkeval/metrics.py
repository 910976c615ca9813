"""Goalkeeper measures: SV, GAA, RI, DDI, MRDI and GSI.

RI, DDI and MRDI compare the zones the kicker chose against the zones the
keeper dived to. SV and GAA are the classical point statistics, and GSI is
SV adjusted by a reward for reading the kick and a penalty for misreading it.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import MetricError
from .geometry import DEFAULT_GEOMETRY, ClusterGeometry
from .model import (
    ContingencyTable,
    GsiWeights,
    MetricReport,
    Outcome,
    PairCounts,
    SaveBuckets,
    ShootoutRecord,
)

DEFAULT_WEIGHTS = GsiWeights()


def _zone_arrays(true_zones, detected_zones, k=None):
    t = np.asarray(true_zones)
    e = np.asarray(detected_zones)
    if t.ndim != 1 or e.ndim != 1:
        raise MetricError("zone labelings must be one-dimensional")
    if t.shape != e.shape:
        raise MetricError(f"labelings differ in length ({t.size} vs {e.size})")
    if t.size == 0:
        raise MetricError("no kicks to evaluate")
    if not (np.issubdtype(t.dtype, np.integer) and np.issubdtype(e.dtype, np.integer)):
        raise MetricError("zone ids must be integers")
    if k is not None:
        for name, z in (("true", t), ("detected", e)):
            if z.min() < 1 or z.max() > k:
                raise MetricError(f"{name} zone out of range 1..{k}")
    return t.astype(np.int64), e.astype(np.int64)


def build_contingency(true_zones: Sequence[int], detected_zones: Sequence[int], k: int) -> ContingencyTable:
    """Rows are indexed by true zone, columns by detected zone."""
    t, e = _zone_arrays(true_zones, detected_zones, k)
    counts = np.zeros((k, k), dtype=np.int64)
    np.add.at(counts, (t - 1, e - 1), 1)
    return ContingencyTable(k, tuple(tuple(int(v) for v in row) for row in counts))


def _comb2(x: np.ndarray) -> int:
    return int((x * (x - 1) // 2).sum())


def pair_counts(true_zones: Sequence[int], detected_zones: Sequence[int]) -> PairCounts:
    t, e = _zone_arrays(true_zones, detected_zones)
    n = t.size
    if n < 2:
        raise MetricError("RI requires at least 2 kicks")
    # labels need not be zone ids here; compress them to dense codes
    _, ti = np.unique(t, return_inverse=True)
    _, ei = np.unique(e, return_inverse=True)
    table = np.zeros((ti.max() + 1, ei.max() + 1), dtype=np.int64)
    np.add.at(table, (ti, ei), 1)

    same_both = _comb2(table)
    same_true = _comb2(table.sum(axis=1))
    same_detected = _comb2(table.sum(axis=0))
    total = n * (n - 1) // 2
    a = same_both
    c = same_true - same_both
    d = same_detected - same_both
    return PairCounts(a=a, b=total - a - c - d, c=c, d=d)


def rand_index(true_zones: Sequence[int], detected_zones: Sequence[int]) -> float:
    pc = pair_counts(true_zones, detected_zones)
    return (pc.a + pc.b) / pc.total


def ddi(true_zones: Sequence[int], detected_zones: Sequence[int], g: ClusterGeometry = DEFAULT_GEOMETRY) -> float:
    """Direction detection index.

    One minus the mean distance between true and detected centers, where each
    kick's distance is scaled by the largest distance reachable from its true
    zone's center.
    """
    table = build_contingency(true_zones, detected_zones, g.k).as_array()
    scaled = g.distances / g.row_max[:, None]
    return float(1.0 - (table * scaled).sum() / table.sum())


def mrdi(ri: float, ddi: float) -> float:
    return min(ri, ddi)


def sv(records: ShootoutRecord) -> float:
    """Save percentage; off-target balls marked saved count as saves."""
    if not records.kicks:
        raise MetricError("SV needs at least one kick")
    return records.saves / (records.saves + records.allowed_goals)


def gaa(allowed_goals: int, playing_time_minutes: float) -> float:
    if not playing_time_minutes > 0:
        raise MetricError(f"playing time must be positive, got {playing_time_minutes!r}")
    return allowed_goals * 90 / playing_time_minutes


def classify_buckets(records: ShootoutRecord) -> SaveBuckets:
    kicks = records.kicks
    if not kicks:
        raise MetricError("no kicks to classify")
    n_ie = n_oe = n_id = n_od = n_s = 0
    for kick in kicks:
        if kick.on_target:
            if kick.outcome is Outcome.SAVED:
                n_s += 1
            if kick.detected_correctly:
                n_ie += 1
            else:
                n_id += 1
        elif kick.detected_correctly:
            n_oe += 1
        else:
            n_od += 1
    return SaveBuckets(n=len(kicks), n_s=n_s, n_ie=n_ie, n_oe=n_oe, n_id=n_id, n_od=n_od)


def gsi(buckets: SaveBuckets, w: GsiWeights = DEFAULT_WEIGHTS) -> float:
    if buckets.n == 0:
        raise MetricError("GSI is undefined for zero kicks")
    raw = (buckets.n_s + w.omega_e * (buckets.n_ie + buckets.n_oe) - w.omega_d * (buckets.n_id + buckets.n_od)) / buckets.n
    return min(1.0, max(0.0, raw))


def evaluate(
    records: ShootoutRecord,
    g: ClusterGeometry = DEFAULT_GEOMETRY,
    w: GsiWeights = DEFAULT_WEIGHTS,
    require_ri: bool = True,
) -> MetricReport:
    """Compute every measure for one goalkeeper's shootout.

    With ``require_ri=False`` a single-kick shootout is accepted and RI, MRDI
    and the pair counts are left as ``None``.
    """
    t, e = records.true_zones, records.detected_zones
    table = build_contingency(t, e, g.k)
    if len(t) >= 2:
        pc = pair_counts(t, e)
        ri = (pc.a + pc.b) / pc.total
    elif require_ri:
        raise MetricError("RI requires at least 2 kicks")
    else:
        pc = ri = None
    d = ddi(t, e, g)
    buckets = classify_buckets(records)
    minutes = records.playing_time_minutes
    return MetricReport(
        goalkeeper=records.goalkeeper,
        opponent=records.opponent,
        ri=ri,
        ddi=d,
        mrdi=None if ri is None else mrdi(ri, d),
        sv=sv(records),
        gaa=None if minutes is None else gaa(records.allowed_goals, minutes),
        gsi=gsi(buckets, w),
        pair_counts=pc,
        save_buckets=buckets,
        contingency=table,
    )
