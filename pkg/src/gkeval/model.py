"""Value types for kicks, shootouts and metric reports."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import MetricError


class Outcome(str, enum.Enum):
    SAVED = "saved"
    ALLOWED = "allowed"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class KickRecord:
    """One penalty kick as seen from the goalkeeper's side.

    ``true_zone`` is where the ball went (or was aimed, when it missed the
    frame); ``detected_zone`` is where the keeper dived. Off-target kicks keep
    their zone and carry ``on_target=False``.
    """

    kick_number: int
    kicker: str
    true_zone: int
    detected_zone: int
    on_target: bool
    outcome: Outcome

    def __post_init__(self):
        object.__setattr__(self, "outcome", Outcome(self.outcome))
        if self.outcome is Outcome.ALLOWED and not self.on_target:
            raise ValueError("off-target kick cannot be allowed")

    @property
    def detected_correctly(self) -> bool:
        return self.true_zone == self.detected_zone


@dataclass(frozen=True)
class ShootoutRecord:
    goalkeeper: str
    opponent: str
    kicks: tuple[KickRecord, ...]
    playing_time_minutes: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "kicks", tuple(self.kicks))
        numbers = [k.kick_number for k in self.kicks]
        if numbers != list(range(1, len(numbers) + 1)):
            raise ValueError(
                f"kick numbers for {self.goalkeeper!r} must run 1..{len(numbers)} in order, got {numbers}"
            )
        t = self.playing_time_minutes
        if t is not None and not (math.isfinite(t) and t > 0):
            raise ValueError(f"playing time must be positive, got {t!r}")

    @property
    def true_zones(self) -> list[int]:
        return [k.true_zone for k in self.kicks]

    @property
    def detected_zones(self) -> list[int]:
        return [k.detected_zone for k in self.kicks]

    @property
    def saves(self) -> int:
        return sum(k.outcome is Outcome.SAVED for k in self.kicks)

    @property
    def allowed_goals(self) -> int:
        return sum(k.outcome is Outcome.ALLOWED for k in self.kicks)


@dataclass(frozen=True)
class ContingencyTable:
    """``counts[i-1][j-1]`` = kicks with true zone ``i`` and detected zone ``j``."""

    k: int
    counts: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(map(sum, self.counts))

    def as_array(self) -> np.ndarray:
        return np.array(self.counts, dtype=np.int64).reshape(self.k, self.k)

    def entry(self, true_zone: int, detected_zone: int) -> int:
        return self.counts[true_zone - 1][detected_zone - 1]


@dataclass(frozen=True)
class PairCounts:
    """Pair tallies behind the Rand index.

    a: same zone in both labelings; b: different in both;
    c: same true zone, different detected zone; d: the reverse.
    """

    a: int
    b: int
    c: int
    d: int

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d


@dataclass(frozen=True)
class GsiWeights:
    omega_e: float = 0.3
    omega_d: float = 0.2

    def __post_init__(self):
        for name in ("omega_e", "omega_d"):
            w = getattr(self, name)
            if not (0.0 < w < 0.5):
                raise MetricError(f"{name} must lie strictly between 0 and 0.5, got {w!r}")


@dataclass(frozen=True)
class SaveBuckets:
    """Kick tallies feeding the saving index.

    The four detection buckets partition the kicks; ``n_s`` (saves inside the
    frame) overlaps them.
    """

    n: int
    n_s: int
    n_ie: int
    n_oe: int
    n_id: int
    n_od: int

    def __post_init__(self):
        if min(self.n, self.n_s, self.n_ie, self.n_oe, self.n_id, self.n_od) < 0:
            raise MetricError("bucket counts must be non-negative")
        if self.n != self.n_ie + self.n_oe + self.n_id + self.n_od:
            raise MetricError("detection buckets must partition the kicks")
        if self.n_s > self.n_ie + self.n_id:
            raise MetricError("saves inside the goal exceed the inside-goal kicks")


@dataclass(frozen=True)
class MetricReport:
    goalkeeper: str
    opponent: str
    ri: Optional[float]
    ddi: float
    mrdi: Optional[float]
    sv: float
    gaa: Optional[float]
    gsi: float
    pair_counts: Optional[PairCounts]
    save_buckets: SaveBuckets
    contingency: ContingencyTable

    @property
    def n(self) -> int:
        return self.save_buckets.n
