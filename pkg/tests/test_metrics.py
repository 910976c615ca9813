import pytest

from gkeval import (
    GsiWeights,
    KickRecord,
    MetricError,
    SaveBuckets,
    ShootoutRecord,
    build_contingency,
    build_geometry,
    classify_buckets,
    ddi,
    evaluate,
    gaa,
    gsi,
    mrdi,
    pair_counts,
    rand_index,
    sv,
)
from gkeval.datasets import labeling_shootout

EX1_TRUE = [1, 1, 3, 3, 1, 2, 1, 2, 8, 9]
EX1_M1 = [3, 1, 3, 3, 1, 2, 1, 2, 3, 4]
EX1_M2 = [2, 1, 3, 3, 1, 2, 1, 2, 7, 8]
EX2_TRUE = [1, 3, 4, 2, 1, 3, 4, 1]
EX2_M1 = [1, 1, 3, 3, 1, 3, 4, 2]
EX2_M2 = [1, 1, 3, 3, 1, 2, 1, 1]
W = GsiWeights(0.3, 0.2)


def kick(n, t, d, on=True, res="allowed"):
    return KickRecord(n, f"k{n}", t, d, on, res)


class TestContingency:
    # published layout: one row per true zone, one column per detected zone
    PUBLISHED_M1 = [
        [3, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, 0, 0],
        [0] * 9, [0] * 9, [0] * 9, [0] * 9,
        [0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0],
    ]
    PUBLISHED_M2 = [
        [3, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 2, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 2, 0, 0, 0, 0, 0, 0],
        [0] * 9, [0] * 9, [0] * 9, [0] * 9,
        [0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0],
    ]

    def test_example1_matches_published_tables(self):
        assert build_contingency(EX1_TRUE, EX1_M1, 9).as_array().tolist() == self.PUBLISHED_M1
        assert build_contingency(EX1_TRUE, EX1_M2, 9).as_array().tolist() == self.PUBLISHED_M2

    def test_identical_is_diagonal(self):
        table = build_contingency([1, 5, 9, 5], [1, 5, 9, 5], 9).as_array()
        assert table.trace() == table.sum() == 4

    def test_swap(self):
        table = build_contingency([1, 1, 3, 3], [3, 3, 1, 1], 9)
        assert table.entry(1, 3) == 2 and table.entry(3, 1) == 2
        assert table.n == 4

    def test_marginals(self):
        table = build_contingency(EX2_TRUE, EX2_M2, 9).as_array()
        assert list(table.sum(axis=1)[:4]) == [3, 1, 2, 2]

    @pytest.mark.parametrize(
        "t, d",
        [([], []), ([1, 2], [1]), ([1, 10], [1, 1]), ([0], [1])],
    )
    def test_errors(self, t, d):
        with pytest.raises(MetricError):
            build_contingency(t, d, 9)


class TestPairCounts:
    def test_near_miss_counts(self):
        pc = pair_counts([1, 7, 1, 7], [1, 4, 1, 7])
        assert (pc.a, pc.b, pc.c, pc.d) == (1, 4, 1, 0)

    def test_identical(self):
        pc = pair_counts(EX1_TRUE, EX1_TRUE)
        assert pc.c == pc.d == 0
        assert pc.total == 45

    def test_merged_pair(self):
        pc = pair_counts([1, 2], [1, 1])
        assert (pc.a, pc.b, pc.c, pc.d) == (0, 0, 0, 1)

    def test_needs_two(self):
        with pytest.raises(MetricError, match="at least 2"):
            pair_counts([1], [1])


class TestRandIndex:
    def test_example1(self):
        assert rand_index(EX1_TRUE, EX1_M1) == pytest.approx(0.822, abs=0.001)
        assert rand_index(EX1_TRUE, EX1_M2) == pytest.approx(0.888, abs=0.001)

    def test_label_switch(self):
        assert rand_index([1, 1, 3, 3], [3, 3, 1, 1]) == 1.0

    @pytest.mark.parametrize("det", [[1, 4, 1, 7], [1, 3, 1, 7]])
    def test_blind_to_distance(self, det):
        assert rand_index([1, 7, 1, 7], det) == pytest.approx(5 / 6, abs=1e-15)


class TestDdi:
    def test_label_switch(self):
        assert ddi([1, 1, 3, 3], [3, 3, 1, 1]) == pytest.approx(0.051, abs=0.002)

    def test_near_and_far_miss(self):
        assert ddi([1, 7, 1, 7], [1, 4, 1, 7]) == pytest.approx(0.960, abs=0.002)
        assert ddi([1, 7, 1, 7], [1, 3, 1, 7]) == pytest.approx(0.750, abs=0.002)

    def test_example2_m2(self):
        assert ddi(EX2_TRUE, EX2_M2) == pytest.approx(0.572, abs=0.002)

    def test_identical(self):
        assert ddi(EX1_TRUE, EX1_TRUE) == 1.0

    def test_single_kick(self):
        # one far-corner miss: full normalised distance
        assert ddi([1], [9]) == pytest.approx(0.0, abs=1e-15)

    def test_orientation(self):
        # normalised by the distance range of the true zone, not the detected one
        assert ddi([6, 8, 3, 3], [6, 5, 2, 2]) == pytest.approx(0.693, abs=0.002)
        assert ddi([6, 5, 2, 2], [6, 8, 3, 3]) == pytest.approx(0.505, abs=0.002)

    def test_other_metric(self):
        g = build_geometry(metric="manhattan")
        # zone 1 -> 3 is 7.32 of a possible 9.76
        assert ddi([1], [3], g) == pytest.approx(1 - 7.32 / 9.76, abs=1e-12)

    def test_zone_out_of_range(self):
        with pytest.raises(MetricError):
            ddi([1, 10], [1, 1])


def test_mrdi():
    assert mrdi(0.822, 0.708) == 0.708
    assert mrdi(1.0, 1.0) == 1.0
    assert mrdi(0.666, 0.386) == 0.386


class TestPointStatistics:
    def test_sv(self, shootout):
        assert sv(shootout("euro2020-donnarumma")) == pytest.approx(0.6)
        assert sv(shootout("wc2006-franco")) == 0.0
        all_saved = ShootoutRecord("x", "y", [kick(1, 1, 1, res="saved"), kick(2, 3, 3, res="saved")])
        assert sv(all_saved) == 1.0

    def test_sv_empty(self):
        with pytest.raises(MetricError):
            sv(ShootoutRecord("x", "y", []))

    @pytest.mark.parametrize("goals, minutes, expected", [(0, 90, 0.0), (2, 120, 1.5), (3, 90, 3.0)])
    def test_gaa(self, goals, minutes, expected):
        assert gaa(goals, minutes) == expected

    @pytest.mark.parametrize("minutes", [0, -5])
    def test_gaa_bad_time(self, minutes):
        with pytest.raises(MetricError):
            gaa(1, minutes)


class TestBuckets:
    def test_lehmann(self, shootout):
        assert classify_buckets(shootout("wc2006-lehmann")) == SaveBuckets(4, 2, 4, 0, 0, 0)

    def test_donnarumma(self, shootout):
        assert classify_buckets(shootout("euro2020-donnarumma")) == SaveBuckets(5, 2, 3, 0, 1, 1)

    def test_single_off_target_read(self):
        rec = ShootoutRecord("x", "y", [kick(1, 1, 1, on=False, res="saved")])
        b = classify_buckets(rec)
        assert (b.n_s, b.n_oe) == (0, 1)

    def test_invariants_enforced(self):
        with pytest.raises(MetricError):
            SaveBuckets(n=3, n_s=0, n_ie=1, n_oe=1, n_id=0, n_od=0)
        with pytest.raises(MetricError):
            SaveBuckets(n=2, n_s=2, n_ie=1, n_oe=1, n_id=0, n_od=0)


class TestGsi:
    def test_lehmann(self, shootout):
        assert gsi(classify_buckets(shootout("wc2006-lehmann")), W) == pytest.approx(0.8, abs=1e-12)

    def test_upper_clip(self):
        assert gsi(SaveBuckets(4, 4, 4, 0, 0, 0), W) == 1.0

    def test_franco_lower_clip(self):
        b = SaveBuckets(n=4, n_s=0, n_ie=1, n_oe=0, n_id=3, n_od=0)
        raw = (0 + 0.3 * 1 - 0.2 * 3) / 4
        assert raw == pytest.approx(-0.075)
        assert gsi(b, W) == 0.0

    @pytest.mark.parametrize("we, wd", [(0.0, 0.2), (0.5, 0.2), (0.3, 0.6), (0.3, -0.1)])
    def test_weight_bounds(self, we, wd):
        with pytest.raises(MetricError):
            GsiWeights(we, wd)

    def test_zero_kicks(self):
        with pytest.raises(MetricError):
            gsi(SaveBuckets(0, 0, 0, 0, 0, 0), W)


class TestEvaluate:
    def test_pickford(self, shootout):
        r = evaluate(shootout("euro2020-pickford"))
        assert r.ri == pytest.approx(0.6)
        assert r.ddi == pytest.approx(0.643, abs=0.002)
        assert r.mrdi == pytest.approx(0.6)
        assert r.sv == pytest.approx(0.4)
        assert r.gaa is None

    def test_romero(self, shootout):
        r = evaluate(shootout("copa2024-romero"))
        assert r.ri == pytest.approx(0.866, abs=0.001)
        assert r.ddi == pytest.approx(0.350, abs=0.002)
        assert r.sv == pytest.approx(0.333, abs=0.001)

    def test_single_kick(self):
        rec = ShootoutRecord("x", "y", [kick(1, 1, 1)])
        with pytest.raises(MetricError, match="RI requires at least 2 kicks"):
            evaluate(rec)

    def test_single_kick_without_ri(self):
        r = evaluate(ShootoutRecord("x", "y", [kick(1, 1, 1)]), require_ri=False)
        assert r.ri is None and r.mrdi is None and r.pair_counts is None
        assert r.ddi == 1.0

    def test_gaa_when_time_known(self):
        rec = ShootoutRecord("x", "y", [kick(1, 1, 1), kick(2, 2, 3)], playing_time_minutes=120)
        assert evaluate(rec).gaa == pytest.approx(1.5)

    def test_weights_flow_through(self, shootout):
        franco = shootout("wc2006-franco")
        assert evaluate(franco, w=GsiWeights(0.45, 0.01)).gsi == pytest.approx((0.45 - 0.03) / 4)

    def test_zone_validation_uses_geometry(self):
        small = build_geometry(2, 2, 1.0, 1.0)
        # opposite corners of the unit square: each miss is the largest possible
        assert evaluate(labeling_shootout("x", [1, 4], [4, 1]), small).ddi == pytest.approx(0.0, abs=1e-15)
        with pytest.raises(MetricError):
            evaluate(labeling_shootout("x", [1, 5], [5, 1]), small)
