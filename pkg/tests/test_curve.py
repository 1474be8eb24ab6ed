import math

import numpy as np
import pytest

from grover_gme import (
    AsymmetricMarkedSetError,
    MarkedSet,
    ab_profile,
    dicke_set,
    ghz_set,
    gme_curve,
    product_set,
    scale_invariance_sweep,
    turning_summary,
    w_set,
)


def test_curve_shape_and_modes():
    curve = gme_curve(product_set(12), "both")
    sched = curve.schedule
    assert len(curve.points) == sched.k_opt + 1
    assert [p.k for p in curve.points] == list(range(sched.k_opt + 1))
    assert curve.points[0].ratio == 0.0
    assert curve.points[-1].ratio == 1.0
    for p in curve.points:
        assert p.gme_exact is not None and p.gme_asymptotic is not None
        assert p.gme == p.gme_exact

    exact_only = gme_curve(product_set(12), "exact")
    assert all(p.gme_asymptotic is None for p in exact_only.points)
    asym_only = gme_curve(product_set(12), "asymptotic")
    assert all(p.gme_exact is None for p in asym_only.points)
    assert all(p.alpha_star is None for p in asym_only.points)
    assert asym_only.points[3].gme == asym_only.points[3].gme_asymptotic


def test_curve_turning_fields():
    curve = gme_curve(ghz_set(14), "asymptotic")
    t = turning_summary(ghz_set(14))
    assert curve.turning_theta == t.theta
    assert curve.turning_k == t.ratio * curve.schedule.k_opt
    assert curve.turning_ratio == pytest.approx(t.ratio, rel=1e-15)
    assert curve.turning_k_nearest == round(curve.turning_k)
    assert 0 <= curve.turning_k_nearest <= curve.schedule.k_opt


def test_curve_mode_validation():
    with pytest.raises(ValueError):
        gme_curve(product_set(6), "nope")


def test_curve_exact_needs_symmetry_but_asymptotic_does_not():
    partial = MarkedSet.from_weights(6, {2: 2})
    with pytest.raises(AsymmetricMarkedSetError):
        gme_curve(partial, "exact")
    curve = gme_curve(partial, "asymptotic")
    assert len(curve.points) == curve.schedule.k_opt + 1


def test_extreme_pair_peak_location():
    curve = gme_curve(ghz_set(30), "both")
    assert curve.peak_gme == pytest.approx(2.0 / 3.0, abs=0.01)
    best = max(curve.points, key=lambda p: p.gme)
    assert best.ratio == pytest.approx(0.608, abs=0.02)


def test_asymptotic_peak_on_integer_grid_brackets_turning():
    for mk in (product_set(25), ghz_set(22), w_set(18), dicke_set(20, 2)):
        curve = gme_curve(mk, "asymptotic")
        best_k = max(curve.points, key=lambda p: (p.gme, -p.k)).k
        assert abs(best_k - curve.turning_k) <= 1.0


def test_weight_one_residual_stays_small():
    curve = gme_curve(w_set(35), "both")
    worst = max(abs(p.gme_exact - p.gme_asymptotic) for p in curve.points)
    assert worst < 0.02


def test_single_iterate_curve():
    curve = gme_curve(product_set(1), "both")
    assert len(curve.points) == 2
    assert all(p.gme_exact < 1e-12 for p in curve.points)


# -------------------------------------------------------------- sweep

def test_sweep_single_marked_family_is_invariant():
    report = scale_invariance_sweep(product_set, range(15, 31))
    assert report.scale_invariant
    assert report.b_max_spread == 0.0
    assert all(r.b_max == 1.0 for r in report.rows)
    assert all(r.turning_theta == math.pi / 4 for r in report.rows)


def test_sweep_extreme_pair_family_is_invariant():
    report = scale_invariance_sweep(ghz_set, range(15, 31))
    assert report.scale_invariant
    assert all(r.b_max == 1.0 / math.sqrt(2.0) for r in report.rows)


def test_sweep_weight_one_family_is_not_invariant():
    report = scale_invariance_sweep(w_set, range(15, 36))
    assert not report.scale_invariant
    assert report.b_max_spread > 1e-3
    finals = [r.final_gme for r in report.rows]
    assert finals == sorted(finals)
    assert finals[-1] < 1.0 - 1.0 / math.e


def test_sweep_validation():
    with pytest.raises(ValueError):
        scale_invariance_sweep(product_set, [])
    with pytest.raises(ValueError):
        scale_invariance_sweep(lambda n: product_set(n + 1), [8, 9])


def test_sweep_tolerance_override():
    report = scale_invariance_sweep(w_set, range(20, 23), tolerance=1.0)
    assert report.scale_invariant


# -------------------------------------------------------------- profile

def test_profile_midpoint_row():
    for n in (7, 100):
        prof = ab_profile(dicke_set(n, 1))
        hits = np.where(prof.alpha == math.pi / 2)[0]
        assert hits.size == 1
        assert prof.a[hits[0]] == 1.0


def test_profile_marked_peak_position():
    prof = ab_profile(dicke_set(100, 10), 1 << 14)
    spacing = math.pi / ((1 << 14) - 1)
    peak_alpha = prof.alpha[int(np.argmax(prof.b))]
    assert abs(peak_alpha - 2.0 * math.acos(math.sqrt(0.9))) <= spacing


def test_profile_sum_column():
    prof = ab_profile(w_set(40), 513)
    assert np.array_equal(prof.g, prof.a + prof.b)


def test_profile_combined_is_close_to_pointwise_max():
    for w in (1, 4, 10):
        prof = ab_profile(dicke_set(100, w), 4097)
        gap = float(np.max(prof.g - np.maximum(prof.a, prof.b)))
        assert gap <= 0.02


def test_profile_balanced_weight_marked_term_is_bounded():
    prof = ab_profile(dicke_set(100, 50), 4097)
    bound = math.sqrt(math.comb(100, 50)) * 2.0**-50
    assert float(np.max(prof.b)) <= bound * (1.0 + 1e-12)
    assert float(np.max(prof.g - prof.a)) <= bound * (1.0 + 1e-12)


def test_profile_underflow_clamps_to_zero():
    prof = ab_profile(dicke_set(3000, 1500), [0.05, 0.1, math.pi / 2])
    assert np.all(np.isfinite(prof.a))
    assert np.all(np.isfinite(prof.b))
    assert prof.a[0] == 0.0
    assert prof.b[0] == 0.0
    assert prof.a[-1] == 1.0


def test_profile_grid_validation():
    with pytest.raises(ValueError):
        ab_profile(product_set(5), 1)
    with pytest.raises(ValueError):
        ab_profile(product_set(5), [])
    with pytest.raises(ValueError):
        ab_profile(product_set(5), [-0.2])
    with pytest.raises(ValueError):
        ab_profile(product_set(5), [3.5])
    explicit = ab_profile(product_set(5), [0.0, 1.0, 2.0])
    assert explicit.alpha.tolist() == [0.0, 1.0, 2.0]
