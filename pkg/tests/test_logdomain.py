import math

import numpy as np
import pytest

from grover_gme.logdomain import (
    NEG_INF,
    SignedLog,
    log_plus_power,
    log_weight_term,
)


def direct_term(n, w, alpha):
    return math.cos(0.5 * alpha) ** (n - w) * math.sin(0.5 * alpha) ** w


def test_matches_direct_evaluation():
    rng = np.random.default_rng(7)
    for _ in range(400):
        n = int(rng.integers(1, 80))
        w = int(rng.integers(0, n + 1))
        alpha = float(rng.uniform(1e-6, math.pi - 1e-6))
        want = direct_term(n, w, alpha)
        if want < 1e-280:
            continue
        got = log_weight_term(n, w, alpha).value()
        assert got == pytest.approx(want, rel=1e-12)


def test_balanced_midpoint_power():
    t = log_weight_term(100, 50, math.pi / 2)
    assert t.sign == 1.0
    assert math.isfinite(t.log)
    assert t.value() == pytest.approx(2.0**-50, rel=1e-12)


def test_boundary_angles():
    assert log_weight_term(5, 0, 0.0).value() == 1.0
    assert log_weight_term(5, 3, 0.0).sign == 0.0
    assert log_weight_term(5, 5, math.pi).value() == 1.0
    # float pi halves to slightly under pi/2, so the cosine factor keeps a
    # residual of order 1e-17 instead of vanishing
    tail = log_weight_term(5, 2, math.pi)
    assert tail.sign == 1.0
    assert tail.value() < 1e-45
    zero = log_weight_term(4, 1, 0.0)
    assert zero.value() == 0.0


def test_survives_exponents_beyond_float_range():
    # direct evaluation of these powers underflows; the log stays finite
    t = log_weight_term(5000, 2500, 1.0)
    assert t.sign == 1.0
    assert math.isfinite(t.log)
    assert t.log < -2000.0
    assert t.value() == 0.0


def test_domain_validation():
    with pytest.raises(ValueError):
        log_weight_term(4, 5, 1.0)
    with pytest.raises(ValueError):
        log_weight_term(4, -1, 1.0)
    with pytest.raises(ValueError):
        log_weight_term(4, 2, -0.1)
    with pytest.raises(ValueError):
        log_weight_term(4, 2, math.pi + 0.1)


def test_plus_power_matches_direct():
    for n in (1, 3, 10, 40):
        for alpha in (0.0, 0.3, math.pi / 2, 2.9, math.pi):
            want = 2.0 ** (0.5 * n) * math.sin(math.pi / 4 + 0.5 * alpha) ** n
            assert math.exp(log_plus_power(n, alpha)) == pytest.approx(want, rel=1e-12)


def test_plus_power_peak_location():
    # sin(pi/4 + alpha/2) peaks at alpha = pi/2 where the power is 2^(n/2)
    n = 12
    peak = log_plus_power(n, math.pi / 2)
    assert peak == pytest.approx(0.5 * n * math.log(2.0), rel=1e-15)
    assert log_plus_power(n, 0.2) < peak
    assert log_plus_power(n, 3.0) < peak


def test_signed_log_value():
    assert SignedLog(1.0, 0.0).value() == 1.0
    assert SignedLog(-1.0, 0.0).value() == -1.0
    assert SignedLog(0.0, NEG_INF).value() == 0.0
