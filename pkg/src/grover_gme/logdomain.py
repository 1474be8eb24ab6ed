"""Signed log-domain scalars for products of large trigonometric powers.

Direct evaluation of cos^p(x) * sin^q(x) underflows once p + q passes a few
thousand; every power here is kept as (sign, log magnitude) instead and only
collapsed to a float after the scale factors cancel.
"""
from __future__ import annotations

import math
from typing import NamedTuple

LOG2 = math.log(2.0)
NEG_INF = float("-inf")
QUARTER_PI = 0.25 * math.pi


class SignedLog(NamedTuple):
    """A real number as sign * exp(log); zero is (0.0, -inf)."""

    sign: float
    log: float

    def value(self) -> float:
        if self.sign == 0.0:
            return 0.0
        return self.sign * math.exp(self.log)


SL_ZERO = SignedLog(0.0, NEG_INF)


def log_weight_term(n: int, w: int, alpha: float) -> SignedLog:
    """cos^(n-w)(alpha/2) * sin^w(alpha/2) as a signed-log scalar.

    Both factors are nonnegative for alpha in [0, pi], so the sign is 0 or +1;
    the log magnitude stays finite for any register size.
    """
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} outside [0, {n}]")
    if not 0.0 <= alpha <= math.pi:
        raise ValueError(f"alpha {alpha} outside [0, pi]")
    c = math.cos(0.5 * alpha)
    s = math.sin(0.5 * alpha)
    log = 0.0
    if w < n:
        if c == 0.0:
            return SL_ZERO
        log += (n - w) * math.log(c)
    if w > 0:
        if s == 0.0:
            return SL_ZERO
        log += w * math.log(s)
    return SignedLog(1.0, log)


def log_plus_power(n: int, alpha: float) -> float:
    """log of (cos(alpha/2) + sin(alpha/2))^n via 2^(n/2) * sin^n(pi/4 + alpha/2).

    The base is at least sqrt(2)/2 on [0, pi], so the result is always finite.
    """
    return 0.5 * n * LOG2 + n * math.log(math.sin(QUARTER_PI + 0.5 * alpha))
