"""Grover rotation angle and iteration budget for a marked set."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .marked import MarkedSet


@dataclass(frozen=True)
class GroverSchedule:
    """Rotation angle per iteration and the stopping iteration.

    theta is the half-angle arcsin(sqrt(M/N)), computed in arctangent form;
    iterate k sits at angle (2k+1)*theta.  k_opt is the integer k whose angle
    lands closest to pi/2, so (2*k_opt+1)*theta may overshoot pi/2 by up to
    theta at small n.
    """

    theta: float
    k_opt: int

    def theta_k(self, k: int) -> float:
        if not 0 <= k <= self.k_opt:
            raise ValueError(f"iteration {k} outside [0, {self.k_opt}]")
        return (2 * k + 1) * self.theta

    def ratio(self, k: int) -> float:
        if self.k_opt == 0:
            return 0.0
        return k / self.k_opt


def _closest_integer(x: float) -> int:
    # round half away from zero on the positive axis; x >= 0 here
    return math.floor(x + 0.5)


def make_schedule(marked: MarkedSet) -> GroverSchedule:
    """Schedule for amplifying ``marked``; rejects M >= N (nothing left to amplify)."""
    m = marked.num_marked
    n_states = marked.num_states
    if m >= n_states:
        raise ValueError(
            f"marked count {m} must be smaller than the state count {n_states}"
        )
    # big-int true division is correctly rounded, so this survives huge n;
    # the atan2 form keeps the m == N/2 boundary exact (pi/4), which the
    # tie-breaking rule below depends on
    frac = m / n_states
    theta = math.atan2(math.sqrt(frac), math.sqrt(1.0 - frac))
    if theta == 0.0:
        raise ValueError("marked fraction underflows; schedule is out of float range")
    k_opt = max(_closest_integer((math.pi / (2.0 * theta) - 1.0) / 2.0), 0)
    return GroverSchedule(theta=theta, k_opt=k_opt)
