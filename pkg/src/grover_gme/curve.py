"""Entanglement curves over the full iteration schedule, plus derived reports."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal, Sequence

import numpy as np

from .gme import (
    _asymptotic_value,
    _grid_marked_log,
    _require_symmetric,
    _OverlapProfile,
    b_max,
    turning_summary,
)
from .logdomain import QUARTER_PI
from .marked import MarkedSet
from .schedule import GroverSchedule, make_schedule

CurveMode = Literal["exact", "asymptotic", "both"]


@dataclass(frozen=True)
class GmePoint:
    """One iterate of the curve; whichever measures were requested are set."""

    k: int
    ratio: float
    theta_k: float
    gme_exact: float | None = None
    gme_asymptotic: float | None = None
    alpha_star: float | None = None

    @property
    def gme(self) -> float:
        """The primary measure for this point: exact when present."""
        v = self.gme_exact if self.gme_exact is not None else self.gme_asymptotic
        assert v is not None
        return v


@dataclass(frozen=True)
class GmeCurve:
    marked: MarkedSet
    schedule: GroverSchedule
    mode: str
    points: tuple[GmePoint, ...]
    turning_theta: float
    turning_k: float  # real-valued (2/pi) * turning_theta * k_opt
    peak_gme: float   # observed maximum over the points

    @property
    def turning_ratio(self) -> float:
        if self.schedule.k_opt == 0:
            return 0.0
        return self.turning_k / self.schedule.k_opt

    @property
    def turning_k_nearest(self) -> int:
        return min(round(self.turning_k), self.schedule.k_opt)


def gme_curve(marked: MarkedSet, mode: CurveMode = "both") -> GmeCurve:
    """Evaluate the entanglement measure at every iterate k = 0..k_opt.

    ``exact`` runs the product-state optimization per iterate, ``asymptotic``
    the piecewise closed form, ``both`` fills both columns.  The coarse-grid
    overlap components are shared across the whole sweep, so the per-iterate
    cost is one vectorized scan plus a few golden-section polishes.
    """
    if mode not in ("exact", "asymptotic", "both"):
        raise ValueError(f"unknown curve mode {mode!r}")
    if mode != "asymptotic":
        # the single-angle product optimization is only justified for
        # permutation-symmetric sets; the asymptotic branch is a pure
        # weight-profile functional
        _require_symmetric(marked)
    sched = make_schedule(marked)
    turning = turning_summary(marked)

    profile = _OverlapProfile(marked) if mode in ("exact", "both") else None
    points: list[GmePoint] = []
    for k in range(sched.k_opt + 1):
        tk = sched.theta_k(k)
        exact = None
        alpha_star = None
        asym = None
        if profile is not None:
            exact, alpha_star = profile.gme(tk)
        if mode in ("asymptotic", "both"):
            asym = _asymptotic_value(tk, turning.theta, turning.b_max)
        points.append(
            GmePoint(
                k=k,
                ratio=sched.ratio(k),
                theta_k=tk,
                gme_exact=exact,
                gme_asymptotic=asym,
                alpha_star=alpha_star,
            )
        )
    peak = max(p.gme for p in points)
    return GmeCurve(
        marked=marked,
        schedule=sched,
        mode=mode,
        points=tuple(points),
        turning_theta=turning.theta,
        turning_k=turning.ratio * sched.k_opt,
        peak_gme=peak,
    )


@dataclass(frozen=True)
class SweepRow:
    n: int
    b_max: float
    turning_theta: float
    final_gme: float  # asymptotic value at theta_k = pi/2


@dataclass(frozen=True)
class SweepReport:
    """Scale-invariance verdict for a family of marked sets indexed by n.

    The late-time curve is n-independent exactly when the marked-profile peak
    is; the verdict compares the b_max spread against ``tolerance``.
    """

    rows: tuple[SweepRow, ...]
    tolerance: float
    b_max_spread: float
    final_gme_spread: float

    @property
    def scale_invariant(self) -> bool:
        return self.b_max_spread <= self.tolerance


def scale_invariance_sweep(
    family: Callable[[int], MarkedSet],
    n_values: Iterable[int],
    tolerance: float = 1e-9,
) -> SweepReport:
    ns = list(n_values)
    if not ns:
        raise ValueError("empty n range")
    rows = []
    for n in ns:
        marked = family(n)
        if marked.n != n:
            raise ValueError(f"family returned n={marked.n} for requested n={n}")
        b, _ = b_max(marked)
        theta = math.atan(1.0 / b)
        rows.append(
            SweepRow(
                n=n,
                b_max=b,
                turning_theta=theta,
                final_gme=_asymptotic_value(math.pi / 2.0, theta, b),
            )
        )
    bs = [r.b_max for r in rows]
    fs = [r.final_gme for r in rows]
    return SweepReport(
        rows=tuple(rows),
        tolerance=tolerance,
        b_max_spread=max(bs) - min(bs),
        final_gme_spread=max(fs) - min(fs),
    )


@dataclass(frozen=True)
class AbProfile:
    """Sampled profile curves: the all-states term A, the marked term B, and
    their sum g, in linear domain (underflow clamps to zero)."""

    alpha: np.ndarray
    a: np.ndarray
    b: np.ndarray
    g: np.ndarray = field(repr=False)


def ab_profile(marked: MarkedSet, grid: int | Sequence[float] = 2049) -> AbProfile:
    if isinstance(grid, int):
        if grid < 2:
            raise ValueError("profile grid needs at least two points")
        alphas = np.linspace(0.0, math.pi, grid)
    else:
        alphas = np.asarray(list(grid), dtype=float)
        if alphas.size == 0:
            raise ValueError("profile grid is empty")
        if np.any(alphas < 0.0) or np.any(alphas > math.pi):
            raise ValueError("profile grid must lie in [0, pi]")
    a = np.exp(marked.n * np.log(np.sin(QUARTER_PI + 0.5 * alphas)))
    log_m = math.log(marked.num_marked)
    b = np.exp(_grid_marked_log(marked, alphas) - 0.5 * log_m)
    return AbProfile(alpha=alphas, a=a, b=b, g=a + b)
