"""Exact and asymptotic geometric measure of entanglement for Grover iterates.

The Grover state after k iterations lives in the plane spanned by the uniform
superpositions of unmarked and marked basis states, at angle theta_k from the
unmarked axis.  For a permutation-symmetric marked set its nearest product
state can be taken symmetric, which collapses the inner maximization to a
single qubit angle; everything here exploits that reduction.  All large
trigonometric powers run through the signed-log helpers, so register sizes in
the thousands stay finite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .logdomain import NEG_INF, log_plus_power, log_weight_term
from .marked import MarkedSet
from .optimize import DEFAULT_COARSE, DEFAULT_TOL, refine_grid_max, zoom_max_2d

HALF_PI = 0.5 * math.pi
QUARTER_PI = 0.25 * math.pi


class AsymmetricMarkedSetError(ValueError):
    """The symmetric-reduction path needs a fully symmetric marked set."""


def _require_symmetric(marked: MarkedSet) -> None:
    if not marked.is_symmetric:
        raise AsymmetricMarkedSetError(
            "marked set is not permutation symmetric; the single-angle reduction "
            "does not apply -- use the dense oracle instead"
        )


def _check_angle(name: str, x: float, hi: float) -> None:
    if not 0.0 <= x <= hi:
        raise ValueError(f"{name} {x} outside [0, {hi}]")


def _weight_peak(n: int, w: int) -> float:
    """Angle maximizing cos^(n-w)(a/2) * sin^w(a/2): a = 2*acos(sqrt((n-w)/n))."""
    return 2.0 * math.acos(math.sqrt((n - w) / n))


def _log_marked_sum(marked: MarkedSet, alpha: float) -> float:
    """log of sum_i cos^(n-n_i)(alpha/2) * sin^(n_i)(alpha/2) over marked states."""
    n = marked.n
    acc = NEG_INF
    for w, mult in marked.weights:
        t = log_weight_term(n, w, alpha)
        if t.sign == 0.0:
            continue
        term = math.log(mult) + t.log
        if acc == NEG_INF:
            acc = term
        elif term >= acc:
            acc = term + math.log1p(math.exp(acc - term))
        else:
            acc = acc + math.log1p(math.exp(term - acc))
    return acc


def _class_coef_grid(marked: MarkedSet, alphas: np.ndarray, log_m: float) -> list[tuple[int, np.ndarray]]:
    """Per-weight-class coefficients mult * D_w(alpha) / sqrt(M) on a grid.

    Each coefficient is bounded by 1, so the exp never overflows even when
    the multiplicities themselves would.
    """
    n = marked.n
    half = 0.5 * alphas
    with np.errstate(divide="ignore"):
        logc = np.log(np.cos(half))
        logs = np.log(np.sin(half))
    out = []
    for w, mult in marked.weights:
        t = np.full_like(alphas, math.log(mult) - 0.5 * log_m)
        if w < n:
            t = t + (n - w) * logc
        if w > 0:
            t = t + w * logs
        out.append((w, np.exp(t)))
    return out


def _grid_marked_log(marked: MarkedSet, alphas: np.ndarray) -> np.ndarray:
    """Vectorized _log_marked_sum over an alpha grid."""
    n = marked.n
    half = 0.5 * alphas
    with np.errstate(divide="ignore"):
        logc = np.log(np.cos(half))
        logs = np.log(np.sin(half))
    acc = None
    for w, mult in marked.weights:
        t = np.full_like(alphas, math.log(mult))
        if w < n:
            t = t + (n - w) * logc
        if w > 0:
            t = t + w * logs
        acc = t if acc is None else np.logaddexp(acc, t)
    return acc


class _OverlapProfile:
    """Precomputed coarse-grid components of the product-state overlap.

    The overlap splits into an unmarked part and a marked part whose alpha
    dependence is independent of theta_k, so one grid pays for a whole curve.
    """

    def __init__(self, marked: MarkedSet, coarse: int = DEFAULT_COARSE):
        if marked.num_marked >= marked.num_states:
            raise ValueError("marked set must leave at least one unmarked state")
        self.marked = marked
        self.n = marked.n
        self.log_m = math.log(marked.num_marked)
        self.log_u = math.log(marked.num_states - marked.num_marked)
        self.alphas = np.linspace(0.0, math.pi, coarse)
        log_s = _grid_marked_log(marked, self.alphas)
        log_t = (
            0.5 * self.n * math.log(2.0)
            + self.n * np.log(np.sin(QUARTER_PI + 0.5 * self.alphas))
        )
        d = np.minimum(log_s - log_t, 0.0)
        with np.errstate(divide="ignore"):
            # expm1 keeps the difference meaningful when d underflows exp
            log_diff = log_t + np.log(-np.expm1(d))
        self.eu = np.exp(log_diff - 0.5 * self.log_u)
        self.es = np.exp(log_s - 0.5 * self.log_m)
        self.seeds = sorted({HALF_PI} | {_weight_peak(self.n, w) for w, _ in marked.weights})
        self._xs = self.alphas.tolist()

    def components(self, alpha: float) -> tuple[float, float]:
        """Scaled unmarked/marked overlap parts at one alpha (both nonnegative)."""
        log_s = _log_marked_sum(self.marked, alpha)
        log_t = log_plus_power(self.n, alpha)
        d = log_s - log_t
        if d >= 0.0:
            log_diff = NEG_INF
        else:
            # expm1 keeps the difference meaningful when d underflows exp
            log_diff = log_t + math.log(-math.expm1(d))
        return (
            math.exp(log_diff - 0.5 * self.log_u),
            math.exp(log_s - 0.5 * self.log_m),
        )

    def value(self, theta_k: float, alpha: float) -> float:
        eu, es = self.components(alpha)
        return math.cos(theta_k) * eu + math.sin(theta_k) * es

    def _phase_grid(
        self, cos_t: float, sin_t: float, alphas: np.ndarray, betas: np.ndarray
    ) -> np.ndarray:
        """|overlap| matrix for phased qubits (cos(a/2), e^{i b} sin(a/2)).

        Only meaningful for cos_t < 0; the combined marked-part factor below
        assumes the two contributions carry the same sign.
        """
        c = np.cos(0.5 * alphas)[:, None]
        s = np.sin(0.5 * alphas)[:, None]
        cosb = np.cos(betas)[None, :]
        sinb = np.sin(betas)[None, :]
        q = np.maximum(1.0 + 2.0 * c * s * cosb, 0.0)
        with np.errstate(divide="ignore"):
            mag = np.exp(
                math.log(-cos_t) + 0.5 * self.n * np.log(q) - 0.5 * self.log_u
            )
        arg = self.n * np.arctan2(s * sinb, c + s * cosb)
        lam = -mag * np.exp(1j * arg)
        factor = sin_t - cos_t * math.exp(0.5 * (self.log_m - self.log_u))
        for w, coef in _class_coef_grid(self.marked, alphas, self.log_m):
            lam = lam + (factor * coef)[:, None] * np.exp(1j * w * betas)[None, :]
        return np.abs(lam)

    def _phase_search(self, cos_t: float, sin_t: float) -> tuple[float, float, float]:
        """Best phased overlap over (alpha, beta); returns (best, alpha, beta).

        The marked and unmarked parts carry opposite signs when cos_t < 0,
        and a qubit phase can rotate the unmarked part back into alignment;
        the optimum is then genuinely two-dimensional, with several narrow
        ridges of similar height.  The ridge spacing in beta shrinks like
        1/n, so the coarse beta resolution grows with n.
        """
        num_b = max(257, min(4 * self.n + 1, 4097))
        betas = np.linspace(0.0, math.pi, num_b)
        mod = self._phase_grid(cos_t, sin_t, self.alphas, betas)
        # alpha = 0 or pi makes beta meaningless and beta = 0 repeats the real
        # branch; both produce flat candidate-swallowing ridges
        cand = mod.copy()
        cand[0, :] = NEG_INF
        cand[-1, :] = NEG_INF
        cand[:, 0] = NEG_INF
        return zoom_max_2d(
            lambda xs, ys: self._phase_grid(cos_t, sin_t, xs, ys),
            self.alphas,
            betas,
            mat=mod,
            candidate_mat=cand,
        )

    def best_overlap(self, theta_k: float, tol: float = DEFAULT_TOL) -> tuple[float, float]:
        """Maximum |overlap| over symmetric product states, with its angle.

        For theta_k <= pi/2 every term is nonnegative and the real ansatz
        wins outright.  Past pi/2 (the last iterate can overshoot) the
        unmarked coefficient goes negative and the maximizing qubit can pick
        up a relative phase; that branch is searched in two dimensions and a
        negative returned angle marks it.
        """
        cos_t = math.cos(theta_k)
        sin_t = math.sin(theta_k)
        vals = cos_t * self.eu + sin_t * self.es
        if cos_t < 0.0:
            np.abs(vals, out=vals)

        def plain(a: float) -> float:
            eu, es = self.components(a)
            return abs(cos_t * eu + sin_t * es)

        x, fx = refine_grid_max(plain, self._xs, vals.tolist(), tol, self.seeds)
        if cos_t >= 0.0:
            return fx, x

        fp, xp, _ = self._phase_search(cos_t, sin_t)
        if fp > fx:
            return fp, -xp
        return fx, x

    def gme(self, theta_k: float, tol: float = DEFAULT_TOL) -> tuple[float, float]:
        best, alpha_star = self.best_overlap(theta_k, tol)
        return max(0.0, 1.0 - best * best), alpha_star


def overlap(marked: MarkedSet, theta_k: float, alpha: float) -> float:
    """Exact overlap of the Grover iterate at angle theta_k with the symmetric
    product state of qubit angle alpha.

    The unmarked bracket keeps its full marked-sum correction rather than the
    large-N shortcut, so small registers are exact too.
    """
    _check_angle("theta_k", theta_k, math.pi)
    _check_angle("alpha", alpha, math.pi)
    profile = _OverlapProfile(marked, coarse=2)
    return profile.value(theta_k, alpha)


def gme_exact(
    marked: MarkedSet, theta_k: float, *, tol: float = DEFAULT_TOL
) -> tuple[float, float]:
    """Entanglement 1 - max |overlap|^2 of the iterate at theta_k, optimized
    over symmetric product states.

    Returns (gme, alpha_star).  A negative alpha_star encodes the flipped-sign
    qubit branch that only competes when theta_k exceeds pi/2.  Asymmetric
    marked sets are rejected: the single-angle reduction is not justified for
    them, and the dense oracle should be used instead.
    """
    _require_symmetric(marked)
    _check_angle("theta_k", theta_k, math.pi)
    return _OverlapProfile(marked).gme(theta_k, tol)


def b_max(marked: MarkedSet, *, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Maximum over alpha of the normalized marked-state profile

        B(alpha) = (1/sqrt(M)) * sum_i cos^(n-n_i)(alpha/2) * sin^(n_i)(alpha/2)

    Returns (value, alpha_star).  Scale invariance of the late-time curve
    hinges on whether this number depends on n.
    """
    log_m = math.log(marked.num_marked)
    alphas = np.linspace(0.0, math.pi, DEFAULT_COARSE)
    vals = np.exp(_grid_marked_log(marked, alphas) - 0.5 * log_m)
    seeds = sorted({_weight_peak(marked.n, w) for w, _ in marked.weights})

    def f(alpha: float) -> float:
        return math.exp(_log_marked_sum(marked, alpha) - 0.5 * log_m)

    x, fx = refine_grid_max(f, alphas.tolist(), vals.tolist(), tol, seeds)
    careful = _amplitude_at(marked, x, log_m)
    if careful is not None:
        fx = careful
    return fx, x


def _amplitude_at(marked: MarkedSet, alpha: float, log_m: float) -> float | None:
    # Re-evaluate B at the located maximum with the sqrt(M) division done in
    # linear domain: exp(log x - log y) loses the last ulp, which matters when
    # the maximum sits at an endpoint with an exactly representable value.
    # Group terms are bounded by sqrt(M), so the exp calls below stay finite
    # only while log_m is moderate; otherwise signal the caller to keep the
    # all-log value.
    if log_m > 1300.0:
        return None
    total = 0.0
    for w, mult in marked.weights:
        term = log_weight_term(marked.n, w, alpha)
        if term.sign == 0:
            continue
        total += math.exp(math.log(mult) + term.log)
    m = marked.num_marked
    sqrt_m = math.sqrt(m) if log_m < 600.0 else math.exp(0.5 * log_m)
    return total / sqrt_m


def turning_point(marked: MarkedSet) -> float:
    """Iterate angle arctan(1/B_max) where the asymptotic curve switches from
    rising entanglement to the marked-profile branch."""
    b, _ = b_max(marked)
    if b == 0.0:
        raise ValueError("marked profile vanishes; turning point undefined")
    return math.atan(1.0 / b)


@dataclass(frozen=True)
class TurningPoint:
    """Turning-point record: angle, iteration fraction, profile peak, and the
    asymptotic entanglement maximum sin^2(theta) = 1/(1 + b_max^2)."""

    theta: float
    ratio: float
    b_max: float
    alpha_star: float
    peak_gme: float


def turning_summary(marked: MarkedSet) -> TurningPoint:
    b, alpha_star = b_max(marked)
    if b == 0.0:
        raise ValueError("marked profile vanishes; turning point undefined")
    theta = math.atan(1.0 / b)
    return TurningPoint(
        theta=theta,
        ratio=theta / HALF_PI,
        b_max=b,
        alpha_star=alpha_star,
        peak_gme=1.0 / (1.0 + b * b),
    )


def gme_asymptotic(marked: MarkedSet, theta_k: float) -> float:
    """Large-N piecewise entanglement: sin^2(theta_k) while the uniform branch
    dominates, then 1 - sin^2(theta_k) * B_max^2 past the turning angle."""
    _check_angle("theta_k", theta_k, math.pi)
    b, _ = b_max(marked)
    return _asymptotic_value(theta_k, math.atan(1.0 / b), b)


def _asymptotic_value(theta_k: float, turning_theta: float, b: float) -> float:
    s2 = math.sin(theta_k) ** 2
    if theta_k <= turning_theta:
        return s2
    return 1.0 - s2 * (b * b)
