"""Deterministic grid-seeded maximization, one- and two-dimensional.

1-D: coarse grid plus golden-section refinement of every local peak.
2-D: coarse grid plus iterated zooming around the strongest cells.
"""
from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

import numpy as np

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

DEFAULT_COARSE = 1024
DEFAULT_TOL = 1e-12


def golden_max(
    f: Callable[[float], float], a: float, b: float, tol: float = DEFAULT_TOL
) -> tuple[float, float]:
    """Golden-section maximization on [a, b]; returns the best point evaluated."""
    best_x, best_f = a, f(a)
    fb = f(b)
    if fb > best_f:
        best_x, best_f = b, fb
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc = f(c)
    fd = f(d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
            if fc > best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
            if fd > best_f:
                best_x, best_f = d, fd
    return best_x, best_f


def local_max_indices(ys: Sequence[float]) -> list[int]:
    """Indices of strict interior maxima plus any dominating endpoint."""
    last = len(ys) - 1
    if last < 1:
        return [0]
    out = []
    if ys[0] > ys[1]:
        out.append(0)
    out.extend(
        i for i in range(1, last) if ys[i] > ys[i - 1] and ys[i] >= ys[i + 1]
    )
    if ys[last] > ys[last - 1]:
        out.append(last)
    return out


def refine_grid_max(
    f: Callable[[float], float],
    xs: Sequence[float],
    ys: Sequence[float],
    tol: float = DEFAULT_TOL,
    seeds: Iterable[float] = (),
) -> tuple[float, float]:
    """Refine around every grid maximum (and seed point); return the global best.

    Ties are broken toward the earlier candidate so repeated runs agree bit for
    bit.  Endpoint brackets are refined too, but the raw endpoint value always
    stays in the candidate pool, so a boundary maximum is never lost.
    """
    last = len(xs) - 1
    best_i = max(range(len(ys)), key=lambda i: (ys[i], -i))
    best_x, best_f = xs[best_i], ys[best_i]

    maxima = local_max_indices(ys)
    brackets: list[tuple[float, float]] = []
    for i in maxima:
        brackets.append((xs[max(i - 1, 0)], xs[min(i + 1, last)]))
    # seed brackets guard against peaks narrower than the grid spacing; skip
    # any seed the grid already bracketed
    step = xs[1] - xs[0] if last >= 1 else 0.0
    for s in seeds:
        if any(abs(xs[i] - s) <= step for i in maxima):
            continue
        # the seed itself joins the pool; golden section alone can step over
        # a peak much narrower than its bracket
        fs = f(s)
        if fs > best_f:
            best_x, best_f = s, fs
        lo = max(xs[0], s - step)
        hi = min(xs[last], s + step)
        if hi > lo:
            brackets.append((lo, hi))

    for lo, hi in brackets:
        x, fx = golden_max(f, lo, hi, tol)
        if fx > best_f:
            best_x, best_f = x, fx
    return best_x, best_f


def maximize_scalar(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    coarse: int = DEFAULT_COARSE,
    tol: float = DEFAULT_TOL,
    seeds: Iterable[float] = (),
) -> tuple[float, float]:
    """Global maximum of a smooth multimodal f on [lo, hi].

    A uniform coarse grid locates every candidate peak, then golden-section
    refinement polishes each one down to ``tol`` in the argument.
    """
    if coarse < 2:
        raise ValueError("need at least two coarse grid points")
    span = hi - lo
    xs = [lo + span * i / (coarse - 1) for i in range(coarse)]
    ys = [f(x) for x in xs]
    return refine_grid_max(f, xs, ys, tol, seeds)


def top_cells(mat: np.ndarray, count: int, radius: int) -> list[tuple[int, int]]:
    """Up to ``count`` strongest cells, greedily suppressing each winner's
    (2*radius+1)-square neighborhood so the picks land on distinct peaks."""
    work = np.array(mat, dtype=float, copy=True)
    rows, cols = work.shape
    out: list[tuple[int, int]] = []
    for _ in range(count):
        flat = int(np.argmax(work))
        i, j = divmod(flat, cols)
        if work[i, j] == -math.inf:
            break
        out.append((i, j))
        work[
            max(i - radius, 0) : min(i + radius + 1, rows),
            max(j - radius, 0) : min(j + radius + 1, cols),
        ] = -math.inf
    return out


def zoom_max_2d(
    grid_fn: Callable[[np.ndarray, np.ndarray], np.ndarray],
    xs: np.ndarray,
    ys: np.ndarray,
    *,
    mat: np.ndarray | None = None,
    candidate_mat: np.ndarray | None = None,
    candidates: int = 12,
    radius: int = 3,
    rounds: int = 10,
    points: int = 33,
    shrink: float = 8.0,
) -> tuple[float, float, float]:
    """Global maximum of grid_fn(xs, ys)[i, j] seen as f(xs[i], ys[j]).

    The landscape may hold several ridges of nearly equal height, so each of
    the strongest coarse cells gets its own zoom: a local grid recentered on
    the running argmax with the span divided by ``shrink`` every round.  The
    domain is taken from the extent of the coarse grids.

    ``mat`` is the coarse matrix grid_fn(xs, ys) when the caller already has
    it.  ``candidate_mat`` (same shape, default the values themselves) steers
    the candidate picks only; callers mask cells it would waste picks on,
    such as a boundary row where one coordinate is degenerate and constant
    values would soak up every pick.  The unmasked argmax is always zoomed
    as well.  Returns (value, x, y) for the best point actually evaluated.
    """
    if mat is None:
        mat = grid_fn(xs, ys)
    cells = top_cells(mat if candidate_mat is None else candidate_mat, candidates, radius)
    peak = np.unravel_index(np.argmax(mat), mat.shape)
    if peak not in cells:
        cells.insert(0, peak)
    best = (-math.inf, float(xs[0]), float(ys[0]))
    span_x0 = 2.0 * float(xs[1] - xs[0])
    span_y0 = 2.0 * float(ys[1] - ys[0])
    for i, j in cells:
        x, y = float(xs[i]), float(ys[j])
        val = float(mat[i, j])
        span_x, span_y = span_x0, span_y0
        for _ in range(rounds):
            zx = np.clip(np.linspace(x - span_x, x + span_x, points), xs[0], xs[-1])
            zy = np.clip(np.linspace(y - span_y, y + span_y, points), ys[0], ys[-1])
            m = grid_fn(zx, zy)
            ii, jj = np.unravel_index(np.argmax(m), m.shape)
            x, y = float(zx[ii]), float(zy[jj])
            val = max(val, float(m[ii, jj]))
            span_x /= shrink
            span_y /= shrink
        if val > best[0]:
            best = (val, x, y)
    return best
