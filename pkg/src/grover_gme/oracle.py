"""Brute-force statevector route: Grover simulation and unrestricted product-state
optimization on explicit bitstrings.

Everything here works on dense arrays of all 2^n amplitudes and never touches
the symmetric-reduction code, so it can certify that path (or handle marked
sets the reduction refuses).  Practical up to n = 14; beyond that the guard
raises ResourceLimitError.
"""
from __future__ import annotations

import math
import cmath
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .optimize import zoom_max_2d

MAX_QUBITS = 14

BitstringLike = Union[int, str]


class ResourceLimitError(RuntimeError):
    """Dense enumeration past MAX_QUBITS qubits is refused."""


def _check_qubits(n: int) -> None:
    if n < 1:
        raise ValueError(f"need at least one qubit, got n={n}")
    if n > MAX_QUBITS:
        raise ResourceLimitError(
            f"dense statevector route supports n <= {MAX_QUBITS}, got n={n}"
        )


def parse_bitstrings(n: int, marked: Iterable[BitstringLike]) -> list[int]:
    """Normalize explicit marked states (int indices or '0101' strings, qubit 0
    leftmost) to sorted unique indices."""
    out = set()
    for item in marked:
        if isinstance(item, str):
            if len(item) != n or set(item) - {"0", "1"}:
                raise ValueError(f"bad bitstring {item!r} for n={n}")
            idx = 0
            for pos, ch in enumerate(item):
                if ch == "1":
                    idx |= 1 << (n - 1 - pos)
            out.add(idx)
        else:
            idx = int(item)
            if not 0 <= idx < (1 << n):
                raise ValueError(f"index {idx} outside [0, 2^{n})")
            out.add(idx)
    return sorted(out)


def uniform_state(n: int) -> np.ndarray:
    _check_qubits(n)
    dim = 1 << n
    return np.full(dim, 1.0 / math.sqrt(dim))


def grover_step(state: np.ndarray, marked_indices: Sequence[int]) -> np.ndarray:
    """One Grover iteration: flip the sign of the marked amplitudes, then
    invert everything about the mean."""
    dim = state.shape[0]
    if not marked_indices:
        raise ValueError("marked set is empty")
    if len(marked_indices) >= dim:
        raise ValueError("marked set covers the whole basis")
    flipped = state.copy()
    flipped[list(marked_indices)] *= -1.0
    return 2.0 * flipped.mean() - flipped


def simulate_grover(n: int, marked_indices: Sequence[int], k: int) -> np.ndarray:
    """State after k iterations from the uniform superposition."""
    _check_qubits(n)
    state = uniform_state(n)
    for _ in range(k):
        state = grover_step(state, marked_indices)
    return state


def product_state_vector(n: int, alpha: float, beta: float = 0.0) -> np.ndarray:
    """Dense vector of the symmetric product state with qubit angles (alpha, beta)."""
    _check_qubits(n)
    qubit = np.array(
        [math.cos(0.5 * alpha), cmath.exp(1j * beta) * math.sin(0.5 * alpha)]
    )
    if beta == 0.0:
        qubit = qubit.real
    vec = np.ones(1, dtype=qubit.dtype)
    for _ in range(n):
        vec = np.kron(vec, qubit)
    return vec


@dataclass(frozen=True)
class ProductAnsatz:
    """Per-qubit Bloch angles of a product state; amplitudes are
    (cos(alpha/2), exp(i*beta) * sin(alpha/2)) with the |0> part real."""

    alphas: tuple[float, ...]
    betas: tuple[float, ...]

    def vectors(self) -> np.ndarray:
        out = np.empty((len(self.alphas), 2), dtype=complex)
        for i, (a, b) in enumerate(zip(self.alphas, self.betas)):
            out[i, 0] = math.cos(0.5 * a)
            out[i, 1] = cmath.exp(1j * b) * math.sin(0.5 * a)
        return out


def _vectors_to_ansatz(vecs: np.ndarray) -> ProductAnsatz:
    alphas = []
    betas = []
    for v0, v1 in vecs:
        alphas.append(2.0 * math.atan2(abs(v1), abs(v0)))
        if abs(v1) < 1e-15 or abs(v0) < 1e-15:
            betas.append(0.0)
        else:
            betas.append((cmath.phase(v1) - cmath.phase(v0)) % math.tau)
    return ProductAnsatz(tuple(alphas), tuple(betas))


def _ascend(psi: np.ndarray, vecs: np.ndarray, max_sweeps: int, tol: float) -> float:
    """Alternating single-qubit updates; each solves its subproblem exactly.

    With all other qubits fixed the overlap is linear in one qubit vector, so
    the best unit vector is the conjugated contraction and the overlap its
    norm.  The norm never decreases, giving a clean convergence test.
    ``vecs`` is updated in place; the best |overlap| found is returned.
    """
    n = vecs.shape[0]
    flat = psi.astype(complex).ravel()
    best = 0.0
    for _ in range(max_sweeps):
        # suffix product vectors over qubits s+1..n-1 (current values)
        suffix = [np.ones(1, dtype=complex)] * n
        for s in range(n - 2, -1, -1):
            suffix[s] = np.kron(vecs[s + 1], suffix[s + 1])
        head = flat
        norm = 0.0
        for s in range(n):
            w = head.reshape(2, -1) @ suffix[s]
            norm = float(np.linalg.norm(w))
            if norm > 0.0:
                vecs[s] = w.conj() / norm
            head = vecs[s] @ head.reshape(2, -1)
        if norm - best < tol:
            best = max(best, norm)
            break
        best = norm
    return best


def _hamming_weights(n: int) -> np.ndarray:
    idx = np.arange(1 << n)
    w = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        w += (idx >> b) & 1
    return w


def _shared_phase_seed(state: np.ndarray, n: int) -> tuple[float, float, float]:
    """Best shared-angle product overlap, qubits all at (alpha, beta).

    For such an ansatz the overlap collapses onto per-weight amplitude sums
    of the state itself, so a dense 2-d scan costs O(n) per grid point:

        <state|phi^(x)n> = sum_w h_w cos^(n-w)(a/2) sin^w(a/2) e^(i w b),
        h_w = sum over basis states of weight w of conj(amplitude).

    Returns (alpha, beta, value).  The beta grid spans [-pi, pi] because
    complex states break the conjugation symmetry that would fold it.
    """
    h = np.zeros(n + 1, dtype=complex)
    np.add.at(h, _hamming_weights(n), np.conj(state.astype(complex)))
    ws = np.arange(n + 1, dtype=float)

    def grid(alphas: np.ndarray, betas: np.ndarray) -> np.ndarray:
        c = np.cos(0.5 * alphas)[:, None]
        s = np.sin(0.5 * alphas)[:, None]
        d = c ** (n - ws)[None, :] * s ** ws[None, :]
        phases = np.exp(1j * np.outer(ws, betas))
        return np.abs((d * h[None, :]) @ phases)

    alphas = np.linspace(0.0, math.pi, 257)
    betas = np.linspace(-math.pi, math.pi, 513)
    mat = grid(alphas, betas)
    # the alpha boundary rows are beta-degenerate and flat; keep candidate
    # picks off them so distinct interior ridges each get a zoom
    cand = mat.copy()
    cand[0, :] = -math.inf
    cand[-1, :] = -math.inf
    val, a, b = zoom_max_2d(grid, alphas, betas, mat=mat, candidate_mat=cand)
    return a, b, val


@dataclass(frozen=True)
class OracleResult:
    gme: float
    overlap: float
    ansatz: ProductAnsatz


def oracle_gme(
    state: np.ndarray,
    restrict_symmetric: bool = False,
    *,
    starts: int = 32,
    seed: int = 0,
    max_sweeps: int = 200,
    tol: float = 1e-13,
) -> OracleResult:
    """Entanglement of an arbitrary real state by direct product-state search.

    Unrestricted mode runs alternating coordinate ascent from ``starts`` random
    complex product states plus the shared-angle-and-phase optimum as one more
    start; the best score wins, earlier starts winning ties.  Every qubit is
    free during the ascent, so this validates the symmetric reduction instead
    of presupposing it.  ``restrict_symmetric`` skips the ascent and returns
    the shared-angle optimum itself.
    """
    dim = state.shape[0]
    n = dim.bit_length() - 1
    if dim != (1 << n):
        raise ValueError(f"state length {dim} is not a power of two")
    _check_qubits(n)
    norm = float(np.linalg.norm(state))
    if not math.isclose(norm, 1.0, rel_tol=0.0, abs_tol=1e-9):
        raise ValueError(f"state is not normalized (|psi| = {norm})")

    alpha0, beta0, f0 = _shared_phase_seed(state, n)
    if restrict_symmetric:
        return OracleResult(
            gme=max(0.0, 1.0 - f0 * f0),
            overlap=f0,
            ansatz=ProductAnsatz((alpha0,) * n, (beta0 % math.tau,) * n),
        )

    rng = np.random.default_rng(seed)
    psi = state.reshape((2,) * n)
    best_val = -1.0
    best_vecs: np.ndarray | None = None

    c0 = math.cos(0.5 * alpha0)
    s0 = cmath.exp(1j * beta0) * math.sin(0.5 * alpha0)
    seeds = [np.array([[c0, s0]] * n, dtype=complex)]
    for _ in range(starts):
        raw = rng.standard_normal((n, 2)) + 1j * rng.standard_normal((n, 2))
        raw /= np.linalg.norm(raw, axis=1, keepdims=True)
        seeds.append(raw)

    for vecs in seeds:
        val = _ascend(psi, vecs, max_sweeps, tol)
        if val > best_val:
            best_val = val
            best_vecs = vecs.copy()

    assert best_vecs is not None
    return OracleResult(
        gme=max(0.0, 1.0 - best_val * best_val),
        overlap=best_val,
        ansatz=_vectors_to_ansatz(best_vecs),
    )


def check_permutation_symmetry(state: np.ndarray, tol: float = 1e-12) -> bool:
    """True when amplitudes agree (within tol) inside every Hamming-weight class."""
    dim = state.shape[0]
    n = dim.bit_length() - 1
    if dim != (1 << n):
        raise ValueError(f"state length {dim} is not a power of two")
    weights = np.array([bin(i).count("1") for i in range(dim)])
    for w in range(n + 1):
        group = state[weights == w]
        if group.size and float(np.max(np.abs(group - group[0]))) > tol:
            return False
    return True
