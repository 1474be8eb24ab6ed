"""Marked-state sets described by their Hamming-weight multiset."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Union

WeightsLike = Union[Iterable[int], Mapping[int, int]]


@dataclass(frozen=True)
class MarkedSet:
    """A set of marked basis states of an n-qubit register, keyed by Hamming weight.

    ``weights`` stores (weight, multiplicity) pairs sorted by weight.  The
    multiplicity of weight w can never exceed comb(n, w); when every stored
    weight is present with its full multiplicity the set is invariant under
    qubit permutations and ``is_symmetric`` is True.  Only the weight profile
    is kept, so a partially filled weight class does not pin down which
    bitstrings are marked; symmetric sets are the ones that expand uniquely.
    """

    n: int
    weights: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        if not self.weights:
            raise ValueError("marked set must be nonempty")
        seen = set()
        for w, mult in self.weights:
            if not 0 <= w <= self.n:
                raise ValueError(f"weight {w} outside [0, {self.n}]")
            if w in seen:
                raise ValueError(f"duplicate weight group {w}")
            seen.add(w)
            cap = comb(self.n, w)
            if not 1 <= mult <= cap:
                raise ValueError(
                    f"multiplicity {mult} for weight {w} outside [1, {cap}]"
                )
        if list(self.weights) != sorted(self.weights):
            raise ValueError("weight groups must be sorted by weight")

    @classmethod
    def from_weights(cls, n: int, weights: WeightsLike) -> "MarkedSet":
        """Build from an iterable of weights (with repeats) or a weight->count map."""
        counts: dict[int, int] = {}
        if isinstance(weights, Mapping):
            counts = {int(w): int(m) for w, m in weights.items()}
        else:
            for w in weights:
                counts[int(w)] = counts.get(int(w), 0) + 1
        groups = tuple(sorted(counts.items()))
        return cls(n, groups)

    @property
    def num_states(self) -> int:
        return 1 << self.n

    @property
    def num_marked(self) -> int:
        return sum(m for _, m in self.weights)

    @property
    def is_symmetric(self) -> bool:
        return all(m == comb(self.n, w) for w, m in self.weights)

    def complement(self) -> "MarkedSet":
        """The mirrored set with every weight w replaced by n - w."""
        return MarkedSet.from_weights(
            self.n, {self.n - w: m for w, m in self.weights}
        )

    def basis_indices(self) -> list[int]:
        """Expand a symmetric set to the integer indices of its basis states.

        Only symmetric sets expand canonically; asymmetric profiles would
        need explicit bitstrings (see the oracle module).
        """
        if not self.is_symmetric:
            raise ValueError(
                "only a fully symmetric marked set expands to unique bitstrings"
            )
        out: list[int] = []
        for w, _ in self.weights:
            for ones in itertools.combinations(range(self.n), w):
                idx = 0
                for b in ones:
                    idx |= 1 << b
                out.append(idx)
        return sorted(out)


def product_set(n: int) -> MarkedSet:
    """Single marked state |0...0>."""
    return MarkedSet.from_weights(n, {0: 1})


def ghz_set(n: int) -> MarkedSet:
    """The pair |0...0>, |1...1>; its equal superposition target is a GHZ state."""
    if n < 2:
        raise ValueError("GHZ target needs n >= 2")
    return MarkedSet.from_weights(n, {0: 1, n: 1})


def w_set(n: int) -> MarkedSet:
    """All n weight-1 states; the target superposition is the W state."""
    return MarkedSet.from_weights(n, {1: n})


def dicke_set(n: int, w: int) -> MarkedSet:
    """All comb(n, w) weight-w states; the target is the Dicke state of weight w."""
    return MarkedSet.from_weights(n, {w: comb(n, w)})
