"""r-stable subsets of the cyclic set [n] and their characteristic vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

LatticePoint = tuple[int, ...]


class ParameterError(ValueError):
    """Raised when (n, k, r) or an index falls outside the supported range."""


def circular_gap(i: int, j: int, n: int) -> int:
    """Number of edges on the shorter arc between vertices i and j of the n-gon."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ParameterError(f"indices must lie in [1, {n}], got ({i}, {j})")
    d = abs(i - j)
    return min(d, n - d)


def _stability_level(elements: Sequence[int], n: int) -> int:
    # For sorted elements the minimum pairwise circular gap is attained by a
    # cyclically consecutive pair.
    if len(elements) < 2:
        return n  # no pair constrains the subset
    gaps = [circular_gap(a, b, n) for a, b in zip(elements, elements[1:])]
    gaps.append(circular_gap(elements[-1], elements[0], n))
    return min(gaps)


@dataclass(frozen=True, order=True)
class StableSubset:
    """A subset of [n] stored as a sorted tuple, with its cached stability level.

    The stability level is the least circular gap between two elements; a
    subset with two or more elements is r-stable exactly when its level is at
    least r.  Subsets with fewer than two elements get level n and are
    r-stable for every r.
    """

    n: int
    elements: tuple[int, ...]
    level: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        elems = tuple(sorted(self.elements))
        if len(set(elems)) != len(elems):
            raise ParameterError(f"repeated elements in {self.elements}")
        if any(not 1 <= e <= self.n for e in elems):
            raise ParameterError(f"elements of {self.elements} must lie in [1, {self.n}]")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "level", _stability_level(elems, self.n))

    @property
    def k(self) -> int:
        return len(self.elements)

    def rotate(self, shift: int) -> StableSubset:
        return StableSubset(self.n, tuple((e - 1 + shift) % self.n + 1 for e in self.elements))

    def reflect(self) -> StableSubset:
        return StableSubset(self.n, tuple(self.n + 1 - e for e in self.elements))

    @classmethod
    def from_vector(cls, vec: Sequence[int]) -> StableSubset:
        return cls(len(vec), tuple(i + 1 for i, v in enumerate(vec) if v))


def is_r_stable(s: StableSubset, r: int) -> bool:
    if r < 1:
        raise ParameterError(f"r must be at least 1, got {r}")
    return s.k < 2 or s.level >= r


def vector_is_r_stable(vec: Sequence[int], r: int) -> bool:
    """r-stability of a 0/1 vector, read as the subset it indicates."""
    return is_r_stable(StableSubset.from_vector(vec), r)


def check_nkr(n: int, k: int, r: int) -> None:
    if not 0 < k < n:
        raise ParameterError(f"need 0 < k < n, got n={n}, k={k}")
    if not 1 <= r <= n // k:
        raise ParameterError(f"need 1 <= r <= floor(n/k) = {n // k}, got r={r}")


def enumerate_stable_subsets(n: int, k: int, r: int) -> list[StableSubset]:
    """All r-stable k-subsets of [n] in lexicographic order."""
    check_nkr(n, k, r)
    out = []
    for combo in combinations(range(1, n + 1), k):
        s = StableSubset(n, combo)
        if s.level >= r:
            out.append(s)
    return out


def characteristic_vector(s: StableSubset) -> LatticePoint:
    members = set(s.elements)
    return tuple(1 if i in members else 0 for i in range(1, s.n + 1))


def stable_vertices(n: int, k: int, r: int) -> list[LatticePoint]:
    """Characteristic vectors of the r-stable k-subsets, i.e. the vertex set of the r-stable hypersimplex."""
    return [characteristic_vector(s) for s in enumerate_stable_subsets(n, k, r)]
