"""Exact double description method over the integers.

Computes the extreme rays of a pointed polyhedral cone ``{y : A y >= 0}``.
Rays are kept as primitive integer tuples and zero sets as int bitmasks, so
the adjacency test is a popcount plus a containment scan.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = tuple[int, ...]


class DegenerateCone(ValueError):
    """The constraint matrix does not have full column rank (cone not pointed)."""


def primitive(vec: Sequence[int]) -> Row:
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g in (0, 1):
        return tuple(vec)
    return tuple(v // g for v in vec)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def rank_and_pivots(rows: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Rank of an integer matrix and the indices of a maximal independent row set (greedy, in order)."""
    basis: list[list[Fraction]] = []  # reduced rows
    pivot_cols: list[int] = []
    chosen: list[int] = []
    for idx, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for b, c in zip(basis, pivot_cols):
            if v[c]:
                f = v[c] / b[c]
                v = [x - f * y for x, y in zip(v, b)]
        nz = next((i for i, x in enumerate(v) if x), None)
        if nz is not None:
            basis.append(v)
            pivot_cols.append(nz)
            chosen.append(idx)
    return len(basis), chosen


def _initial_rays(rows: Sequence[Row]) -> list[Row]:
    # Rays of the simplicial cone {y : B y >= 0} for square invertible B are
    # the columns of B^{-1}.
    dim = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(dim)] for i, row in enumerate(rows)]
    for col in range(dim):
        piv = next(i for i in range(col, dim) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(dim):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = [row[dim:] for row in aug]
    rays = []
    for j in range(dim):
        col = [inv[i][j] for i in range(dim)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        rays.append(primitive([int(x * den) for x in col]))
    return rays


def extreme_rays(constraints: Sequence[Sequence[int]]) -> list[Row]:
    """Extreme rays of ``{y : c . y >= 0 for every constraint c}``.

    Raises :class:`DegenerateCone` when the constraints do not pin down a
    pointed cone.  Output is sorted.
    """
    rows = [tuple(int(x) for x in c) for c in constraints]
    if not rows:
        raise DegenerateCone("no constraints")
    dim = len(rows[0])
    rank, chosen = rank_and_pivots(rows)
    if rank < dim:
        raise DegenerateCone(f"constraint matrix has rank {rank} < {dim}")

    rays = _initial_rays([rows[i] for i in chosen])
    processed = list(chosen)
    # zero set of each ray, as a bitmask over positions in `processed`
    zeros = []
    for ray in rays:
        mask = 0
        for pos, ri in enumerate(processed):
            if _dot(rows[ri], ray) == 0:
                mask |= 1 << pos
        zeros.append(mask)

    in_basis = set(chosen)
    for ri in range(len(rows)):
        if ri in in_basis:
            continue
        row = rows[ri]
        vals = [_dot(row, ray) for ray in rays]
        pos_idx = [i for i, v in enumerate(vals) if v > 0]
        neg_idx = [i for i, v in enumerate(vals) if v < 0]
        zero_idx = [i for i, v in enumerate(vals) if v == 0]
        bit = 1 << len(processed)
        new_rays: list[Row] = []
        new_zeros: list[int] = []
        if neg_idx:
            need = dim - 2
            for i in pos_idx:
                zi = zeros[i]
                for j in neg_idx:
                    common = zi & zeros[j]
                    if common.bit_count() < need:
                        continue
                    adjacent = True
                    for m in range(len(rays)):
                        if m != i and m != j and zeros[m] & common == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    a, b = vals[i], -vals[j]
                    combo = primitive([b * x + a * y for x, y in zip(rays[i], rays[j])])
                    new_rays.append(combo)
                    new_zeros.append(common | bit)
        rays = [rays[i] for i in pos_idx] + [rays[i] for i in zero_idx] + new_rays
        zeros = [zeros[i] for i in pos_idx] + [zeros[i] | bit for i in zero_idx] + new_zeros
        processed.append(ri)
    return sorted(set(rays))
