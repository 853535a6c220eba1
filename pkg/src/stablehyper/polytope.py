"""Exact lattice polytope kernel.

Everything here is integer or :class:`fractions.Fraction` arithmetic.  A
polytope that lives in an affine hyperplane (the hypersimplices live in
``sum(x) = k``) carries that hyperplane explicitly as an :class:`Equation`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from ._dd import DegenerateCone, extreme_rays, primitive, rank_and_pivots
from .stable import LatticePoint

RationalVector = tuple[Fraction, ...]


class DegeneracyError(ValueError):
    """The input polytope is too low-dimensional for the requested operation."""


class BoundednessError(ValueError):
    """The halfspace system does not describe a bounded set."""


class ConsistencyError(ValueError):
    """Vertices do not satisfy the ambient equation they were declared with."""


def _dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Equation:
    """The affine hyperplane ``normal . x = value``."""

    normal: tuple[int, ...]
    value: int

    def holds(self, x: Sequence) -> bool:
        return _dot(self.normal, x) == self.value


def sum_equation(n: int, k: int) -> Equation:
    return Equation((1,) * n, k)


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The closed halfspace ``normal . x <= offset``."""

    normal: tuple[int, ...]
    offset: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "normal", tuple(int(a) for a in self.normal))
        object.__setattr__(self, "offset", int(self.offset))

    def slack(self, x: Sequence):
        return self.offset - _dot(self.normal, x)

    def contains(self, x: Sequence) -> bool:
        return self.slack(x) >= 0

    def strictly_contains(self, x: Sequence) -> bool:
        return self.slack(x) > 0

    def is_tight(self, x: Sequence) -> bool:
        return self.slack(x) == 0

    def primitive(self) -> HalfSpace:
        """Divide through by the gcd of the normal (or of normal and offset if the offset is not divisible)."""
        g = 0
        for a in self.normal:
            g = gcd(g, a)
        if g == 0:
            return self
        if self.offset % g:
            g = gcd(g, self.offset)
        return HalfSpace(tuple(a // g for a in self.normal), self.offset // g)

    def translated(self, v: Sequence[int]) -> HalfSpace:
        return HalfSpace(self.normal, self.offset - _dot(self.normal, v))

    def dilated(self, t: int) -> HalfSpace:
        return HalfSpace(self.normal, self.offset * t)


def canonical_halfspace(h: HalfSpace, equation: Equation | None = None) -> HalfSpace:
    """Canonical representative of ``h`` relative to an ambient hyperplane.

    Inside ``equation`` the halfspace ``a.x <= b`` is the same set as
    ``(a - lam*c).x <= b - lam*e`` for every ``lam``.  We pick the sparsest
    such normal, made primitive, breaking ties lexicographically.  With the
    hyperplane ``sum(x) = k`` this keeps ``-x_l <= 0`` and window sums
    ``<= 1`` in their natural form.
    """
    if equation is None:
        return h.primitive()
    c, e = equation.normal, equation.value
    lams = {Fraction(0)} | {Fraction(a, ci) for a, ci in zip(h.normal, c) if ci}
    best = None
    for lam in lams:
        normal = [Fraction(a) - lam * ci for a, ci in zip(h.normal, c)]
        offset = Fraction(h.offset) - lam * e
        den = lam.denominator
        cand = HalfSpace(tuple(int(x * den) for x in normal), int(offset * den)).primitive()
        key = (-sum(1 for a in cand.normal if a == 0), cand.normal, cand.offset)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a finite list of lattice points.

    ``lifted_sum`` is set by :func:`project_phi_inverse`: it is the value k
    of the coordinate sum that was used to drop the last coordinate, so the
    projection can be undone with :func:`phi`.
    """

    vertices: tuple[LatticePoint, ...]
    equation: Equation | None = None
    lifted_sum: int | None = None

    def __post_init__(self) -> None:
        verts = tuple(tuple(int(x) for x in v) for v in self.vertices)
        if not verts:
            raise ValueError("a VPolytope needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValueError("vertices must be distinct")
        if len({len(v) for v in verts}) != 1:
            raise ValueError("vertices must share one ambient dimension")
        if self.equation is not None and not all(self.equation.holds(v) for v in verts):
            raise ConsistencyError("a vertex violates the ambient equation")
        object.__setattr__(self, "vertices", verts)

    @property
    def dim(self) -> int:
        return len(self.vertices[0])


@dataclass(frozen=True)
class HPolytope:
    """Intersection of halfspaces, optionally inside an affine hyperplane."""

    dim: int
    halfspaces: tuple[HalfSpace, ...]
    equation: Equation | None = None
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        seen: dict[HalfSpace, HalfSpace] = {}
        for h in self.halfspaces:
            if len(h.normal) != self.dim:
                raise ValueError(f"halfspace {h} does not live in dimension {self.dim}")
            seen.setdefault(canonical_halfspace(h, self.equation), h)
        object.__setattr__(self, "halfspaces", tuple(seen.values()))
        object.__setattr__(self, "_key", tuple(sorted(seen)))

    def contains(self, x: Sequence) -> bool:
        if self.equation is not None and not self.equation.holds(x):
            return False
        return all(h.contains(x) for h in self.halfspaces)

    def canonical(self) -> list[HalfSpace]:
        """Halfspaces in canonical form, sorted by (normal, offset)."""
        return list(self._key)


# --- dimension and affine hulls --------------------------------------------


def _differences(points: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    base = points[0]
    return [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    if not points:
        raise ValueError("affine_dimension needs at least one point")
    diffs = _differences(points)
    if not diffs:
        return 0
    rank, _ = rank_and_pivots(diffs)
    return rank


def _independent_columns(points: Sequence[Sequence[int]]) -> list[int]:
    diffs = _differences(points)
    cols = [tuple(d[i] for d in diffs) for i in range(len(points[0]))]
    _, chosen = rank_and_pivots(cols)
    return chosen


def _hull_equation(points: Sequence[Sequence[int]]) -> Equation | None:
    """The affine hyperplane spanned by ``points`` when their hull has codimension exactly 1."""
    n = len(points[0])
    diffs = _differences(points)
    if affine_dimension(points) != n - 1:
        return None
    # kernel vector of the difference matrix via a cofactor-free elimination
    rows = [[Fraction(x) for x in d] for d in diffs]
    pivots: list[int] = []
    reduced: list[list[Fraction]] = []
    for row in rows:
        for r, c in zip(reduced, pivots):
            if row[c]:
                f = row[c] / r[c]
                row = [x - f * y for x, y in zip(row, r)]
        nz = next((i for i, x in enumerate(row) if x), None)
        if nz is None:
            continue
        row = [x / row[nz] for x in row]
        for i, r in enumerate(reduced):
            if r[nz]:
                f = r[nz]
                reduced[i] = [x - f * y for x, y in zip(r, row)]
        reduced.append(row)
        pivots.append(nz)
    free = next(i for i in range(n) if i not in pivots)
    kernel = [Fraction(0)] * n
    kernel[free] = Fraction(1)
    for r, c in zip(reduced, pivots):
        kernel[c] = -r[free]
    den = 1
    for x in kernel:
        den = den * x.denominator // gcd(den, x.denominator)
    normal = primitive([int(x * den) for x in kernel])
    if next(x for x in normal if x) < 0:
        normal = tuple(-x for x in normal)
    return Equation(normal, _dot(normal, points[0]))


# --- the independent facet oracle -----------------------------------------


def brute_force_facets(p: VPolytope) -> list[HalfSpace]:
    """Irredundant facet list of ``conv(p.vertices)``, computed exactly.

    The hull is projected onto a set of coordinates on which it is
    full-dimensional, the cone of valid inequalities is resolved into its
    extreme rays by double description, and each ray is lifted back and put
    in canonical form.  For hulls of codimension one the canonical form is
    taken relative to the hull's hyperplane (``p.equation`` when given).
    """
    verts = p.vertices
    d = affine_dimension(verts)
    if d < 1:
        raise DegeneracyError("cannot compute facets of a point")
    if len(verts) < d + 1:
        raise DegeneracyError("need at least d+1 vertices")
    cols = _independent_columns(verts)
    constraints = [tuple(-v[c] for c in cols) + (1,) for v in verts]
    try:
        rays = extreme_rays(constraints)
    except DegenerateCone as exc:  # pragma: no cover - excluded by the rank check above
        raise DegeneracyError(str(exc)) from exc

    equation = None
    if d == p.dim - 1:
        equation = p.equation if p.equation is not None else _hull_equation(verts)

    out = set()
    for ray in rays:
        normal = [0] * p.dim
        for c, a in zip(cols, ray[:-1]):
            normal[c] = a
        out.add(canonical_halfspace(HalfSpace(tuple(normal), ray[-1]), equation))
    return sorted(out)


# --- H -> V and lattice point counting -------------------------------------


@lru_cache(maxsize=256)
def _hrep_vertices(p: HPolytope) -> tuple[tuple[Fraction, ...], ...]:
    constraints = []
    for h in p.halfspaces:
        constraints.append(tuple(-a for a in h.normal) + (h.offset,))
    if p.equation is not None:
        row = tuple(-a for a in p.equation.normal) + (p.equation.value,)
        constraints.append(row)
        constraints.append(tuple(-a for a in row))
    constraints.append((0,) * p.dim + (1,))
    try:
        rays = extreme_rays(constraints)
    except DegenerateCone as exc:
        raise BoundednessError(f"halfspace system is not bounded: {exc}") from exc
    verts = []
    for ray in rays:
        if ray[-1] == 0:
            raise BoundednessError("halfspace system has a recession direction")
        verts.append(tuple(Fraction(a, ray[-1]) for a in ray[:-1]))
    return tuple(sorted(verts))


def hrep_vertices(p: HPolytope) -> list[RationalVector]:
    """Vertices of a bounded H-polytope (possibly rational), sorted."""
    return list(_hrep_vertices(p))


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _count(p: HPolytope, t: int, strict: bool) -> int:
    verts = _hrep_vertices(p)
    if not verts:
        return 0
    dim = p.dim
    lo, hi = [], []
    for i in range(dim):
        low = min(v[i] for v in verts) * t
        high = max(v[i] for v in verts) * t
        lo.append(_ceil_div(low.numerator, low.denominator))
        hi.append(_floor_div(high.numerator, high.denominator))

    # (coefficients by variable, bound, is_equality)
    cons: list[tuple[dict[int, int], int, bool]] = []
    for h in p.halfspaces:
        b = h.offset * t - (1 if strict else 0)
        coeffs = {i: a for i, a in enumerate(h.normal) if a}
        if not coeffs:
            if b < 0:
                return 0
            continue
        if len(coeffs) == 1:
            (i, a), = coeffs.items()
            if a > 0:
                hi[i] = min(hi[i], _floor_div(b, a))
            else:
                lo[i] = max(lo[i], _ceil_div(b, a))
            continue
        cons.append((coeffs, b, False))
    if p.equation is not None:
        coeffs = {i: a for i, a in enumerate(p.equation.normal) if a}
        cons.append((coeffs, p.equation.value * t, True))
    if any(l > h for l, h in zip(lo, hi)):
        return 0
    return _layered_count(dim, lo, hi, cons)


def _layered_count(dim: int, lo: list[int], hi: list[int], cons) -> int:
    first = [min(c[0]) for c in cons]
    last = [max(c[0]) for c in cons]
    # smallest / largest possible contribution of variables after position i
    min_rest = []
    max_rest = []
    for coeffs, _, _ in cons:
        mins = [0] * (dim + 1)
        maxs = [0] * (dim + 1)
        for i in range(dim - 1, -1, -1):
            a = coeffs.get(i, 0)
            mins[i] = mins[i + 1] + min(a * lo[i], a * hi[i])
            maxs[i] = maxs[i + 1] + max(a * lo[i], a * hi[i])
        min_rest.append(mins)
        max_rest.append(maxs)

    alive = [[j for j in range(len(cons)) if first[j] < i <= last[j]] for i in range(dim + 1)]
    layer: dict[tuple[int, ...], int] = {(): 1}
    for i in range(dim):
        touching = [j for j in range(len(cons)) if i in cons[j][0]]
        pos_before = {j: p for p, j in enumerate(alive[i])}
        # how each constraint alive after step i is assembled
        plan = []
        for j in alive[i + 1]:
            plan.append((pos_before.get(j, -1), cons[j][0].get(i, 0)))
        checks = []
        for j in touching:
            coeffs, b, is_eq = cons[j]
            checks.append((pos_before.get(j, -1), coeffs[i], b, is_eq, min_rest[j][i + 1], max_rest[j][i + 1]))
        nxt: dict[tuple[int, ...], int] = {}
        for state, mult in layer.items():
            xl, xh = lo[i], hi[i]
            for pos, a, b, is_eq, mn, mx in checks:
                s = state[pos] if pos >= 0 else 0
                # s + a*x + mn <= b, and for equalities also s + a*x + mx >= b
                room = b - s - mn
                if a > 0:
                    xh = min(xh, _floor_div(room, a))
                else:
                    xl = max(xl, _ceil_div(room, a))
                if is_eq:
                    need = b - s - mx
                    if a > 0:
                        xl = max(xl, _ceil_div(need, a))
                    else:
                        xh = min(xh, _floor_div(need, a))
                if xl > xh:
                    break
            if xl > xh:
                continue
            for x in range(xl, xh + 1):
                key = tuple((state[pos] if pos >= 0 else 0) + a * x for pos, a in plan)
                nxt[key] = nxt.get(key, 0) + mult
        layer = nxt
        if not layer:
            return 0
    return sum(layer.values())


def count_lattice_points(p: HPolytope, t: int) -> int:
    """Number of integer points in the dilate ``t * p``."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    _hrep_vertices(p)  # raises BoundednessError early
    if t == 0:
        return 1
    return _count(p, t, strict=False)


def count_interior_points(p: HPolytope, t: int) -> int:
    """Integer points of ``t * p`` satisfying every halfspace strictly.

    For an integral normal ``a.x < b`` is ``a.x <= b - 1`` on the lattice,
    so this is the same layered count with every offset lowered by one.
    """
    if t < 1:
        raise ValueError("dilation factor must be positive")
    return _count(p, t, strict=True)


def relint_contains(p: HPolytope, x: Sequence) -> bool:
    if len(x) != p.dim:
        raise ValueError("dimension mismatch")
    if p.equation is not None and not p.equation.holds(x):
        return False
    return all(h.strictly_contains(x) for h in p.halfspaces)


# --- affine maps ------------------------------------------------------------


def phi(point: Sequence[int], k: int) -> LatticePoint:
    """Lift a point of R^{n-1} to the hyperplane sum(x) = k by appending k - sum."""
    return tuple(point) + (k - sum(point),)


def project_phi_inverse(p: VPolytope) -> VPolytope:
    """Drop the last coordinate of a polytope living in ``sum(x) = k``."""
    eq = p.equation
    if eq is None:
        raise ConsistencyError("projection needs the ambient equation sum(x) = k")
    if any(a != 1 for a in eq.normal):
        raise ConsistencyError("projection is only defined for sum(x) = k")
    return VPolytope(tuple(v[:-1] for v in p.vertices), None, eq.value)


def lift_phi(p: VPolytope) -> VPolytope:
    if p.lifted_sum is None:
        raise ConsistencyError("polytope was not produced by project_phi_inverse")
    k = p.lifted_sum
    return VPolytope(tuple(phi(v, k) for v in p.vertices), sum_equation(p.dim + 1, k))


def project_hrep_phi_inverse(p: HPolytope) -> HPolytope:
    """Rewrite an H-polytope in ``sum(x) = k`` in the first n-1 coordinates.

    Substitutes ``x_n = k - sum(x_1..x_{n-1})`` into every halfspace.
    """
    eq = p.equation
    if eq is None or any(a != 1 for a in eq.normal):
        raise ConsistencyError("projection is only defined for sum(x) = k")
    k = eq.value
    out = []
    for h in p.halfspaces:
        last = h.normal[-1]
        normal = tuple(a - last for a in h.normal[:-1])
        out.append(HalfSpace(normal, h.offset - last * k).primitive())
    return HPolytope(p.dim - 1, tuple(out))


def translate(p, v: Sequence[int]):
    """The polytope ``p - v``."""
    if len(v) != p.dim:
        raise ValueError("dimension mismatch")
    if isinstance(p, VPolytope):
        eq = p.equation
        if eq is not None:
            eq = Equation(eq.normal, eq.value - _dot(eq.normal, v))
        return VPolytope(tuple(tuple(a - b for a, b in zip(x, v)) for x in p.vertices), eq)
    eq = p.equation
    if eq is not None:
        eq = Equation(eq.normal, eq.value - _dot(eq.normal, v))
    return HPolytope(p.dim, tuple(h.translated(v) for h in p.halfspaces), eq)


def dilate(p, t: int):
    """The dilate ``t * p`` for a positive integer t."""
    if t < 1:
        raise ValueError("dilation factor must be positive")
    if isinstance(p, VPolytope):
        eq = None if p.equation is None else Equation(p.equation.normal, p.equation.value * t)
        lifted = None if p.lifted_sum is None else p.lifted_sum * t
        return VPolytope(tuple(tuple(t * a for a in x) for x in p.vertices), eq, lifted)
    eq = None if p.equation is None else Equation(p.equation.normal, p.equation.value * t)
    return HPolytope(p.dim, tuple(h.dilated(t) for h in p.halfspaces), eq)


def vpolytope_from_points(points: Iterable[Sequence[int]], equation: Equation | None = None) -> VPolytope:
    return VPolytope(tuple(tuple(p) for p in points), equation)
