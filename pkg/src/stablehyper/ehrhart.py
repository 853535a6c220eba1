"""Ehrhart delta-vectors, codegree, and the Gorenstein test for r-stable hypersimplices.

All polytopes here are the full-dimensional images in R^{n-1} obtained by
dropping the last coordinate of ``sum(x) = k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .facets import UnsupportedParameters, closed_form_hrep, stable_hypersimplex
from .polytope import (
    HalfSpace,
    HPolytope,
    VPolytope,
    affine_dimension,
    brute_force_facets,
    count_interior_points,
    count_lattice_points,
    dilate,
    hrep_vertices,
    project_hrep_phi_inverse,
    project_phi_inverse,
    relint_contains,
    translate,
)
from .stable import LatticePoint, check_nkr


@dataclass(frozen=True)
class DeltaVector:
    """Coefficients of the numerator of the Ehrhart series, delta_0 .. delta_d."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def dimension(self) -> int:
        return len(self.coefficients) - 1

    @property
    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coefficients) if c]
        if not nz:
            raise ValueError("zero delta-polynomial has no degree")
        return nz[-1]

    @property
    def codegree(self) -> int:
        return codegree(self)

    @property
    def normalized_volume(self) -> int:
        return sum(self.coefficients)

    def to_dict(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "dimension": self.dimension,
            "degree": self.degree,
            "codegree": self.codegree,
        }


def delta_from_counts(counts: Sequence[int]) -> DeltaVector:
    """Invert ``sum_t L(t) z^t = delta(z) / (1 - z)^{d+1}`` from L(0), ..., L(d)."""
    d = len(counts) - 1
    return DeltaVector(
        tuple(sum((-1) ** j * comb(d + 1, j) * counts[i - j] for j in range(i + 1)) for i in range(d + 1))
    )


def _as_hpolytope(p: HPolytope | VPolytope) -> HPolytope:
    if isinstance(p, HPolytope):
        return p
    if affine_dimension(p.vertices) != p.dim:
        raise ValueError("delta_vector needs a full-dimensional polytope")
    return HPolytope(p.dim, tuple(brute_force_facets(p)))


def delta_vector(p: HPolytope | VPolytope) -> DeltaVector:
    """delta-vector of a full-dimensional lattice polytope, from exact counts of its first d dilates."""
    h = _as_hpolytope(p)
    verts = hrep_vertices(h)
    if any(x.denominator != 1 for v in verts for x in v):
        raise ValueError("delta_vector needs an integral polytope")
    if affine_dimension([tuple(int(x) for x in v) for v in verts]) != h.dim:
        raise ValueError("delta_vector needs a full-dimensional polytope")
    d = h.dim
    if d < 1:
        raise ValueError("delta_vector needs dimension at least 1")
    return delta_from_counts([count_lattice_points(h, t) for t in range(d + 1)])


def codegree(dv: DeltaVector) -> int:
    return dv.dimension + 1 - dv.degree


def is_unimodal(dv: DeltaVector | Sequence[int]) -> bool:
    """Weakly increasing then weakly decreasing, up to the last nonzero coefficient."""
    coeffs = list(dv.coefficients if isinstance(dv, DeltaVector) else dv)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    i = 1
    while i < len(coeffs) and coeffs[i - 1] <= coeffs[i]:
        i += 1
    while i < len(coeffs) and coeffs[i - 1] >= coeffs[i]:
        i += 1
    return i >= len(coeffs)


def is_palindromic(dv: DeltaVector) -> bool:
    s = dv.degree
    c = dv.coefficients
    return all(c[i] == c[s - i] for i in range(s + 1))


# --- the r-stable hypersimplex in R^{n-1} -------------------------------------


def projected_hrep(n: int, k: int, r: int) -> HPolytope:
    """Closed-form facets of P(n, k, r), the r-stable hypersimplex with its last coordinate dropped."""
    return project_hrep_phi_inverse(closed_form_hrep(n, k, r))


def projected_vrep(n: int, k: int, r: int) -> VPolytope:
    return project_phi_inverse(stable_hypersimplex(n, k, r))


def stable_delta_vector(n: int, k: int, r: int) -> DeltaVector:
    return delta_vector(projected_hrep(n, k, r))


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def expected_codegree(n: int, k: int) -> int:
    return ceil_div(n, k)


def _check_regime(n: int, k: int, r: int) -> None:
    check_nkr(n, k, r)
    if r >= n // k:
        raise UnsupportedParameters(f"need r < floor(n/k) = {n // k}, got r={r}")


def _alpha_vertex(n: int, k: int, shift: int) -> LatticePoint:
    # The 0/1 vertex behind the alpha >= 2 construction, with its ones
    # at n - s*r0 for s = 1..alpha, cyclically shifted left by `shift`.
    q = expected_codegree(n, k)
    alpha = k * q - n
    r0 = n // k - 1
    v = [0] * n
    for s in range(1, alpha + 1):
        v[(n - s * r0 - 1 - shift) % n] = 1
    return tuple(v)


def _lift_and_drop(vertex: Sequence[int], k: int, q: int) -> LatticePoint:
    x = [a + 1 for a in vertex]
    x[-1] = k * q - sum(x[:-1])
    return tuple(x[:-1])


def interior_point(n: int, k: int, r: int) -> LatticePoint:
    """A lattice point in the relative interior of q*P(n, k, r), q = ceil(n/k).

    For ``alpha = k*q - n`` in {0, 1} this is the all-ones vector.  Otherwise
    start from the indicator of ``{n - s*r0 : s in [k-1]}`` with
    ``r0 = floor(n/k) - 1``, keep only the first alpha ones, add one to every
    coordinate, and drop the last coordinate.
    """
    _check_regime(n, k, r)
    q = expected_codegree(n, k)
    alpha = k * q - n
    if alpha <= 1:
        return (1,) * (n - 1)
    return _lift_and_drop(_alpha_vertex(n, k, 0), k, q)


def second_interior_point(n: int, k: int, r: int) -> LatticePoint:
    """Another relative-interior lattice point of q*P when alpha >= 2: same recipe, vertex shifted left by one."""
    _check_regime(n, k, r)
    q = expected_codegree(n, k)
    alpha = k * q - n
    if alpha < 2:
        raise UnsupportedParameters(f"second interior point needs alpha >= 2, got alpha={alpha}")
    return _lift_and_drop(_alpha_vertex(n, k, 1), k, q)


def translated_Q(n: int, k: int, r: int) -> HPolytope:
    """``q*P(n, k, r) - (1, ..., 1)`` written out facet by facet."""
    _check_regime(n, k, r)
    q = expected_codegree(n, k)
    alpha = k * q - n
    if alpha > 1:
        raise UnsupportedParameters(f"translated_Q needs alpha in {{0, 1}}, got alpha={alpha}")
    d = n - 1
    hs = []
    for i in range(d):
        hs.append(HalfSpace(tuple(-1 if j == i else 0 for j in range(d)), 1))
    hs.append(HalfSpace((1,) * d, k * q - (n - 1)))
    for ell in range(1, n + 1):
        members = {(ell - 1 + j) % n + 1 for j in range(r)}
        if n not in members:
            hs.append(HalfSpace(tuple(1 if j + 1 in members else 0 for j in range(d)), q - r))
        else:
            comp = tuple(-1 if j + 1 not in members else 0 for j in range(d))
            hs.append(HalfSpace(comp, -((k - 1) * q - (n - r))))
    return HPolytope(d, tuple(hs))


class NotInteriorError(ValueError):
    """The origin is not in the relative interior."""


def is_reflexive(q: HPolytope) -> bool:
    """All primitive facet inequalities ``a.x <= b`` have ``b = 1``.

    ``q.halfspaces`` must be the facets of a full-dimensional lattice polytope
    with the origin in its interior.
    """
    origin = (0,) * q.dim
    if not relint_contains(q, origin):
        raise NotInteriorError("reflexivity needs the origin in the interior")
    return all(h.primitive().offset == 1 for h in q.halfspaces)


def closed_form_gorenstein(n: int, k: int, r: int) -> bool:
    if k in (1, n - 1):
        return True  # standard simplex
    return n == k * r + k


@dataclass
class GorensteinReport:
    n: int
    k: int
    r: int
    delta: DeltaVector
    codegree: int
    alpha: int | None
    interior_point: LatticePoint
    interior_point_valid: bool
    second_interior_point: LatticePoint | None
    reflexive: bool
    closed_form: bool
    palindromic: bool
    unimodal: bool
    checks: dict = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return self.reflexive == self.closed_form

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "delta": list(self.delta.coefficients),
            "codegree": self.codegree,
            "alpha": self.alpha,
            "interior_point": list(self.interior_point),
            "interior_point_valid": self.interior_point_valid,
            "second_interior_point": None if self.second_interior_point is None else list(self.second_interior_point),
            "reflexive": self.reflexive,
            "closed_form": self.closed_form,
            "agrees": self.agrees,
            "palindromic": self.palindromic,
            "unimodal": self.unimodal,
            "checks": dict(sorted(self.checks.items())),
        }


def is_gorenstein(n: int, k: int, r: int, cross_check: bool = False) -> GorensteinReport:
    """Decide Gorenstein-ness both by the n = k*r + k rule and by computation.

    The computation counts lattice points for the delta-vector and codegree,
    places an interior lattice point in the codegree dilate, and tests the
    translated dilate for reflexivity.  When alpha >= 2 a second interior
    point rules Gorenstein-ness out directly.  With ``cross_check`` the
    facets of the translated dilate are also recomputed by the hull oracle
    from its vertices.
    """
    standard = k in (1, n - 1)
    if standard:
        check_nkr(n, k, r)
    else:
        _check_regime(n, k, r)
    hp = projected_hrep(n, k, r)
    dv = delta_vector(hp)
    q = codegree(dv)
    checks: dict[str, bool] = {}
    second = None
    if standard:
        # the unique interior point of n times a standard simplex
        alpha = None
        point = (1,) * (n - 1) if k == 1 else (n - 1,) * (n - 1)
        checks["codegree_is_n"] = q == n
    else:
        alpha = k * q - n
        point = interior_point(n, k, r)
        checks["codegree_is_ceil_n_over_k"] = q == expected_codegree(n, k)
    qp = dilate(hp, q)
    valid = relint_contains(qp, point)

    if alpha is not None and alpha >= 2:
        second = second_interior_point(n, k, r)
        checks["second_point_distinct"] = second != point
        checks["second_point_interior"] = relint_contains(qp, second)

    shifted = translate(qp, point)
    reflexive = is_reflexive(shifted)
    if alpha is not None and alpha >= 2:
        # two interior points of the codegree dilate already exclude Gorenstein
        checks["short_circuit_not_gorenstein"] = not reflexive
    elif alpha is not None:
        checks["matches_closed_form_Q"] = shifted.canonical() == translated_Q(n, k, r).canonical()
    if cross_check:
        vq = translate(dilate(projected_vrep(n, k, r), q), point)
        oracle = HPolytope(n - 1, tuple(brute_force_facets(vq)))
        checks["oracle_facets_match"] = oracle.canonical() == shifted.canonical()
        checks["oracle_reflexive_agrees"] = is_reflexive(oracle) == reflexive
        inner = count_interior_points(hp, q)
        checks["gorenstein_has_unique_interior_point"] = inner == 1 if reflexive else True
        if alpha is not None and alpha >= 2:
            checks["several_interior_points"] = inner >= 2

    return GorensteinReport(
        n=n,
        k=k,
        r=r,
        delta=dv,
        codegree=q,
        alpha=alpha,
        interior_point=point,
        interior_point_valid=valid,
        second_interior_point=second,
        reflexive=reflexive,
        closed_form=closed_form_gorenstein(n, k, r),
        palindromic=is_palindromic(dv),
        unimodal=is_unimodal(dv),
        checks=checks,
    )
