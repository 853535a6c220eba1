"""Closed-form facets of the r-stable hypersimplex and their certification.

For ``1 < k < n-1`` and ``1 <= r < n // k`` the facets are the n
nonnegativity constraints ``x_l >= 0`` and the n cyclic window constraints
``x_l + ... + x_{l+r-1} <= 1``, inside ``sum(x) = k``.  When ``n = k*r + 1``
the polytope is a simplex cut out by the windows alone.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .polytope import (
    HalfSpace,
    HPolytope,
    VPolytope,
    affine_dimension,
    brute_force_facets,
    canonical_halfspace,
    sum_equation,
)
from .stable import ParameterError, check_nkr, stable_vertices


class UnsupportedParameters(ParameterError):
    """(n, k, r) lies outside the range where a closed form is known."""


def window(n: int, start: int, width: int) -> tuple[int, ...]:
    """Cyclic window {start, ..., start+width-1} of [n], 1-based."""
    return tuple((start - 1 + i) % n + 1 for i in range(width))


def window_halfspace(n: int, start: int, width: int) -> HalfSpace:
    members = set(window(n, start, width))
    return HalfSpace(tuple(1 if i in members else 0 for i in range(1, n + 1)), 1)


def positivity_halfspace(n: int, ell: int) -> HalfSpace:
    return HalfSpace(tuple(-1 if i == ell else 0 for i in range(1, n + 1)), 0)


def _hpolytope(n: int, k: int, halfspaces: list[HalfSpace]) -> HPolytope:
    return HPolytope(n, tuple(halfspaces), sum_equation(n, k))


def in_theorem_range(n: int, k: int, r: int) -> bool:
    return 1 < k < n - 1 and 1 <= r < n // k


def is_simplex_case(n: int, k: int, r: int) -> bool:
    return 0 < k < n and r >= 1 and n == k * r + 1


def closed_form_hrep(n: int, k: int, r: int) -> HPolytope:
    """The 2n facet inequalities of the r-stable (n, k)-hypersimplex.

    k = 1 and k = n-1 give standard simplices and are answered with their n
    facets (``x_l >= 0`` resp. ``x_l <= 1``).
    """
    check_nkr(n, k, r)
    ells = range(1, n + 1)
    if k == 1:
        return _hpolytope(n, k, [positivity_halfspace(n, l) for l in ells])
    if k == n - 1:
        return _hpolytope(n, k, [window_halfspace(n, l, 1) for l in ells])
    if not in_theorem_range(n, k, r):
        raise UnsupportedParameters(
            f"no closed form for n={n}, k={k}, r={r}: need r < floor(n/k) = {n // k}"
        )
    hs = [positivity_halfspace(n, l) for l in ells] + [window_halfspace(n, l, r) for l in ells]
    return _hpolytope(n, k, hs)


def simplex_case_hrep(n: int, k: int, r: int) -> HPolytope:
    """The n window inequalities cutting out the simplex when n = k*r + 1."""
    if not is_simplex_case(n, k, r):
        raise UnsupportedParameters(f"simplex case needs n = k*r + 1, got n={n}, k={k}, r={r}")
    return _hpolytope(n, k, [window_halfspace(n, l, r) for l in range(1, n + 1)])


def known_hrep(n: int, k: int, r: int) -> tuple[str, HPolytope]:
    """Whichever closed form applies, tagged ``"theorem"``, ``"simplex"`` or ``"standard-simplex"``."""
    check_nkr(n, k, r)
    if k in (1, n - 1):
        return "standard-simplex", closed_form_hrep(n, k, r)
    if in_theorem_range(n, k, r):
        return "theorem", closed_form_hrep(n, k, r)
    if is_simplex_case(n, k, r):
        return "simplex", simplex_case_hrep(n, k, r)
    raise UnsupportedParameters(
        f"facets of the r-stable hypersimplex are not known in closed form for n={n}, k={k}, r={r}"
    )


def stable_hypersimplex(n: int, k: int, r: int) -> VPolytope:
    """V-representation: the characteristic vectors of r-stable k-subsets."""
    return VPolytope(tuple(stable_vertices(n, k, r)), sum_equation(n, k))


def oracle_facets(n: int, k: int, r: int) -> list[HalfSpace]:
    return brute_force_facets(stable_hypersimplex(n, k, r))


@dataclass
class FacetCertificate:
    """Outcome of checking a closed-form facet list against the hull oracle."""

    n: int
    k: int
    r: int
    regime: str
    vertex_count: int
    dimension: int
    facet_count: int
    expected_facet_count: int
    oracle_matches: bool
    missing: list[HalfSpace] = field(default_factory=list)
    unexpected: list[HalfSpace] = field(default_factory=list)
    violated: list[HalfSpace] = field(default_factory=list)
    narrow_windows_found: list[HalfSpace] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.oracle_matches
            and self.facet_count == self.expected_facet_count
            and not self.violated
            and not self.narrow_windows_found
        )

    def mismatch_report(self) -> list[str]:
        lines = []
        for h in self.missing:
            lines.append(f"closed-form halfspace not a facet: {h.normal} <= {h.offset}")
        for h in self.unexpected:
            lines.append(f"oracle facet missing from closed form: {h.normal} <= {h.offset}")
        for h in self.violated:
            lines.append(f"halfspace violated by a vertex: {h.normal} <= {h.offset}")
        for h in self.narrow_windows_found:
            lines.append(f"window of width r-1 is a facet: {h.normal} <= {h.offset}")
        if self.facet_count != self.expected_facet_count:
            lines.append(f"facet count {self.facet_count} != {self.expected_facet_count}")
        return lines

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("missing", "unexpected", "violated", "narrow_windows_found"):
            d[key] = [{"normal": list(h.normal), "offset": h.offset} for h in getattr(self, key)]
        d["passed"] = self.passed
        return d


def verify_hrep(n: int, k: int, r: int) -> FacetCertificate:
    regime, hrep = known_hrep(n, k, r)
    poly = stable_hypersimplex(n, k, r)
    eq = poly.equation
    oracle = set(brute_force_facets(poly))
    closed = set(hrep.canonical())
    violated = sorted(h for h in hrep.halfspaces if not all(h.contains(v) for v in poly.vertices))
    narrow = []
    if r > 1 and regime == "theorem":
        narrow_set = {canonical_halfspace(window_halfspace(n, l, r - 1), eq) for l in range(1, n + 1)}
        narrow = sorted(oracle & narrow_set)
    expected = n if regime in ("simplex", "standard-simplex") else 2 * n
    return FacetCertificate(
        n=n,
        k=k,
        r=r,
        regime=regime,
        vertex_count=len(poly.vertices),
        dimension=affine_dimension(poly.vertices),
        facet_count=len(oracle),
        expected_facet_count=expected,
        oracle_matches=oracle == closed,
        missing=sorted(closed - oracle),
        unexpected=sorted(oracle - closed),
        violated=violated,
        narrow_windows_found=narrow,
    )
