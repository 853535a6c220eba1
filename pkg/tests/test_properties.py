from functools import lru_cache
from itertools import product
from math import comb

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from stablehyper.circuits import barycentric, enumerate_minimal_circuits, simplex_determinant
from stablehyper.ehrhart import delta_vector, projected_vrep
from stablehyper.facets import closed_form_hrep, oracle_facets
from stablehyper.polytope import (
    VPolytope,
    affine_dimension,
    brute_force_facets,
    count_lattice_points,
    HPolytope,
    hrep_vertices,
    project_hrep_phi_inverse,
)
from stablehyper.stable import (
    StableSubset,
    enumerate_stable_subsets,
    is_r_stable,
    stable_vertices,
)
from stablehyper.verify import grid


@st.composite
def nkr(draw, max_n=9):
    n = draw(st.integers(4, max_n))
    k = draw(st.integers(2, n - 2))
    r = draw(st.integers(1, n // k))
    return n, k, r


@st.composite
def grid_cell(draw, max_n=9):
    return draw(st.sampled_from(grid(max_n)))


@given(nkr())
def test_chain_is_nested(params):
    n, k, r = params
    if r < n // k:
        assert set(stable_vertices(n, k, r + 1)) <= set(stable_vertices(n, k, r))


@given(nkr(), st.integers(0, 20), st.booleans())
def test_stability_is_dihedrally_invariant(params, shift, flip):
    n, k, r = params
    for s in enumerate_stable_subsets(n, k, r):
        t = s.rotate(shift)
        if flip:
            t = t.reflect()
        assert is_r_stable(t, r)


@given(st.integers(2, 10), st.data())
def test_r_one_gives_all_subsets(n, data):
    k = data.draw(st.integers(1, n - 1))
    assert len(enumerate_stable_subsets(n, k, 1)) == comb(n, k)


@given(st.integers(3, 12), st.lists(st.integers(1, 12), min_size=1, max_size=6, unique=True), st.integers(1, 4))
def test_level_matches_definition(n, elements, r):
    elements = [e for e in elements if e <= n]
    assume(elements)
    s = StableSubset(n, tuple(elements))
    brute = all(
        min((a - b) % n, (b - a) % n) >= r for a in elements for b in elements if a != b
    )
    assert is_r_stable(s, r) == brute


points3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=4, max_size=10, unique=True)


@settings(max_examples=60, deadline=None)
@given(points3)
def test_oracle_is_sound_and_complete(points):
    assume(affine_dimension(points) == 3)
    facets = brute_force_facets(VPolytope(tuple(points)))
    # sound: every input point satisfies every facet, and each facet is tight on a 2-dimensional face
    for h in facets:
        assert all(h.contains(p) for p in points)
        tight = [p for p in points if h.is_tight(p)]
        assert affine_dimension(tight) == 2
    # complete: the halfspaces cut out exactly the hull, so their vertices lie among the input points
    verts = {tuple(int(x) for x in v) for v in hrep_vertices(HPolytope(3, tuple(facets)))}
    assert verts <= set(points)
    for p in points:
        assert HPolytope(3, tuple(facets)).contains(p)


@settings(max_examples=25, deadline=None)
@given(grid_cell(8), st.integers(0, 2))
def test_counts_invariant_under_projection(params, t):
    ambient = closed_form_hrep(*params)
    assert count_lattice_points(ambient, t) == count_lattice_points(project_hrep_phi_inverse(ambient), t)


def _shift(h, s):
    return h.normal[-s:] + h.normal[:-s] if s else h.normal


@settings(max_examples=20, deadline=None)
@given(grid_cell(9), st.integers(1, 8))
def test_facets_are_cyclically_symmetric(params, s):
    facets = oracle_facets(*params)
    shifted = {(_shift(h, s % params[0]), h.offset) for h in facets}
    assert shifted == {(h.normal, h.offset) for h in facets}


@lru_cache(maxsize=None)
def _circuits(n, k):
    return enumerate_minimal_circuits(n, k)


@lru_cache(maxsize=None)
def _dilate_points(n, k, t):
    return [x for x in product(range(t + 1), repeat=n) if sum(x) == k * t]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_triangulation_covers_and_has_disjoint_interiors(data):
    n = data.draw(st.integers(3, 6))
    k = data.draw(st.integers(1, n - 1))
    t = data.draw(st.integers(1, 3))
    x = data.draw(st.sampled_from(_dilate_points(n, k, t)))
    coords = [barycentric(c, x) for c in _circuits(n, k)]
    assert sum(1 for lam in coords if min(lam) > 0) <= 1
    assert any(min(lam) >= 0 for lam in coords)


@settings(max_examples=15, deadline=None)
@given(st.integers(3, 7), st.data())
def test_simplex_volumes_partition_the_hypersimplex(n, data):
    k = data.draw(st.integers(1, n - 1))
    total = sum(abs(simplex_determinant(c)) for c in _circuits(n, k))
    assert total == delta_vector(projected_vrep(n, k, 1)).normalized_volume
