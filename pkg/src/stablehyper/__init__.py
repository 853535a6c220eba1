"""Exact computations on r-stable hypersimplices: facets, circuit triangulations, Ehrhart data, Gorenstein tests."""

__version__ = "0.1.0"

from .stable import (  # noqa: E402
    ParameterError,
    StableSubset,
    characteristic_vector,
    circular_gap,
    enumerate_stable_subsets,
    is_r_stable,
)
from .polytope import (  # noqa: E402
    HalfSpace,
    HPolytope,
    VPolytope,
    affine_dimension,
    brute_force_facets,
    count_lattice_points,
    project_phi_inverse,
    relint_contains,
    translate,
)
from .facets import closed_form_hrep, simplex_case_hrep, verify_hrep  # noqa: E402
from .circuits import (  # noqa: E402
    MinimalCircuit,
    build_circuit_graph,
    enumerate_minimal_circuits,
    restrict_to_stable,
)
from .ehrhart import (  # noqa: E402
    DeltaVector,
    codegree,
    delta_vector,
    is_gorenstein,
    is_unimodal,
    stable_delta_vector,
)

__all__ = [
    "DeltaVector",
    "HPolytope",
    "HalfSpace",
    "MinimalCircuit",
    "ParameterError",
    "StableSubset",
    "VPolytope",
    "affine_dimension",
    "brute_force_facets",
    "build_circuit_graph",
    "characteristic_vector",
    "circular_gap",
    "closed_form_hrep",
    "codegree",
    "count_lattice_points",
    "delta_vector",
    "enumerate_minimal_circuits",
    "enumerate_stable_subsets",
    "is_gorenstein",
    "is_r_stable",
    "is_unimodal",
    "project_phi_inverse",
    "relint_contains",
    "restrict_to_stable",
    "simplex_case_hrep",
    "stable_delta_vector",
    "translate",
    "verify_hrep",
]
