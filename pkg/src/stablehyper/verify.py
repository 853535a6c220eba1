"""Grid driver cross-checking every closed form against the brute-force side.

Work is split into independent tasks (one per (n, k) chain, one per
triangulation, one per simplex case).  Tasks may run in a process pool; the
report is assembled in the order the tasks were generated, so output does
not depend on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from .circuits import (
    construct_circuit_hl,
    construct_circuit_window,
    enumerate_minimal_circuits,
    is_minimal_circuit,
    restrict_to_stable,
    simplex_determinant,
    window_sum,
)
from .ehrhart import (
    closed_form_gorenstein,
    delta_vector,
    expected_codegree,
    interior_point,
    is_gorenstein,
    is_palindromic,
    is_unimodal,
    projected_hrep,
    projected_vrep,
    second_interior_point,
    stable_delta_vector,
)
from .facets import is_simplex_case, verify_hrep
from .polytope import dilate, relint_contains
from .stable import ParameterError

JOBS_ENV = "STABLEHYPER_JOBS"
GORENSTEIN_MAX_N = 12
TRIANGULATION_MAX_N = 7
SIMPLEX_MAX_N = 13


def grid(max_n: int, min_n: int = 4) -> list[tuple[int, int, int]]:
    """(n, k, r) with min_n <= n <= max_n, 1 < k < n-1, 1 <= r < floor(n/k)."""
    return [
        (n, k, r)
        for n in range(min_n, max_n + 1)
        for k in range(2, n - 1)
        for r in range(1, n // k)
    ]


def jobs_from_env() -> int:
    raw = os.environ.get(JOBS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        jobs = int(raw)
    except ValueError:
        jobs = 0
    if jobs < 1:
        raise ParameterError(f"{JOBS_ENV} must be a positive integer, got {raw!r}")
    return jobs


def _dominated(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    return len(small) == len(big) and all(a <= b for a, b in zip(small, big))


def check_chain(n: int, k: int) -> list[dict[str, Any]]:
    """All grid checks for the chain r = 1, ..., floor(n/k) - 1 at fixed (n, k)."""
    cells = []
    previous_delta = None
    rmax = n // k - 1
    hl_ok = None
    if rmax >= 1:
        hl_ok = True
        for ell in range(1, n + 1):
            c = construct_circuit_hl(n, k, ell)
            hl_ok &= is_minimal_circuit(c) and c.is_r_stable(rmax)
            hl_ok &= sum(v[ell - 1] for v in c.vertices) == 1
    for r in range(1, rmax + 1):
        checks: dict[str, bool] = {}
        cert = verify_hrep(n, k, r)
        checks["facets_match_oracle"] = cert.oracle_matches
        checks["facet_count_2n"] = cert.facet_count == 2 * n
        checks["dimension_n_minus_1"] = cert.dimension == n - 1
        checks["closed_form_valid_on_vertices"] = not cert.violated
        if r > 1:
            checks["narrower_window_not_facet"] = not cert.narrow_windows_found

        if n <= GORENSTEIN_MAX_N:
            report = is_gorenstein(n, k, r, cross_check=True)
            dv = report.delta
            checks["gorenstein_verdicts_agree"] = report.agrees
            checks["gorenstein_internal_checks"] = all(report.checks.values())
            gorenstein = report.reflexive
        else:
            dv = stable_delta_vector(n, k, r)
            gorenstein = closed_form_gorenstein(n, k, r)
        checks["codegree_ceil_n_over_k"] = dv.codegree == expected_codegree(n, k)
        if gorenstein:
            checks["gorenstein_palindromic"] = is_palindromic(dv)
            checks["gorenstein_unimodal"] = is_unimodal(dv)

        q = expected_codegree(n, k)
        qp = dilate(projected_hrep(n, k, r), q)
        point = interior_point(n, k, r)
        checks["interior_point_in_relint"] = relint_contains(qp, point)
        alpha = k * q - n
        if alpha >= 2:
            second = second_interior_point(n, k, r)
            checks["second_interior_point_distinct"] = second != point
            checks["second_interior_point_in_relint"] = relint_contains(qp, second)

        if previous_delta is not None:
            checks["delta_monotone_in_r"] = _dominated(dv.coefficients, previous_delta)
        previous_delta = dv.coefficients

        if r > 1:
            ok = True
            for ell in range(1, n + 1):
                c = construct_circuit_window(n, k, r, ell)
                ok &= is_minimal_circuit(c) and c.is_r_stable(r)
                ok &= sum(1 for v in c.vertices if window_sum(v, ell, r) == 1) == n - 1
            checks["window_circuits"] = ok
        if r == rmax and hl_ok is not None:
            checks["positivity_circuits"] = hl_ok

        cells.append(
            {
                "n": n,
                "k": k,
                "r": r,
                "vertices": cert.vertex_count,
                "facets": cert.facet_count,
                "delta": list(dv.coefficients),
                "codegree": dv.codegree,
                "gorenstein": gorenstein,
                "checks": dict(sorted(checks.items())),
            }
        )
    return cells


def check_triangulation(n: int, k: int) -> dict[str, Any]:
    circuits = enumerate_minimal_circuits(n, k)
    checks = {
        "all_unimodular": all(abs(simplex_determinant(c)) == 1 for c in circuits),
        "circuit_count_is_volume": len(circuits) == delta_vector(projected_vrep(n, k, 1)).normalized_volume,
    }
    restricted = {}
    if 1 < k < n - 1:
        for r in range(2, n // k):
            cells = restrict_to_stable(circuits, r)
            vol = stable_delta_vector(n, k, r).normalized_volume
            restricted[str(r)] = len(cells)
            checks[f"restricted_count_is_volume_r{r}"] = len(cells) == vol
    return {"n": n, "k": k, "circuits": len(circuits), "restricted": restricted, "checks": checks}


def check_simplex_case(n: int, k: int, r: int) -> dict[str, Any]:
    cert = verify_hrep(n, k, r)
    return {
        "n": n,
        "k": k,
        "r": r,
        "vertices": cert.vertex_count,
        "checks": {
            "facets_match_oracle": cert.oracle_matches,
            "facet_count_n": cert.facet_count == n,
            "is_simplex": cert.vertex_count == n and cert.dimension == n - 1,
        },
    }


def _run(task: tuple) -> Any:
    kind, args = task
    if kind == "chain":
        return check_chain(*args)
    if kind == "triangulation":
        return check_triangulation(*args)
    return check_simplex_case(*args)


def build_tasks(max_n: int) -> list[tuple]:
    tasks: list[tuple] = []
    for n in range(4, max_n + 1):
        for k in range(2, n - 1):
            if n // k >= 2:
                tasks.append(("chain", (n, k)))
    for n in range(3, min(max_n, TRIANGULATION_MAX_N) + 1):
        for k in range(1, n):
            tasks.append(("triangulation", (n, k)))
    for n in range(4, min(max_n, SIMPLEX_MAX_N) + 1):
        for k in range(2, n - 1):
            r = (n - 1) // k
            if is_simplex_case(n, k, r):
                tasks.append(("simplex", (n, k, r)))
    return tasks


def run_verification(max_n: int, jobs: int | None = None) -> dict[str, Any]:
    """Run the whole grid up to ``max_n`` and return a report ordered by parameters."""
    if max_n < 4:
        raise ParameterError("max-n must be at least 4")
    tasks = build_tasks(max_n)
    jobs = jobs_from_env() if jobs is None else jobs
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks))
    else:
        results = [_run(t) for t in tasks]

    cells, triangulations, simplices = [], [], []
    for (kind, _), res in zip(tasks, results):
        if kind == "chain":
            cells.extend(res)
        elif kind == "triangulation":
            triangulations.append(res)
        else:
            simplices.append(res)
    cells.sort(key=lambda c: (c["n"], c["k"], c["r"]))
    triangulations.sort(key=lambda c: (c["n"], c["k"]))
    simplices.sort(key=lambda c: (c["n"], c["k"], c["r"]))

    failures = []
    total = 0
    for section, entries in (("grid", cells), ("triangulation", triangulations), ("simplex", simplices)):
        for entry in entries:
            for name, ok in entry["checks"].items():
                total += 1
                if not ok:
                    label = ",".join(str(entry[key]) for key in ("n", "k", "r") if key in entry)
                    failures.append(f"{section}({label}): {name}")
    return {
        "max_n": max_n,
        "grid": cells,
        "triangulation": triangulations,
        "simplex_cases": simplices,
        "summary": {"checks": total, "failures": failures, "passed": not failures},
    }
