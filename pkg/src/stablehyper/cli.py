"""Command-line entry point: ``stablehyper <command> --n N --k K --r R``."""

from __future__ import annotations

import argparse
import sys

from .circuits import enumerate_minimal_circuits, restrict_to_stable
from .ehrhart import (
    closed_form_gorenstein,
    delta_vector,
    is_gorenstein,
    is_unimodal,
    projected_hrep,
    projected_vrep,
)
from .facets import UnsupportedParameters, in_theorem_range, known_hrep, oracle_facets
from .polytope import DegeneracyError
from .serialize import describe_halfspace, envelope, halfspace_dict, to_csv, to_json
from .stable import ParameterError, check_nkr, stable_vertices
from .verify import run_verification

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class Output:
    """Rendered text for one command plus its exit status."""

    def __init__(self, text: str, status: int = EXIT_OK, stderr: str = ""):
        self.text = text
        self.status = status
        self.stderr = stderr


def _params(args) -> dict:
    return {"n": args.n, "k": args.k, "r": args.r}


def _vector_header(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def cmd_vertices(args) -> Output:
    n, k, r = args.n, args.k, args.r
    verts = stable_vertices(n, k, r)
    if args.format == "csv":
        return Output(to_csv(_vector_header(n), verts))
    if args.format == "plain":
        lines = [f"{len(verts)} {r}-stable vertices of the ({n},{k}) hypersimplex"]
        lines += [" ".join(map(str, v)) for v in verts]
        return Output("\n".join(lines) + "\n")
    result = {"count": len(verts), "vertices": [list(v) for v in verts]}
    return Output(to_json(envelope(_params(args), result)))


def cmd_facets(args) -> Output:
    n, k, r = args.n, args.k, args.r
    check_nkr(n, k, r)
    try:
        regime, hrep = known_hrep(n, k, r)
        halfspaces = hrep.canonical()
        empirical = False
    except UnsupportedParameters:
        regime, empirical = "oracle", True
        halfspaces = oracle_facets(n, k, r)
    if args.format == "csv":
        rows = [list(h.normal) + [h.offset] for h in halfspaces]
        return Output(to_csv(_vector_header(n) + ["offset"], rows))
    if args.format == "plain":
        lines = [f"{len(halfspaces)} facets (regime: {regime}{', empirical' if empirical else ''}), inside sum(x) = {k}"]
        lines += [describe_halfspace(h) for h in halfspaces]
        return Output("\n".join(lines) + "\n")
    result = {
        "regime": regime,
        "empirical": empirical,
        "equation": {"normal": [1] * n, "value": k},
        "facet_count": len(halfspaces),
        "halfspaces": [halfspace_dict(h) for h in halfspaces],
    }
    return Output(to_json(envelope(_params(args), result)))


def cmd_triangulate(args) -> Output:
    n, k, r = args.n, args.k, args.r
    check_nkr(n, k, r)
    circuits = restrict_to_stable(enumerate_minimal_circuits(n, k), r)
    if args.format == "csv":
        rows = [
            [" ".join(map(str, c.word)), ";".join("".join(map(str, v)) for v in c.vertices)]
            for c in circuits
        ]
        return Output(to_csv(["word", "vertices"], rows))
    if args.format == "plain":
        lines = [f"{len(circuits)} maximal simplices"]
        lines += [" ".join(map(str, c.word)) for c in circuits]
        return Output("\n".join(lines) + "\n")
    result = {"count": len(circuits), "circuits": [c.to_dict() for c in circuits]}
    return Output(to_json(envelope(_params(args), result)))


def _delta(n: int, k: int, r: int):
    check_nkr(n, k, r)
    if in_theorem_range(n, k, r) or k in (1, n - 1):
        return delta_vector(projected_hrep(n, k, r))
    try:
        return delta_vector(projected_vrep(n, k, r))
    except DegeneracyError as exc:
        raise ParameterError(f"polytope is not full-dimensional for n={n}, k={k}, r={r}") from exc


def cmd_ehrhart(args) -> Output:
    n, k, r = args.n, args.k, args.r
    dv = _delta(n, k, r)
    gor = closed_form_gorenstein(n, k, r) if (in_theorem_range(n, k, r) or k in (1, n - 1)) else None
    unimodal = is_unimodal(dv)
    if args.format == "csv":
        d = dv.dimension
        header = ["n", "k", "r", "d"] + [f"delta_{i}" for i in range(d + 1)] + ["q", "gorenstein", "unimodal"]
        row = [n, k, r, d, *dv.coefficients, dv.codegree, gor, unimodal]
        return Output(to_csv(header, [row]))
    if args.format == "plain":
        text = (
            f"delta = ({', '.join(map(str, dv.coefficients))})\n"
            f"dimension {dv.dimension}, degree {dv.degree}, codegree {dv.codegree}, "
            f"normalized volume {dv.normalized_volume}, unimodal {unimodal}\n"
        )
        return Output(text)
    result = dv.to_dict()
    result["gorenstein"] = gor
    result["unimodal"] = unimodal
    return Output(to_json(envelope(_params(args), result)))


def cmd_gorenstein(args) -> Output:
    report = is_gorenstein(args.n, args.k, args.r, cross_check=args.cross_check)
    d = report.to_dict()
    if args.format == "csv":
        header = ["n", "k", "r", "codegree", "alpha", "reflexive", "closed_form", "agrees", "palindromic", "unimodal"]
        return Output(to_csv(header, [[d[h] for h in header]]))
    if args.format == "plain":
        verdict = "Gorenstein" if report.reflexive else "not Gorenstein"
        text = (
            f"({args.n},{args.k},{args.r}): {verdict}; codegree {report.codegree}; "
            f"closed form {'agrees' if report.agrees else 'DISAGREES'}\n"
        )
        return Output(text)
    d["verdict"] = report.reflexive
    return Output(to_json(envelope(_params(args), d)))


def cmd_verify(args) -> Output:
    report = run_verification(args.max_n)
    failures = report["summary"]["failures"]
    status = EXIT_MISMATCH if failures else EXIT_OK
    stderr = "".join(f"mismatch: {f}\n" for f in failures)
    if args.format == "csv":
        rows = [
            [c["n"], c["k"], c["r"], " ".join(map(str, c["delta"])), c["codegree"], c["gorenstein"], all(c["checks"].values())]
            for c in report["grid"]
        ]
        return Output(to_csv(["n", "k", "r", "delta", "q", "gorenstein", "passed"], rows), status, stderr)
    if args.format == "plain":
        lines = []
        for c in report["grid"]:
            bad = [name for name, ok in c["checks"].items() if not ok]
            lines.append(f"({c['n']},{c['k']},{c['r']}) {'ok' if not bad else 'FAIL ' + ','.join(bad)}")
        summary = report["summary"]
        lines.append(f"{summary['checks']} checks, {len(failures)} failures")
        return Output("\n".join(lines) + "\n", status, stderr)
    return Output(to_json(envelope({"max_n": args.max_n}, report)), status, stderr)


COMMANDS = {
    "vertices": cmd_vertices,
    "facets": cmd_facets,
    "triangulate": cmd_triangulate,
    "ehrhart": cmd_ehrhart,
    "gorenstein": cmd_gorenstein,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stablehyper", description="Exact computations on r-stable hypersimplices.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    triple = argparse.ArgumentParser(add_help=False)
    triple.add_argument("--n", type=int, required=True)
    triple.add_argument("--k", type=int, required=True)
    triple.add_argument("--r", type=int, default=1)
    helps = {
        "vertices": "list the r-stable characteristic vectors",
        "facets": "facet inequalities (closed form, or oracle output flagged empirical)",
        "triangulate": "maximal simplices of the circuit triangulation restricted to r-stable vertices",
        "ehrhart": "delta-vector, codegree and unimodality",
        "gorenstein": "Gorenstein report with closed-form and computed verdicts",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[triple, common], help=text)
        if name == "gorenstein":
            p.add_argument("--cross-check", action="store_true", help="also recompute facets with the hull oracle")
    p = sub.add_parser("verify", parents=[common], help="cross-check the whole grid up to --max-n")
    p.add_argument("--max-n", type=int, default=12)
    return parser


def run(argv: list[str] | None = None) -> tuple[Output, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify" and args.max_n < 4:
            raise ParameterError("--max-n must be at least 4")
        return COMMANDS[args.command](args), args
    except ParameterError as exc:
        return Output("", EXIT_USAGE, f"stablehyper: error: {exc}\n"), args


def main(argv: list[str] | None = None) -> int:
    out, args = run(argv)
    if out.stderr:
        sys.stderr.write(out.stderr)
    if out.text:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(out.text)
        else:
            sys.stdout.write(out.text)
    return out.status


if __name__ == "__main__":
    sys.exit(main())
