"""Command-line interface.

Commands: build, table, arrange, eval, certify, solve, verify. Reports go
to standard output, diagnostics to standard error. Exit status: 0 success,
1 verification failure, 2 usage or input error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import families, formats, verify
from .core import DEFAULT_DIMENSION_CAP, DimensionCapError, validate
from .isoperimetric import EnumerationLimitError
from .layout import (
    BRANCH_AND_BOUND_VERTEX_LIMIT,
    EXHAUSTIVE_VERTEX_LIMIT,
    SolverLimitError,
    bc_arrangement,
    certify,
    evaluate_arrangement,
    minla_exact,
)

# Full default table emission is limited to dimensions whose 2**n - 1 rows
# are actually writable; larger dimensions need --m or --max-m.
FULL_TABLE_DIMENSION_LIMIT = 20


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bclayout",
        description=(
            "Construct bijective-connection graphs, compute their "
            "edge-isoperimetric profile, and certify minimum linear "
            "arrangements."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_options(p, required):
        p.add_argument("--family", choices=families.KINDS, required=required)
        p.add_argument("-n", "--dimension", type=int)
        p.add_argument("--seed", type=int, help="seed for the random family")
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_DIMENSION_CAP,
            help="materialization cap on the dimension",
        )

    p = sub.add_parser("build", help="construct a graph and write it as JSON")
    add_family_options(p, required=True)
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.add_argument(
        "--no-tree",
        action="store_true",
        help="omit the construction tree from the JSON",
    )
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser("table", help="emit the m,I,theta CSV for a dimension")
    p.add_argument("-n", "--dimension", type=int, required=True)
    p.add_argument("--max-m", type=int, help="emit rows for m = 1..MAX_M")
    p.add_argument("--m", help="comma-separated list of m values")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser(
        "arrange", help="write the construction-tree arrangement for a graph"
    )
    add_family_options(p, required=False)
    p.add_argument("-i", "--input", help="graph JSON file carrying a tree")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=_cmd_arrange)

    p = sub.add_parser("eval", help="evaluate an arrangement file on a graph")
    p.add_argument("-g", "--graph", required=True, help="graph file (JSON or edge list)")
    p.add_argument("-a", "--arrangement", required=True)
    p.add_argument("--human", action="store_true", help="table output instead of JSON")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser(
        "certify", help="match the tree arrangement against the lower bound"
    )
    add_family_options(p, required=False)
    p.add_argument("-i", "--input", help="graph JSON file carrying a tree")
    p.add_argument("--human", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("solve", help="exact minimum-arrangement search")
    add_family_options(p, required=False)
    p.add_argument("-i", "--input", help="graph file (JSON or edge list)")
    p.add_argument(
        "--mode",
        choices=("auto", "exhaustive", "branch-and-bound"),
        default="auto",
    )
    p.add_argument("--budget", type=float, help="time budget in seconds")
    p.add_argument("-o", "--output")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", help="run the bundled verification suites")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument(
        "--suite",
        action="append",
        choices=verify.SUITE_NAMES,
        help="run only the named suite (repeatable)",
    )
    p.set_defaults(handler=_cmd_verify)

    return parser


@contextmanager
def _open_out(path, default):
    if path is None:
        yield default
    else:
        with open(path, "w") as fp:
            yield fp


def _family_spec_from_args(args) -> families.FamilySpec:
    if args.dimension is None:
        raise ValueError("a dimension is required (-n)")
    return families.FamilySpec(args.family, args.dimension, args.seed)


def _bc_from_args(args):
    """BcGraph from --family flags or from an input file with a tree."""
    has_family = getattr(args, "family", None) is not None
    has_input = getattr(args, "input", None) is not None
    if has_family == has_input:
        raise ValueError("provide exactly one of --family or --input")
    if has_family:
        return families.build(_family_spec_from_args(args), cap=args.cap), True
    with open(args.input) as fp:
        doc = formats.load_graph_json(fp)
    if doc.tree is None:
        raise ValueError(f"{args.input} carries no construction tree")
    return doc.to_bc(), False


def _cmd_build(args, out, err) -> int:
    bc = families.build(_family_spec_from_args(args), cap=args.cap)
    doc = formats.GraphDocument.from_bc(bc, include_tree=not args.no_tree)
    with _open_out(args.output, out) as fp:
        formats.dump_graph_json(doc, fp)
    return 0


def _cmd_table(args, out, err) -> int:
    n = args.dimension
    if n < 1:
        raise ValueError("dimension must be positive")
    size = 1 << n
    if args.m is not None:
        ms = [int(tok) for tok in args.m.split(",") if tok.strip()]
    elif args.max_m is not None:
        ms = range(1, min(args.max_m, size - 1) + 1)
    elif n <= FULL_TABLE_DIMENSION_LIMIT:
        ms = range(1, size)
    else:
        raise ValueError(
            f"a full table for n={n} is too large; pass --max-m or --m"
        )
    with _open_out(args.output, out) as fp:
        formats.write_isoperimetric_table(fp, n, ms)
    return 0


def _cmd_arrange(args, out, err) -> int:
    bc, _ = _bc_from_args(args)
    with _open_out(args.output, out) as fp:
        formats.dump_arrangement(bc_arrangement(bc.tree), fp)
    return 0


def _cmd_eval(args, out, err) -> int:
    with open(args.graph) as fp:
        doc = formats.load_graph_any(fp)
    with open(args.arrangement) as fp:
        arrangement = formats.load_arrangement(fp)
    witness = None
    if doc.tree is not None:
        bc = doc.to_bc()
        report_check = validate(bc)
        if not report_check.ok:
            for line in report_check.violations:
                print(f"invalid witness: {line}", file=err)
            return 2
        witness = bc
    report = evaluate_arrangement(doc.graph, arrangement, witness=witness)
    _emit_report(report, args, out)
    return 0


def _cmd_certify(args, out, err) -> int:
    bc, trusted = _bc_from_args(args)
    if not trusted:
        check = validate(bc)
        if not check.ok:
            for line in check.violations:
                print(f"invalid witness: {line}", file=err)
            return 1
    report = certify(bc)
    _emit_report(report, args, out)
    return 0 if report.optimal else 1


def _emit_report(report, args, out) -> None:
    with _open_out(args.output, out) as fp:
        if getattr(args, "human", False):
            for line in formats.format_report_lines(report):
                fp.write(line + "\n")
        else:
            json.dump(formats.report_to_json_dict(report), fp)
            fp.write("\n")


def _cmd_solve(args, out, err) -> int:
    has_family = args.family is not None
    has_input = args.input is not None
    if has_family == has_input:
        raise ValueError("provide exactly one of --family or --input")
    incumbent = None
    if has_family:
        bc = families.build(_family_spec_from_args(args), cap=args.cap)
        graph = bc.graph
        incumbent = bc_arrangement(bc.tree)
    else:
        with open(args.input) as fp:
            doc = formats.load_graph_any(fp)
        graph = doc.graph
        if doc.tree is not None:
            incumbent = bc_arrangement(doc.tree)
    mode = args.mode
    if mode == "auto":
        mode = (
            "exhaustive"
            if graph.vertex_count <= EXHAUSTIVE_VERTEX_LIMIT
            else "branch-and-bound"
        )
    result = minla_exact(
        graph, mode, budget_seconds=args.budget, incumbent=incumbent
    )
    payload = {
        "cost": result.cost,
        "proven": result.proven,
        "mode": result.mode,
        "nodes_explored": result.nodes_explored,
        "positions": result.arrangement.to_list(),
    }
    with _open_out(args.output, out) as fp:
        json.dump(payload, fp)
        fp.write("\n")
    print(f"search took {result.elapsed_seconds:.3f}s", file=err)
    if not result.proven:
        print("budget exhausted: result not proven optimal", file=err)
        return 3
    return 0


def _cmd_verify(args, out, err) -> int:
    names = args.suite if args.suite else list(verify.SUITE_NAMES)
    all_passed = True
    for name in names:
        result = verify.run_suite(name, seed=args.seed)
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}", file=out)
        print(f"[{result.elapsed:.2f}s] {result.name}", file=err)
        all_passed = all_passed and result.passed
    return 0 if all_passed else 1


def run(argv, stdout=None, stderr=None) -> int:
    """Parse and execute one command; returns the exit status."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0
    try:
        return args.handler(args, out, err)
    except (DimensionCapError, EnumerationLimitError, SolverLimitError) as exc:
        print(f"error: {exc}", file=err)
        return 3
    except NotImplementedError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
