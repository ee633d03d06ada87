"""Command-line interface.

Summaries go to stdout, artifacts to the files named by ``--output``.

Exit codes: 0 success, 2 validation failure, 3 hypothesis violation,
4 structural anomaly.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io
from .borsuk import OddMapSpec, solve, sweep
from .complex import validate_symmetry
from .errors import HypothesisError, LabelingError, StructuralAnomaly, ValidationError
from .flag import validate_flag
from .generators import KINDS, GeneratorSpec, generate, octahedral
from .labeling import Labeling, random_labeling
from .oracle import build_graph, verify_path
from .pathfinder import Mode, PathGraph, check_hypotheses, run, trace_antipode

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_HYPOTHESIS = 3
EXIT_ANOMALY = 4


def _load_validated(path):
    cx, flag = io.load_complex(path)
    problems = validate_symmetry(cx).violations
    if flag is None:
        problems.append("complex file has no flag")
    elif not problems:
        problems += validate_flag(cx, flag).messages()
    if problems:
        raise ValidationError(f"{path}: invalid complex or flag", problems)
    return cx, flag


def _labeling(args, cx, default_forbid: bool) -> Labeling:
    if args.labels:
        return io.labeling_from_json(cx, io.read_json(args.labels))
    if args.random is None:
        raise ValidationError("give --labels FILE or --random M")
    if default_forbid and args.random <= cx.n:
        raise HypothesisError(
            "fan hypotheses violated",
            [f"label bound m={args.random} <= n={cx.n}: Fan's lemma forces m >= n+1"],
        )
    return random_labeling(cx, args.random, seed=args.seed, forbid_complementary=default_forbid)


def _fmt(simplex, labels) -> str:
    return f"{list(simplex)} labels {list(labels)}"


def cmd_gen(args) -> int:
    spec = GeneratorSpec(args.kind, args.dim if args.kind == "octahedral" else 2, args.refine)
    cx, flag = generate(spec)
    sym = validate_symmetry(cx)
    fl = validate_flag(cx, flag)
    if not (sym.ok and fl.ok):
        raise ValidationError("generated complex failed validation", sym.violations + fl.messages())
    io.write_json(args.output, io.complex_to_json(cx, flag))
    print(
        f"{spec.kind} S^{cx.n}, {spec.refinements} refinement(s): "
        f"{cx.num_vertices} vertices, {len(cx.maximal_simplices)} maximal simplices -> {args.output}"
    )
    if sym.has_antipodal_pair:
        print(f"note: {len(sym.antipodal_pair_simplices)} simplices contain an antipodal vertex pair")
    return EXIT_OK


def cmd_label(args) -> int:
    cx, _ = _load_validated(args.input)
    lab = random_labeling(cx, args.m, seed=args.seed, forbid_complementary=args.forbid_complementary)
    io.write_json(args.output, io.labeling_to_json(lab))
    print(f"labeling with m={lab.m}, seed={args.seed} -> {args.output}")
    return EXIT_OK


def cmd_fan(args) -> int:
    cx, flag = _load_validated(args.input)
    lab = _labeling(args, cx, default_forbid=True)
    trace = run(cx, flag, lab, Mode.FAN)
    if args.output:
        io.write_json(args.output, trace.to_json())
    graph = PathGraph(cx, flag, lab, Mode.FAN)
    mirror = trace_antipode(graph, trace)
    w, node = trace.witness, trace.nodes[-1]
    sign = "+" if node.cls.sign > 0 else "-"
    print(f"path length: {len(trace.nodes)}")
    print(f"terminal: {_fmt(w.simplex, w.labels)} ({sign} alternating {cx.n}-simplex)")
    print(f"antipodal witness: {_fmt(mirror.witness.simplex, mirror.witness.labels)} "
          f"({'-' if sign == '+' else '+'} alternating)")
    return EXIT_OK


def cmd_tucker(args) -> int:
    cx, flag = _load_validated(args.input)
    lab = _labeling(args, cx, default_forbid=False)
    trace = run(cx, flag, lab, Mode.TUCKER)
    if args.output:
        io.write_json(args.output, trace.to_json())
    w = trace.witness
    print(f"termination: {trace.termination.value}{' (short-circuit)' if trace.short_circuit else ''}")
    print(f"path length: {len(trace.nodes)}")
    if w.edge is not None:
        print(f"complementary edge: {list(w.edge)} labels {[lab[v] for v in w.edge]}")
    print(f"terminal simplex: {_fmt(w.simplex, w.labels)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    cx, flag = _load_validated(args.input)
    lab = io.labeling_from_json(cx, io.read_json(args.labels))
    mode = Mode(args.mode)
    problems = check_hypotheses(cx, lab, mode)
    if problems:
        raise HypothesisError(f"{mode.value} hypotheses violated", problems)
    report = build_graph(cx, flag, lab, mode)
    doc = report.to_json(full=args.full)
    trace = None
    try:
        trace = run(cx, flag, lab, mode, check=False)
        doc["trace_matches_oracle"] = trace.short_circuit or verify_path(report, trace)
        doc["termination"] = trace.termination.value
    except StructuralAnomaly as exc:
        doc["trace_matches_oracle"] = False
        doc["pathfinder_error"] = str(exc)
    if args.output:
        io.write_json(args.output, doc)
    for name, ok in doc["claims"].items():
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    print(f"{'PASS' if doc['trace_matches_oracle'] else 'FAIL'} trace_matches_oracle")
    print(f"alternating {cx.n}-simplices: +{report.positive_count} / -{report.negative_count}; "
          f"nodes {len(report.nodes)}, endpoints {report.endpoint_count}")
    if args.figure:
        from .plotting import plot_oracle_report, plot_trace_s2

        plot_oracle_report(report, args.figure)
        print(f"figure -> {args.figure}")
        if trace is not None and cx.n == 2 and cx.coords is not None:
            p = Path(args.figure)
            trace_path = p.with_name(p.stem + "_trace" + p.suffix)
            plot_trace_s2(cx, trace, trace_path)
            print(f"figure -> {trace_path}")
    return EXIT_OK


def cmd_borsuk(args) -> int:
    if args.input:
        cx, flag = _load_validated(args.input)
    else:
        cx, flag = octahedral(args.dim)
    if args.samples:
        spec = OddMapSpec(samples=io.samples_from_json(io.read_json(args.samples)))
    else:
        if not args.matrix:
            raise ValidationError("give --matrix or --samples")
        values = np.array(args.matrix, dtype=float)
        if values.size != cx.n * (cx.n + 1):
            raise ValidationError(
                f"--matrix needs {cx.n * (cx.n + 1)} entries for S^{cx.n}, got {values.size}"
            )
        spec = OddMapSpec.linear(values.reshape(cx.n, cx.n + 1))
    witness = solve(cx, flag, spec, args.refine)
    if args.out:
        io.write_json(args.out, witness.to_json())
    print(f"complementary edge {list(witness.edge)} labels {list(witness.labels)}")
    if witness.point is not None:
        print(f"point {np.round(witness.point, 6).tolist()}")
    print(f"residual {witness.residual:.6g}"
          + (f" <= bound {witness.bound:.6g}" if witness.bound is not None else ""))
    if args.figure:
        from .plotting import plot_borsuk_sweep

        plot_borsuk_sweep(sweep(cx, flag, spec, args.refine), args.figure)
        print(f"figure -> {args.figure}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanlemma",
        description="Path-following solvers for Fan's and Tucker's lemmas on flagged symmetric spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated complex+flag file")
    p.add_argument("--kind", choices=KINDS, default="octahedral")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--refine", type=int, default=0)
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("label", help="write a random anti-symmetric labeling")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--forbid-complementary", action="store_true")
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_label)

    for name, func, text in (
        ("fan", cmd_fan, "locate an alternating n-simplex"),
        ("tucker", cmd_tucker, "locate a complementary edge"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--input", "-i", required=True)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--labels")
        src.add_argument("--random", type=int, metavar="M")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", "-o")
        p.add_argument("--format", choices=["json"], default="json")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="brute-force oracle report and cross-check")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="fan")
    p.add_argument("--output", "-o")
    p.add_argument("--full", action="store_true", help="include edges and paths in the report")
    p.add_argument("--figure", help="also render the report to this image file")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("borsuk", help="approximate antipodal zero of an odd map")
    p.add_argument("--matrix", type=float, nargs="+", help="row-major entries of A")
    p.add_argument("--samples", help="sample-table JSON instead of a matrix")
    p.add_argument("--input", "-i", help="complex file (default: octahedral S^dim)")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--refine", type=int, default=0)
    p.add_argument("--out", "--output", dest="out")
    p.add_argument("--figure", help="plot residual and bounds over 0..refine refinements")
    p.set_defaults(func=cmd_borsuk)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, LabelingError, ValueError) as exc:
        code, err = EXIT_VALIDATION, exc
    except HypothesisError as exc:
        code, err = EXIT_HYPOTHESIS, exc
    except StructuralAnomaly as exc:
        code, err = EXIT_ANOMALY, exc
    print(f"error: {err}", file=sys.stderr)
    for v in getattr(err, "violations", [])[:50]:
        print(f"  {v}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
