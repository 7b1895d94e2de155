"""Command-line interface.

Subcommands:

* ``evaluate <qbaf.json> --semantics NAME``: final strengths of every
  argument, undefined ones rendered as "undefined" (null in JSON).
* ``explain <scenario.json> [--kind ssi|csi|nsi | --all-kinds]``: minimal
  explanation families, printed as sorted set lists such as ``{{a},{e}}``.
* ``aa <scenario.json>``: the same over attack-only frameworks under the
  stable acceptance semantics.
* ``bench``: timing study with CSV output.

``--json`` switches every subcommand to machine-readable output.  Exit
codes: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from .change import strength_consistent
from .errors import QbafxError
from .io import load_aa_scenario, load_qbaf, load_scenario
from .search import KINDS, explain
from .semantics import CANONICAL_NAMES
from .stable import acceptance_strengths
from . import semantics as semantics_mod

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def format_strength(value) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, float):
        return str(int(value)) if value.is_integer() else repr(value)
    return str(value)


def format_family(sets) -> str:
    """Render a family of name lists as ``{{a},{e}}`` (already sorted)."""
    return "{" + ",".join("{" + ",".join(s) + "}" for s in sets) + "}"


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _emit(args, text_lines, payload):
    if args.json:
        print(_dump(payload))
    else:
        for line in text_lines:
            print(line)


def _cmd_evaluate(args) -> int:
    g = load_qbaf(args.qbaf)
    sigma = semantics_mod.evaluate(g, args.semantics)
    ordered = sorted(sigma)
    text = " ".join(f"{a}:{format_strength(sigma[a])}" for a in ordered)
    _emit(args, [text], {"strengths": {a: sigma[a] for a in ordered}})
    return EXIT_OK


def _explain_output(args, scenario) -> int:
    kinds = list(KINDS) if (args.all_kinds or not args.kind) else [args.kind]
    consistent = strength_consistent(scenario)
    lines = []
    payload = {"consistent": consistent}
    checked = rejected = 0
    for kind in kinds:
        family = explain(scenario, kind, use_oracle=args.oracle)
        listed = family.sorted_sets()
        payload[kind] = listed
        checked += family.candidates_checked
        rejected += family.cyclic_rejections
        prefix = f"{kind}: " if len(kinds) > 1 else ""
        lines.append(prefix + format_family(listed))
    if consistent:
        lines.append("note: the topics are strength-consistent; only the empty explanation applies")
    payload["candidates_checked"] = checked
    payload["cyclic_rejections"] = rejected
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_explain(args) -> int:
    scenario = load_scenario(
        args.scenario,
        semantics=args.semantics,
        qbaf_class=getattr(args, "qbaf_class", None),
        mode=args.mode,
        epsilon=args.epsilon,
    )
    return _explain_output(args, scenario)


def _cmd_aa(args) -> int:
    scenario = load_aa_scenario(args.scenario, mode=args.mode)
    if args.json:
        # Statuses are part of the machine-readable report.
        before = acceptance_strengths(scenario.before)
        after = acceptance_strengths(scenario.after)
        kinds = list(KINDS) if (args.all_kinds or not args.kind) else [args.kind]
        payload = {
            "consistent": strength_consistent(scenario),
            "statuses_before": dict(sorted(before.items())),
            "statuses_after": dict(sorted(after.items())),
        }
        for kind in kinds:
            payload[kind] = explain(scenario, kind, use_oracle=args.oracle).sorted_sets()
        print(_dump(payload))
        return EXIT_OK
    return _explain_output(args, scenario)


def _parse_sizes(raw: str):
    try:
        sizes = tuple(int(part) for part in raw.split(",") if part)
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be a comma-separated list of integers")
    if any(size < 1 for size in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def _cmd_bench(args) -> int:
    kinds = tuple(args.kinds.split(",")) if args.kinds else bench_mod.BENCH_KINDS
    for kind in kinds:
        if kind not in bench_mod.BENCH_KINDS:
            raise QbafxError(f"unknown benchmark kind {kind!r}")
    config = bench_mod.BenchConfig(
        sizes=args.sizes,
        kinds=kinds,
        samples=args.samples,
        eval_degree=args.degree,
        explain_degree=args.degree,
        change_fraction=args.change_fraction,
        seed=args.seed,
    )
    result = bench_mod.run_benchmark(config)
    if args.out:
        bench_mod.write_benchmark(result, args.out, args.plot)
    summary = {
        "rows": len(result.rows),
        "queries": result.queries,
        "cyclic_rejection_fraction": result.cyclic_fraction,
    }
    if args.json:
        print(_dump(summary))
    else:
        if not args.out:
            print(result.to_csv(), end="")
        print(
            f"# {result.queries} explanation queries, "
            f"cyclic-reversal rejection fraction {result.cyclic_fraction:.4%}",
            file=sys.stderr,
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qbafx",
        description="Evaluate gradual semantics over QBAFs and explain strength-order changes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_eval = sub.add_parser("evaluate", help="final strengths of one graph")
    p_eval.add_argument("qbaf", help="QBAF JSON file")
    p_eval.add_argument("--semantics", choices=CANONICAL_NAMES, default="naive-sum")
    add_common(p_eval)

    def add_explain_flags(p, with_semantics):
        p.add_argument("scenario", help="scenario JSON file")
        p.add_argument("--kind", choices=KINDS, default=None)
        p.add_argument("--all-kinds", action="store_true", help="report all three kinds")
        p.add_argument("--oracle", action="store_true", help="definition-literal enumeration")
        p.add_argument("--mode", choices=("strict", "weak"), default=None)
        if with_semantics:
            p.add_argument("--semantics", choices=CANONICAL_NAMES, default=None)
            p.add_argument("--class", dest="qbaf_class", choices=("acyclic", "all"), default=None)
            p.add_argument("--epsilon", type=float, default=None)
        add_common(p)

    p_explain = sub.add_parser("explain", help="explanations for a strength-order change")
    add_explain_flags(p_explain, with_semantics=True)

    p_aa = sub.add_parser("aa", help="explanations for an acceptance-status change")
    add_explain_flags(p_aa, with_semantics=False)

    p_bench = sub.add_parser("bench", help="timing study")
    p_bench.add_argument("--sizes", type=_parse_sizes, default=(5, 10, 20))
    p_bench.add_argument("--degree", type=float, default=3.0,
                         help="average outgoing edges per argument")
    p_bench.add_argument("--change-fraction", type=float, default=0.2)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--samples", type=int, default=50)
    p_bench.add_argument("--kinds", default=None, help="comma list from eval,ssi,csi,nsi")
    p_bench.add_argument("--out", default=None, help="CSV output path")
    p_bench.add_argument("--plot", default=None, help="optional plot image path")
    add_common(p_bench)

    return parser


_COMMANDS = {
    "evaluate": _cmd_evaluate,
    "explain": _cmd_explain,
    "aa": _cmd_aa,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except QbafxError as exc:
        if getattr(args, "json", False):
            print(_dump({"error": {"code": exc.code, "message": str(exc)}}), file=sys.stderr)
        else:
            print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
