"""Command-line entry point: ``listaccess {gen,run,compare,chart,oracle}``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algorithms import (
    AlgorithmId,
    InstanceTooLarge,
    run,
    run_bruteforce_oracle,
    run_imtf,
    run_mtf,
    run_static,
)
from .charts import SERIES
from .core import CostModel, ListConfiguration, SymbolNotInList
from .datagen import (
    NUMERIC_BASES,
    GenSpec,
    build_list,
    gen_sequence,
    locality_stats,
    parse_sequence,
    read_sequence,
    write_sequence,
)
from .experiments import (
    ExperimentSpec,
    emit_chart,
    emit_csv,
    emit_summary_csv,
    load_spec,
    parse_csv,
    run_experiment,
    run_pair,
    summarize,
    table1_spec,
    table2_spec,
)


class CommandError(Exception):
    pass


def _add_family(p):
    p.add_argument("--family", choices=["alpha", "numeric"], default="alpha",
                   help="alphabet used to read or generate sequences (default: alpha)")
    p.add_argument("--base", type=int, choices=NUMERIC_BASES,
                   help="digit base for the numeric family")


def _add_model(p):
    p.add_argument("--model", choices=[m.value for m in CostModel], default="full",
                   help="cost model (default: full)")


def _add_list(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", dest="list_text",
                   help="initial list given inline, one symbol per character")
    g.add_argument("--list-file", help="initial list read from a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="listaccess",
                                     description="MTF and lookahead IMTF list accessing experiments")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded request sequence file")
    _add_family(p)
    p.add_argument("--n", type=int, required=True, help="sequence length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output sequence file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="run one algorithm on a sequence file")
    p.add_argument("--alg", choices=[a.value for a in AlgorithmId], required=True)
    p.add_argument("--seq", required=True, help="sequence file")
    _add_list(p)
    _add_family(p)
    _add_model(p)
    p.add_argument("--trace", action="store_true", help="print the per-access costs")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", help="compare MTF and IMTF, writing CSV and charts")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", help="experiment spec file, one row per line")
    src.add_argument("--table", type=int, choices=[1, 2], help="regenerate a published table shape")
    src.add_argument("--seq", help="single sequence file")
    _add_list(p)
    _add_family(p)
    _add_model(p)
    p.add_argument("--seed", type=int, default=0, help="base seed for --table (default: 0)")
    p.add_argument("--trials", type=int, default=1, help="seeds per generated row (default: 1)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default: 1)")
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--summary-out", help="per-cell mean/stddev CSV path")
    p.add_argument("--chart", help="SVG chart output path")
    p.add_argument("--chart-kind", choices=["line", "bar"], default="line")
    p.add_argument("--series", nargs="+", choices=SERIES, default=["c_mtf", "c_imtf"])
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("chart", help="draw an SVG chart from a results CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--kind", choices=["line", "bar"], default="line")
    p.add_argument("--series", nargs="+", choices=SERIES, default=["c_mtf", "c_imtf"])
    p.add_argument("--title")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_chart)

    p = sub.add_parser("oracle", help="exhaustive move/stay optimum next to MTF, IMTF and static")
    p.add_argument("--seq", required=True)
    _add_list(p)
    _add_family(p)
    _add_model(p)
    p.add_argument("--max-n", type=int, help="oracle size limit (default: $LISTACCESS_ORACLE_MAX_N or 16)")
    p.set_defaults(func=cmd_oracle)
    return parser


def _numeric_base(args):
    if args.family == "numeric" and args.base is None:
        raise CommandError("--base is required with --family numeric")
    return args.base if args.family == "numeric" else None


def _load_inputs(args):
    base = _numeric_base(args)
    loaded = read_sequence(args.seq, args.family, base)
    if loaded.skipped:
        print(f"skipped {loaded.skipped} characters outside the alphabet", file=sys.stderr)
    seq = loaded.sequence
    if args.list_text is not None:
        lst = ListConfiguration(parse_sequence(args.list_text, args.family, base).sequence)
    elif args.list_file is not None:
        lst = ListConfiguration(read_sequence(args.list_file, args.family, base).sequence)
    else:
        lst = build_list(seq)
    return lst, seq


def cmd_gen(args) -> int:
    spec = GenSpec(args.family, args.n, args.seed, _numeric_base(args))
    seq = gen_sequence(spec)
    write_sequence(seq, args.out)
    print(f"N={len(seq)} distinct={locality_stats(seq).distinct}")
    return 0


def cmd_run(args) -> int:
    lst, seq = _load_inputs(args)
    report = run(args.alg, lst, seq, CostModel(args.model))
    print(f"algorithm={args.alg} model={args.model} N={len(seq)} L={len(lst)}")
    print(f"total={report.total_cost} moves={report.move_count} paid_exchanges={report.paid_exchange_count}")
    if args.trace:
        print("trace=" + "+".join(map(str, report.per_access_costs)))
    return 0


def cmd_compare(args) -> int:
    model = CostModel(args.model)
    if args.seq is not None:
        lst, seq = _load_inputs(args)
        rows = [run_pair(lst, seq, model, family=Path(args.seq).name)]
    else:
        if args.table == 1:
            spec = table1_spec(args.seed, args.trials, model)
        elif args.table == 2:
            spec = table2_spec(args.seed, args.trials, model)
        else:
            spec = ExperimentSpec(load_spec(args.spec), model, args.trials)
        spec.jobs = args.jobs
        rows = run_experiment(spec)

    text = emit_csv(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    cells = summarize(rows)
    if args.summary_out:
        Path(args.summary_out).write_text(emit_summary_csv(cells), encoding="utf-8")

    if len(rows) == 1:
        r = rows[0]
        print(f"N={r.n} L={r.l} C_MTF={r.c_mtf} C_IMTF={r.c_imtf} g = {r.g_text}%")
    else:
        # CSV owns stdout unless it went to a file
        table_out = sys.stdout if args.out else sys.stderr
        if not args.out:
            sys.stdout.write(text)
        multi = any(c.trials > 1 for c in cells)
        header = f"{'family':>10} {'N':>5} {'L':>6} {'C_MTF':>9} {'C_IMTF':>9} {'g%':>7}"
        print(header + ("  mean ± sd over trials" if multi else ""), file=table_out)
        for c in cells:
            line = f"{c.family:>10} {c.n:>5} {c.l:>6.1f} {c.c_mtf:>9.1f} {c.c_imtf:>9.1f} {c.g:>7.2f}"
            print(line + (f" ± {c.g_std:.2f}" if multi else ""), file=table_out)

    if args.chart:
        plotted = cells if any(c.trials > 1 for c in cells) else rows
        Path(args.chart).write_text(emit_chart(plotted, args.chart_kind, args.series), encoding="utf-8")
    return 0


def cmd_chart(args) -> int:
    rows = parse_csv(Path(args.csv).read_text(encoding="utf-8"))
    Path(args.out).write_text(emit_chart(rows, args.kind, args.series, args.title), encoding="utf-8")
    return 0


def cmd_oracle(args) -> int:
    lst, seq = _load_inputs(args)
    model = CostModel(args.model)
    oracle = run_bruteforce_oracle(lst, seq, model, args.max_n)
    mtf = run_mtf(lst, seq, model)
    imtf = run_imtf(lst, seq, model)
    static = run_static(lst, seq, model)
    print(f"oracle={oracle.total_cost} mtf={mtf.total_cost} imtf={imtf.total_cost} static={static.total_cost}")
    if oracle.total_cost > min(mtf.total_cost, imtf.total_cost, static.total_cost):
        print("dominance check FAILED", file=sys.stderr)
        return 3
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, SymbolNotInList, InstanceTooLarge, CommandError) as exc:
        name = type(exc).__name__
        print(f"listaccess: error: {name}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
