"""Command line entry point.

    mproj run --example {1|2|external} --nx N [--ny N] --train K --test K --m 4,6,8 \\
              --out table.csv [--format csv|json] [--strict] [--no-timing]
    mproj table {1|2|3|4} [--out PATH] [--format csv|json] [--strict]
    mproj verify [--seed S] [--count C]
"""

import argparse
import sys

from . import verify
from .errors import MprojError
from .experiment import CSV_HEADER, ExperimentConfig, emit_table, run_experiment, table_config


def _m_list(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _print_reports(reports, out=None):
    out = out or sys.stdout
    print("  ".join(f"{h:>12}" for h in CSV_HEADER), file=out)
    for r in reports:
        if not r.ok:
            print(f"{r.m:>12}  FAILED: {r.failure}", file=out)
            continue
        cells = [r.m, r.avg_err, r.b_thm1, r.b_thm2, r.b_qdeim, r.sigma_min, r.n, r.n_samples, r.runtime_ms]
        print("  ".join(f"{c:>12.6g}" if isinstance(c, float) else f"{c:>12}" for c in cells), file=out)


def _finish(cfg, reports, strict):
    if cfg.output:
        emit_table(reports, cfg.format, cfg.output)
    _print_reports(reports)
    failed = [r for r in reports if not r.ok]
    for r in failed:
        print(f"m={r.m}: {r.failure}", file=sys.stderr)
    return 1 if (strict and failed) else 0


def build_parser():
    parser = argparse.ArgumentParser(prog="mproj", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a custom sweep over m")
    run.add_argument("--example", choices=["1", "2", "external"], required=True)
    run.add_argument("--nx", type=int, default=0)
    run.add_argument("--ny", type=int)
    run.add_argument("--train", type=int, default=0, help="number of training parameters")
    run.add_argument("--test", type=int, default=0, help="number of test parameters")
    run.add_argument("--train-file", help="snapshot CSV (external example)")
    run.add_argument("--test-file", help="snapshot CSV (external example)")
    run.add_argument("--m", type=_m_list, required=True, help="comma-separated interpolation counts")
    run.add_argument("--out")
    run.add_argument("--format", choices=["csv", "json"], default="csv")
    run.add_argument("--strict", action="store_true", help="exit nonzero if any row failed")
    run.add_argument("--no-timing", action="store_true", help="write runtime_ms as 0 (bit-stable output)")

    table = sub.add_parser("table", help="reproduce one of the benchmark tables")
    table.add_argument("number", type=int, choices=[1, 2, 3, 4])
    table.add_argument("--out")
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--strict", action="store_true")
    table.add_argument("--no-timing", action="store_true")

    ver = sub.add_parser("verify", help="randomized identity and bound-validity checks")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--count", type=int, default=250)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return 0 if verify.main(seed=args.seed, count=args.count) else 1
        if args.command == "table":
            cfg = table_config(args.number, output=args.out, format=args.format, timing=not args.no_timing)
        else:
            cfg = ExperimentConfig(
                example=args.example,
                nx=args.nx,
                ny=args.ny,
                n_train=args.train,
                n_test=args.test,
                m_list=args.m,
                output=args.out,
                format=args.format,
                train_file=args.train_file,
                test_file=args.test_file,
                timing=not args.no_timing,
            )
        return _finish(cfg, run_experiment(cfg), args.strict)
    except (MprojError, OSError) as exc:
        print(f"mproj: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
