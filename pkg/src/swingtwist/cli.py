"""Command line entry point: ``swingtwist decompose|validate|bench``.

Exit codes: 0 success, 1 invariant failure, 2 usage or config error,
3 the one-shot decomposition does not exist.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .bench import BenchConfig, run_benchmark
from .cl3 import Spinor, Vector3
from .decomposition import Representation, decompose
from .errors import NotDecomposable, SwingTwistError
from .validation import ConfigError, TrialConfig, run_validation

EXIT_OK = 0
EXIT_INVARIANT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NOT_DECOMPOSABLE = 3


def _floats(count):
    def parse(text):
        try:
            values = [float(x) for x in text.split(",")]
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {text!r}")
        if len(values) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {text!r}")
        return values
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swingtwist", description="Swing-twist decomposition of Cl(3,0) spinors.")
    sub = parser.add_subparsers(dest="command", required=True)

    dec = sub.add_parser("decompose", help="decompose one spinor about one axis")
    dec.add_argument("--spinor", required=True, type=_floats(4), metavar="a,b,c,d",
                     help="a + b e12 + c e23 + d e31 (use --spinor=-1,0,0,0 for a leading minus)")
    dec.add_argument("--axis", required=True, type=_floats(3), metavar="x,y,z")
    dec.add_argument("--rep", choices=["sat", "tas"], default="sat")
    dec.add_argument("--normalize", action="store_true", help="normalize the spinor before decomposing")
    dec.add_argument("--json", action="store_true", help="print JSON instead of text")

    val = sub.add_parser("validate", help="randomized invariant campaign")
    val.add_argument("--trials", type=int, default=1000)
    val.add_argument("--seed", type=int, default=0)
    val.add_argument("--tol", type=float, default=1e-12)
    val.add_argument("--degenerate", type=float, default=0.0, metavar="F",
                     help="fraction of adversarial near-degenerate trials")
    val.add_argument("--rep", choices=["sat", "tas", "both"], default="both")
    val.add_argument("--workers", type=int, default=1)
    val.add_argument("--json", metavar="out.json", help="write the JSON report here")

    ben = sub.add_parser("bench", help="micro-benchmark against the quaternion baselines")
    ben.add_argument("--iters", type=int, default=1_000_000)
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--batch", type=int, default=10_000)
    ben.add_argument("--csv", metavar="out.csv", help="write the CSV report here")
    ben.add_argument("--json", metavar="out.json", help="write the JSON report here")
    return parser


def _fmt(values) -> str:
    return " ".join(f"{x: .17g}" for x in values)


def cmd_decompose(args) -> int:
    a, b, c, d = args.spinor
    if args.normalize:
        n = math.sqrt(a * a + b * b + c * c + d * d)
        if not n > 0.0:
            print("error: cannot normalize a zero spinor", file=sys.stderr)
            return EXIT_USAGE
        a, b, c, d = a / n, b / n, c / n, d / n
    s, v = Spinor(a, b, c, d), Vector3(*args.axis)
    try:
        st = decompose(s, v, Representation(args.rep))
    except NotDecomposable as exc:
        print(f"not decomposable: {exc}", file=sys.stderr)
        return EXIT_NOT_DECOMPOSABLE
    except SwingTwistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps({"rep": st.rep.value, "swing": list(st.swing), "twist": list(st.twist)}))
    else:
        order = "s = swing * twist" if st.rep is Representation.SAT else "s = twist * swing"
        print(f"representation: {st.rep.value} ({order})")
        print(f"swing: {_fmt(st.swing)}")
        print(f"twist: {_fmt(st.twist)}")
    return EXIT_OK


def cmd_validate(args) -> int:
    config = TrialConfig(
        trials=args.trials,
        seed=args.seed,
        tolerance=args.tol,
        representation=None if args.rep == "both" else args.rep,
        degenerate_fraction=args.degenerate,
    )
    try:
        report = run_validation(config, workers=args.workers)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    width = max(len(p.name) for p in report.properties)
    print(f"{'property':<{width}}  {'trials':>8}  {'failures':>8}  {'max_error':>10}")
    for p in report.properties:
        print(f"{p.name:<{width}}  {p.trials:>8}  {p.failures:>8}  {p.max_error:>10.3e}")
    print(f"not decomposable: {report.counts['not_decomposable']} "
          f"(degenerate trials: {report.counts['degenerate_trials']})")
    print(f"{'PASS' if report.passed else 'FAIL'} in {report.timing['wall_clock_s']:.2f} s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK if report.passed else EXIT_INVARIANT_FAILURE


def cmd_bench(args) -> int:
    config = BenchConfig(iters=args.iters, seed=args.seed, batch=args.batch)
    try:
        config.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = run_benchmark(config)
    print(f"{'method':<16}  {'median_ns':>10}  {'p95_ns':>10}  {'speedup_vs_direct':>17}")
    for m in report.methods:
        print(f"{m.method:<16}  {m.median_ns:>10.1f}  {m.p95_ns:>10.1f}  {m.speedup_vs_direct:>17.3f}")
    print(f"iterations: {report.iterations}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(report.to_csv())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"decompose": cmd_decompose, "validate": cmd_validate, "bench": cmd_bench}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
