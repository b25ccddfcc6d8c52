"""The `verify` command-line runner.

    verify [--parity odd|even|both] [--n 1,2] [--d 2,3]
           [--suite name,name,...] [--format text|json] [--seed N]
           [--out FILE] [--timings]
    verify list-suites

Runs the selected suites over the Cartesian parameter range and emits a
deterministic report.  Exit status: 0 all checks pass, 1 at least one
verification failed, 2 usage error.  `--timings` adds per-suite elapsed
times; it is off by default so reports are byte-identical across runs
with the same configuration and seed.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from .report import SuiteReport, assemble, render_json, render_text
from .suites import REGISTRY, SUITE_NAMES, list_suites_text

DEFAULT_N = (1, 2, 3)
DEFAULT_D = (2, 3)


def _int_list(text: str) -> list:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("ranges must be nonempty positive integers")
    return values


def _suite_list(text: str) -> list:
    names = [part.strip() for part in text.split(",") if part.strip()]
    unknown = [name for name in names if name not in REGISTRY]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown suites {unknown}; available: {', '.join(SUITE_NAMES)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Run exact verification suites for the fixed-point subalgebra "
                    "constructions at chosen small ranks.")
    parser.add_argument("command", nargs="?", default="run", choices=("run", "list-suites"),
                        help="'list-suites' prints the suite table and exits")
    parser.add_argument("--parity", default="both", choices=("odd", "even", "both"))
    parser.add_argument("--n", type=_int_list, default=list(DEFAULT_N),
                        metavar="N1,N2,...", help="ranks to test (default 1,2,3)")
    parser.add_argument("--d", type=_int_list, default=list(DEFAULT_D),
                        metavar="D1,D2,...", help="tensor powers for the d-dependent suites (default 2,3)")
    parser.add_argument("--suite", type=_suite_list, default=list(SUITE_NAMES),
                        metavar="NAME,...", help="subset of suites (default: all)")
    parser.add_argument("--format", default="text", choices=("text", "json"))
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the randomized property sweeps (default 0)")
    parser.add_argument("--out", default=None, metavar="FILE",
                        help="write the report here instead of stdout")
    parser.add_argument("--timings", action="store_true",
                        help="include elapsed times (breaks byte-for-byte determinism)")
    return parser


def run_config(parities, n_range, d_range, suite_names, seed: int, timings: bool = False) -> list:
    reports = []
    for name in suite_names:
        spec = REGISTRY[name]
        for parity in parities:
            for n in n_range:
                d_values = d_range if spec.needs_d else [0]
                for d in d_values:
                    rng = random.Random((seed, name, parity, n, d).__repr__())
                    started = time.perf_counter()
                    checks = spec.run(parity, n, d, rng)
                    elapsed = int((time.perf_counter() - started) * 1000)
                    params = {"parity": parity, "n": n}
                    if spec.needs_d:
                        params["d"] = d
                    reports.append(SuiteReport(name, params, checks,
                                               elapsed_ms=elapsed if timings else None))
    return reports


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list-suites":
        sys.stdout.write(list_suites_text())
        return 0
    parities = ("odd", "even") if args.parity == "both" else (args.parity,)
    config = {
        "parity": args.parity,
        "n": args.n,
        "d": args.d,
        "suites": args.suite,
        "seed": args.seed,
    }
    reports = run_config(parities, args.n, args.d, args.suite, args.seed, args.timings)
    document = assemble(config, reports)
    rendered = render_json(document) if args.format == "json" else render_text(document)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0 if document["aggregate"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
