"""Command-line front end: dataset generation, algorithm runs, oracle
comparison and CSV benchmark reports.

Dataset text format: first line "n m", then n whitespace-separated rows
of m decimal reals, written with 17 significant digits so files
round-trip bit-exactly.

CSV schema (fixed column order, header always printed):

  algorithm,instance,n,m,seed,t,start,estimate,oracle,abs_error,ratio,
  time_ms,time_ms_min,distance_evaluations

`oracle`, `abs_error` and `ratio` are empty when no oracle is run.
All wall times are milliseconds; `time_ms` is the median of the
requested repeats, `time_ms_min` the minimum.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .algorithms import (
    RunConfig,
    c_star_estimate_2d,
    double_sweep,
    iterative_approx,
    randomized_approx,
)
from .exact import brute_force_diameter, rotating_calipers_diameter_2d
from .generators import KINDS, WORST_CASE_5, GeneratorSpec, generate
from .pointset import PointSet

ALGORITHMS = (
    "exact-bf",
    "exact-rc2d",
    "double-sweep",
    "cstar-2d",
    "iterative",
    "randomized",
)

CSV_HEADER = (
    "algorithm,instance,n,m,seed,t,start,estimate,oracle,abs_error,ratio,"
    "time_ms,time_ms_min,distance_evaluations"
)

# Above this size a 2D oracle run switches from brute force to rotating
# calipers to keep the comparison cost bounded.
_BRUTE_ORACLE_LIMIT_2D = 2048


class DatasetFormatError(ValueError):
    """Malformed dataset file; message carries the offending line number."""


def load_points(path: str) -> PointSet:
    """Parse a dataset file into a PointSet."""
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise DatasetFormatError(f"{path}:1: empty file, expected 'n m' header")
    header = lines[0].split()
    if len(header) != 2:
        raise DatasetFormatError(f"{path}:1: header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise DatasetFormatError(
            f"{path}:1: header must be two integers, got {lines[0]!r}"
        ) from None
    if n < 1 or m < 1:
        raise DatasetFormatError(f"{path}:1: need n >= 1 and m >= 1, got n={n} m={m}")
    body = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != n:
        raise DatasetFormatError(
            f"{path}:{len(lines)}: header promises {n} rows, found {len(body)}"
        )
    rows = np.empty((n, m), dtype=np.float64)
    for i, (lineno, line) in enumerate(body):
        fields = line.split()
        if len(fields) != m:
            raise DatasetFormatError(
                f"{path}:{lineno}: expected {m} coordinates, got {len(fields)}"
            )
        try:
            rows[i] = [float(f) for f in fields]
        except ValueError:
            raise DatasetFormatError(
                f"{path}:{lineno}: non-numeric coordinate in {line!r}"
            ) from None
        if not np.isfinite(rows[i]).all():
            raise DatasetFormatError(f"{path}:{lineno}: non-finite coordinate")
    return PointSet(rows)


def save_points(point_set: PointSet, path: str) -> None:
    """Write a dataset file; inverse of `load_points`."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{point_set.n} {point_set.m}\n")
        for row in point_set.coords:
            fh.write(" ".join("%.17g" % v for v in row) + "\n")


def _run_algorithm(
    name: str, point_set: PointSet, t: int, start: int, seed: Optional[int]
) -> Tuple[float, int]:
    """Run one algorithm; returns (estimate, distance_evaluations)."""
    if point_set.n == 1:
        return 0.0, 0  # singleton shortcut: diameter is 0 by definition
    n = point_set.n
    if name == "exact-bf":
        res = brute_force_diameter(point_set)
        return res.diameter, res.comparisons
    if name == "exact-rc2d":
        res = rotating_calipers_diameter_2d(point_set)
        return res.diameter, res.comparisons
    if name == "double-sweep":
        return double_sweep(point_set, start).lower, 2 * n
    if name == "cstar-2d":
        return c_star_estimate_2d(point_set, start).lower, 4 * n
    if name == "iterative":
        est = iterative_approx(point_set, RunConfig(t=t, start_index=start))
        return est.lower, est.distance_evaluations
    if name == "randomized":
        est = randomized_approx(
            point_set, RunConfig(t=t, start_index=start, seed=seed)
        )
        return est.lower, est.distance_evaluations
    raise ValueError(f"unknown algorithm {name!r}")


def _oracle_value(point_set: PointSet) -> float:
    if point_set.n == 1:
        return 0.0
    if point_set.m == 2 and point_set.n > _BRUTE_ORACLE_LIMIT_2D:
        return rotating_calipers_diameter_2d(point_set).diameter
    return brute_force_diameter(point_set).diameter


def _timed(fn, repeats: int):
    """Run `fn` `repeats` times; returns (first result, median_ms, min_ms)."""
    result = None
    times = []
    for i in range(max(1, repeats)):
        t0 = time.perf_counter()
        out = fn()
        times.append((time.perf_counter() - t0) * 1000.0)
        if i == 0:
            result = out
    return result, statistics.median(times), min(times)


def _record(
    algorithm: str,
    instance: str,
    point_set: PointSet,
    seed,
    t: int,
    start: int,
    estimate: float,
    evals: int,
    median_ms: float,
    min_ms: float,
    oracle: Optional[float],
) -> str:
    if oracle is None:
        oracle_s = abs_err_s = ratio_s = ""
    else:
        oracle_s = repr(oracle)
        abs_err_s = repr(oracle - estimate)
        ratio_s = repr(oracle / estimate) if estimate > 0.0 else "inf"
    return ",".join(
        [
            algorithm,
            instance,
            str(point_set.n),
            str(point_set.m),
            "" if seed is None else str(seed),
            str(t),
            str(start),
            repr(estimate),
            oracle_s,
            abs_err_s,
            ratio_s,
            "%.3f" % median_ms,
            "%.3f" % min_ms,
            str(evals),
        ]
    )


def _load_or_generate(args) -> Tuple[PointSet, str, Optional[int]]:
    """Resolve the instance from --input or --distribution flags."""
    if args.input is not None:
        return load_points(args.input), args.input, args.seed
    if args.distribution is None:
        raise ValueError("either --input or --distribution is required")
    spec = GeneratorSpec(kind=args.distribution, n=args.n, m=args.m, seed=args.seed)
    return generate(spec), args.distribution, args.seed


def _emit(lines: Sequence[str], output: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_instance_flags(sub, with_input=True) -> None:
    if with_input:
        sub.add_argument("--input", help="dataset file (overrides --distribution)")
    sub.add_argument("--distribution", choices=KINDS)
    sub.add_argument("--n", type=int, default=1000)
    sub.add_argument("--m", type=int, default=3)
    sub.add_argument("--seed", type=int, default=0)


def _add_run_flags(sub) -> None:
    sub.add_argument("--algorithm", required=True, choices=ALGORITHMS)
    sub.add_argument("--t", type=int, default=2)
    sub.add_argument("--start", type=int, default=0)
    sub.add_argument("--repeats", type=int, default=1)
    sub.add_argument("--output", help="write CSV here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diamapprox",
        description="Exact and certified-approximate point-set diameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a synthetic dataset file")
    _add_instance_flags(gen, with_input=False)
    gen.add_argument("--output", required=True)

    run = sub.add_parser("run", help="run one algorithm, print one CSV record")
    _add_instance_flags(run)
    _add_run_flags(run)

    cmp_ = sub.add_parser("compare", help="run an algorithm and an exact oracle")
    _add_instance_flags(cmp_)
    _add_run_flags(cmp_)

    bench = sub.add_parser("bench", help="sweep a config matrix, print a CSV table")
    bench.add_argument("--distribution", default="cube", help="comma-separated kinds")
    bench.add_argument("--n", default="1000", help="comma-separated point counts")
    bench.add_argument("--m", default="3", help="comma-separated dimensions")
    bench.add_argument("--algorithm", default="iterative,randomized",
                       help="comma-separated algorithms")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--t", type=int, default=2)
    bench.add_argument("--start", type=int, default=0)
    bench.add_argument("--repeats", type=int, default=1)
    bench.add_argument("--no-oracle", action="store_true",
                       help="skip the exact-oracle comparison columns")
    bench.add_argument("--output")
    return parser


def _cmd_generate(args) -> int:
    spec = GeneratorSpec(kind=args.distribution, n=args.n, m=args.m, seed=args.seed)
    save_points(generate(spec), args.output)
    return 0


def _cmd_run(args, with_oracle: bool) -> int:
    point_set, instance, seed = _load_or_generate(args)
    (estimate, evals), median_ms, min_ms = _timed(
        lambda: _run_algorithm(args.algorithm, point_set, args.t, args.start, seed),
        args.repeats,
    )
    oracle = _oracle_value(point_set) if with_oracle else None
    row = _record(
        args.algorithm, instance, point_set, seed, args.t, args.start,
        estimate, evals, median_ms, min_ms, oracle,
    )
    _emit([CSV_HEADER, row], args.output)
    return 0


def _cmd_bench(args) -> int:
    lines = [CSV_HEADER]
    for kind in args.distribution.split(","):
        for n in (int(v) for v in args.n.split(",")):
            for m in (int(v) for v in args.m.split(",")):
                spec_m = 2 if kind == WORST_CASE_5 else m
                spec = GeneratorSpec(kind=kind, n=n, m=spec_m, seed=args.seed)
                point_set = generate(spec)
                oracle = None if args.no_oracle else _oracle_value(point_set)
                for algorithm in args.algorithm.split(","):
                    if algorithm not in ALGORITHMS:
                        raise ValueError(f"unknown algorithm {algorithm!r}")
                    if algorithm in ("exact-rc2d", "cstar-2d") and point_set.m != 2:
                        continue  # planar-only entries are skipped in the sweep
                    (estimate, evals), median_ms, min_ms = _timed(
                        lambda a=algorithm: _run_algorithm(
                            a, point_set, args.t, args.start, args.seed
                        ),
                        args.repeats,
                    )
                    lines.append(
                        _record(
                            algorithm, kind, point_set, args.seed, args.t,
                            args.start, estimate, evals, median_ms, min_ms, oracle,
                        )
                    )
    _emit(lines, args.output)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "run":
            return _cmd_run(args, with_oracle=False)
        if args.command == "compare":
            return _cmd_run(args, with_oracle=True)
        if args.command == "bench":
            return _cmd_bench(args)
        parser.error(f"unknown command {args.command!r}")
    except (ValueError, OSError) as exc:
        print(f"diamapprox: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
