"""Command-line experiment harness: sweep one instance across heuristics and orderings."""

from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction
from pathlib import Path

from .archive import ParetoArchive
from .construct import Heuristic, Ordering, SweepParams, run_sweep
from .instances import generate_instance, read_instance, write_instance
from .model import Instance, ObjectiveVector, dominates, format_z2

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_INSTANCE = 2

HEURISTICS = (Heuristic.BEST_FIT, Heuristic.RANDOM_FIT)
ORDERINGS = (Ordering.DECREASING, Ordering.INCREASING, Ordering.RANDOM)

Cell = tuple[Heuristic, Ordering, ParetoArchive]


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; exit 2 is reserved for invalid instances
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bibinpack",
        description=(
            "Approximate the efficient bin-count / heterogeneousness tradeoff of a "
            "packing instance with randomized constructive heuristics."
        ),
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--generate", type=int, metavar="N",
                        help="generate a benchmark instance with N items")
    source.add_argument("--instance", metavar="PATH", help="load an instance file")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for generation and the sweeps (default 0)")
    parser.add_argument("--heuristic", default="all",
                        choices=[h.value for h in HEURISTICS] + ["all"],
                        help="which heuristic to run (default all)")
    parser.add_argument("--order", default="all",
                        choices=[o.value for o in ORDERINGS] + ["all"],
                        help="item processing order (default all)")
    parser.add_argument("--step", type=Fraction, default=Fraction(1, 10), metavar="S",
                        help="heterogeneousness level increment (default 0.1)")
    parser.add_argument("--reps", type=int, default=100, metavar="M",
                        help="solutions built per level (default 100)")
    parser.add_argument("--out", default="results", metavar="DIR",
                        help="output directory (default results/)")
    return parser


def run_experiment(
    instance: Instance,
    heuristics: list[Heuristic],
    orderings: list[Ordering],
    *,
    step: Fraction,
    reps: int,
    seed: int,
    out_dir: Path,
) -> Path:
    """Run every requested (heuristic, ordering) cell and write the report files.

    results.csv is byte-stable for a given invocation; per-cell wall-clock
    goes to timings.csv, which is not. Returns the results path.
    """
    cells: list[Cell] = []
    timings: list[tuple[Heuristic, Ordering, float]] = []
    for heuristic in heuristics:
        for ordering in orderings:
            params = SweepParams(
                step=step,
                solutions_per_level=reps,
                rng_seed=seed,
                heuristic=heuristic,
                ordering=ordering,
            )
            started = time.perf_counter()
            archive = run_sweep(instance, params)
            elapsed = time.perf_counter() - started
            cells.append((heuristic, ordering, archive))
            timings.append((heuristic, ordering, elapsed))
            print(f"{heuristic.value} / {ordering.value}: "
                  f"{len(archive)} vectors in {elapsed:.2f}s")
    results_path = out_dir / "results.csv"
    _write_results(results_path, cells)
    _write_timings(out_dir / "timings.csv", timings)
    return results_path


def _write_results(path: Path, cells: list[Cell]) -> None:
    union = {vector for _, _, archive in cells for vector in archive.vectors()}

    def is_best(vector: ObjectiveVector) -> bool:
        return not any(dominates(other, vector) for other in union)

    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["heuristic", "order", "z1", "z2", "best"])
        for heuristic, ordering, archive in cells:
            for vector, _ in archive.sorted_entries():
                writer.writerow([
                    heuristic.value,
                    ordering.value,
                    vector.z1,
                    format_z2(vector.z2),
                    int(is_best(vector)),
                ])


def _write_timings(path: Path, timings: list[tuple[Heuristic, Ordering, float]]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["heuristic", "order", "seconds"])
        for heuristic, ordering, elapsed in timings:
            writer.writerow([heuristic.value, ordering.value, f"{elapsed:.3f}"])


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.generate is not None:
            instance = generate_instance(args.generate, args.seed)
        else:
            instance = read_instance(args.instance)
    except (OSError, ValueError) as exc:
        print(f"bibinpack: invalid instance: {exc}", file=sys.stderr)
        return EXIT_BAD_INSTANCE
    heuristics = list(HEURISTICS) if args.heuristic == "all" else [Heuristic(args.heuristic)]
    orderings = list(ORDERINGS) if args.order == "all" else [Ordering(args.order)]
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    if args.generate is not None:
        write_instance(instance, out_dir / "instance.txt")
    try:
        results_path = run_experiment(
            instance,
            heuristics,
            orderings,
            step=args.step,
            reps=args.reps,
            seed=args.seed,
            out_dir=out_dir,
        )
    except ValueError as exc:
        print(f"bibinpack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {results_path}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
