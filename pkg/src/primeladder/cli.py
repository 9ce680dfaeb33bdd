"""Command-line front end.

Subcommands: construct, verify, lemoine, partition, oracle. Exit codes are
stable so scripts can tell outcomes apart:

    0  success / labeling is prime / zero counterexamples
    1  valid input, negative result (violations, no partition, unsupported
       order, exhausted search, counterexamples found)
    2  malformed input (bad flags, unparsable labeling file)
    3  checkpoint error
    4  search timeout
"""

from __future__ import annotations

import argparse
import json
import sys

from .conjectures import CheckpointError, verify_lemoine_range
from .constructions import (
    UnsupportedOrderError,
    construct_ladder,
    lemma_ladder_2p,
    theorem_ladder_2p_q,
)
from .ladder import (
    Labeling,
    MalformedLabelingError,
    format_labeling_csv,
    load_labeling_csv,
    verify_labeling,
)
from .numtheory import sieve_primes
from .oracle import EXHAUSTED, FOUND, TIMEOUT, SearchConfig, brute_force_labeling
from .partitions import enumerate_canonical, find_canonical, is_strong

__all__ = ["main"]

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_MALFORMED = 2
EXIT_CHECKPOINT = 3
EXIT_TIMEOUT = 4

LABELING_JSON_VERSION = 1


def render_ascii(labeling: Labeling) -> str:
    """Fixed-width, pipe-separated grid with right-aligned labels."""
    width = len(str(2 * labeling.n))
    return "\n".join(
        "|" + "|".join(str(v).rjust(width) for v in row) + "|"
        for row in labeling.to_rows()
    )


def render_labeling(labeling: Labeling, fmt: str) -> str:
    if fmt == "ascii":
        return render_ascii(labeling)
    if fmt == "csv":
        return format_labeling_csv(labeling).rstrip("\n")
    if fmt == "json":
        return json.dumps(
            {
                "version": LABELING_JSON_VERSION,
                "n": labeling.n,
                "rows": [list(row) for row in labeling.to_rows()],
            },
            sort_keys=True,
        )
    raise ValueError(f"unknown format {fmt!r}")


def cmd_construct(args) -> int:
    if args.n is None and args.p is None:
        print("construct: one of --n or --p is required", file=sys.stderr)
        return EXIT_MALFORMED
    if args.n is not None and args.p is not None:
        print("construct: --n and --p are mutually exclusive", file=sys.stderr)
        return EXIT_MALFORMED
    if args.q is not None and args.p is None:
        print("construct: --q requires --p", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        if args.n is not None:
            labeling = construct_ladder(args.n)
        elif args.q is not None:
            labeling = theorem_ladder_2p_q(args.p, args.q)
        else:
            labeling = lemma_ladder_2p(args.p)
    except UnsupportedOrderError as exc:
        print(f"construct: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except ValueError as exc:
        print(f"construct: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    print(render_labeling(labeling, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        labeling = load_labeling_csv(args.file)
    except MalformedLabelingError as exc:
        print(f"verify: {args.file}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    try:
        violations = verify_labeling(labeling)
    except MalformedLabelingError as exc:
        print(f"verify: {args.file}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if not violations:
        print("PRIME")
        return EXIT_OK
    for v in violations:
        print(
            f"({v.position_a[0]},{v.position_a[1]})={v.label_a} and "
            f"({v.position_b[0]},{v.position_b[1]})={v.label_b} "
            f"share factor {v.common_divisor}"
        )
    return EXIT_NEGATIVE


def cmd_lemoine(args) -> int:
    sieve = sieve_primes(max(args.max, 7))
    try:
        report = verify_lemoine_range(
            args.min,
            args.max,
            workers=args.jobs,
            checkpoint=args.checkpoint,
            sieve=sieve,
            witness_csv=args.witnesses,
        )
    except CheckpointError as exc:
        print(f"lemoine: {exc}", file=sys.stderr)
        return EXIT_CHECKPOINT
    except ValueError as exc:
        print(f"lemoine: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    print(json.dumps(report.to_json_dict(), sort_keys=True, indent=2))
    for n in report.counterexamples:
        print(f"lemoine: COUNTEREXAMPLE n={n}", file=sys.stderr)
    return EXIT_OK if not report.counterexamples else EXIT_NEGATIVE


def _partition_line(partition, strong: bool) -> str:
    return ",".join(str(p) for p in partition.parts) + (" [strong]" if strong else " [weak]")


def _partition_csv_row(partition) -> str:
    parts = list(partition.parts) + [""] * (3 - len(partition.parts))
    return f"{partition.n},{len(partition.parts)}," + ",".join(str(p) for p in parts[:3])


def cmd_partition(args) -> int:
    try:
        rows = []
        if args.all:
            found = list(enumerate_canonical(args.n, args.max_terms))
            if args.strong:
                found = [p for p in found if is_strong(p)]
        else:
            one = find_canonical(args.n, args.max_terms, require_strong=args.strong)
            found = [one] if one is not None else []
        for p in found:
            print(_partition_line(p, is_strong(p)))
            rows.append(_partition_csv_row(p))
    except ValueError as exc:
        print(f"partition: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if args.witness_csv and rows:
        with open(args.witness_csv, "w", encoding="utf-8") as fh:
            fh.write("n,term_count,p1,p2,p3\n")
            fh.write("\n".join(rows) + "\n")
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    budget = args.timeout_ms / 1000.0 if args.timeout_ms is not None else None
    try:
        result = brute_force_labeling(SearchConfig(n=args.n, time_budget=budget))
    except ValueError as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if result.status == FOUND:
        print(render_ascii(result.labeling))
        return EXIT_OK
    if result.status == EXHAUSTED:
        print("EXHAUSTED")
        return EXIT_NEGATIVE
    print("TIMEOUT")
    return EXIT_TIMEOUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primeladder",
        description="Construct and verify prime labelings of ladder graphs, "
        "search prime partitions, and scan additive conjectures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="build a prime labeling for a ladder order"
    )
    p_construct.add_argument("--n", type=int, help="number of columns")
    p_construct.add_argument("--p", type=int, help="prime p for the 2p or 2p+q family")
    p_construct.add_argument("--q", type=int, help="odd prime q for the 2p+q family")
    p_construct.add_argument(
        "--format", choices=("ascii", "csv", "json"), default="ascii"
    )
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="check a labeling file for coprimality")
    p_verify.add_argument("file", help="two-line CSV labeling file")
    p_verify.set_defaults(func=cmd_verify)

    p_lemoine = sub.add_parser(
        "lemoine", help="verify the 2p+q decomposition over an odd range"
    )
    p_lemoine.add_argument("--min", type=int, required=True)
    p_lemoine.add_argument("--max", type=int, required=True)
    p_lemoine.add_argument("--jobs", type=int, default=1)
    p_lemoine.add_argument("--checkpoint", help="JSON checkpoint path for resumable runs")
    p_lemoine.add_argument("--witnesses", help="write per-n witness CSV here")
    p_lemoine.set_defaults(func=cmd_lemoine)

    p_partition = sub.add_parser(
        "partition", help="find canonical prime partitions of n"
    )
    p_partition.add_argument("--n", type=int, required=True)
    p_partition.add_argument("--max-terms", type=int, default=3, dest="max_terms")
    p_partition.add_argument("--strong", action="store_true")
    p_partition.add_argument("--all", action="store_true")
    p_partition.add_argument("--witness-csv", dest="witness_csv")
    p_partition.set_defaults(func=cmd_partition)

    p_oracle = sub.add_parser(
        "oracle", help="backtracking search for a prime labeling"
    )
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--timeout-ms", type=int, dest="timeout_ms")
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
