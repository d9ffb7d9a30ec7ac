"""Command line interface.

Subcommands: count (one number for one group and index), table (a census
over 1..max-index as CSV or JSON), verify (formula routes against the
brute-force oracle), epi (epimorphism counts onto a cyclic group).  Results
go to stdout, diagnostics to stderr.  Exit status is 0 on success, 1 when
verify finds a mismatch, 2 on argument, domain or resource errors.
"""

import argparse
import json
import sys

from . import oracle
from .abelian import HomologySignature, epi_count
from .census import (
    Free,
    GroupKind,
    NonOrientableSurface,
    OrientableSurface,
    count_nonorientable_subgroups,
    count_orientable_subgroups,
    count_subgroups,
)
from .classes import census_table, count_classes
from .errors import ResourceLimitError


def parse_group_spec(text: str) -> GroupKind:
    """Parse a group spec: free:R, orient:G or nonorient:P."""
    family, sep, value = text.partition(":")
    if not sep:
        raise ValueError(f"bad group spec {text!r}, expected free:R, orient:G or nonorient:P")
    try:
        number = int(value)
    except ValueError:
        raise ValueError(f"bad group parameter {value!r} in {text!r}") from None
    if family == "free":
        return Free(number)
    if family == "orient":
        return OrientableSurface(number)
    if family == "nonorient":
        return NonOrientableSurface(number)
    raise ValueError(f"unknown group family {family!r} in {text!r}")


def _parse_torsion(text: str) -> tuple[int, ...]:
    if not text:
        return ()
    orders = []
    for piece in text.split(","):
        try:
            order = int(piece)
        except ValueError:
            raise ValueError(f"bad torsion order {piece!r}") from None
        if order < 2:
            raise ValueError(f"torsion orders must be >= 2, got {order}")
        orders.append(order)
    return tuple(orders)


def _check_positive(value: int, name: str) -> int:
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")
    return value


def cmd_count(args) -> int:
    kind = parse_group_spec(args.group)
    n = _check_positive(args.index, "--index")
    if args.what == "subgroups":
        print(count_subgroups(kind, n))
    elif args.what == "classes":
        print(count_classes(kind, n))
    else:
        if not isinstance(kind, NonOrientableSurface):
            raise ValueError("--what split applies only to nonorient groups")
        plus = count_orientable_subgroups(kind.genus, n)
        minus = count_nonorientable_subgroups(kind.genus, n)
        print(f"{plus} {minus}")
    return 0


def cmd_table(args) -> int:
    kind = parse_group_spec(args.group)
    n_max = _check_positive(args.max_index, "--max-index")
    table = census_table(kind, n_max)
    split = isinstance(kind, NonOrientableSurface)
    records = []
    for row in table.rows:
        record = {"n": row.n, "M": row.subgroups}
        if split:
            record["M_plus"] = row.orientable_subgroups
            record["M_minus"] = row.nonorientable_subgroups
        record["N"] = row.conjugacy_classes
        records.append(record)
    if args.format == "json":
        print(json.dumps(records, separators=(",", ":")))
    else:
        columns = list(records[0])
        print(",".join(columns))
        for record in records:
            print(",".join(str(record[c]) for c in columns))
    return 0


def cmd_verify(args) -> int:
    kind = parse_group_spec(args.group)
    n_max = _check_positive(args.max_index, "--max-index")
    oracle.check_feasible(kind, n_max)
    split = isinstance(kind, NonOrientableSurface)
    failures = 0
    for n in range(1, n_max + 1):
        checks = [
            ("M", count_subgroups(kind, n), oracle.oracle_count_subgroups(kind, n)),
        ]
        if split:
            plus, minus = oracle.oracle_orientable_split(kind.genus, n)
            checks.append(("M+", count_orientable_subgroups(kind.genus, n), plus))
            checks.append(("M-", count_nonorientable_subgroups(kind.genus, n), minus))
        checks.append(("N", count_classes(kind, n), oracle.oracle_count_classes(kind, n)))
        fields = []
        ok = True
        for label, formula, brute in checks:
            if formula == brute:
                fields.append(f"{label}={formula}")
            else:
                fields.append(f"{label}={formula}!={brute}")
                ok = False
        if not ok:
            failures += 1
        print(f"n={n} {'PASS' if ok else 'FAIL'} {' '.join(fields)}")
    return 1 if failures else 0


def cmd_epi(args) -> int:
    signature = HomologySignature(_parse_torsion(args.torsion), args.rank)
    order = _check_positive(args.order, "--order")
    print(epi_count(signature, order))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covercount",
        description="Exact counts of finite-index subgroups and their conjugacy "
        "classes in free and surface groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="one count for one group and index")
    count.add_argument("--group", required=True, help="free:R, orient:G or nonorient:P")
    count.add_argument("--index", type=int, required=True, help="subgroup index n")
    count.add_argument(
        "--what",
        choices=["subgroups", "classes", "split"],
        default="subgroups",
        help="what to count (split prints orientable and non-orientable subgroup counts)",
    )
    count.set_defaults(func=cmd_count)

    table = sub.add_parser("table", help="census table for indices 1..max")
    table.add_argument("--group", required=True, help="free:R, orient:G or nonorient:P")
    table.add_argument("--max-index", type=int, required=True)
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="check the formulas against the brute-force oracle")
    verify.add_argument("--group", required=True, help="free:R, orient:G or nonorient:P")
    verify.add_argument("--max-index", type=int, required=True)
    verify.set_defaults(func=cmd_verify)

    epi = sub.add_parser("epi", help="epimorphisms from an abelian group onto Z_order")
    epi.add_argument("--torsion", default="", help="comma-separated torsion orders, each >= 2")
    epi.add_argument("--rank", type=int, default=0, help="free rank of the source group")
    epi.add_argument("--order", type=int, required=True, help="order of the cyclic target")
    epi.set_defaults(func=cmd_epi)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
