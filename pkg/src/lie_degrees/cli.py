"""Command-line surface: exact degrees, verification sweeps, tables.

Exit codes: 0 all asserted checks pass, 1 a check failed (witness in the
report), 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import maxdegree, partitions, suites, symmetric, unipotent


def parse_partition(text: str) -> partitions.Partition:
    """Parse '3,2,1' or power notation '2^3,1' into a partition."""
    parts: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "^" in chunk:
            base, _, count = chunk.partition("^")
            parts.extend([int(base)] * int(count))
        else:
            parts.append(int(chunk))
    return partitions.Partition(tuple(sorted(parts, reverse=True)))


def parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi)
    v = int(text)
    return v, v


def parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def parse_fraction_set(text: str) -> set[Fraction]:
    return {Fraction(x) for x in text.split(",") if x.strip()}


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        suites.write_atomic(args.out, text)
    else:
        sys.stdout.write(text)


def cmd_degree(args) -> int:
    if args.n is not None:  # table mode: all labels of the given rank
        fam = {"sym": "sym", "gl": "gl", "gu": "gu"}.get(args.kind)
        if fam is None:
            fam = args.symbol_family or "BC"
        header, rows = suites.degrees_table(fam, args.n, args.q)
        _emit(args, suites.render_table(header, rows, args.format, "degrees"))
        return 0
    if args.kind == "sym":
        print(partitions.sym_degree(parse_partition(args.partition)))
    elif args.kind in ("gl", "gu"):
        lam = parse_partition(args.partition)
        deg = unipotent.degree_gl if args.kind == "gl" else unipotent.degree_gu
        print(deg(lam, args.q))
    else:  # symbol
        sym = unipotent.Symbol(parse_int_list(args.x) if args.x else (),
                               parse_int_list(args.y) if args.y else ())
        print(unipotent.degree_symbol(sym, args.q))
    return 0


def cmd_verify(args) -> int:
    n_min, n_max = parse_range(args.n)
    cfg = suites.SuiteConfig(
        families=tuple(args.family.split(",")) if args.family else ("GL", "GU", "BC", "D", "2D"),
        n_min=n_min, n_max=n_max,
        q_list=parse_int_list(args.q),
        truncation_m=args.truncation,
        parallelism=args.jobs,
        fmt=args.format,
        timing=args.timing,
    )
    report = suites.run_suite(cfg, args.what)
    text = report.to_csv(cfg.timing) if cfg.fmt == "csv" else report.to_json(cfg.timing)
    _emit(args, text)
    if args.out:
        for c in report.checks:
            print(f"{c['check']}: {c['verdict']}")
    return 0 if report.all_pass else 1


def cmd_bmax(args) -> int:
    b, witness = maxdegree.b_gl_exact(args.n, args.q)
    print(b)
    print("witness:", " x ".join(f"GL_{k}(q^{d})" for k, d in witness.blocks))
    return 0


def cmd_bounds(args) -> int:
    n_min, n_max = parse_range(args.n)
    rows_all: list[list] = []
    header: list[str] = []
    for fam in args.family.split(","):
        for q in parse_int_list(args.q):
            header, rows = suites.bounds_table(fam, n_min, n_max, q)
            rows_all.extend(rows)
    _emit(args, suites.render_table(header, rows_all, args.format, "bounds"))
    return 0


def cmd_epsilon(args) -> int:
    if args.kind == "an":
        n_min, n_max = parse_range(args.n)
        if n_min == n_max and not args.out and args.format == "json":
            eps = symmetric.epsilon_of(symmetric.alt_degrees(n_min))
            print(f"{eps.numerator}/{eps.denominator}")
            return 0
        header, rows = suites.epsilon_table(n_min, n_max)
        _emit(args, suites.render_table(header, rows, args.format, "epsilon"))
        return 0
    # cert
    spec = maxdegree.GroupSpec(args.family, args.rank, args.q)
    print(maxdegree.epsilon_certificate(spec).value)
    return 0


def cmd_ratio_search(args) -> int:
    lam = parse_partition(args.partition)
    witness = symmetric.ratio_witness(lam, parse_fraction_set(args.exclude),
                                      Fraction(args.delta))
    if witness is None:
        print("no witness found")
        return 1
    ratio = Fraction(partitions.sym_degree(witness), partitions.sym_degree(lam))
    print(",".join(map(str, witness.parts)))
    print(f"ratio: {ratio.numerator}/{ratio.denominator}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lie-degrees",
        description="Exact character degrees and certified bound verification "
                    "for symmetric groups and finite classical groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", help="compute one degree, or a full table with --n")
    p.add_argument("kind", choices=["sym", "gl", "gu", "symbol"])
    p.add_argument("--partition", help="e.g. 3,2,1 or 2^3,1")
    p.add_argument("--x", help="symbol row X, e.g. 1,2")
    p.add_argument("--y", help="symbol row Y, e.g. 0,1")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--n", type=int, help="emit the degree table for this rank instead")
    p.add_argument("--symbol-family", choices=["BC", "D", "2D"],
                   help="family for symbol tables (with --n)")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("what", choices=["steinberg", "props", "lemmas", "all"])
    p.add_argument("--family", help="comma list of GL,GU,BC,D,2D (steinberg)")
    p.add_argument("--n", default="1..10", help="rank range, e.g. 1..20")
    p.add_argument("--q", default="2,3", help="comma list of q values")
    p.add_argument("--truncation", type=int, default=40,
                   help="series truncation order for product enclosures")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes (env LIE_DEGREES_THREADS overrides)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", help="write the report to this path (atomic)")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock fields (report no longer byte-stable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bmax", help="exact largest irreducible degree")
    p.add_argument("kind", choices=["gl"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_bmax)

    p = sub.add_parser("bounds", help="bracket table for c(G) = b(G)/|G|_p")
    p.add_argument("--family", default="A", help="comma list of A,2A,B,C,D,2D")
    p.add_argument("--n", default="1..40")
    p.add_argument("--q", default="2")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("epsilon", help="epsilon values and certificates")
    ksub = p.add_subparsers(dest="kind", required=True)
    pa = ksub.add_parser("an", help="epsilon(A_n) from the exact degree list")
    pa.add_argument("--n", default="5..20", help="single n prints the exact rational")
    pa.add_argument("--format", choices=["json", "csv"], default="json")
    pa.add_argument("--out")
    pa.set_defaults(func=cmd_epsilon, kind="an")
    pc = ksub.add_parser("cert", help="epsilon > 1 certificate for a classical family")
    pc.add_argument("--family", required=True, choices=list(maxdegree.FAMILIES))
    pc.add_argument("--rank", type=int, required=True)
    pc.add_argument("--q", type=int, required=True)
    pc.set_defaults(func=cmd_epsilon, kind="cert")

    p = sub.add_parser("ratio-search",
                       help="find a same-size diagram with degree ratio outside a finite set")
    p.add_argument("--partition", required=True)
    p.add_argument("--exclude", default="", help="comma list of rationals, e.g. 2,1,1/2")
    p.add_argument("--delta", default="1/100", help="lower bound for the ratio")
    p.set_defaults(func=cmd_ratio_search)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
