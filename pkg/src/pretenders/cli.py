"""Command-line front end.

Subcommands:
  classify <b>        least composite q with b^q = b (mod q), via the decision list
  oracle <b>          the same value by direct search, for cross-checking
  cascade             the 132-entry decision list (txt, csv, or json)
  density <q>         exact base density and rarity of one entry
  firstbases          scan for the least base reaching each entry (CSV)
  period              the 122-digit period constant and its checks
  table               render a residue-class display (mod36, t1, t2, t3)
  verify              regenerate every display and diff against golden data

Exit status: 0 success / full match, 1 verification mismatch, 2 usage or
I/O trouble.
"""

import argparse
import sys

from .cascade import build_cascade
from .census import CensusReport, DEFAULT_MAX_BASE
from .period import minimality_witnesses, period_constant, periodicity_check, verify_lcm
from .pretender import primary_pretender_oracle
from .tables import (
    GoldenFormatError,
    format_mod36,
    format_t3,
    format_table1,
    format_table2,
    gen_mod36,
    gen_table1,
    gen_table2,
    run_regressions,
)

__all__ = ["entry", "main"]


def _cmd_classify(args) -> int:
    print(build_cascade().classify(args.base))
    return 0


def _cmd_oracle(args) -> int:
    print(primary_pretender_oracle(args.base))
    return 0


def _cmd_cascade(args) -> int:
    cascade = build_cascade()
    if args.format == "csv":
        sys.stdout.write(cascade.to_csv_text())
    elif args.format == "json":
        sys.stdout.write(cascade.to_json_text())
    else:
        print(f"{'q':>4} {'k':>3} {'m':>4} {'density':>12} {'rarity':>11}")
        for e in cascade.entries:
            dens = f"{e.density.numerator}/{e.density.denominator}"
            print(f"{e.q:>4} {e.root_degree:>3} {e.root_modulus:>4} "
                  f"{dens:>12} {e.rarity_display:>11}")
    return 0


def _cmd_density(args) -> int:
    cascade = build_cascade()
    q = args.q
    try:
        entry_obj = cascade.entry_for(q)
    except KeyError:
        entry_obj = None
    if entry_obj is not None:
        d = entry_obj.density
        print(f"density: {d.numerator}/{d.denominator}")
        print(f"rarity : {entry_obj.rarity_display}")
        return 0
    if q in {s.q for s in cascade.skipped}:
        print("density: 0/1")
        print("rarity : n/a (no bases)")
        return 0
    raise ValueError(f"{q} is not a composite below 562 "
                     "(or is claimed by no entry)")


def _cmd_firstbases(args) -> int:
    cascade = build_cascade()
    report = CensusReport.build(cascade, max_base=args.max)
    sys.stdout.write(report.to_csv_text())
    if report.scan.missing:
        missing = ", ".join(str(q) for q in report.scan.missing)
        print(f"warning: no base below {args.max} reaches: {missing}",
              file=sys.stderr)
        return 1
    return 0


def _cmd_period(args) -> int:
    pc = period_constant()
    if args.digits:
        print(pc.digits)
    else:
        print(f"digits: {pc.num_digits}")
        print(f"value : {pc.value}")
    status = 0
    if args.samples or args.minimality:
        cascade = build_cascade()
        lc = verify_lcm(cascade)
        print(f"lcm of entry moduli matches: {lc.equal}")
        if not lc.equal:
            status = 1
    if args.samples:
        rep = periodicity_check(build_cascade(), samples=args.samples)
        print(f"periodicity: {rep.checked} bases checked, "
              f"{len(rep.failures)} failures")
        if not rep.ok:
            status = 1
    if args.minimality:
        rep = minimality_witnesses(build_cascade())
        print(f"minimality: witnesses for {len(rep.witnesses)} primes, "
              f"{len(rep.failed)} unwitnessed")
        if not rep.ok:
            status = 1
    return status


def _cmd_table(args) -> int:
    cascade = build_cascade()
    if args.which == "mod36":
        sys.stdout.write(format_mod36(gen_mod36(cascade), args.format))
    elif args.which == "t1":
        sys.stdout.write(format_table1(gen_table1(cascade), args.format))
    elif args.which == "t2":
        sys.stdout.write(format_table2(gen_table2(cascade), args.format))
    else:   # t3 needs the first-base scan
        report = CensusReport.build(cascade)
        sys.stdout.write(format_t3(report, args.format))
    return 0


def _cmd_verify(args) -> int:
    cascade = build_cascade()
    report = CensusReport.build(cascade)
    summary = run_regressions(cascade, report, directory=args.golden)
    for name in sorted(summary.mismatches):
        bad = summary.mismatches[name]
        print(f"{name}: {'ok' if not bad else f'{len(bad)} mismatches'}")
        for mm in bad[:20]:
            print(f"  {mm.key}: expected {mm.expected}, got {mm.actual}")
    if args.oracle_limit:
        bad_bases = [b for b in range(args.oracle_limit + 1)
                     if cascade.classify(b) != primary_pretender_oracle(b)]
        print(f"oracle agreement on [0, {args.oracle_limit}]: "
              f"{'ok' if not bad_bases else f'{len(bad_bases)} disagreements'}")
        if bad_bases:
            return 1
    return 0 if summary.ok else 1


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pretenders",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("classify", help="decision-list value for one base")
    p.add_argument("base", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("oracle", help="brute-force value for one base")
    p.add_argument("base", type=int)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("cascade", help="dump the 132-entry decision list")
    p.add_argument("--format", choices=("txt", "csv", "json"), default="txt")
    p.set_defaults(func=_cmd_cascade)

    p = sub.add_parser("density", help="exact density and rarity of one entry")
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("firstbases", help="scan for least base per entry")
    p.add_argument("--max", type=int, default=DEFAULT_MAX_BASE)
    p.set_defaults(func=_cmd_firstbases)

    p = sub.add_parser("period", help="the period constant and its checks")
    p.add_argument("--digits", action="store_true",
                   help="print only the digit string")
    p.add_argument("--samples", type=int, default=0, metavar="N",
                   help="also spot-check periodicity on N bases")
    p.add_argument("--minimality", action="store_true",
                   help="also exhibit a witness for each prime divisor")
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("table", help="render one residue-class display")
    p.add_argument("--which", required=True,
                   choices=("mod36", "t1", "t2", "t3"))
    p.add_argument("--format", choices=("txt", "csv"), default="txt")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="diff every display against golden data")
    p.add_argument("--golden", metavar="DIR", default=None,
                   help="directory of golden assets (default: bundled)")
    p.add_argument("--oracle-limit", type=int, default=10_000, metavar="N",
                   help="also cross-check classify against the oracle "
                        "on [0, N] (0 skips)")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (OSError, GoldenFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
