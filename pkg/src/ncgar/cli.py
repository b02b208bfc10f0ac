"""Command-line front door.

Exit codes: 0 success, 1 verification failure, 2 input error.  Output is
line-oriented plain text; machine formats (JSON, DOT) sit behind flags
and are byte-stable across invocations.
"""

from __future__ import annotations

import argparse
import sys as _sys
from pathlib import Path

from .coxeter import ParseError, UnsupportedType, parse_descriptor
from .lattice import (LatticeViolation, NotConjugate, NotCoxeterElement,
                      build_nc, nc_to_dot, nc_to_json, verify_nc_lattice)
from .monoid import BudgetExceeded, DualMonoid
from .complexes import build_k, build_x_plus, reduced_homology
from .homology import format_summary
from .verify import SUITES, run_suites

INPUT_ERRORS = (ParseError, UnsupportedType, NotCoxeterElement, NotConjugate,
                ValueError)


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        _sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _system_and_gamma(args):
    sys_ = parse_descriptor(args.system)
    gamma = sys_.parse_element(args.gamma) if getattr(args, "gamma", None) else None
    return sys_, gamma


def cmd_group(args) -> int:
    sys_ = parse_descriptor(args.system)
    fmt = sys_.format_element
    print(f"system {sys_.descriptor()}")
    print(f"order {sys_.order}")
    print(f"rank {sys_.rank}")
    print("generators " + " ".join(fmt(s) for s in sys_.generators))
    print(f"reflections {len(sys_.reflections)}")
    print(f"coxeter element {fmt(sys_.coxeter_element())}")
    hist = sys_.length_histogram()
    print("length histogram " + " ".join(f"{l}:{c}" for l, c in enumerate(hist)))
    return 0


def cmd_nc(args) -> int:
    sys_, gamma = _system_and_gamma(args)
    lat = build_nc(sys_, gamma)
    report = verify_nc_lattice(lat)
    print(f"system {sys_.descriptor()}")
    print(f"gamma {sys_.format_element(lat.gamma)}")
    if report.passed:
        print(f"{len(lat.members)} members, lattice OK "
              f"({len(report.pairs)} pairs checked)")
    else:
        print(report.summary())
        return 1
    if args.json is not None:
        _emit(nc_to_json(lat), args.json)
    if args.dot is not None:
        _emit(nc_to_dot(lat), args.dot)
    return 0


def cmd_monoid(args) -> int:
    sys_, gamma = _system_and_gamma(args)
    mon = DualMonoid(build_nc(sys_, gamma))
    if args.action == "nf":
        word = mon.parse_word(args.words[0])
        nf = mon.normal_form(word)
        print(mon.word_to_text(nf))
        if args.json:
            _sys.stdout.write(mon.word_to_json(mon.group_form_of_word(word)))
    elif args.action == "eq":
        if len(args.words) != 2:
            raise ValueError("eq needs exactly two words")
        a = mon.parse_word(args.words[0])
        b = mon.parse_word(args.words[1])
        print("true" if mon.positively_equal(a, b) else "false")
    else:  # lift
        mixed = mon.parse_mixed(args.words[0])
        form = mon.positive_lift(mixed)
        print(mon.group_form_to_text(form))
        if args.json:
            _sys.stdout.write(mon.word_to_json(form))
    return 0


def cmd_complex(args) -> int:
    sys_, gamma = _system_and_gamma(args)
    if args.kind == "xplus":
        if args.m is None:
            raise ValueError("xplus requires --m")
        x = build_x_plus(sys_, gamma, args.m)
        fv = x.complex.f_vector()
        print(f"system {sys_.descriptor()}")
        print(f"xplus level {args.m}: f-vector ({', '.join(map(str, fv))})")
        if args.homology:
            print("reduced homology " + format_summary(reduced_homology(x.complex)))
        if args.json is not None:
            _emit(x.complex.to_json(), args.json)
    else:
        lat = build_nc(sys_, gamma)
        k = build_k(lat)
        counts = ", ".join(map(str, k.cell_counts()))
        print(f"system {sys_.descriptor()}")
        print(f"cells ({counts}); chi {k.euler_characteristic()}")
        if args.homology:
            print(format_summary(k.homology()))
        if args.json is not None:
            _emit(k.to_json(), args.json)
    return 0


def cmd_verify(args) -> int:
    sys_, gamma = _system_and_gamma(args)
    reports = run_suites(sys_, args.suite, gamma)
    failed = False
    for rep in reports:
        for line in rep.lines():
            print(line)
        failed = failed or not rep.passed
    print("result " + ("FAIL" if failed else "PASS"))
    return 1 if failed else 0


def cmd_report(args) -> int:
    from .report import write_report

    sys_, gamma = _system_and_gamma(args)
    written = write_report(sys_, gamma, Path(args.out))
    for path in written:
        print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncgar",
        description="Noncrossing-partition lattices, dual braid monoids "
                    "and their classifying complexes, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="print order, generators, reflections")
    p.add_argument("system")
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("nc", help="build and verify the interval lattice")
    p.add_argument("system")
    p.add_argument("--gamma", help="alternative Coxeter element (element text)")
    p.add_argument("--json", nargs="?", const="-", metavar="PATH")
    p.add_argument("--dot", nargs="?", const="-", metavar="PATH")
    p.set_defaults(fn=cmd_nc)

    p = sub.add_parser("monoid", help="normal forms, equality, positive lift")
    p.add_argument("action", choices=["nf", "eq", "lift"])
    p.add_argument("words", nargs="+")
    p.add_argument("--system", default="A2")
    p.add_argument("--gamma")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_monoid)

    p = sub.add_parser("complex", help="positive truncations and the quotient")
    p.add_argument("kind", choices=["xplus", "k"])
    p.add_argument("system")
    p.add_argument("--m", type=int, help="truncation level for xplus")
    p.add_argument("--gamma")
    p.add_argument("--homology", action="store_true")
    p.add_argument("--json", nargs="?", const="-", metavar="PATH")
    p.set_defaults(fn=cmd_complex)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("system")
    p.add_argument("--suite", choices=["all"] + sorted(SUITES), default="all")
    p.add_argument("--gamma")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("report", help="figures and CSV tables for a system")
    p.add_argument("system")
    p.add_argument("--gamma")
    p.add_argument("--out", required=True, metavar="DIR")
    p.set_defaults(fn=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2
    except (LatticeViolation, BudgetExceeded) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
