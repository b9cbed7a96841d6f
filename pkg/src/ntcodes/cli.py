"""Command-line front end.

Exit codes: 0 success or true verdict, 1 false verdict or unmet
precondition, 2 usage error, 3 bound exceeded, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analyze, codes, fixtures, formats, limits
from .hamming import covering_radius, distance_partition, min_distance
from .limits import BoundExceeded, ParseError, PreconditionError
from .perm import normalizer_in_symmetric

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BOUND, EXIT_PARSE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def status(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required")


def _coords(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad coordinate list {text!r}") from None


def _blocks(text: str) -> list[list[int]]:
    return [_coords(b) for b in text.split(";") if b.strip()]


# construct ---------------------------------------------------------------------


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "rep":
        _need(args, "m", "q")
        C = codes.rep_code(args.m, args.q)
    elif kind == "all":
        _need(args, "p", "q")
        C = codes.all_code(args.p, args.q)
    elif kind == "injective":
        _need(args, "m", "q")
        C = codes.injective_code(args.m, args.q)
    elif kind == "weight":
        _need(args, "m")
        C = codes.weight_code(args.m)
    elif kind == "perm":
        _need(args, "group")
        C = codes.perm_code(formats.read_group(args.group))
    elif kind == "twisted":
        _need(args, "paired")
        pa = formats.read_paired(args.paired)
        if not pa.is_consistent():
            raise PreconditionError("generator images do not define a homomorphism")
        C = codes.twisted_code(pa)
    elif kind == "cayley":
        if args.table:
            table = formats.read_table(args.table)
        elif args.group:
            table, _ = codes.perm_group_table(formats.read_group(args.group))
        elif args.cyclic:
            table = codes.cyclic_table(args.cyclic)
        else:
            raise UsageError("cayley needs --table, --group or --cyclic")
        ordering = _coords(args.ordering) if args.ordering else None
        C = codes.cayley_code(table, ordering)
    elif kind in ("prod", "repl"):
        _need(args, "code", "ell")
        base = formats.read_code(args.code)
        C = codes.prod_code(base, args.ell) if kind == "prod" else codes.rep_l_code(base, args.ell)
    elif kind == "project":
        _need(args, "code", "coords")
        C = codes.project(formats.read_code(args.code), _coords(args.coords))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown kind {kind}")
    _emit(formats.write_code(C), args.output)
    status(f"size {len(C)} m {C.m} q {C.q}")
    return EXIT_OK


# group -------------------------------------------------------------------------


def cmd_group(args) -> int:
    kind = args.kind
    if kind == "rep":
        _need(args, "m", "q")
        X = codes.rep_group(args.m, args.q)
    elif kind == "perm":
        _need(args, "group")
        T = formats.read_group(args.group)
        if args.normalizer:
            N = formats.read_group(args.normalizer).generators
        elif T.degree <= 8:
            N = normalizer_in_symmetric(T).generators
        else:
            N = None
        X = codes.perm_code_group(T, N)
    elif kind == "twisted":
        _need(args, "paired")
        X = codes.twisted_code_group(formats.read_paired(args.paired))
    elif kind == "example":
        X = fixtures.example_group(args.q or 5, args.ell or 2)
    elif kind == "repequiv":
        _need(args, "code")
        X = analyze.rep_equivalent_group(formats.read_code(args.code))
    else:  # pragma: no cover
        raise UsageError(f"unknown kind {kind}")
    _emit(formats.write_wreath_group(X), args.output)
    status(f"wreath group on H({X.m},{X.q}) with {len(X.generators)} generators")
    return EXIT_OK


# analyze -----------------------------------------------------------------------


def _report_text(rep: analyze.Report) -> str:
    lines = [f"{rep.property}: {rep.verdict}"]
    for k, v in rep.to_json()["witnesses"].items():
        if isinstance(v, (list, dict)) and len(json.dumps(v)) > 200:
            v = f"<{len(v)} entries>"
        lines.append(f"  {k}: {v}")
    if rep.counterexample is not None:
        lines.append(f"  counterexample: {rep.to_json()['counterexample']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    _need(args, "code")
    C = formats.read_code(args.code)
    prop = args.property
    X = None
    if prop in ("nt", "ct", "decompose", "projstruct", "prop27"):
        _need(args, "group")
        X = formats.read_wreath_group(args.group)
        if (X.m, X.q) != (C.m, C.q):
            raise UsageError(f"group acts on H({X.m},{X.q}) but the code lives in H({C.m},{C.q})")
    try:
        if prop == "mindist":
            status(f"scanning {len(C)} codewords")
            d = min_distance(C, threads=args.threads)
            rep = analyze.Report("min_distance", d, stats={"code_size": len(C)})
        elif prop == "covrad":
            rep = analyze.Report("covering_radius", covering_radius(C))
        elif prop == "partition":
            part = distance_partition(C)
            rep = analyze.Report("distance_partition", part.rho,
                                 witnesses={"cell_sizes": part.sizes()})
        elif prop == "nt":
            rep = analyze.check_neighbour_transitive(C, X)
        elif prop == "ct":
            rep = analyze.check_completely_transitive(C, X)
        elif prop == "sregular":
            rep = (analyze.check_completely_regular(C) if args.s is None
                   else analyze.check_s_regular(C, args.s))
        elif prop == "repwitness":
            y = analyze.rep_equivalence_witness(C)
            if y is None:
                rep = analyze.Report("rep_witness", False,
                                     counterexample={"reason": "minimum distance below m"})
            else:
                image = {y.apply(w) for w in C}
                rep_words = codes.rep_code(C.m, C.q).word_set
                rep = analyze.Report("rep_witness", True,
                                     witnesses={"element": y, "image_size": len(image),
                                                "image_in_rep": image <= rep_words,
                                                "image_is_rep": image == rep_words})
        elif prop == "decompose":
            status("checking neighbour transitivity")
            rep = analyze.decompose(C, X).report()
        elif prop == "projstruct":
            _need(args, "blocks")
            rep = analyze.check_projection_structure(C, X, _blocks(args.blocks))
        elif prop == "prop27":
            rep = analyze.check_prop27(C, X)
        else:  # pragma: no cover
            raise UsageError(f"unknown property {prop}")
    except PreconditionError as exc:
        rep = analyze.Report(prop, False, counterexample={"precondition": str(exc)})
    text = json.dumps(rep.to_json(), indent=2) + "\n" if args.format == "json" else _report_text(rep)
    _emit(text, args.output)
    return EXIT_FALSE if rep.verdict is False else EXIT_OK


# fixture -----------------------------------------------------------------------


def cmd_fixture(args) -> int:
    name = args.name
    if name == "example9":
        out = Path(args.output or ".")
        out.mkdir(parents=True, exist_ok=True)
        (out / "example9.code").write_text(formats.write_code(fixtures.example_code()))
        (out / "example9.wgrp").write_text(formats.write_wreath_group(fixtures.example_group()))
        status(f"wrote {out / 'example9.code'} and {out / 'example9.wgrp'}")
        return EXIT_OK
    if name not in fixtures.FIXTURES:
        avail = ", ".join(sorted(fixtures.FIXTURES) + ["example9"])
        raise UsageError(f"unknown fixture {name!r}; available: {avail}")
    status(f"building and validating {name}")
    pa = fixtures.build_fixture(name)
    _emit(formats.write_paired(pa), args.output)
    return EXIT_OK


# parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--enum-bound", type=int, default=argparse.SUPPRESS,
                        help="max group elements to enumerate")
    common.add_argument("--orbit-bound", type=int, default=argparse.SUPPRESS,
                        help="max vertex orbit size")
    common.add_argument("--partition-bound", type=int, default=argparse.SUPPRESS,
                        help="max vertices visited by a distance partition")
    common.add_argument("--index-bound", type=int, default=argparse.SUPPRESS,
                        help="max coset action degree")
    parser = argparse.ArgumentParser(
        prog="ntcodes", parents=[common],
        description="Construct codes in Hamming graphs and certify their symmetry properties.")
    parser.set_defaults(format="json", threads=os.cpu_count() or 1, enum_bound=None,
                        orbit_bound=None, partition_bound=None, index_bound=None)
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a code and write it in code-file format")
    c.add_argument("kind", choices=["rep", "all", "injective", "weight", "perm", "twisted",
                                    "cayley", "prod", "repl", "project"])
    for flag in ("--m", "--q", "--p", "--ell", "--cyclic"):
        c.add_argument(flag, type=int)
    c.add_argument("--group", help="group file")
    c.add_argument("--paired", help="paired-action file")
    c.add_argument("--table", help="multiplication table file")
    c.add_argument("--ordering", help="comma-separated element ordering for cayley")
    c.add_argument("--code", help="input code file")
    c.add_argument("--coords", help="comma-separated coordinates for project")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    g = sub.add_parser("group", parents=[common], help="write a wreath group file for a construction")
    g.add_argument("kind", choices=["rep", "perm", "twisted", "example", "repequiv"])
    for flag in ("--m", "--q", "--ell"):
        g.add_argument(flag, type=int)
    g.add_argument("--group")
    g.add_argument("--code", help="code with minimum distance m, for repequiv")
    g.add_argument("--normalizer", help="group file with generators of the normalizer")
    g.add_argument("--paired")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_group)

    a = sub.add_parser("analyze", parents=[common], help="run a certifier and print a report")
    a.add_argument("property", choices=["mindist", "covrad", "partition", "nt", "ct", "sregular",
                                        "repwitness", "decompose", "projstruct", "prop27"])
    a.add_argument("--code")
    a.add_argument("--group", help="wreath group file")
    a.add_argument("--s", type=int, help="regularity level (default: covering radius)")
    a.add_argument("--blocks", help="coordinate blocks, e.g. '0,1,2;3,4,5'")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("fixture", parents=[common], help="build a validated paired action or the worked example")
    f.add_argument("name")
    f.add_argument("-o", "--output", help="output file (directory for example9)")
    f.set_defaults(func=cmd_fixture)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = (limits.ENUM_BOUND, limits.ORBIT_BOUND, limits.PARTITION_BOUND, limits.INDEX_BOUND)
    try:
        limits.set_bounds(args.enum_bound, args.orbit_bound, args.partition_bound, args.index_bound)
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        status(f"error: {exc}")
        return EXIT_USAGE
    except BoundExceeded as exc:
        status(f"bound exceeded: {exc}")
        return EXIT_BOUND
    except ParseError as exc:
        status(f"parse error: {exc}")
        return EXIT_PARSE
    except (FileNotFoundError, ValueError, KeyError, fixtures.FixtureError) as exc:
        status(f"error: {exc}")
        return EXIT_FALSE if isinstance(exc, (PreconditionError, fixtures.FixtureError)) else EXIT_USAGE
    finally:
        limits.set_bounds(*saved)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
