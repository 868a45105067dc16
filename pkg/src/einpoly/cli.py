"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input data, 3 unsupported
capability (the analysis is still emitted).  Warnings never change the exit
code.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from .exact import parse_rat
from .homspace import (
    DegenerateSpectrumError,
    HomSpaceData,
    SchemaError,
    catalog_names,
    kaehler_b2_polytope,
    load_catalog,
    parse,
)
from .infinity import B2NotApplicableError, b2_exponent, delta_min, flat_complex
from .faces import marked_census
from .polytope import polytope_from_json
from .report import analyze, render_report, summarize
from .solver import delannoy, legendre_at_3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_input(path_or_name: str) -> HomSpaceData:
    if os.path.exists(path_or_name):
        with open(path_or_name, "r", encoding="utf-8") as fh:
            return parse(fh.read())
    try:
        return load_catalog(path_or_name)
    except KeyError:
        raise FileNotFoundError(path_or_name)


def cmd_analyze(args) -> int:
    try:
        data = _load_input(args.input)
    except FileNotFoundError:
        print(f"error: no such file or catalog entry: {args.input}", file=sys.stderr)
        return 1
    except (SchemaError, ValueError) as exc:
        print(f"invalid data: {exc}", file=sys.stderr)
        return 2
    try:
        theta = parse_rat(args.theta)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        report, solver_exit = analyze(data, theta=theta, solve=not args.no_solve)
    except (DegenerateSpectrumError, SchemaError) as exc:
        print(f"invalid data: {exc}", file=sys.stderr)
        return 2
    print(summarize(report))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(render_report(report) + "\n")
    return solver_exit


def cmd_kaehler_b2(args) -> int:
    d = args.d
    if not 2 <= d <= 7:
        print("error: d must be between 2 and 7", file=sys.stderr)
        return 1
    P = kaehler_b2_polytope(d)
    nu = P.normalized_volume()
    try:
        b2 = b2_exponent(P)
    except B2NotApplicableError as exc:
        b2 = f"not applicable: {exc}"
    obj = {
        "d": d,
        "facets": len(P.facets),
        "nu": nu,
        "b2_exponent": b2,
    }
    census = marked_census(P)
    obj["marked_by_dim"] = {str(k): v for k, v in sorted(census.marked_by_dim().items())}
    obj["marked_total"] = census.marked_total()
    obj["test2_count"] = census.test2_count()
    print(json.dumps(obj, indent=2))
    return 0


def cmd_delannoy(args) -> int:
    n = args.n
    if n < 0:
        print("error: n must be nonnegative", file=sys.stderr)
        return 1
    value = delannoy(n)
    check = legendre_at_3(n)
    if value != check:
        print("internal error: recurrences disagree", file=sys.stderr)
        return 2
    print(value)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog_names():
            print(name)
        return 0
    if not args.name:
        print("error: catalog show/export needs a name", file=sys.stderr)
        return 1
    try:
        data = load_catalog(args.name)
    except (KeyError, ValueError):
        print(f"error: unknown catalog entry: {args.name}", file=sys.stderr)
        return 1
    if args.action == "show":
        print(f"name: {data.name}")
        print(f"d: {data.d}")
        print(f"dims: {list(data.dims)}")
        print(f"b: {[str(x) for x in data.b]}")
        for key, val in data.triple_items():
            print(f"[{key[0]}, {key[1]}, {key[2]}] = {val}")
        print(f"bracket_meets_h: {sorted(data.bracket_meets_h)}")
        print(f"h_nontrivial: {sorted(data.h_nontrivial)}")
        print(f"central: {sorted(data.central)}")
        print(f"complement: {data.complement}")
        if data.expected:
            print(f"expected: {json.dumps(data.expected)}")
    else:  # export
        print(data.to_json())
    return 0


def cmd_polytope(args) -> int:
    source = args.input
    P = None
    data = None
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            print(f"invalid data: {exc}", file=sys.stderr)
            return 2
        if isinstance(obj, dict) and obj.get("schema") == "homspace/v1":
            try:
                data = parse(text)
            except SchemaError as exc:
                print(f"invalid data: {exc}", file=sys.stderr)
                return 2
        elif isinstance(obj, dict) and "vertices" in obj:
            P = polytope_from_json(obj)
        else:
            print("invalid data: neither a homspace/v1 nor a polytope document",
                  file=sys.stderr)
            return 2
    else:
        try:
            data = load_catalog(source)
        except (KeyError, ValueError):
            print(f"error: no such file or catalog entry: {source}", file=sys.stderr)
            return 1
    if P is None:
        from .homspace import weight_polytope

        try:
            P = weight_polytope(data)
        except DegenerateSpectrumError as exc:
            print(f"invalid data: {exc}", file=sys.stderr)
            return 2
        if args.min:
            P = delta_min(P, flat_complex(data))
    else:
        if args.min:
            print("error: --min needs spectral data, not a bare polytope",
                  file=sys.stderr)
            return 1
    if args.volume:
        print(P.normalized_volume())
    elif args.vertices:
        print(json.dumps([list(v) for v in P.vertices]))
    elif args.facets:
        print(json.dumps([{"normal": list(n), "offset": o} for n, o in P.facets]))
    else:
        print(P.to_json())
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="einpoly", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis of a spectral-data file or catalog entry")
    p.add_argument("input")
    p.add_argument("--theta", default="0", help="moment-map parameter, |theta| < 1")
    p.add_argument("--json", default=None, help="write the full JSON report here")
    p.add_argument("--no-solve", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("kaehler-b2", help="polytope data of the b2 = 1 family")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_kaehler_b2)

    p = sub.add_parser("delannoy", help="central Delannoy number")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_delannoy)

    p = sub.add_parser("catalog", help="list/show/export catalog fixtures")
    p.add_argument("action", choices=("list", "show", "export"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("polytope", help="weight / minimal polytope of an input")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--min", action="store_true")
    group.add_argument("--max", action="store_true")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--vertices", action="store_true")
    out.add_argument("--facets", action="store_true")
    out.add_argument("--volume", action="store_true")
    out.add_argument("--export", action="store_true")
    p.set_defaults(func=cmd_polytope)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
