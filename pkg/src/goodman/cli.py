"""``goodman`` command-line tool.

Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 basis
parse error.  Machine formats (csv, json) carry every number as a decimal
string.
"""

import argparse
import csv
import io
import json
import sys

from . import verify as _verify
from .basis import BasisParseError, basis_value, format_basis, parse_basis
from .complexity import breakdown, form_patterns, gf_table, svenonius_forms, v_total
from .reduction import full_chain, prop5_decompose, prop6_decompose, reduce_to_level
from .stirling import gs_table

DEFAULT_CEILING = 50
MAX_PATTERN_N = 6

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _json(obj):
    return json.dumps(obj, indent=2)


def cmd_table(args):
    if args.max_n > args.ceiling:
        raise UsageError(f"--max-n {args.max_n} exceeds the ceiling {args.ceiling} (raise it with --ceiling)")
    table = gs_table(args.max_n) if args.kind == "gs" else gf_table(args.max_n)
    rows = [[str(v) for v in row] for row in table]
    if args.format == "json":
        return _json(rows)
    if args.format == "csv":
        return _csv(rows)
    return "\n".join(" ".join(r) for r in rows)


def cmd_value(args):
    b = breakdown(args.n)
    if args.format == "json":
        return _json(b.to_dict())
    if args.format == "csv":
        return _csv([["k", "value"]] + [[k, str(c)] for k, c in b.terms] + [["total", str(b.total)]])
    if b.n == 1:
        return str(b.total)
    return " + ".join(str(c) for c in b.contributions) + f" = {b.total}"


def cmd_reduce(args):
    if not 1 <= args.level <= args.n - 1:
        raise UsageError(f"--level must lie in 1..{args.n - 1} (level must be < n)")
    cv = reduce_to_level(args.n, args.level)
    value, total = cv.evaluate(), v_total(args.n)
    record = {
        "n": args.n,
        "level": cv.level,
        "coefficients": [str(c) for c in cv.coefficients],
        "value": str(value),
        "total": str(total),
    }
    if cv.level == 1:
        record["K"] = str(cv.coefficients[0])
    if args.format == "json":
        return _json(record)
    if args.format == "csv":
        return _csv([["j", "coefficient"]] + [[j, str(c)] for j, c in enumerate(cv.coefficients, 1)]
                    + [["value", str(value)], ["total", str(total)]])
    terms = " + ".join(f"{c}*h({cv.level},{j})" for j, c in enumerate(cv.coefficients, 1))
    lines = [
        f"coefficients at level {cv.level}: {', '.join(record['coefficients'])}",
        f"v({args.n}-pl) = {terms} = {value}",
        f"matches v_total({args.n}) = {total}: {'yes' if value == total else 'NO'}",
    ]
    if cv.level == 1:
        lines.append(f"K = {cv.coefficients[0]}, so v({args.n}-pl) = {cv.coefficients[0]} v(1-pl)")
    return "\n".join(lines)


def cmd_chain(args):
    chain = full_chain(args.n)
    p6 = prop6_decompose(args.n)
    record = {
        "n": args.n,
        "levels": [cv.to_dict() for cv in chain.vectors],
        "K": str(chain.K),
        "power": str(p6.power),
        "R": str(p6.remainder_R),
        "total": str(v_total(args.n)),
    }
    if args.n >= 2:
        p5 = prop5_decompose(args.n)
        record["lower"] = str(p5.lower)
        record["remainder_coefficients"] = [str(c) for c in p5.remainder_coeffs.coefficients]
    if args.format == "json":
        return _json(record)
    if args.format == "csv":
        return _csv([[cv.level] + [str(c) for c in cv.coefficients] for cv in chain.vectors])
    lines = [f"level {cv.level}: {' '.join(map(str, cv.coefficients))}" for cv in chain.vectors]
    lines.append(f"K = {chain.K}")
    if args.n >= 2:
        lines.append(
            f"v({args.n}-pl) = 3*{record['lower']} + "
            f"[{', '.join(record['remainder_coefficients'])}] . h({args.n - 1},*)"
        )
    lines.append(f"v({args.n}-pl) = {p6.power} v(1-pl) + R, R = {p6.remainder_R}")
    return "\n".join(lines)


def cmd_basis(args):
    b = parse_basis(args.text)
    canonical, value = format_basis(b), basis_value(b)
    if args.format == "json":
        return _json({"basis": canonical, "predicates": b.to_dict(), "value": str(value)})
    if args.format == "csv":
        return _csv([["basis", "value"], [canonical, str(value)]])
    return f"{canonical}\nmaximum primary complexity: {value}"


def cmd_forms(args):
    count = svenonius_forms(args.n)
    patterns = form_patterns(args.n) if args.n <= MAX_PATTERN_N else None
    if args.format == "json":
        out = {"n": args.n, "value": str(count)}
        if patterns is not None:
            out["forms"] = patterns
        return _json(out)
    if args.format == "csv":
        return _csv([[args.n, str(count)] + (patterns or [])])
    noun = "form" if count == 1 else "forms"
    if patterns is None:
        return f"{count} {noun}"
    return f"{count} {noun}: {', '.join(patterns)}"


def cmd_verify(args):
    results = _verify.run_checks(args.max_n)
    ok = all(r.passed for r in results)
    if args.format == "json":
        text = _json({
            "max_n": args.max_n,
            "passed": ok,
            "checks": [{"name": r.name, "passed": r.passed, "witness": None if r.passed else str(r.witness)}
                       for r in results],
        })
    elif args.format == "csv":
        text = _csv([[r.name, "pass" if r.passed else "fail", "" if r.passed else str(r.witness)]
                     for r in results])
    else:
        failed = sum(not r.passed for r in results)
        text = "\n".join([r.line() for r in results]
                         + [f"{len(results) - failed}/{len(results)} checks passed up to n = {args.max_n}"])
    return text, (EXIT_OK if ok else EXIT_FAIL)


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    parser = argparse.ArgumentParser(
        prog="goodman",
        description="Exact Goodman primary-complexity values, tables and reductions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[fmt], help="Goodman-Savage (gs) or Goodman-Fine (gf) table")
    p.add_argument("kind", choices=["gs", "gf"])
    p.add_argument("--max-n", type=positive_int, default=7)
    p.add_argument("--ceiling", type=positive_int, default=DEFAULT_CEILING)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("value", parents=[fmt], help="maximum complexity of an n-place predicate, by arity")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("reduce", parents=[fmt], help="rewrite v(n-pl) over h(level, *)")
    p.add_argument("n", type=positive_int)
    p.add_argument("--level", type=positive_int, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("chain", parents=[fmt], help="full reduction chain n -> 1 and its decompositions")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("basis", parents=[fmt], help="value a basis written like '[2-pl.irref.; two 1-pl.]'")
    p.add_argument("text")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("forms", parents=[fmt], help="argument-identification forms of an n-place relation")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("verify", parents=[fmt], help="check every identity up to --max-n")
    p.add_argument("--max-n", type=positive_int, default=10)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        result = args.func(args)
    except UsageError as e:
        print(f"goodman {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BasisParseError as e:
        print(f"goodman basis: parse error at {e.diagnostic()}", file=sys.stderr)
        return EXIT_PARSE
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
