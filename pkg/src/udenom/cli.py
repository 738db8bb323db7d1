"""Command-line front end: ``udenom <command> ...``.

Exit codes: 0 success, 2 parse error, 3 resource bound, 4 Galois-unstable
input, 5 paper-report mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import binary_forms as bf
from .cyclo import (
    CycloFactored,
    RationalFn,
    SparsePoly,
    cyclo_expand,
    factor_one_minus,
    factored_div,
    factored_divides,
    factored_gcd,
    factored_lcm,
    split_degree,
)
from .molien import (
    DEFAULT_BOUND,
    ExplicitGroup,
    GaloisUnstable,
    GroupFamily,
    GroupTooLarge,
    PermutationGroup,
    group_elements,
    molien_series,
    parse_group_spec,
    pointwise_max,
)
from .torus import (
    SubsetBoundExceeded,
    WeightSystem,
    rank1_evidence,
    torus_udenom_general,
    torus_udenom_rank1,
)

EXIT_OK, EXIT_PARSE, EXIT_BOUND, EXIT_GALOIS, EXIT_REPORT = 0, 2, 3, 4, 5


class InputError(ValueError):
    """Malformed command input."""


# ---------------------------------------------------------------------------
# rendering helpers
# ---------------------------------------------------------------------------

def binomial_text(f: CycloFactored) -> str | None:
    ks = f.binomial_form()
    if ks is None:
        return None
    if not ks:
        return "1"
    out = []
    for k in sorted(set(ks)):
        base = "(1-t)" if k == 1 else f"(1-t^{k})"
        e = ks.count(k)
        out.append(base if e == 1 else f"{base}^{e}")
    return "".join(out)


def factored_text(f: CycloFactored) -> str:
    b = binomial_text(f)
    return f"{f}" if b is None or not f else f"{f} = {b}"


def _num(c):
    return c if isinstance(c, int) else str(c)


def poly_json(p: SparsePoly) -> list:
    return [[list(e), _num(c)] for e, c in p.items()]


def rational_json(f: RationalFn) -> dict:
    return {"numerator": poly_json(f.numerator), "denominator": f.denominator.to_json()}


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def load_input(source: str):
    """JSON from inline text, a file path, or ``-`` for stdin."""
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def parse_degree(text: str) -> tuple[int, ...]:
    try:
        d = tuple(int(x) for x in text.strip("() ").split(","))
        split_degree(d)
    except ValueError as exc:
        raise InputError(f"bad degree vector {text!r}: {exc}") from exc
    return d


def parse_factored(text: str) -> CycloFactored:
    try:
        return CycloFactored.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# ---------------------------------------------------------------------------
# commands (return text so the report command can reuse them)
# ---------------------------------------------------------------------------

def _describe(spec) -> str:
    if isinstance(spec, GroupFamily):
        return f"family {spec.name} {spec.n}"
    if isinstance(spec, PermutationGroup):
        return f"permutation group on {spec.n} points, {len(spec.generators)} generators"
    return f"explicit group, {len(spec.elements)} elements"


def finite_report(spec, output: str = "factored", order: int | None = None,
                  bound: int = DEFAULT_BOUND) -> str:
    pairs, size = group_elements(spec, bound)
    udenom = pointwise_max(e for e, _ in pairs).to_factored()
    h = molien_series(pairs, size)
    gap = factored_div(udenom, h.denominator)
    series = h.series(order) if order is not None else None
    if output == "json":
        obj = {
            "schema": 1,
            "command": "finite",
            "order_of_group": size,
            "udenom": udenom.to_json(),
            "molien": rational_json(h),
            "gap": gap.to_json(),
        }
        if series is not None:
            obj["series"] = [_num(c) for c in series]
        return dump_json(obj)
    if output == "coeffs":
        lines = [f"udenom: {udenom.dense()}", f"denom(H): {h.denominator.dense()}"]
        if series is not None:
            lines.append(f"series: {[_num(c) for c in series]}")
        return "\n".join(lines)
    lines = [
        f"group: {_describe(spec)} (|G| = {size})",
        f"udenom = {factored_text(udenom)}",
        f"molien = {h}",
    ]
    if not gap:
        lines.append("denom(H) = same")
    else:
        lines.append(f"denom(H) = {factored_text(h.denominator)}")
        lines.append(f"udenom / denom(H) = {gap}")
    if series is not None:
        lines.append("series = " + ", ".join(str(c) for c in series))
    return "\n".join(lines)


def parse_weight_system(obj) -> tuple[WeightSystem, bool]:
    """Return the weight system and whether it used the rank-one shortcut."""
    try:
        if "degrees" not in obj and all(isinstance(w, int) for w in obj["weights"]):
            return WeightSystem.rank_one(obj["weights"]), True
        ws = WeightSystem(obj["weights"], obj["degrees"])
        for key, val in (("l", ws.l), ("r", ws.r)):
            if key in obj and int(obj[key]) != val:
                raise ValueError(f"declared {key}={obj[key]} but vectors have length {val}")
        return ws, False
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad torus input: {exc}") from exc


def _is_rank1(ws: WeightSystem) -> bool:
    return ws.l == 1 and ws.r == 1 and all(d == (1,) for d in ws.degrees)


def torus_report(ws: WeightSystem, shortcut: bool = False, output: str = "factored",
                 bound: int = 22) -> str:
    rank1 = _is_rank1(ws)
    general = None
    if ws.n <= bound or not (shortcut and rank1):
        general = torus_udenom_general(ws, bound)
    fast = torus_udenom_rank1([w[0] for w in ws.weights]) if rank1 else None
    evidence = rank1_evidence([w[0] for w in ws.weights]) if rank1 else []
    result = general if general is not None else fast
    if output == "json":
        obj = {"schema": 1, "command": "torus", "udenom": result.to_json()}
        if general is not None:
            obj["general"] = general.to_json()
        if fast is not None:
            obj["rank1"] = fast.to_json()
            obj["evidence"] = [
                {"d": row.d, "classes": [list(c) for c in row.classes], "m": row.m}
                for row in evidence
            ]
        return dump_json(obj)
    if output == "coeffs":
        if result.nvars not in (None, 1):
            return f"udenom: {result.expand()}"
        return f"udenom: {result.dense()}"
    lines = [f"udenom = {factored_text(result)}"]
    if general is not None and fast is not None:
        lines.append("general = rank1: " + ("yes" if general == fast else f"NO (rank1 = {fast})"))
    elif fast is not None:
        lines.append(f"general: skipped ({ws.n} coordinates > bound {bound})")
    if evidence:
        w = [x[0] for x in ws.weights]
        m1 = torus_udenom_rank1(w)[1]
        lines.append(f"(d=1) => m_1={m1}")
        lines += [row.format() for row in evidence]
    return "\n".join(lines)


def binary_forms_report(n: int, method: str = "both", output: str = "factored") -> str:
    torus = bf.sl2_udenom_via_torus(n) if method in ("torus", "both") else None
    closed = bf.dixmier_closed(n) if method in ("closed", "both") else None
    maximal = bf.torus_udenom(n)
    if output == "json":
        obj = {"schema": 1, "command": "binary-forms", "n": n,
               "maximal_torus": maximal.to_json()}
        if torus is not None:
            obj["torus"] = torus.to_json()
        if closed is not None:
            obj["closed"] = closed.to_json()
        return dump_json(obj)
    if output == "coeffs":
        lines = []
        if torus is not None:
            lines.append(f"torus: {torus.dense()}")
        if closed is not None:
            lines.append(f"closed: {closed.dense()}")
        return "\n".join(lines)
    lines = [f"binary forms of degree {n} ({bf.BinaryFormsCase(n).residue})"]
    if torus is not None:
        lines.append(f"torus = {torus}")
    if closed is not None:
        lines.append(f"closed = {closed}")
    if torus is not None and closed is not None:
        lines.append("agree: " + ("yes" if torus == closed else "NO"))
    sl2 = torus if torus is not None else closed
    lines.append(f"maximal torus = {maximal}")
    lines.append("divides maximal torus: " + ("yes" if factored_divides(sl2, maximal) else "NO"))
    return "\n".join(lines)


def cyclo_command(op: str, args: list[str], output: str = "factored") -> str:
    if op == "expand":
        if len(args) != 1:
            raise InputError("expand takes one degree")
        k, p = split_degree(parse_degree(args[0]))
        poly = cyclo_expand((k, p))
        if output == "json":
            return dump_json({"schema": 1, "command": "cyclo expand", "poly": poly_json(poly)})
        if output == "coeffs" and poly.nvars == 1:
            return str(poly.coeffs())
        return str(poly)
    if op == "factor":
        if len(args) != 1:
            raise InputError("factor takes one degree")
        result = factor_one_minus(parse_degree(args[0]))
    elif op in ("lcm", "gcd", "divides"):
        if len(args) != 2:
            raise InputError(f"{op} takes two factored values")
        a, b = (parse_factored(x) for x in args)
        if op == "divides":
            ok = factored_divides(a, b)
            return dump_json({"schema": 1, "command": "cyclo divides", "divides": ok}) \
                if output == "json" else ("true" if ok else "false")
        result = factored_lcm(a, b) if op == "lcm" else factored_gcd(a, b)
    else:
        raise InputError(f"unknown cyclo operation {op!r}")
    if output == "json":
        return dump_json({"schema": 1, "command": f"cyclo {op}", "factored": result.to_json()})
    if output == "coeffs":
        return str(result.expand().coeffs()) if result.nvars in (None, 1) else str(result.expand())
    return str(result)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["factored", "json", "coeffs"], default="factored")

    parser = argparse.ArgumentParser(prog="udenom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("finite", parents=[common], help="finite group (GroupSpec JSON)")
    p.add_argument("input", nargs="?", default="-", help="JSON text, file path, or - for stdin")
    p.add_argument("--order", type=int, default=None, help="print series to this degree")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="max group order to enumerate")

    p = sub.add_parser("torus", parents=[common], help="diagonal torus action (weights JSON)")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--bound", type=int, default=22, help="max coordinates for subset enumeration")

    p = sub.add_parser("binary-forms", parents=[common], help="SL2 on binary forms of degree n")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["torus", "closed", "both"], default="both")

    p = sub.add_parser("cyclo", parents=[common], help="cyclotomic arithmetic")
    p.add_argument("op", choices=["expand", "factor", "lcm", "gcd", "divides"])
    p.add_argument("args", nargs="+")

    sub.add_parser("paper-report", help="re-run the reference examples")
    return parser


def run(argv=None) -> tuple[int, str]:
    """Run a command; return ``(exit code, text)``."""
    args = build_parser().parse_args(argv)
    try:
        if args.command == "finite":
            obj = load_input(args.input)
            try:
                spec = parse_group_spec(obj)
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(f"bad group spec: {exc}") from exc
            if isinstance(spec, ExplicitGroup) and args.bound < len(spec.elements):
                raise GroupTooLarge(f"group has more than {args.bound} elements")
            return EXIT_OK, finite_report(spec, args.output, args.order, args.bound)
        if args.command == "torus":
            ws, shortcut = parse_weight_system(load_input(args.input))
            return EXIT_OK, torus_report(ws, shortcut, args.output, args.bound)
        if args.command == "binary-forms":
            if args.n < 3:
                raise InputError("n must be >= 3")
            return EXIT_OK, binary_forms_report(args.n, args.method, args.output)
        if args.command == "cyclo":
            return EXIT_OK, cyclo_command(args.op, args.args, args.output)
        if args.command == "paper-report":
            from .report import paper_report

            ok, text = paper_report()
            return (EXIT_OK if ok else EXIT_REPORT), text
    except InputError as exc:
        return EXIT_PARSE, f"error: {exc}"
    except (GroupTooLarge, SubsetBoundExceeded) as exc:
        return EXIT_BOUND, f"error: {exc}"
    except GaloisUnstable as exc:
        return EXIT_GALOIS, f"error: {exc}"
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    code, text = run(argv)
    stream = sys.stderr if code in (EXIT_PARSE, EXIT_BOUND, EXIT_GALOIS) else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
