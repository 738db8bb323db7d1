"""Re-run the reference examples and print one PASS/FAIL line each."""
from __future__ import annotations

from .binary_forms import dixmier_closed, sl2_udenom_via_torus
from .cli import binary_forms_report, cyclo_command, finite_report, torus_report
from .cyclo import (
    CycloFactored,
    RationalFn,
    SparsePoly,
    cyclo_expand,
    factor_one_minus,
    factored_mul,
    reduce_rational,
    series_expand,
    vec_lcm,
)
from .molien import (
    GroupFamily,
    alt_denom_closed,
    alt_hilbert_closed,
    group_elements,
    molien_series,
    sym_udenom_closed,
    udenom_finite,
)
from .torus import (
    WeightSystem,
    binary_torus_udenom_closed,
    rank1_evidence,
    torus_udenom_general,
    torus_udenom_rank1,
)

WORKED_WEIGHTS = [-3, -2, 2, 5, 6]


def _t(coeffs) -> SparsePoly:
    return SparsePoly.from_coeffs(coeffs)


def _binomials(ks, one_plus_t: int = 0) -> CycloFactored:
    out = CycloFactored({2: one_plus_t}) if one_plus_t else CycloFactored()
    for k in ks:
        out = factored_mul(out, factor_one_minus(k))
    return out


def _phi(**exps) -> CycloFactored:
    return CycloFactored({int(k[1:]): v for k, v in exps.items()})


def _eq(actual, expected):
    return actual == expected, f"got {actual}, expected {expected}"


def _row(weights, d):
    return next(r for r in rank1_evidence(weights) if r.d == d)


def _check_evidence_row():
    want = "(d=2) 1+2Z:2 2+4Z:3 3+6Z:2 => m_2=2"
    text = torus_report(WeightSystem.rank_one(WORKED_WEIGHTS), shortcut=True)
    got = next(line for line in text.splitlines() if line.startswith("(d=2)"))
    return got == want, f"got {got!r}, expected {want!r}"


def _check_a10_cli():
    text = finite_report(GroupFamily("alternating", 10))
    gap = [line for line in text.splitlines() if line.startswith("udenom / denom(H)")]
    return gap == ["udenom / denom(H) = phi_6"], f"gap line {gap}"


def _check_sym3_cli():
    text = finite_report(GroupFamily("symmetric", 3)).splitlines()
    ok = "udenom = phi_1^3*phi_2*phi_3 = (1-t)(1-t^2)(1-t^3)" in text and "denom(H) = same" in text
    return ok, " | ".join(text[1:4])


def _check_binary6_cli():
    lines = binary_forms_report(6, "both").splitlines()
    torus = next(x for x in lines if x.startswith("torus = "))[8:]
    closed = next(x for x in lines if x.startswith("closed = "))[9:]
    return torus == closed and "agree: yes" in lines, f"torus {torus} / closed {closed}"


def _molien_sym3():
    pairs, size = group_elements(GroupFamily("symmetric", 3))
    return molien_series(pairs, size)


CHECKS = [
    ("vec_lcm((4,2),(6,3)) = (12,6)", lambda: _eq(vec_lcm((4, 2), (6, 3)), (12, 6))),
    ("vec_lcm((4,2),(2,2)) = (0,0)", lambda: _eq(vec_lcm((4, 2), (2, 2)), (0, 0))),
    ("phi_6 = 1 - t + t^2", lambda: _eq(cyclo_expand(6), _t([1, -1, 1]))),
    ("(1+t)/(1-t^2) reduces to 1/(1-t)",
     lambda: _eq(reduce_rational(_t([1, 1]), factor_one_minus(2)),
                 RationalFn(_t([1]), factor_one_minus(1)))),
    ("t/(1-t^2) is already reduced",
     lambda: _eq(reduce_rational(_t([0, 1]), factor_one_minus(2)),
                 RationalFn(_t([0, 1]), factor_one_minus(2)))),
    ("series of (1+t)/(1-t^2) to order 4",
     lambda: _eq(series_expand(RationalFn(_t([1, 1]), factor_one_minus(2)), 4), [1] * 5)),
    ("udenom(S_3) = (1-t)(1-t^2)(1-t^3)",
     lambda: _eq(udenom_finite(GroupFamily("symmetric", 3)), _binomials([1, 2, 3]))),
    ("udenom(A_10)",
     lambda: _eq(udenom_finite(GroupFamily("alternating", 10)),
                 _phi(p1=10, p2=4, p3=3, p4=2, p5=2, p6=1, p7=1, p8=1, p9=1))),
    ("Molien(S_3) = 1/((1-t)(1-t^2)(1-t^3))",
     lambda: _eq(_molien_sym3(), RationalFn(_t([1]), _binomials([1, 2, 3])))),
    ("denom(A_10) closed form",
     lambda: _eq(alt_denom_closed(10),
                 _phi(p1=10, p2=4, p3=3, p4=2, p5=2, p7=1, p8=1, p9=1))),
    ("H(A_3) = (1+t^3)/((1-t)(1-t^2)(1-t^3))",
     lambda: _eq(alt_hilbert_closed(3), RationalFn(_t([1, 0, 0, 1]), sym_udenom_closed(3)))),
    ("torus (-3,-2,2,5,6) general algorithm",
     lambda: _eq(torus_udenom_general(WeightSystem.rank_one(WORKED_WEIGHTS)),
                 _phi(p1=4, p2=2, p3=1, p4=1, p5=1, p7=1, p8=1))),
    ("torus (-3,-2,2,5,6) rank-1 formula",
     lambda: _eq(torus_udenom_rank1(WORKED_WEIGHTS),
                 _phi(p1=4, p2=2, p3=1, p4=1, p5=1, p7=1, p8=1))),
    ("torus (-3,-2,2,5,6): m_2 = 2 via 2+4Z of size 3",
     lambda: _eq((_row(WORKED_WEIGHTS, 2).m, (2, 4, 3) in _row(WORKED_WEIGHTS, 2).classes),
                 (2, True))),
    ("torus (-3,-2,2,5,6): m_6 = 0, no classes",
     lambda: _eq((_row(WORKED_WEIGHTS, 6).m, _row(WORKED_WEIGHTS, 6).classes), (0, ()))),
    ("binary torus closed form n=3",
     lambda: _eq(binary_torus_udenom_closed(3), _binomials([2, 2, 4]))),
    ("binary torus closed form n=6",
     lambda: _eq(binary_torus_udenom_closed(6), _binomials([1, 2, 2, 3, 4, 5]))),
    ("binary torus closed form n=5",
     lambda: _eq(binary_torus_udenom_closed(5), _binomials([2, 2, 4, 6, 8]))),
    ("SL2 via torus n=3 = 1-t^4", lambda: _eq(sl2_udenom_via_torus(3), _binomials([4]))),
    ("SL2 via torus n=6",
     lambda: _eq(sl2_udenom_via_torus(6), _binomials([2, 3, 4, 5], one_plus_t=1))),
    ("SL2 via torus n=8",
     lambda: _eq(sl2_udenom_via_torus(8), _binomials([2, 3, 4, 5, 3, 7], one_plus_t=1))),
    ("Dixmier n=5", lambda: _eq(dixmier_closed(5), _binomials([4, 6, 8]))),
    ("Dixmier n=10",
     lambda: _eq(dixmier_closed(10), _binomials(range(2, 10), one_plus_t=1))),
    ("cli finite symmetric 3", _check_sym3_cli),
    ("cli finite alternating 10: gap is phi_6", _check_a10_cli),
    ("cli torus evidence row d=2", _check_evidence_row),
    ("cli binary-forms 6 --method both", _check_binary6_cli),
    ("cli cyclo expand 6", lambda: _eq(cyclo_command("expand", ["6"]), "1 - t + t^2")),
]


def run_checks() -> list[tuple[str, bool, str]]:
    results = []
    for name, check in CHECKS:
        try:
            ok, detail = check()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(ok), detail))
    return results


def paper_report() -> tuple[bool, str]:
    results = run_checks()
    lines = []
    for name, ok, detail in results:
        lines.append(f"PASS  {name}" if ok else f"FAIL  {name}: {detail}")
    passed = sum(ok for _, ok, _ in results)
    lines.append(f"{passed}/{len(results)} passed")
    return passed == len(results), "\n".join(lines)
