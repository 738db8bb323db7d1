"""SL2 acting on binary forms of degree n.

The universal denominator agrees with that of the diagonal torus for every
``phi_d`` except the lowest orders, which are fixed by the dimension of the
invariant ring (``n - 2``):

* n odd: ``-1 in SL2`` acts by ``-1``, so all invariants have even degree
  and ``u_1 = u_2 = n - 2``; ``u_d = m_d`` for ``d >= 3``.
* n even: ``u_1 = n - 2``; ``u_d = m_d`` for ``d >= 2``.

Here ``m_d`` are the exponents of the torus universal denominator for the
weights ``-n, -n+2, ..., n``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycloFactored, factor_one_minus, factored_divides, factored_mul
from .torus import binary_forms_weights, torus_udenom_rank1


@dataclass(frozen=True)
class BinaryFormsCase:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("binary forms need degree n >= 3")

    @property
    def residue(self) -> str:
        if self.n % 2:
            return "odd"
        return "2 mod 4" if self.n % 4 == 2 else "0 mod 4"


def torus_udenom(n: int) -> CycloFactored:
    """Universal denominator for the maximal torus of SL2 on binary n-ics."""
    BinaryFormsCase(n)
    return torus_udenom_rank1(binary_forms_weights(n))


def sl2_udenom_via_torus(n: int) -> CycloFactored:
    BinaryFormsCase(n)
    m = torus_udenom(n).exponents()
    fixed = {1: n - 2, 2: n - 2} if n % 2 else {1: n - 2}
    u = {d: e for d, e in m.items() if d not in fixed}
    u.update(fixed)
    return CycloFactored(u)


def dixmier_closed(n: int) -> CycloFactored:
    """Dixmier's three-case formula in cyclotomic form.

    n odd:       (1-t^4)(1-t^6) ... (1-t^{2n-2})
    n = 2 mod 4: (1+t)(1-t^2)(1-t^3) ... (1-t^{n-1})
    n = 0 mod 4: (1+t)(1-t^2)(1-t^3) ... (1-t^{n-3}) (1-t^{n/2-1}) (1-t^{n-1})

    An empty run (``n = 4``) contributes nothing, giving
    ``(1+t)(1-t)(1-t^3) = (1-t^2)(1-t^3)`` for the quartic.
    """
    case = BinaryFormsCase(n)
    if case.residue == "odd":
        ks = [2 * k for k in range(2, n)]
        out = CycloFactored()
    elif case.residue == "2 mod 4":
        ks = list(range(2, n))
        out = CycloFactored({2: 1})
    else:
        ks = list(range(2, n - 2)) + [n // 2 - 1, n - 1]
        out = CycloFactored({2: 1})
    for k in ks:
        out = factored_mul(out, factor_one_minus(k))
    return out


def divides_check(n: int) -> bool:
    """The SL2 universal denominator divides the maximal-torus one."""
    return factored_divides(sl2_udenom_via_torus(n), torus_udenom(n))
