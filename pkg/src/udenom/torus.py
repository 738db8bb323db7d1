"""Universal denominators for diagonal torus actions on polynomial rings.

A torus ``(K*)^l`` scales coordinate ``y_i`` by the character ``w_i`` and
``y_i`` has multidegree ``d_i``.  For an index set ``I`` let ``Omega_I`` be
the group generated by the ``w_i`` and ``M_I`` the lattice generated by the
pairs ``(w_i, d_i)``.  The exponent of ``phi_d`` in the universal
denominator of the invariant ring is the largest ``#I - rank(Omega_I)`` over
all ``I`` such that

* 0 lies in the relative interior of the convex hull of ``{w_i : i in I}``, and
* the kernel lattice ``{v : (0, v) in M_I}`` is contained in ``Z d``.

:func:`torus_udenom_general` enumerates index sets.  For a one-dimensional
torus with all degrees 1 the search collapses to residue classes of the
weights, implemented by :func:`torus_udenom_rank1`.

Relative interior test
----------------------
0 is in the relative interior of ``conv(w_i)`` iff ``sum lam_i w_i = 0`` for
some ``lam`` with every ``lam_i > 0``.  If such ``lam`` exists, normalising
gives 0 as a convex combination with all weights positive, which is a
relative interior point of the hull; the affine hull then contains 0 and so
equals the linear span.  Conversely, a relative interior point of a
polytope is a strictly positive convex combination of its spanning points.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .cyclo import CycloFactored, CycloKey, divisors, factor_one_minus, factored_mul
from .linalg import has_positive_kernel_vector, hermite_rows


class SubsetBoundExceeded(RuntimeError):
    """Raised when subset enumeration would exceed the configured bound."""


def _vec(x) -> tuple[int, ...]:
    if isinstance(x, int):
        return (x,)
    return tuple(int(v) for v in x)


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[tuple[int, ...], ...]
    degrees: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        w = tuple(_vec(x) for x in self.weights)
        d = tuple(_vec(x) for x in self.degrees)
        if not w:
            raise ValueError("weight system needs at least one coordinate")
        if len(w) != len(d):
            raise ValueError("weights and degrees differ in length")
        if len({len(x) for x in w}) != 1 or len({len(x) for x in d}) != 1:
            raise ValueError("inconsistent vector lengths")
        for x in d:
            if any(v < 0 for v in x) or not any(x):
                raise ValueError(f"degree {x} must be nonzero with nonnegative entries")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "degrees", d)

    @classmethod
    def rank_one(cls, weights, degrees=None) -> WeightSystem:
        """One-dimensional torus; all degrees 1 unless given."""
        weights = [int(w) for w in weights]
        if degrees is None:
            degrees = [1] * len(weights)
        return cls(tuple((w,) for w in weights), tuple(_vec(d) for d in degrees))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.weights[0])

    @property
    def r(self) -> int:
        return len(self.degrees[0])

    def append(self, weight, degree) -> WeightSystem:
        return WeightSystem(self.weights + (_vec(weight),), self.degrees + (_vec(degree),))


@dataclass(frozen=True)
class SubsetData:
    indices: tuple[int, ...]
    rank: int
    interior: bool
    lattice: tuple[tuple[int, ...], ...]


def interior_contains_zero(points) -> bool:
    """Is 0 in the interior of the hull of ``points`` taken inside their span?"""
    pts = [_vec(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    if all(not any(p) for p in pts):
        return True
    if len(pts[0]) == 1:
        return any(p[0] > 0 for p in pts) and any(p[0] < 0 for p in pts)
    return has_positive_kernel_vector(pts)


def _echelon(ws: WeightSystem, indices) -> tuple[int, list[tuple[int, ...]]]:
    rows = [ws.weights[i] + ws.degrees[i] for i in indices]
    basis, pivots = hermite_rows(rows, ws.l + ws.r)
    rank = sum(1 for p in pivots if p < ws.l)
    lattice = [tuple(row[ws.l:]) for row, p in zip(basis, pivots) if p >= ws.l]
    return rank, lattice


def kernel_lattice(ws: WeightSystem, indices) -> list[tuple[int, ...]]:
    """Echelon basis of ``{v in Z^r : (0, v) in M_I}``."""
    indices = tuple(indices)
    if not indices:
        raise ValueError("index set must be nonempty")
    return _echelon(ws, indices)[1]


def subset_data(ws: WeightSystem, indices) -> SubsetData:
    indices = tuple(indices)
    rank, lattice = _echelon(ws, indices)
    interior = interior_contains_zero([ws.weights[i] for i in indices])
    return SubsetData(indices, rank, interior, tuple(lattice))


def torus_udenom_general(ws: WeightSystem, subset_bound: int = 22) -> CycloFactored:
    """Universal denominator by enumerating every index subset."""
    if ws.n > subset_bound:
        raise SubsetBoundExceeded(f"{ws.n} coordinates exceed the subset bound {subset_bound}")
    best: dict[CycloKey, int] = {}
    for mask in range(1, 1 << ws.n):
        idx = [i for i in range(ws.n) if mask >> i & 1]
        if not interior_contains_zero([ws.weights[i] for i in idx]):
            continue
        rank, lattice = _echelon(ws, idx)
        credit = len(idx) - rank
        if credit <= 0 or len(lattice) != 1:
            # a rank >= 2 kernel lies in no Z d; rank 0 cannot occur with nonzero degrees
            continue
        g = lattice[0]
        if any(v < 0 for v in g):
            g = tuple(-v for v in g)
        if any(v < 0 for v in g):
            raise ArithmeticError(f"kernel generator {lattice[0]} is not sign-definite")
        c = reduce(math.gcd, g)
        p = tuple(v // c for v in g)
        for j in divisors(c):
            key = CycloKey(j, p)
            if best.get(key, 0) < credit:
                best[key] = credit
    return CycloFactored(best)


@dataclass(frozen=True)
class EvidenceRow:
    """Residue classes ``ab + adZ`` that meet both signs, for one ``d``."""

    d: int
    classes: tuple[tuple[int, int, int], ...]  # (residue ab, modulus ad, #weights)
    m: int

    def format(self) -> str:
        body = " ".join(f"{res}+{mod}Z:{cnt}" for res, mod, cnt in self.classes) or "-"
        return f"(d={self.d}) {body} => m_{self.d}={self.m}"


def rank1_evidence(weights) -> list[EvidenceRow]:
    """Per-``d`` residue-class table for a one-dimensional torus, degrees 1.

    Rows cover ``2 <= d <= max(w) - min(w)``; beyond that no class can hold
    both a positive and a negative weight.
    """
    w = [int(x) for x in weights]
    if not w:
        raise ValueError("need at least one weight")
    span = max(w) - min(w)
    rows = []
    for d in range(2, span + 1):
        classes = []
        for a in range(1, span // d + 1):
            mod = a * d
            for b in range(1, d):
                if math.gcd(b, d) != 1:
                    continue
                res = a * b
                members = [x for x in w if (x - res) % mod == 0]
                if any(x > 0 for x in members) and any(x < 0 for x in members):
                    classes.append((res, mod, len(members)))
        m = max((cnt for _, _, cnt in classes), default=1) - 1
        rows.append(EvidenceRow(d, tuple(classes), m))
    return rows


def torus_udenom_rank1(weights) -> CycloFactored:
    """Residue-class formula for a one-dimensional torus with all degrees 1."""
    w = [int(x) for x in weights]
    if not w:
        raise ValueError("need at least one weight")
    if all(x >= 0 for x in w) or all(x <= 0 for x in w):
        m1 = sum(1 for x in w if x == 0)
    else:
        m1 = len(w) - 1
    exps = {1: m1}
    for row in rank1_evidence(w):
        exps[row.d] = row.m
    return CycloFactored(exps)


def binary_forms_weights(n: int) -> list[int]:
    """Torus weights ``-n, -n+2, ..., n`` of the diagonal subgroup on binary n-ics."""
    return list(range(-n, n + 1, 2))


def _binomials(ks) -> CycloFactored:
    out = CycloFactored()
    for k in ks:
        out = factored_mul(out, factor_one_minus(k))
    return out


def binary_torus_udenom_closed(n: int) -> CycloFactored:
    """Closed form of the torus universal denominator for weights ``-n..n`` step 2.

    n odd:       (1-t^2)^2 (1-t^4) ... (1-t^{2n-2})
    n = 2 mod 4: (1-t)(1-t^2)^2(1-t^3) ... (1-t^{n-1})
    n = 0 mod 4: (1-t)(1-t^2)^2(1-t^3) ... (1-t^{n-3}) (1-t^{n/2-1}) (1-t^{n-1})

    Each is read as ``(1-t^2)`` times a run of binomials; a run whose upper
    end is below its start is empty.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if n % 2:
        ks = [2] + [2 * k for k in range(1, n)]
    elif n % 4 == 2:
        ks = [2] + list(range(1, n))
    else:
        ks = [2] + list(range(1, n - 2)) + [n // 2 - 1, n - 1]
    return _binomials(ks)
