"""Finite-group universal denominators and Molien series.

A group element ``g`` acting on an ``n``-dimensional space is described by
its eigenvalues, each a root of unity recorded as a fraction in ``[0, 1)``
(``b/d`` stands for ``exp(2 pi i b/d)``).  ``det(id - t g)`` is then the
product of ``1 - zeta t`` over the eigenvalues, and the universal
denominator of the invariant ring is the lcm of these determinants: the
exponent of ``phi_d`` is the largest multiplicity of a primitive ``d``-th
root over all group elements.

Molien's series is computed with the ``1/|G|`` averaging factor.
"""
from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Union

from .cyclo import (
    CycloFactored,
    RationalFn,
    SparsePoly,
    divisors,
    factor_one_minus,
    factored_mul,
    rational_sum,
    reduce_rational,
)

DEFAULT_BOUND = 10**6


class GaloisUnstable(ValueError):
    """Multiplicities differ across the primitive roots of one order."""


class GroupTooLarge(RuntimeError):
    """Enumeration would exceed the configured element bound."""


def root(num: int, den: int) -> Fraction:
    """The root of unity ``exp(2 pi i num/den)`` as a reduced fraction in [0, 1)."""
    if den <= 0:
        raise ValueError("root denominator must be positive")
    return Fraction(num, den) % 1


class RootMultiset:
    """Eigenvalue multiset of one group element."""

    __slots__ = ("mult",)

    def __init__(self, mult=()):
        c: Counter = Counter()
        items = mult.items() if hasattr(mult, "items") else ((m, 1) for m in mult)
        for frac, k in items:
            frac = Fraction(frac) % 1
            if k < 0:
                raise ValueError("multiplicities must be nonnegative")
            c[frac] += k
        self.mult = {f: c[f] for f in sorted(c) if c[f] > 0}

    @classmethod
    def identity(cls, n: int) -> RootMultiset:
        return cls({Fraction(0): n})

    @property
    def dim(self) -> int:
        return sum(self.mult.values())

    def __getitem__(self, frac) -> int:
        return self.mult.get(Fraction(frac) % 1, 0)

    def __eq__(self, other):
        if not isinstance(other, RootMultiset):
            return NotImplemented
        return self.mult == other.mult

    def __hash__(self):
        return hash(tuple(self.mult.items()))

    def __repr__(self):
        inner = ", ".join(f"{f.numerator}/{f.denominator}: {k}" for f, k in self.mult.items())
        return f"RootMultiset({{{inner}}})"

    def __add__(self, other: RootMultiset) -> RootMultiset:
        """Direct sum of the two actions."""
        out = Counter(self.mult)
        out.update(other.mult)
        return RootMultiset(out)

    def maximum(self, other: RootMultiset) -> RootMultiset:
        keys = set(self.mult) | set(other.mult)
        return RootMultiset({k: max(self[k], other[k]) for k in keys})

    def is_identity(self) -> bool:
        return set(self.mult) <= {Fraction(0)}

    def orders(self) -> set[int]:
        return {f.denominator for f in self.mult}

    def galois_defects(self) -> list[int]:
        """Orders ``d`` whose primitive roots carry unequal multiplicities."""
        bad = []
        for d in sorted(self.orders()):
            vals = {self[Fraction(b, d)] for b in range(d) if math.gcd(b, d) == 1}
            if len(vals) > 1:
                bad.append(d)
        return bad

    def to_factored(self) -> CycloFactored:
        """``prod phi_d^{mult at 1/d}``, after checking Galois stability."""
        bad = self.galois_defects()
        if bad:
            raise GaloisUnstable(f"eigenvalue multiplicities not Galois-stable at orders {bad}")
        return CycloFactored({d: self[Fraction(1, d)] for d in self.orders()})


@dataclass(frozen=True, order=True)
class CycleType:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(k) for k in self.parts), reverse=True))
        if not parts or any(k < 1 for k in parts):
            raise ValueError("cycle type needs positive parts")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def sign(self) -> int:
        return -1 if (self.n - len(self.parts)) % 2 else 1

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


# ---------------------------------------------------------------------------
# group descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExplicitGroup:
    elements: tuple[RootMultiset, ...]

    def __post_init__(self):
        els = tuple(self.elements)
        if not els:
            raise ValueError("explicit group needs at least one element")
        dims = {e.dim for e in els}
        if len(dims) != 1:
            raise ValueError(f"elements act in different dimensions {sorted(dims)}")
        if not any(e.is_identity() for e in els):
            raise ValueError("explicit element list must contain the identity")
        object.__setattr__(self, "elements", els)


@dataclass(frozen=True)
class PermutationGroup:
    n: int
    generators: tuple[tuple[int, ...], ...]  # 0-based one-line images

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        for g in gens:
            if sorted(g) != list(range(self.n)):
                raise ValueError(f"{g} is not a permutation of {self.n} points")
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GroupFamily:
    name: str  # "symmetric" | "alternating"
    n: int

    def __post_init__(self):
        if self.name not in ("symmetric", "alternating"):
            raise ValueError(f"unknown family {self.name!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")


GroupSpec = Union[ExplicitGroup, PermutationGroup, GroupFamily]


def parse_group_spec(obj: dict) -> GroupSpec:
    """Build a group from its JSON object form.

    Permutation generators are one-line images on the points ``1..n``.
    """
    kind = obj.get("kind")
    if kind == "elements":
        els = []
        for el in obj["eigenvalues"]:
            els.append(RootMultiset({root(e["num"], e["den"]): e.get("mult", 1) for e in el}))
        return ExplicitGroup(tuple(els))
    if kind == "permutation":
        n = int(obj["n"])
        gens = tuple(tuple(int(x) - 1 for x in g) for g in obj.get("generators", []))
        return PermutationGroup(n, gens)
    if kind == "family":
        return GroupFamily(obj["name"], int(obj["n"]))
    raise ValueError(f"unknown group kind {kind!r}")


# ---------------------------------------------------------------------------
# permutations and classes
# ---------------------------------------------------------------------------

def eigen_from_cycle_type(c: CycleType) -> RootMultiset:
    """A ``k``-cycle contributes every ``k``-th root of unity once."""
    out: Counter = Counter()
    for k in c.parts:
        for j in range(k):
            out[Fraction(j, k)] += 1
    return RootMultiset(out)


def char_det_factored(e: RootMultiset) -> SparsePoly:
    """Expanded ``det(id - t g)`` for a Galois-stable eigenvalue multiset."""
    return e.to_factored().expand()


def cycle_type(perm) -> CycleType:
    n = len(perm)
    seen = [False] * n
    parts = []
    for i in range(n):
        if not seen[i]:
            k = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            parts.append(k)
    return CycleType(tuple(parts))


def perm_group_closure(generators, n: int, bound: int = DEFAULT_BOUND) -> list[tuple[CycleType, int]]:
    """Enumerate the group generated by ``generators`` (0-based one-line images).

    Returns ``(cycle type, element count)`` pairs sorted by cycle type,
    largest parts first.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(n)):
            raise ValueError(f"{g} is not a permutation of {n} points")
    ident = tuple(range(n))
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > bound:
                    raise GroupTooLarge(f"group has more than {bound} elements")
                queue.append(y)
    counts = Counter(cycle_type(p) for p in seen)
    return sorted(counts.items(), key=lambda kv: kv[0].parts, reverse=True)


def partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as weakly decreasing tuples, reverse-lexicographic."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _class_size(parts) -> int:
    n = sum(parts)
    denom = 1
    for k, m in Counter(parts).items():
        denom *= k**m * math.factorial(m)
    return math.factorial(n) // denom


def conjugacy_classes(family: str, n: int) -> list[tuple[CycleType, int]]:
    """Conjugacy classes of the symmetric or alternating group on ``n`` points.

    Alternating classes whose parts are odd and pairwise distinct split into
    two classes of equal size; both halves are listed.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if family not in ("symmetric", "alternating"):
        raise ValueError(f"unknown family {family!r}")
    out = []
    for parts in partitions(n):
        c = CycleType(parts)
        size = _class_size(parts)
        if family == "symmetric":
            out.append((c, size))
        elif c.sign == 1:
            splits = n > 1 and all(k % 2 for k in parts) and len(set(parts)) == len(parts)
            if splits:
                out += [(c, size // 2), (c, size // 2)]
            else:
                out.append((c, size))
    return out


def group_elements(spec: GroupSpec, bound: int = DEFAULT_BOUND) -> tuple[list[tuple[RootMultiset, int]], int]:
    """``([(eigenvalues, count), ...], |G|)`` for any group description."""
    if isinstance(spec, GroupFamily):
        classes = conjugacy_classes(spec.name, spec.n)
        pairs = [(eigen_from_cycle_type(c), k) for c, k in classes]
    elif isinstance(spec, PermutationGroup):
        classes = perm_group_closure(spec.generators, spec.n, bound)
        pairs = [(eigen_from_cycle_type(c), k) for c, k in classes]
    elif isinstance(spec, ExplicitGroup):
        if len(spec.elements) > bound:
            raise GroupTooLarge(f"group has more than {bound} elements")
        pairs = list(Counter(spec.elements).items())
    else:
        raise TypeError(f"not a group description: {spec!r}")
    return pairs, sum(k for _, k in pairs)


def pointwise_max(elements) -> RootMultiset:
    return reduce(RootMultiset.maximum, elements)


def udenom_finite(spec: GroupSpec, bound: int = DEFAULT_BOUND) -> CycloFactored:
    """lcm of ``det(id - t g)`` over the group, in factored form."""
    pairs, _ = group_elements(spec, bound)
    return pointwise_max(e for e, _ in pairs).to_factored()


def molien_series(classes, order_of_g: int) -> RationalFn:
    """``(1/|G|) sum count / det(id - t g)``, reduced."""
    classes = list(classes)
    total = sum(k for _, k in classes)
    if total != order_of_g:
        raise ValueError(f"class counts sum to {total}, not {order_of_g}")
    terms = [(Fraction(k, order_of_g), e.to_factored()) for e, k in classes]
    return rational_sum(terms)


def direct_product(a, b) -> list[tuple[RootMultiset, int]]:
    """Element list of ``G x H`` acting on the direct sum of the two spaces."""
    out: Counter = Counter()
    for ea, ka in a:
        for eb, kb in b:
            out[ea + eb] += ka * kb
    return list(out.items())


# ---------------------------------------------------------------------------
# closed forms for symmetric and alternating groups
# ---------------------------------------------------------------------------

def sym_udenom_closed(n: int) -> CycloFactored:
    """``(1-t)(1-t^2)...(1-t^n)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = CycloFactored()
    for k in range(1, n + 1):
        out = factored_mul(out, factor_one_minus(k))
    return out


def alt_udenom_exponent(n: int, d: int) -> int:
    """Largest multiplicity of a primitive ``d``-th root over even permutations.

    ``q = floor(n/d)`` is attained when ``d`` is odd, ``q`` is even, or there
    is room (``d q <= n - 2``) for an extra transposition; otherwise ``q - 1``.
    """
    q = n // d
    if d % 2 or q % 2 == 0 or d * q <= n - 2:
        return q
    return q - 1


def alt_udenom_closed(n: int) -> CycloFactored:
    if n < 3:
        raise ValueError("n must be >= 3")
    return CycloFactored({d: alt_udenom_exponent(n, d) for d in range(1, n + 1)})


def alt_denom_closed(n: int) -> CycloFactored:
    """Denominator of the alternating-group Hilbert series in lowest terms."""
    if n < 3:
        raise ValueError("n must be >= 3")
    top = n * (n - 1)
    exps = {}
    for d in range(1, n + 1):
        q = n // d
        if top % d == 0 and (top // d) % 2 == 1:
            exps[d] = max(0, q - 1)
        else:
            exps[d] = q
    return CycloFactored(exps)


def alt_hilbert_closed(n: int) -> RationalFn:
    """``(1 + t^{n(n-1)/2}) / prod_{k <= n} (1 - t^k)``, not reduced."""
    if n < 3:
        raise ValueError("n must be >= 3")
    deg = n * (n - 1) // 2
    return RationalFn(SparsePoly({(0,): 1, (deg,): 1}), sym_udenom_closed(n))


def numerator_divisors(n: int) -> list[int]:
    """Orders ``d`` with ``phi_d | 1 + t^{n(n-1)/2}``."""
    top = n * (n - 1)
    return [d for d in divisors(top) if (top // d) % 2 == 1]


def reduced(f: RationalFn) -> RationalFn:
    return reduce_rational(f.numerator, f.denominator)
