"""Exact polynomial, cyclotomic and rational-function arithmetic.

Every denominator in this package is a finite product of cyclotomic
polynomials.  The conventions are:

* ``phi_k`` is normalised so that ``phi_k(0) == 1``; for ``k >= 2`` this is
  the usual cyclotomic polynomial and ``phi_1 = 1 - t``.
* For a degree vector ``d = k * p`` with ``p`` primitive (entries with gcd 1)
  the multivariate factor is ``phi_d(t) = phi_k(t^p)``.  Such a factor is
  keyed by :class:`CycloKey` ``(k, p)``.
* A :class:`CycloFactored` maps keys to exponents and is printed sorted by
  ``(order, direction)``.

Rational-function reduction and power series expansion are univariate only.
"""
from __future__ import annotations

import math
import re
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache, reduce
from typing import NamedTuple, Union

Coeff = Union[int, Fraction]


# ---------------------------------------------------------------------------
# degree vectors
# ---------------------------------------------------------------------------

def as_vector(d) -> tuple[int, ...]:
    """Coerce an int or an iterable of ints to a degree-vector tuple."""
    if isinstance(d, int):
        return (d,)
    return tuple(int(x) for x in d)


def _check_degree(d, allow_zero=False) -> tuple[int, ...]:
    d = as_vector(d)
    if not d:
        raise ValueError("degree vector must have at least one entry")
    if any(x < 0 for x in d):
        raise ValueError(f"degree vector {d} has a negative entry")
    if not allow_zero and not any(d):
        raise ValueError("degree vector must be nonzero")
    return d


def split_degree(d) -> tuple[int, tuple[int, ...]]:
    """Write a nonzero ``d`` as ``k * p`` with ``p`` primitive; return ``(k, p)``."""
    d = _check_degree(d)
    k = reduce(math.gcd, d)
    return k, tuple(x // k for x in d)


def vec_divides(d, e) -> bool:
    """True iff ``e == k * d`` for some natural number ``k``."""
    d = _check_degree(d)
    e = _check_degree(e, allow_zero=True)
    if len(d) != len(e):
        raise ValueError("degree vectors of different length")
    if not any(e):
        return True
    kd, pd = split_degree(d)
    ke, pe = split_degree(e)
    return pd == pe and ke % kd == 0


def vec_lcm(d, e) -> tuple[int, ...]:
    """Smallest nonzero vector divisible by both, or the zero vector if none exists.

    >>> vec_lcm((4, 2), (6, 3))
    (12, 6)
    >>> vec_lcm((4, 2), (2, 2))
    (0, 0)
    """
    d = _check_degree(d)
    e = _check_degree(e)
    if len(d) != len(e):
        raise ValueError("degree vectors of different length")
    kd, pd = split_degree(d)
    ke, pe = split_degree(e)
    if pd != pe:
        return (0,) * len(d)
    k = kd * ke // math.gcd(kd, ke)
    return tuple(k * x for x in pd)


def divisors(k: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= k:
        if k % i == 0:
            small.append(i)
            if i * i != k:
                large.append(k // i)
        i += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _dense_add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _trim(out)


def _dense_divmod(a: list, b: list) -> tuple[list, list]:
    """Long division of dense coefficient lists over the rationals."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    _trim(r)
    lead = b[-1]
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db]
        if c == 0:
            continue
        c = c // lead if isinstance(c, int) and c % lead == 0 else Fraction(c) / lead
        q[i] = c
        for j, y in enumerate(b):
            r[i + j] -= c * y
    return _normalize_list(_trim(q)), _normalize_list(_trim(r))


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _normalize_list(a: list) -> list:
    return [_normalize_coeff(c) for c in a]


# ---------------------------------------------------------------------------
# sparse Laurent polynomials
# ---------------------------------------------------------------------------

class SparsePoly:
    """Sparse Laurent polynomial in ``nvars`` variables with exact coefficients.

    Coefficients are Python ints (Fractions are allowed and collapse to ints
    when integral).  Zero coefficients are never stored.  Instances are
    treated as immutable.
    """

    __slots__ = ("_terms", "nvars")

    def __init__(self, terms: Mapping | None = None, nvars: int = 1):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = as_vector(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            c = _normalize_coeff(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self.nvars = nvars

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, c: Coeff, nvars: int = 1) -> SparsePoly:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exp, c: Coeff = 1) -> SparsePoly:
        exp = as_vector(exp)
        return cls({exp: c}, len(exp))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Coeff], shift: int = 0) -> SparsePoly:
        """Univariate polynomial from a dense list (lowest degree first)."""
        return cls({(i + shift,): c for i, c in enumerate(coeffs) if c}, 1)

    # access ------------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in graded-lexicographic order (ascending)."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exp) -> Coeff:
        return self._terms.get(as_vector(exp), 0)

    def _require_univariate(self):
        if self.nvars != 1:
            raise ValueError("operation is only defined for univariate polynomials")

    def degree(self) -> int:
        self._require_univariate()
        if not self._terms:
            return -1
        return max(e[0] for e in self._terms)

    def low_degree(self) -> int:
        self._require_univariate()
        if not self._terms:
            return 0
        return min(e[0] for e in self._terms)

    def coeffs(self) -> list:
        """Dense coefficient list of a univariate polynomial (no negative powers)."""
        self._require_univariate()
        if not self._terms:
            return []
        if self.low_degree() < 0:
            raise ValueError("Laurent polynomial has negative powers")
        out = [0] * (self.degree() + 1)
        for (e,), c in self._terms.items():
            out[e] = c
        return out

    def substitute(self, point) -> Coeff:
        """Evaluate at a point of exact numbers (one per variable)."""
        point = tuple(point)
        total = 0
        for exp, c in self._terms.items():
            term = Fraction(c)
            for x, k in zip(point, exp):
                term *= Fraction(x) ** k
            total += term
        return _normalize_coeff(Fraction(total))

    # arithmetic --------------------------------------------------------
    def _coerce(self, other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SparsePoly({e: c * other for e, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = SparsePoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
        """Univariate long division; both operands must be ordinary polynomials."""
        self._require_univariate()
        other._require_univariate()
        q, r = _dense_divmod(self.coeffs(), other.coeffs())
        return SparsePoly.from_coeffs(q), SparsePoly.from_coeffs(r)

    def exact_div(self, other: SparsePoly) -> SparsePoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # comparison / display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other, self.nvars)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self):
        return f"SparsePoly({self!s})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        names = [var] if self.nvars == 1 else [f"{var}{i + 1}" for i in range(self.nvars)]
        out = []
        for exp, c in self.items():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(names, exp) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            elif isinstance(mag, Fraction):
                body = f"({mag})*{mono}"
            else:
                body = f"{mag}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


# ---------------------------------------------------------------------------
# cyclotomic factors
# ---------------------------------------------------------------------------

class CycloKey(NamedTuple):
    """``phi_{order * direction}``; ``direction`` is primitive."""

    order: int
    direction: tuple[int, ...]

    @classmethod
    def of(cls, d) -> CycloKey:
        if isinstance(d, CycloKey):
            return d
        k, p = split_degree(d)
        return cls(k, p)

    @property
    def degree_vector(self) -> tuple[int, ...]:
        return tuple(self.order * x for x in self.direction)

    @property
    def nvars(self) -> int:
        return len(self.direction)

    def label(self) -> str:
        if self.nvars == 1:
            return str(self.order * self.direction[0])
        return "(" + ",".join(map(str, self.degree_vector)) + ")"


def validate_key(key: CycloKey) -> CycloKey:
    if key.order < 1:
        raise ValueError("cyclotomic order must be positive")
    p = _check_degree(key.direction)
    if reduce(math.gcd, p) != 1:
        raise ValueError(f"direction {p} is not primitive")
    return key


@lru_cache(maxsize=None)
def _phi_coeffs(k: int) -> tuple[int, ...]:
    # (1 - t^k) / prod_{j | k, j < k} phi_j; every divisor has constant term 1,
    # so the division runs from the low end in integers.
    num = [1] + [0] * (k - 1) + [-1]
    for j in divisors(k)[:-1]:
        den = _phi_coeffs(j)
        out = []
        rem = list(num)
        for i in range(len(num) - len(den) + 1):
            c = rem[i]
            out.append(c)
            if c:
                for s, y in enumerate(den):
                    rem[i + s] -= c * y
        if any(rem):
            raise ArithmeticError(f"inexact division while building phi_{k}")
        num = out
    return tuple(num)


def phi_coeffs(k: int) -> tuple[int, ...]:
    """Dense coefficients of the univariate ``phi_k`` (``phi_k(0) == 1``)."""
    if k < 1:
        raise ValueError("cyclotomic order must be positive")
    # resolved through the module global so tests can patch the table
    return _phi_coeffs(k)


def cyclo_expand(key) -> SparsePoly:
    """Expand ``phi_k(t^p)`` as a sparse polynomial in ``len(p)`` variables."""
    if isinstance(key, int):
        key = CycloKey(key, (1,))
    key = validate_key(CycloKey(*key))
    p = key.direction
    return SparsePoly(
        {tuple(i * x for x in p): c for i, c in enumerate(phi_coeffs(key.order)) if c},
        len(p),
    )


def factor_one_minus(d) -> CycloFactored:
    """Cyclotomic factorisation of ``1 - t^d``."""
    k, p = split_degree(d)
    return CycloFactored({CycloKey(j, p): 1 for j in divisors(k)})


_FACTOR_RE = re.compile(r"phi_(\d+|\(\s*\d+(?:\s*,\s*\d+)*\s*\))(?:\^(-?\d+))?")


class CycloFactored(Mapping):
    """A product ``prod phi_d^{e_d}`` stored as ``{CycloKey: exponent}``.

    Exponents are nonzero integers; negative exponents only occur in ratios
    produced by :func:`factored_div`.  Missing keys have exponent 0, so
    ``x[key]`` never raises for a well-formed key.
    """

    __slots__ = ("_f",)

    def __init__(self, factors: Mapping | Iterable = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        f: dict[CycloKey, int] = {}
        nv = None
        for k, e in items:
            key = validate_key(CycloKey.of(k) if not isinstance(k, CycloKey) else k)
            if nv is None:
                nv = key.nvars
            elif key.nvars != nv:
                raise ValueError("factors in different numbers of variables")
            e = int(e)
            f[key] = f.get(key, 0) + e
        self._f = {k: f[k] for k in sorted(f) if f[k] != 0}

    @classmethod
    def one(cls) -> CycloFactored:
        return cls()

    # mapping protocol
    def __getitem__(self, key) -> int:
        return self._f.get(CycloKey.of(key), 0)

    def __iter__(self):
        return iter(self._f)

    def __len__(self):
        return len(self._f)

    def __contains__(self, key):
        return CycloKey.of(key) in self._f

    def __eq__(self, other):
        if isinstance(other, CycloFactored):
            return self._f == other._f
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._f.items()))

    def __mul__(self, other):
        return factored_mul(self, other)

    @property
    def nvars(self) -> int | None:
        for k in self._f:
            return k.nvars
        return None

    def is_nonnegative(self) -> bool:
        return all(e > 0 for e in self._f.values())

    def exponents(self) -> dict[int, int]:
        """Univariate view ``{d: exponent}``."""
        if self.nvars not in (None, 1):
            raise ValueError("not univariate")
        return {k.order * k.direction[0]: e for k, e in self._f.items()}

    def degree(self) -> int:
        """Total degree of the expanded univariate product."""
        return sum(_totient(d) * e for d, e in self.exponents().items())

    def expand(self, nvars: int | None = None) -> SparsePoly:
        if not self.is_nonnegative():
            raise ValueError("cannot expand a product with negative exponents")
        nv = self.nvars or nvars or 1
        if nv == 1:
            return SparsePoly.from_coeffs(self.dense())
        out = SparsePoly.constant(1, nv)
        for key, e in self._f.items():
            out = out * cyclo_expand(key) ** e
        return out

    def dense(self) -> list[int]:
        """Dense coefficients of the expanded univariate product."""
        out = [1]
        for d, e in self.exponents().items():
            if e < 0:
                raise ValueError("cannot expand a product with negative exponents")
            c = list(phi_coeffs(d))
            for _ in range(e):
                out = _dense_mul(out, c)
        return out

    def binomial_form(self) -> list[int] | None:
        """Write a univariate product as ``prod (1 - t^k)``; ``None`` if impossible.

        The largest order present must come from ``1 - t^d`` itself, which
        makes the greedy peeling unique.
        """
        if self.nvars not in (None, 1) or not self.is_nonnegative():
            return None
        rest = dict(self.exponents())
        ks = []
        while rest:
            d = max(rest)
            for j in divisors(d):
                rest[j] = rest.get(j, 0) - 1
                if rest[j] < 0:
                    return None
                if rest[j] == 0:
                    del rest[j]
            ks.append(d)
        return sorted(ks)

    def __str__(self):
        if not self._f:
            return "1"
        return "*".join(
            f"phi_{k.label()}" + ("" if e == 1 else f"^{e}") for k, e in self._f.items()
        )

    def __repr__(self):
        return f"CycloFactored({self!s})"

    def to_json(self) -> list:
        return [[list(k.degree_vector), e] for k, e in self._f.items()]

    @classmethod
    def from_json(cls, data) -> CycloFactored:
        return cls((tuple(d), e) for d, e in data)

    @classmethod
    def parse(cls, text: str) -> CycloFactored:
        """Inverse of ``str``: ``"phi_1^3*phi_2"`` or ``"phi_(4,2)^2"``; ``"1"`` is empty."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        factors = []
        pos = 0
        for part in re.split(r"\s*\*\s*|\s+", text):
            m = _FACTOR_RE.fullmatch(part)
            if not m:
                raise ValueError(f"cannot parse factor {part!r} at offset {text.find(part, pos)}")
            pos = text.find(part, pos) + len(part)
            label = m.group(1).strip("()")
            d = tuple(int(x) for x in label.split(","))
            factors.append((d, int(m.group(2) or 1)))
        return cls(factors)


def _totient(n: int) -> int:
    return len(phi_coeffs(n)) - 1


def _nonneg(*xs: CycloFactored):
    for x in xs:
        if not x.is_nonnegative():
            raise ValueError("operation requires nonnegative exponents")


def factored_mul(a: CycloFactored, b: CycloFactored) -> CycloFactored:
    """Exponentwise sum (the tensor-product rule)."""
    out = dict(a.items())
    for k, e in b.items():
        out[k] = out.get(k, 0) + e
    return CycloFactored(out)


def factored_div(a: CycloFactored, b: CycloFactored) -> CycloFactored:
    """Signed ratio ``a / b``; exponents may come out negative."""
    out = dict(a.items())
    for k, e in b.items():
        out[k] = out.get(k, 0) - e
    return CycloFactored(out)


def factored_lcm(a: CycloFactored, b: CycloFactored) -> CycloFactored:
    _nonneg(a, b)
    keys = set(a) | set(b)
    return CycloFactored({k: max(a[k], b[k]) for k in keys})


def factored_gcd(a: CycloFactored, b: CycloFactored) -> CycloFactored:
    _nonneg(a, b)
    keys = set(a) & set(b)
    return CycloFactored({k: min(a[k], b[k]) for k in keys})


def factored_divides(a: CycloFactored, b: CycloFactored) -> bool:
    _nonneg(a, b)
    return all(e <= b[k] for k, e in a.items())


# ---------------------------------------------------------------------------
# univariate rational functions
# ---------------------------------------------------------------------------

class RationalFn:
    """``numerator / expand(denominator)`` with a cyclotomic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: SparsePoly, denominator: CycloFactored | None = None):
        self.numerator = numerator
        self.denominator = denominator if denominator is not None else CycloFactored()

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"RationalFn(({self.numerator}) / ({self.denominator}))"

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"

    def series(self, order: int) -> list:
        return series_expand(self, order)


def reduce_rational(numer: SparsePoly, denom: CycloFactored) -> RationalFn:
    """Cancel every cyclotomic factor of ``denom`` that divides ``numer``."""
    if numer.nvars != 1 or denom.nvars not in (None, 1):
        raise ValueError("reduce_rational is univariate only")
    _nonneg(denom)
    if numer.is_zero():
        return RationalFn(SparsePoly({}, 1), CycloFactored())
    shift = numer.low_degree()
    body = [numer.coeff((shift + i,)) for i in range(numer.degree() - shift + 1)]
    exps = dict(denom.items())
    for key in list(exps):
        phi = list(phi_coeffs(key.order))
        while exps[key] > 0:
            q, r = _dense_divmod(body, phi)
            if r:
                break
            body = q
            exps[key] -= 1
    return RationalFn(SparsePoly.from_coeffs(body, shift), CycloFactored(exps))


def rational_sum(terms: Iterable[tuple[Coeff, CycloFactored]]) -> RationalFn:
    """Exact sum of ``c_i / expand(D_i)`` over the lcm of the ``D_i``, reduced."""
    terms = [(Fraction(c), d) for c, d in terms]
    common = CycloFactored()
    for _, d in terms:
        if d.nvars not in (None, 1):
            raise ValueError("rational_sum is univariate only")
        common = factored_lcm(common, d)
    numer: list = []
    cache: dict[CycloFactored, list[int]] = {}
    for c, d in terms:
        if not c:
            continue
        cof = factored_div(common, d)
        if cof not in cache:
            cache[cof] = cof.dense()
        numer = _dense_add(numer, [c * x for x in cache[cof]])
    return reduce_rational(SparsePoly.from_coeffs(_normalize_list(numer)), common)


def series_expand(f: RationalFn, order: int) -> list:
    """First ``order + 1`` power-series coefficients of ``f``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    num = f.numerator.coeffs()
    den = f.denominator.dense()
    if den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out: list = []
    for n in range(order + 1):
        c = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            c -= den[j] * out[n - j]
        out.append(_normalize_coeff(c))
    return out
