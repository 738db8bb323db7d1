import itertools
import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from udenom.cyclo import (
    CycloFactored,
    CycloKey,
    RationalFn,
    SparsePoly,
    cyclo_expand,
    factor_one_minus,
    factored_div,
    factored_divides,
    factored_gcd,
    factored_lcm,
    factored_mul,
    rational_sum,
    reduce_rational,
    series_expand,
    vec_divides,
    vec_lcm,
)


def T(*coeffs):
    return SparsePoly.from_coeffs(coeffs)


def one_minus(d):
    d = (d,) if isinstance(d, int) else tuple(d)
    return SparsePoly.constant(1, len(d)) - SparsePoly.monomial(d)


# --- degree vectors -------------------------------------------------------

@pytest.mark.parametrize("d, e, expected", [
    ((2, 1), (6, 3), True),
    ((4, 2), (6, 3), False),
    ((1,), (0,), True),
    ((2,), (7,), False),
    ((1, 0), (5, 0), True),
])
def test_vec_divides(d, e, expected):
    assert vec_divides(d, e) is expected


def test_vec_divides_matches_brute_force():
    for d in itertools.product(range(4), repeat=2):
        if not any(d):
            continue
        for e in itertools.product(range(9), repeat=2):
            brute = any(tuple(k * x for x in d) == e for k in range(9))
            assert vec_divides(d, e) == brute, (d, e)


@pytest.mark.parametrize("d, e, expected", [
    ((4, 2), (6, 3), (12, 6)),
    ((4, 2), (2, 2), (0, 0)),
    ((3,), (3,), (3,)),
    ((4,), (6,), (12,)),
])
def test_vec_lcm(d, e, expected):
    assert vec_lcm(d, e) == expected


def test_zero_vectors_rejected():
    with pytest.raises(ValueError):
        vec_divides((0, 0), (1, 1))
    with pytest.raises(ValueError):
        vec_lcm((0,), (3,))
    with pytest.raises(ValueError):
        factor_one_minus((0, 0))


# --- polynomials ----------------------------------------------------------

def test_sparse_poly_basics():
    p = T(1, -1, 1)
    assert str(p) == "1 - t + t^2"
    assert str(T(0, 0, -3)) == "-3*t^2"
    assert (p * T(1, 1)) == T(1, 0, 0, 1)
    assert p - p == 0
    assert (T(1, 1) ** 3).coeffs() == [1, 3, 3, 1]
    assert SparsePoly({(-1,): 2, (1,): 1}).low_degree() == -1
    q = SparsePoly({(2, 1): 1, (0, 0): 1}, 2)
    assert str(q) == "1 + t1^2*t2"


def test_zero_coefficients_are_dropped():
    p = SparsePoly({(0,): 0, (3,): Fraction(4, 2)})
    assert p.terms == {(3,): 2}
    assert isinstance(p.coeff(3), int)


def test_divmod():
    q, r = T(1, 0, 0, -1).divmod(T(1, -1))
    assert q == T(1, 1, 1) and r.is_zero()
    q, r = T(1, 2).divmod(T(2))
    assert q == SparsePoly.from_coeffs([Fraction(1, 2), 1])
    with pytest.raises(ArithmeticError):
        T(1, 1).exact_div(T(1, -1))


# --- cyclotomics ----------------------------------------------------------

@pytest.mark.parametrize("key, expected", [
    (CycloKey(1, (1,)), T(1, -1)),
    (CycloKey(6, (1,)), T(1, -1, 1)),
    (CycloKey(2, (2, 1)), SparsePoly({(0, 0): 1, (2, 1): 1}, 2)),
])
def test_cyclo_expand(key, expected):
    assert cyclo_expand(key) == expected


def test_cyclo_expand_bivariate_by_exact_division():
    # (1 - u^2) / (1 - u) with u = t1^2 t2
    phi = cyclo_expand(CycloKey(2, (2, 1)))
    assert phi * one_minus((2, 1)) == one_minus((4, 2))


@pytest.mark.parametrize("k", range(2, 61))
def test_cyclo_expand_matches_sympy(k):
    t = sympy.Symbol("t")
    ref = sympy.Poly(sympy.cyclotomic_poly(k, t), t).all_coeffs()[::-1]
    assert cyclo_expand(k).coeffs() == [int(c) for c in ref]


@pytest.mark.parametrize("k", range(2, 61))
def test_cyclo_degree_is_totient(k):
    phi = cyclo_expand(k)
    assert phi.degree() == sum(1 for j in range(1, k + 1) if math.gcd(j, k) == 1)
    assert phi.coeff(0) == 1


def test_invalid_keys():
    with pytest.raises(ValueError):
        cyclo_expand(CycloKey(2, (2, 2)))
    with pytest.raises(ValueError):
        cyclo_expand(CycloKey(0, (1,)))


@pytest.mark.parametrize("d, expected", [
    (6, {1: 1, 2: 1, 3: 1, 6: 1}),
    (1, {1: 1}),
])
def test_factor_one_minus_univariate(d, expected):
    f = factor_one_minus(d)
    assert f == CycloFactored(expected)
    assert f.expand() == one_minus(d)


def test_factor_one_minus_bivariate():
    f = factor_one_minus((4, 2))
    assert f == CycloFactored({CycloKey(1, (2, 1)): 1, CycloKey(2, (2, 1)): 1})
    assert f.expand() == one_minus((4, 2))


def _vectors(r, total):
    for d in itertools.product(range(total + 1), repeat=r):
        if any(d) and sum(d) <= total:
            yield d


@pytest.mark.parametrize("r", [1, 2, 3])
def test_factor_one_minus_roundtrip(r):
    limit = 12 if r < 3 else 8
    for d in _vectors(r, limit):
        assert factor_one_minus(d).expand() == one_minus(d), d


# --- factored arithmetic --------------------------------------------------

def F(**exps):
    return CycloFactored({int(k[1:]): v for k, v in exps.items()})


def test_factored_examples():
    assert factored_mul(F(p1=2), F(p1=1, p2=1)) == F(p1=3, p2=1)
    assert factored_mul(F(p3=1), CycloFactored()) == F(p3=1)
    assert factored_lcm(F(p1=2), F(p1=1, p2=1)) == F(p1=2, p2=1)
    assert factored_gcd(F(p1=2), F(p2=1)) == CycloFactored()
    assert factored_divides(F(p2=1), F(p1=2, p2=1))
    assert not factored_divides(F(p2=2), F(p1=2, p2=1))
    assert factored_div(F(p1=1, p6=1), F(p1=1)) == F(p6=1)
    assert factored_div(F(p1=1), F(p6=1))[6] == -1


def test_factored_text_roundtrip():
    f = F(p1=3, p2=1, p12=2)
    assert str(f) == "phi_1^3*phi_2*phi_12^2"
    assert CycloFactored.parse(str(f)) == f
    g = CycloFactored({CycloKey(2, (2, 1)): 1, CycloKey(1, (1, 0)): 3})
    assert str(g) == "phi_(1,0)^3*phi_(4,2)"
    assert CycloFactored.parse(str(g)) == g
    assert CycloFactored.parse("1") == CycloFactored()
    with pytest.raises(ValueError):
        CycloFactored.parse("phi_x")


def test_canonical_order_is_by_order_then_direction():
    g = CycloFactored({(0, 2): 1, (1, 0): 1, (2, 0): 1, (0, 1): 1})
    assert [k for k in g] == [
        CycloKey(1, (0, 1)), CycloKey(1, (1, 0)), CycloKey(2, (0, 1)), CycloKey(2, (1, 0)),
    ]


def test_binomial_form():
    assert F(p1=3, p2=1, p3=1).binomial_form() == [1, 2, 3]
    assert F(p2=1).binomial_form() is None
    assert CycloFactored().binomial_form() == []


factored_values = st.dictionaries(st.integers(1, 30), st.integers(1, 5), max_size=6).map(CycloFactored)


@settings(max_examples=200, deadline=None)
@given(factored_values, factored_values)
def test_lattice_laws(a, b):
    assert factored_mul(factored_gcd(a, b), factored_lcm(a, b)) == factored_mul(a, b)
    assert factored_divides(a, factored_lcm(a, b))
    assert factored_divides(factored_gcd(a, b), b)


@settings(max_examples=50, deadline=None)
@given(factored_values, factored_values)
def test_mul_expands_to_product(a, b):
    assert factored_mul(a, b).expand() == a.expand() * b.expand()


# --- rational functions ---------------------------------------------------

def test_reduce_examples():
    assert reduce_rational(T(1, 1), factor_one_minus(2)) == RationalFn(T(1), F(p1=1))
    assert reduce_rational(T(0, 1), factor_one_minus(2)) == RationalFn(T(0, 1), F(p1=1, p2=1))
    assert reduce_rational(T(1, 0, 0, -1), F(p1=1)) == RationalFn(T(1, 1, 1), CycloFactored())
    assert reduce_rational(T(), F(p1=4)) == RationalFn(T(), CycloFactored())


def test_reduce_handles_laurent_numerators():
    numer = SparsePoly({(-2,): 1, (-1,): 1})  # t^-2 (1 + t)
    out = reduce_rational(numer, factor_one_minus(2))
    assert out == RationalFn(SparsePoly({(-2,): 1}), F(p1=1))


def _random_pair(rng):
    den = CycloFactored({d: rng.randint(0, 2) for d in rng.sample(range(1, 13), 3)})
    numer = T(*[rng.randint(-3, 3) for _ in range(rng.randint(1, 5))])
    # plant some cancellable factors
    for d in rng.sample(list(den.exponents()) or [1], 1):
        if rng.random() < 0.7:
            numer = numer * cyclo_expand(d)
    return numer, den


def test_reduce_cross_multiplication_and_idempotence():
    rng = random.Random(7)
    for _ in range(100):
        numer, den = _random_pair(rng)
        out = reduce_rational(numer, den)
        assert numer * out.denominator.expand() == out.numerator * den.expand()
        assert reduce_rational(out.numerator, out.denominator) == out
        assert factored_divides(out.denominator, den)
        if not numer.is_zero():
            assert series_expand(out, 25) == series_expand(RationalFn(numer, den), 25)


def test_rational_sum_examples():
    half = Fraction(1, 2)
    assert rational_sum([(half, F(p1=1)), (half, F(p2=1))]) == RationalFn(T(1), F(p1=1, p2=1))
    assert rational_sum([(1, F(p1=1)), (0, F(p3=2))]) == RationalFn(T(1), F(p1=1))
    assert rational_sum([(1, F(p1=1)), (-1, F(p1=1))]) == RationalFn(T(), CycloFactored())


def test_rational_sum_keeps_fractions():
    out = rational_sum([(Fraction(1, 3), F(p1=1))])
    assert out.numerator == SparsePoly.constant(Fraction(1, 3))
    assert series_expand(out, 2) == [Fraction(1, 3)] * 3


def _partition_counts(parts, order):
    # number of (a_1, ..., a_k) with sum a_i * parts_i == n
    counts = [0] * (order + 1)
    ranges = [range(order // p + 1) for p in parts]
    for combo in itertools.product(*ranges):
        n = sum(a * p for a, p in zip(combo, parts))
        if n <= order:
            counts[n] += 1
    return counts


def test_series_expand_examples():
    assert series_expand(RationalFn(T(1), F(p1=1)), 3) == [1, 1, 1, 1]
    den = factored_mul(factored_mul(factor_one_minus(1), factor_one_minus(2)), factor_one_minus(3))
    assert series_expand(RationalFn(T(1), den), 6) == _partition_counts([1, 2, 3], 6)
    assert series_expand(RationalFn(T(1), den), 6) == [1, 1, 2, 3, 4, 5, 7]
    assert series_expand(RationalFn(T(1, 1), F(p1=1, p2=1)), 4) == [1, 1, 1, 1, 1]


def test_series_expand_rejects_negative_powers():
    with pytest.raises(ValueError):
        series_expand(RationalFn(SparsePoly({(-1,): 1}), F(p1=1)), 3)
