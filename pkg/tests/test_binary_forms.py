import pytest

from udenom.binary_forms import (
    BinaryFormsCase,
    dixmier_closed,
    divides_check,
    sl2_udenom_via_torus,
    torus_udenom,
)
from udenom.cyclo import CycloFactored, factor_one_minus, factored_mul


def binomials(*ks, one_plus_t=0):
    out = CycloFactored({2: one_plus_t}) if one_plus_t else CycloFactored()
    for k in ks:
        out = factored_mul(out, factor_one_minus(k))
    return out


def test_cubic():
    assert sl2_udenom_via_torus(3) == CycloFactored({1: 1, 2: 1, 4: 1})
    assert sl2_udenom_via_torus(3) == binomials(4)


def test_quartic():
    # invariants of the binary quartic: free on degrees 2 and 3
    assert sl2_udenom_via_torus(4) == binomials(2, 3)
    assert dixmier_closed(4) == binomials(2, 3)


@pytest.mark.parametrize("n, expected", [
    (5, binomials(4, 6, 8)),
    (6, binomials(2, 3, 4, 5, one_plus_t=1)),
    (8, binomials(2, 3, 4, 5, 3, 7, one_plus_t=1)),
    (10, binomials(*range(2, 10), one_plus_t=1)),
])
def test_closed_form_examples(n, expected):
    assert dixmier_closed(n) == expected
    assert sl2_udenom_via_torus(n) == expected


@pytest.mark.parametrize("n", range(3, 17))
def test_pipeline_matches_closed_form(n):
    assert sl2_udenom_via_torus(n) == dixmier_closed(n)


@pytest.mark.parametrize("n", range(3, 17))
def test_divides_maximal_torus_exponentwise(n):
    assert divides_check(n)
    u, m = sl2_udenom_via_torus(n), torus_udenom(n)
    assert all(u[k] <= m[k] for k in set(u) | set(m))


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13, 15])
def test_odd_degree_only_even_powers(n):
    u = sl2_udenom_via_torus(n)
    ks = u.binomial_form()
    assert ks is not None and all(k % 2 == 0 for k in ks)
    # every 1 - t^{2k} carries phi_1 and phi_2 once each
    assert u[2] == u[1] == len(ks) == n - 2


def test_case_labels():
    assert BinaryFormsCase(7).residue == "odd"
    assert BinaryFormsCase(10).residue == "2 mod 4"
    assert BinaryFormsCase(12).residue == "0 mod 4"
    with pytest.raises(ValueError):
        BinaryFormsCase(2)
    with pytest.raises(ValueError):
        sl2_udenom_via_torus(2)
