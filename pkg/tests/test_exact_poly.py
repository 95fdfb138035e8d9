from math import gcd

import pytest
from hypothesis import given, strategies as st

from superjac import arith
from superjac.intpoly import (
    IntPoly, bezout, cyclotomic, cyclotomic_by_division, discriminant, pn_poly, qnd_poly, resultant,
    sylvester_resultant, verify_disc_pn,
)
from superjac.smith import invariant_factors


def P(*cs):
    return IntPoly(list(cs))


@pytest.mark.parametrize("m, phi", [(1, 1), (12, 4), (9, 6)])
def test_euler_phi(m, phi):
    assert arith.euler_phi(m) == phi
    assert phi == sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@pytest.mark.parametrize("m, mu", [(1, 1), (6, 1), (12, 0), (30, -1), (7, -1)])
def test_mobius(m, mu):
    assert arith.mobius(m) == mu


def test_cyclotomic_examples():
    assert cyclotomic(1) == P(-1, 1)
    assert cyclotomic(12) == P(1, 0, -1, 0, 1)
    assert cyclotomic(5) == P(1, 1, 1, 1, 1)


def test_cyclotomic_degree_and_division_oracle():
    for D in range(1, 201):
        c = cyclotomic(D)
        assert c.degree == arith.euler_phi(D)
        assert c.is_monic()
    for D in range(1, 61):
        assert cyclotomic(D) == cyclotomic_by_division(D)


def test_pn_poly_examples():
    assert pn_poly(2) == P(1, 1)
    assert pn_poly(3) == P(1, 1, 1)
    assert pn_poly(6) == cyclotomic(2) * cyclotomic(3) * cyclotomic(6) == P(1, 1, 1, 1, 1, 1)


def test_pn_poly_sum_equals_product():
    for N in range(2, 31):
        prod = IntPoly([1])
        for D in arith.divisors(N):
            if D > 1:
                prod = prod * cyclotomic(D)
        assert pn_poly(N) == IntPoly([1] * N) == prod


def test_qnd_poly():
    assert qnd_poly(4, 2) == P(1, 0, 1)
    assert qnd_poly(12, 4) == P(1, 0, 0, 0, 1, 0, 0, 0, 1)
    assert qnd_poly(12, 4) == cyclotomic(3) * cyclotomic(6) * cyclotomic(12)
    assert qnd_poly(5, 1) == pn_poly(5)
    with pytest.raises(ValueError):
        qnd_poly(12, 5)


def test_resultant_examples():
    assert resultant(P(-1, 1), cyclotomic(5)) == 5
    assert resultant(cyclotomic(2), cyclotomic(4)) == 2
    F = P(1, 2, 0, 1)
    assert resultant(F, F) == 0
    with pytest.raises(ValueError):
        resultant(IntPoly([]), F)


def test_discriminant_examples():
    assert discriminant(P(1, 1, 1)) == -3
    assert discriminant(P(1, 1, 1, 1)) == -16
    assert discriminant(P(-1, 0, 1)) == 4
    with pytest.raises(ValueError):
        discriminant(P(3))


@pytest.mark.parametrize("N, value", [(3, -3), (4, -16), (5, 125), (7, -16807)])
def test_verify_disc_pn_examples(N, value):
    r = verify_disc_pn(N)
    assert r.passed and r.actual == r.expected == str(value)


def test_bezout_examples():
    a, b, res = bezout(P(-1, 1), P(1, 1))
    assert (a, b, res) == (P(-1), P(1), 2)
    for F, G, want in [(P(-1, 1), cyclotomic(3), 3), (cyclotomic(2), cyclotomic(4), 2)]:
        a, b, res = bezout(F, G)
        assert res == want
        assert a * F + b * G == IntPoly([res])
        assert a.degree < G.degree and b.degree < F.degree
    with pytest.raises(ValueError):
        bezout(P(-1, 1), P(1, -2, 1))


def test_invariant_factor_examples():
    assert invariant_factors(P(-1, 1), cyclotomic(5)).factors == (5,)
    assert invariant_factors(cyclotomic(2), cyclotomic(4)).factors == (2,)
    assert invariant_factors(cyclotomic(3), cyclotomic(5)).factors == ()
    assert invariant_factors(cyclotomic(1), cyclotomic(9) * cyclotomic(3)).factors == (9,)


monic_polys = st.builds(
    lambda cs: IntPoly(cs + [1]),
    st.lists(st.integers(-5, 5), min_size=0, max_size=6),
)


@given(monic_polys, monic_polys)
def test_resultant_properties(F, G):
    r = resultant(F, G)
    assert r == sylvester_resultant(F, G)
    assert resultant(G, F) == (-1) ** (F.degree * G.degree) * r


@given(monic_polys, monic_polys)
def test_bezout_and_invariant_factors_random(F, G):
    if F.degree < 1 or G.degree < 1:
        return
    res = resultant(F, G)
    if res == 0:
        return
    a, b, r = bezout(F, G)
    assert r == res and a * F + b * G == IntPoly([res])
    inv = invariant_factors(F, G)
    prod = 1
    for d in inv.factors:
        prod *= d
    assert prod == abs(res) == inv.group_order
    assert all(y % x == 0 for x, y in zip(inv.factors, inv.factors[1:]))
    if inv.factors:
        dr = inv.factors[-1]
        assert res % dr == 0
        assert arith.prime_divisors(dr) == arith.prime_divisors(abs(res))
    else:
        assert abs(res) == 1
    FG = F * G
    disc = discriminant(FG)
    if disc:
        assert disc % res == 0
