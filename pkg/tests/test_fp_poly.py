import itertools
import random

import pytest
from hypothesis import given, strategies as st

from superjac import arith
from superjac.fppoly import (
    FpPoly, fp_factor, fp_gcd, is_irreducible, is_separable, reduce_mod, verify_phi_power_lemma,
    verify_qnd_ideal,
)
from superjac.intpoly import IntPoly, cyclotomic, pn_poly


def F(p, *cs):
    return FpPoly(p, list(cs))


def test_reduce_mod_examples():
    assert reduce_mod(cyclotomic(12), 2) == F(2, 1, 0, 1, 0, 1)
    assert reduce_mod(pn_poly(3), 3) == F(3, 1, 1, 1) == F(3, 2, 1) ** 2
    assert reduce_mod(IntPoly([]), 7).is_zero()
    with pytest.raises(ValueError):
        reduce_mod(pn_poly(3), 4)


def test_fp_gcd_examples():
    assert fp_gcd(F(5, -1, 0, 1), F(5, -1, 1)) == F(5, -1, 1)
    assert fp_gcd(reduce_mod(cyclotomic(3), 2), reduce_mod(cyclotomic(5), 2)) == F(2, 1)
    assert fp_gcd(F(7, 3, 2), F(7)) == F(7, 3, 2).monic()
    assert fp_gcd(F(7), F(7)).is_zero()
    with pytest.raises(ValueError):
        fp_gcd(F(5, 1, 1), F(7, 1, 1))


def test_fp_factor_examples():
    assert fp_factor(reduce_mod(pn_poly(3), 2)).factors == ((F(2, 1, 1, 1), 1),)
    assert fp_factor(reduce_mod(pn_poly(9), 3)).factors == ((F(3, -1, 1), 8),)
    fac = fp_factor(reduce_mod(pn_poly(6), 5))
    assert fac.expand() == reduce_mod(pn_poly(6), 5)
    # Phi_2 = T+1; Phi_3, Phi_6 split into quadratics over F_5 (5 = 2 mod 3)
    assert [(h.degree, t) for h, t in fac.factors] == [(1, 1), (2, 1), (2, 1)]


def _brute_irreducible(A: FpPoly) -> bool:
    p, d = A.p, A.degree
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            if (A % FpPoly(p, list(tail) + [1])).is_zero():
                return False
    return True


@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=1, max_size=8))
def test_fp_factor_reassembles_and_factors_are_irreducible(p, cs):
    A = FpPoly(p, cs + [1])
    fac = fp_factor(A)
    assert fac.expand() == A
    hs = [h for h, _ in fac.factors]
    assert len(set(hs)) == len(hs)
    for h in hs:
        assert h.is_monic() and is_irreducible(h)
        if h.degree <= 8 and p ** (h.degree // 2) <= 2500:
            assert _brute_irreducible(h)
    assert [(h.degree, h.coeffs) for h in hs] == sorted((h.degree, h.coeffs) for h in hs)


def test_cyclotomic_factors_have_order_degree():
    for p in [2, 3, 5, 7, 11, 13]:
        for M in range(2, 41):
            if M % p == 0:
                continue
            fac = fp_factor(reduce_mod(cyclotomic(M), p))
            d = arith.multiplicative_order(p, M)
            assert all(t == 1 and h.degree == d for h, t in fac.factors)


@pytest.mark.parametrize("p, r, D", [(2, 2, 3), (3, 1, 1), (5, 1, 2)])
def test_phi_power_examples(p, r, D):
    assert verify_phi_power_lemma(p, r, D).passed


def test_phi_power_rejects_p_dividing_D():
    with pytest.raises(ValueError):
        verify_phi_power_lemma(3, 1, 6)


def test_phi_power_all():
    for p in [2, 3, 5, 7, 11, 13]:
        for r in range(1, 4):
            for D in range(1, 41):
                if D % p:
                    assert verify_phi_power_lemma(p, r, D).passed, (p, r, D)


@pytest.mark.parametrize("N", [9, 12, 30])
def test_qnd_examples(N):
    assert verify_qnd_ideal(N).passed


def test_qnd_all():
    assert all(verify_qnd_ideal(N).passed for N in range(2, 61))


def test_is_separable():
    for p in [2, 3, 5, 7]:
        for M in range(1, 20):
            if M % p:
                assert is_separable(FpPoly(p, [-1] + [0] * (M - 1) + [1]))
    assert not is_separable(F(3, -1, 1) ** 2)
    assert is_separable(F(5, 3))


def test_random_products_roundtrip():
    rng = random.Random(3)
    for _ in range(30):
        p = rng.choice([2, 3, 5])
        A = FpPoly(p, [1])
        for _ in range(rng.randint(1, 4)):
            A = A * FpPoly(p, [rng.randrange(p) for _ in range(rng.randint(1, 3))] + [1])
        assert fp_factor(A).expand() == A
