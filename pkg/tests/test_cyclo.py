import random

import pytest

from superjac import arith
from superjac.cyclo import (
    CyclotomicElement, c_n_element, cyc_norm, is_unit, norm_cn_closed_form, one_minus_zeta,
    polarization_degree, verify_norm_cn, verify_tau_square,
)


def test_norm_examples():
    assert cyc_norm(one_minus_zeta(9)) == 3
    assert cyc_norm(one_minus_zeta(6)) == 1
    for N in range(2, 30):
        assert abs(cyc_norm(CyclotomicElement.zeta(N))) == 1
    with pytest.raises(ValueError):
        cyc_norm(CyclotomicElement.integer(5, 0))


def test_is_unit_examples():
    assert is_unit(one_minus_zeta(6))
    assert not is_unit(one_minus_zeta(9))
    assert not is_unit(CyclotomicElement.integer(7, 0))


def test_c_n_examples():
    assert c_n_element(9) == one_minus_zeta(9) ** 2
    assert c_n_element(6) == one_minus_zeta(6, 3) * one_minus_zeta(6, 2)
    for p in [2, 3, 5, 7, 11]:
        assert c_n_element(p) == CyclotomicElement.integer(p, 1)


@pytest.mark.parametrize("N, value", [(9, 9), (6, 12), (5, 1)])
def test_verify_norm_cn_examples(N, value):
    r = verify_norm_cn(N)
    assert r.passed and r.actual == str(value)


def test_norm_cn_all():
    for N in range(2, 41):
        assert verify_norm_cn(N).passed, N
        assert norm_cn_closed_form(N) == abs(cyc_norm(c_n_element(N)))


def test_polarization_degree():
    assert polarization_degree(9, 3) == 81
    assert polarization_degree(6, 4) == 1728
    for p in [2, 3, 5, 7]:
        assert polarization_degree(p, 5) == 1


@pytest.mark.parametrize("q", [3, 9, 27, 5, 25, 7, 49])
def test_tau_square(q):
    assert verify_tau_square(q).passed
    with pytest.raises(ValueError):
        verify_tau_square(8)


def test_tau_27_exponent():
    assert (one_minus_zeta(27) ** 4) ** 2 == c_n_element(27)


def test_norm_multiplicative():
    rng = random.Random(2)
    for N in range(2, 21):
        d = arith.euler_phi(N)
        for _ in range(100):
            x = CyclotomicElement(N, [rng.randint(-3, 3) for _ in range(d)])
            y = CyclotomicElement(N, [rng.randint(-3, 3) for _ in range(d)])
            if x.is_zero() or y.is_zero():
                continue
            assert cyc_norm(x * y) == cyc_norm(x) * cyc_norm(y)


def test_one_minus_zeta_units():
    for N in range(2, 61):
        if arith.omega(N) >= 2:
            assert is_unit(one_minus_zeta(N))
        for D in arith.divisors(N):
            if D < N and arith.omega(N // D) > 1:
                assert is_unit(one_minus_zeta(N, D))
