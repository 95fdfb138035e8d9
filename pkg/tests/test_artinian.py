import random

import pytest

from superjac import linalg as la
from superjac.artinian import (
    TorsionModule, companion_matrix, cyclic_sum_module, decompose_ring, direct_sum,
    length_inequality_check, socle_dims, test_freeness as freeness,
)
from superjac.fields import finite_field
from superjac.fppoly import FpPoly
from superjac.intpoly import pn_poly


def F(p, *cs):
    return FpPoly(p, list(cs))


def test_decompose_ring_examples():
    assert decompose_ring(2, pn_poly(3)).local_factors == ((F(2, 1, 1, 1), 1),)
    assert decompose_ring(3, pn_poly(9)).local_factors == ((F(3, -1, 1), 8),)
    assert decompose_ring(7, pn_poly(3)).local_factors == ((F(7, -4, 1), 1), (F(7, -2, 1), 1))


def test_non_module_is_rejected():
    with pytest.raises(ValueError):
        TorsionModule(3, [[2]], F(3, -1, 1))


R3 = F(3, -1, 1) ** 2  # F_3[T]/((T-1)^2)


def test_socle_examples():
    spec = decompose_ring(3, R3)
    assert socle_dims(cyclic_sum_module(3, R3, [R3]), spec) == [1]
    assert socle_dims(TorsionModule(3, [[1]], R3), spec) == [1]
    assert socle_dims(cyclic_sum_module(3, R3, [R3, R3]), spec) == [2]


def test_freeness_examples():
    spec = decompose_ring(3, R3)
    cert = freeness(cyclic_sum_module(3, R3, [R3, R3]), spec, 2)
    assert cert.is_free and len(cert.basis) == 2
    assert not freeness(cyclic_sum_module(3, R3, [R3, F(3, -1, 1)]), spec, 2).is_free
    assert freeness(TorsionModule(3, [], R3), spec, 0).is_free


def test_length_inequality_examples():
    h = F(3, -1, 1)
    eq = length_inequality_check(cyclic_sum_module(3, R3, [R3]), h, 2)
    assert eq.passed and eq.notes["equality"] == "true" and eq.notes["free"] == "true"
    k = length_inequality_check(cyclic_sum_module(3, R3, [h]), h, 2)
    assert k.passed and k.notes["equality"] == "false" and k.notes["free"] == "false"
    mixed = length_inequality_check(cyclic_sum_module(3, R3, [R3, h]), h, 2)
    assert mixed.passed and mixed.notes["equality"] == "false"


def _random_case(rng):
    ell = rng.choice([2, 3, 5])
    P = FpPoly(ell, [1])
    spec = None
    while True:
        P = FpPoly(ell, [1])
        for _ in range(rng.randint(1, 3)):
            P = P * FpPoly(ell, [rng.randrange(ell) for _ in range(rng.randint(1, 2))] + [1])
        if P.degree <= 6:
            spec = decompose_ring(ell, P)
            break
    return ell, P, spec


def test_random_cyclic_sums():
    """Free exactly when every summand is the full local ring and all factors get r copies."""
    rng = random.Random(11)
    cases = 0
    while cases < 120:
        ell, P, spec = _random_case(rng)
        r = rng.randint(1, 3)
        pieces = []
        free = True
        for h, t in spec.local_factors:
            for _ in range(r):
                s = rng.randint(1, t) if rng.random() < 0.4 else t
                free = free and s == t
                pieces.append(h ** s)
        if rng.random() < 0.2 and len(spec.local_factors) > 1:
            pieces.pop()
            free = False
        dim = sum(g.degree for g in pieces)
        if dim > 24:
            continue
        M = cyclic_sum_module(ell, P, pieces)
        cert = freeness(M, spec, r)
        assert cert.is_free == free, (P, pieces, r)
        # invariant under a change of basis
        Fl = finite_field(ell)
        while True:
            S = [[rng.randrange(ell) for _ in range(dim)] for _ in range(dim)]
            if la.rank(Fl, S) == dim:
                break
        conj = la.mat_mul(Fl, la.mat_mul(Fl, la.inverse(Fl, S), M.matrix()), S)
        assert freeness(TorsionModule(ell, conj, P), spec, r).is_free == free
        if free:
            assert M.dim == r * P.degree
        cases += 1


def test_socle_monotone_on_submodules():
    rng = random.Random(5)
    ell = 3
    P = F(3, -1, 1) ** 2 * F(3, 1, 0, 1)
    spec = decompose_ring(ell, P)
    M = cyclic_sum_module(ell, P, [P, F(3, -1, 1) ** 2, F(3, 1, 0, 1)])
    Fl = finite_field(ell)
    A = M.matrix()
    full = socle_dims(M, spec)
    for _ in range(20):
        gens = [[rng.randrange(ell) for _ in range(M.dim)] for _ in range(rng.randint(1, 2))]
        vecs = []
        for v in gens:
            w = v
            for _ in range(M.dim):
                vecs.append(w)
                w = la.mat_vec(Fl, A, w)
        basis = la.span(Fl, vecs)
        if not basis:
            continue
        # T-action on the submodule in coordinates of `basis`
        cols = [la.solve_row(Fl, basis, la.mat_vec(Fl, A, b)) for b in basis]
        sub = TorsionModule(ell, la.transpose(cols), P)
        assert all(a <= b for a, b in zip(socle_dims(sub, spec), full))


def test_companion_matrix_annihilated():
    g = F(5, 1, 2, 0, 1)
    assert la.is_zero_matrix(finite_field(5), la.poly_at_matrix(finite_field(5), list(g.coeffs), companion_matrix(g)))
    assert len(direct_sum([companion_matrix(g), companion_matrix(g)])) == 6
