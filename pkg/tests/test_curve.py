import random
from math import comb

import pytest

from curves import ALL, cm3_f7, cubic4_f25, elliptic_f5, quartic3_f49
from superjac import fieldpoly as fp
from superjac.curve import (
    CurveError, class_number, count_points, curve_from_spec, genus, l_polynomial, new_curve,
)
from superjac.divisors import (
    INFINITY_PLACE, Divisor, as_element, branch_place, divisor_of_function, place_divisor,
    rational_place, rational_places, rational_points, ring, rr_dimension, rr_space,
)
from superjac.intpoly import IntPoly


def test_new_curve_examples():
    C = elliptic_f5()
    assert C.n == 3 and C.Q == 5
    D = quartic3_f49()
    assert D.Q == 49 and D.n == 4 and D.extension_degree == 2
    with pytest.raises(CurveError, match="gcd"):
        new_curve(3, 7, f=[-1, 0, 0, 1])


def test_new_curve_rejections():
    with pytest.raises(CurveError):
        new_curve(5, 5, roots=[(0, 1), (1, 1)])  # p | N
    with pytest.raises(CurveError):
        new_curve(3, 7, roots=[(0, 3), (1, 1)])  # gcd(e, N) = 3
    with pytest.raises(CurveError):
        new_curve(2, 5, roots=[(0, 1), (1, 1), (4, 1)], f=[0, 1, 0, 1])  # f != prod (x - a)
    with pytest.raises(CurveError):
        new_curve(2, 5, f=[0, 0, 0, 2])  # not monic
    with pytest.raises(CurveError):
        curve_from_spec({"N": 2, "p": 5})


def test_multiplicities_allowed():
    C = new_curve(3, 7, roots=[(0, 2), (1, 1), (2, 1), (3, 1)])
    assert C.multiplicities == (2, 1, 1, 1) and C.genus == 3


def test_working_field_contains_roots_and_unity():
    for make in ALL:
        C = make()
        F = C.field
        assert (C.Q - 1) % C.N == 0
        assert F.pow(C.xi, C.N) == F.one and all(F.pow(C.xi, k) != F.one for k in range(1, C.N))
        for a in C.roots:
            assert fp.evaluate(F, C.f_list(), a) == F.zero


@pytest.mark.parametrize("N, roots, g", [
    (2, [(0, 1), (1, 1), (4, 1)], 1),
    (3, [(0, 1), (1, 1), (2, 1), (3, 1)], 3),
    (3, [(0, 1), (1, 1)], 1),
])
def test_genus_examples(N, roots, g):
    assert genus(new_curve(N, 7, roots=roots)) == g


def _naive_count(C, m=1):
    """Independent sweep: solve y^N = f(x) by trying every y."""
    from superjac.fields import finite_field
    F = finite_field(C.p, C.field.degree * m)
    assert m == 1
    total = 1
    powers = {}
    for y in range(F.order):
        v = F.pow(y, C.N)
        powers[v] = powers.get(v, 0) + 1
    for x in range(F.order):
        total += powers.get(fp.evaluate(F, C.f_list(), x), 0)
    return total


def test_count_points_examples():
    assert count_points(elliptic_f5()) == 8
    C = cm3_f7()
    assert count_points(C) == _naive_count(C)
    for make in ALL:
        C = make()
        assert count_points(C) == _naive_count(C) >= C.n + 1


def test_l_polynomial_examples():
    L = l_polynomial(elliptic_f5())
    assert L == IntPoly([1, 2, 5]) and L(1) == 8 == class_number(elliptic_f5())
    for make in ALL:
        C = make()
        assert l_polynomial(C).degree == 2 * C.genus


def test_counts_reconstruct_from_l_polynomial():
    for make in ALL:
        C = make()
        g, Q = C.genus, C.Q
        L = list(l_polynomial(C).coeffs)
        # functional equation and Weil bound on coefficients
        assert all(L[2 * g - k] == Q ** (g - k) * L[k] for k in range(g + 1))
        assert all(L[k] ** 2 <= comb(2 * g, k) ** 2 * Q ** k for k in range(2 * g + 1))
        for m in range(1, 2 * g + 1):
            if C.Q ** m > 2 * 10 ** 5:
                break
            assert count_points(C, m, "brute") == count_points(C, m, "zeta")


def test_rr_space_examples():
    C = elliptic_f5()
    basis = rr_space(C, place_divisor(INFINITY_PLACE, 2))
    assert [(num, den) for num, den in basis] == [([[1], []], [1]), ([[0, 1], []], [1])]
    for make in ALL:
        C = make()
        basis = rr_space(C, Divisor())
        assert len(basis) == 1 and basis[0][0][0] == [C.field.one]
        for m in range(2 * C.genus - 1, 2 * C.genus + 4):
            assert rr_dimension(C, place_divisor(INFINITY_PLACE, m)) == m + 1 - C.genus


def test_riemann_roch_random_divisors():
    rng = random.Random(8)
    for make in ALL:
        C = make()
        places = rational_places(C)
        g = C.genus
        for _ in range(15):
            terms = {}
            for _ in range(rng.randint(1, 4)):
                P = rng.choice(places)
                terms[P] = terms.get(P, 0) + rng.randint(-2, 3)
            D = Divisor.from_dict(terms)
            if D.degree < 2 * g - 1:
                D = D + place_divisor(INFINITY_PLACE, 2 * g - 1 - D.degree + rng.randint(0, 2))
            assert rr_dimension(C, D) == D.degree + 1 - g
            for num, den in rr_space(C, D):
                assert (divisor_of_function(C, num, den) + D).is_effective()


def test_divisor_of_function_examples():
    for make in ALL:
        C = make()
        F = C.field
        inf = INFINITY_PLACE
        for i, a in enumerate(C.roots):
            D = divisor_of_function(C, {(1, 0): F.one, (0, 0): F.neg(a)})
            assert D == place_divisor(branch_place(C, i), C.N) - place_divisor(inf, C.N)
        expected = Divisor.from_dict({**{branch_place(C, i): e for i, e in enumerate(C.multiplicities)},
                                      inf: -C.deg_f})
        assert divisor_of_function(C, {(0, 1): F.one}) == expected
        assert divisor_of_function(C, {(0, 0): F.from_int(3)}) == Divisor()
        with pytest.raises(ValueError):
            divisor_of_function(C, {})


def test_principal_divisors_have_degree_zero():
    rng = random.Random(4)
    for make in ALL:
        C = make()
        F = C.field
        for _ in range(100):
            g = {(rng.randint(0, 3), rng.randrange(C.N)): F.random_nonzero(rng) for _ in range(rng.randint(1, 4))}
            D = divisor_of_function(C, g)
            assert D.degree == 0


def test_delta_fixes_exactly_branch_points():
    for make in ALL:
        C = make()
        F = C.field
        pts = set(rational_points(C))
        for x, y in pts:
            image = (x, F.mul(C.xi, y))
            assert image in pts
            assert (image == (x, y)) == (y == F.zero)
        # the affine fixed points are the n branch points; infinity is the remaining one
        assert sum(1 for x, y in pts if y == F.zero) == C.n


def test_rational_place_validation():
    C = elliptic_f5()
    with pytest.raises(ValueError):
        rational_place(C, 2, 2)
    P = rational_place(C, 2, 1)
    assert P.coordinates(C.field) == (2, 1)


def test_higher_degree_places_split_norm():
    C = quartic3_f49()
    R = ring(C)
    F = C.field
    rng = random.Random(1)
    for _ in range(5):
        g = as_element(C, {(1, 1): F.one, (2, 0): F.random_nonzero(rng), (0, 0): F.random(rng)})
        D = divisor_of_function(C, g)
        norm_degree = len(R.norm(g)) - 1
        assert sum(c * P.degree for P, c in D.terms if P.kind != "infinity") == norm_degree


def test_cubic4_places():
    C = cubic4_f25()
    assert C.Q == 25 and C.genus == 3 and len(rational_places(C)) == count_points(C)
