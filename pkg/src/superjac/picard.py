"""Pic^0 of y^N = f(x) over F_Q with canonical reduced representatives.

A class is stored as its reduced ideal I: the unique effective divisor D_0 away
from infinity with class [D_0 - t inf], t = deg D_0 minimal.  Equality of classes
is equality of reduced ideals.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property

from . import fieldpoly as fp
from .curve import SuperellipticCurve, class_number, with_cover_degree
from .divisors import (
    INFINITY, INFINITY_PLACE, Divisor, _require_squarefree, branch_place,
    divisor_of_function, effective_ideal, ideal_to_divisor, place_divisor, place_ideal, places_above,
    rational_places, ring, rr_space,
)
from .ideals import Ideal


@dataclass(frozen=True, eq=False)
class DivClass:
    curve: SuperellipticCurve
    ideal: Ideal

    @property
    def t(self) -> int:
        return self.ideal.degree

    @cached_property
    def reduced(self) -> Divisor:
        """D_0: effective, no infinity component."""
        return ideal_to_divisor(self.curve, self.ideal)

    def divisor(self) -> Divisor:
        return self.reduced - place_divisor(INFINITY_PLACE, self.t)

    def is_zero(self) -> bool:
        return self.ideal.degree == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, DivClass) and self.curve is other.curve and self.ideal == other.ideal

    def __hash__(self) -> int:
        return hash(self.ideal.key)

    def __add__(self, other: "DivClass") -> "DivClass":
        return class_add(self, other)

    def __neg__(self) -> "DivClass":
        return class_neg(self)

    def __sub__(self, other: "DivClass") -> "DivClass":
        return class_add(self, class_neg(other))

    def __rmul__(self, k: int) -> "DivClass":
        return class_mul(self, k)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return f"[{self.reduced} - {self.t}inf]"


def zero_class(C: SuperellipticCurve) -> DivClass:
    return DivClass(C, ring(C).unit_ideal())


def class_of_ideal(C: SuperellipticCurve, I: Ideal) -> DivClass:
    """[I - deg(I) inf]."""
    return DivClass(C, ring(C).reduce(I))


def class_reduce(C: SuperellipticCurve, D: Divisor) -> DivClass:
    """Canonical class of a degree-0 divisor."""
    _require_squarefree(C)
    if D.degree != 0:
        raise ValueError(f"divisor has degree {D.degree}, not 0")
    pos, neg = {}, {}
    for P, c in D.terms:
        if P.kind == INFINITY:
            continue
        (pos if c > 0 else neg)[P] = abs(c)
    a = class_of_ideal(C, effective_ideal(C, Divisor.from_dict(pos)))
    b = class_of_ideal(C, effective_ideal(C, Divisor.from_dict(neg)))
    return class_add(a, class_neg(b))


def _same_curve(x: DivClass, y: DivClass) -> SuperellipticCurve:
    if x.curve is not y.curve:
        raise ValueError("classes live on different curves")
    return x.curve


def class_add(x: DivClass, y: DivClass) -> DivClass:
    C = _same_curve(x, y)
    if x.is_zero():
        return y
    if y.is_zero():
        return x
    R = ring(C)
    return DivClass(C, R.reduce(R.product(x.ideal, y.ideal)))


def class_neg(x: DivClass) -> DivClass:
    """I * conj_product(I) is principal (the norm), so -[I] = [conj_product(I)]."""
    if x.is_zero():
        return x
    R = ring(x.curve)
    return DivClass(x.curve, R.reduce(R.conj_product(x.ideal)))


def class_sub(x: DivClass, y: DivClass) -> DivClass:
    return class_add(x, class_neg(y))


def class_mul(x: DivClass, k: int) -> DivClass:
    if k < 0:
        return class_mul(class_neg(x), -k)
    out = zero_class(x.curve)
    base = x
    while k:
        if k & 1:
            out = class_add(out, base)
        k >>= 1
        if k:
            base = class_add(base, base)
    return out


def delta_action(x: DivClass, power: int = 1) -> DivClass:
    """Pushforward along (x, y) -> (x, xi y), applied `power` times."""
    if x.is_zero():
        return x
    R = ring(x.curve)
    return DivClass(x.curve, R.reduce(R.conj_ideal(x.ideal, -power)))


def poly_action(x: DivClass, coeffs: list[int]) -> DivClass:
    """G(delta)(x) for an integer polynomial G (low degree first)."""
    out = zero_class(x.curve)
    power = x
    for c in coeffs:
        if c:
            out = class_add(out, class_mul(power, c))
        power = delta_action(power)
    return out


# -- random classes -------------------------------------------------------------

def random_class(C: SuperellipticCurve, rng: random.Random) -> DivClass:
    """[D - deg(D) inf] with D a random place above each prime factor of a random
    monic u(x) of degree g.  Reduced divisors have such support, so these samples
    generate all of J(F_Q), not just the subgroup spanned by rational points."""
    F = C.field
    R = ring(C)
    u = [F.random(rng) for _ in range(max(C.genus, 1))] + [F.one]
    I = R.unit_ideal()
    for h, e in fp.factor(F, u):
        P = rng.choice(places_above(C, h))
        for _ in range(e):
            I = R.product(I, place_ideal(C, P))
    return class_of_ideal(C, I)


# -- the maps eta_D and eta_D^* ---------------------------------------------------

def _cover(C: SuperellipticCurve, D: int) -> SuperellipticCurve:
    key = ("cover", D)
    if key not in C._cache:
        C._cache[key] = with_cover_degree(C, D)
    return C._cache[key]


def quotient_curve(C: SuperellipticCurve, D: int) -> SuperellipticCurve:
    """C_{f,D} over the same working field (cached, so classes compare)."""
    return _cover(C, D)


def eta_down(x: DivClass, D: int) -> DivClass:
    """Pushforward along (x, y) -> (x, y^(N/D)): the relative norm of the reduced ideal."""
    C = x.curve
    CD = _cover(C, D)
    if x.is_zero():
        return zero_class(CD)
    N = C.N
    M = N // D
    R, RD = ring(C), ring(CD)
    I = x.ideal
    J = I
    for k in range(1, M):
        J = R.product(J, R.conj_ideal(I, D * k))
    # the columns j = 0 mod M carry A_D; put them last so the tail rows span J meet A_D
    other = tuple(j for j in range(N - 1, -1, -1) if j % M)
    sub = tuple(j for j in range(N - 1, -1, -1) if j % M == 0)
    H = R.reorder(J, other + sub)
    gens = []
    for row, c in zip(H.rows, H.order):
        if c % M == 0:
            gens.append([list(row[M * i]) for i in range(D)])
    return class_of_ideal(CD, RD.hnf(gens, R.min_poly(J)))


def eta_up(x: DivClass, C: SuperellipticCurve) -> DivClass:
    """Pullback from C_{f,D} to C = C_{f,N}: extend the ideal; inf_D pulls back to M inf_N."""
    CD = x.curve
    D = CD.N
    if C.N % D or _cover(C, D) is not CD:
        raise ValueError("eta_up needs the class to live on quotient_curve(C, D)")
    if x.is_zero():
        return zero_class(C)
    M = C.N // D
    R = ring(C)
    RD = ring(CD)
    gens = []
    for b in RD.basis(x.ideal):
        g = R.zero()
        for i, c in enumerate(b):
            g[M * i] = list(c)
        gens.append(g)
    return class_of_ideal(C, R.ideal_from_generators(gens, modulus=RD.min_poly(x.ideal)))


# -- the branch-divisor group G_N ---------------------------------------------------

@dataclass(frozen=True)
class GnModelElement:
    """(a_1..a_n) mod N modulo <(e_1..e_n)>; the infinity coefficient -sum(a_i) is implied.
    The canonical representative has a_1 = 0."""

    N: int
    vector: tuple[int, ...]


class GnModel:
    def __init__(self, C: SuperellipticCurve):
        self.curve = C
        self.N = C.N
        self.e = tuple(C.multiplicities)
        self._e1_inv = pow(self.e[0], -1, self.N)

    @property
    def order(self) -> int:
        return self.N ** (len(self.e) - 1)

    def canonical(self, a) -> GnModelElement:
        N = self.N
        a = [x % N for x in a]
        if len(a) != len(self.e):
            raise ValueError("wrong number of branch coefficients")
        c = a[0] * self._e1_inv % N
        return GnModelElement(N, tuple((x - c * e) % N for x, e in zip(a, self.e)))

    def is_identity(self, a) -> bool:
        """a_i = c e_i (mod N) for one c."""
        return not any(self.canonical(a).vector)

    def add(self, a: GnModelElement, b: GnModelElement) -> GnModelElement:
        return self.canonical([x + y for x, y in zip(a.vector, b.vector)])

    def enumerate(self) -> list[GnModelElement]:
        n = len(self.e)
        return [GnModelElement(self.N, (0,) + rest) for rest in itertools.product(range(self.N), repeat=n - 1)]

    def to_divisor(self, a: GnModelElement) -> Divisor:
        C = self.curve
        terms = {branch_place(C, i): c for i, c in enumerate(a.vector) if c}
        terms[INFINITY_PLACE] = -sum(a.vector)
        return Divisor.from_dict(terms)

    def to_class(self, a: GnModelElement) -> DivClass:
        return class_reduce(self.curve, self.to_divisor(a))


def gn_model(C: SuperellipticCurve) -> GnModel:
    return GnModel(C)


# -- Riemann-Roch reduction (independent of the ideal arithmetic) ---------------------

def class_reduce_rr(C: SuperellipticCurve, D: Divisor) -> Divisor:
    """Reduced D_0 of a degree-0 divisor on rational places: smallest t with
    l(D + t inf) = 1, then D_0 = div(g) + D + t inf for the spanning g."""
    if D.degree != 0:
        raise ValueError("divisor must have degree 0")
    for t in range(C.genus + 1):
        E = D + place_divisor(INFINITY_PLACE, t)
        basis = rr_space(C, E)
        if len(basis) > 1:
            raise ArithmeticError("l(D + t inf) jumped past 1")
        if basis:
            num, den = basis[0]
            D0 = divisor_of_function(C, num, den) + E
            if not D0.is_effective() or D0.coefficient(INFINITY_PLACE) or D0.degree != t:
                raise ArithmeticError("reduced representative is not effective away from infinity")
            return D0
    raise ArithmeticError("no t <= g with l(D + t inf) > 0")


def enumerate_classes_rr(C: SuperellipticCurve) -> list[Divisor]:
    """Reduced D_0 of every class reachable from effective divisors of degree <= g on
    rational places; on genus 1 that is all of Pic^0 (each class is [P - inf])."""
    places = rational_places(C, include_infinity=False)
    out = set()
    for t in range(C.genus + 1):
        for combo in itertools.combinations_with_replacement(places, t):
            d: dict = {}
            for P in combo:
                d[P] = d.get(P, 0) + 1
            E = Divisor.from_dict(d)
            D0 = class_reduce_rr(C, E - place_divisor(INFINITY_PLACE, t))
            out.add(D0)
    return sorted(out, key=lambda D: [(P.sort_key(), c) for P, c in D.terms])


def group_order(C: SuperellipticCurve) -> int:
    return class_number(C)
