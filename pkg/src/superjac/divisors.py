"""Places, divisors, principal divisors and Riemann-Roch spaces.

A finite place is a prime ideal of A, described by a monic irreducible h(x)
and a monic irreducible factor G(Y) of Y^N - f over F_Q[x]/(h); G is stored with
its coefficients lifted to polynomials in x, so (h, G(x, y)) generates the prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import fieldpoly as fp
from . import linalg as la
from .curve import SuperellipticCurve
from .fields import ResidueField
from .ideals import FunctionRing, Ideal

FINITE, BRANCH, INFINITY = "finite", "branch", "infinity"
_KIND_ORDER = {BRANCH: 0, FINITE: 1, INFINITY: 2}


def ring(C: SuperellipticCurve) -> FunctionRing:
    if "ring" not in C._cache:
        C._cache["ring"] = FunctionRing(C.field, C.N, C.f_list(), C.xi)
    return C._cache["ring"]


def _require_squarefree(C: SuperellipticCurve) -> None:
    if not C.is_squarefree():
        raise NotImplementedError("divisor arithmetic needs squarefree f (all e_i = 1)")


@dataclass(frozen=True)
class Place:
    kind: str
    x_poly: tuple = ()
    y_poly: tuple = ()
    degree: int = 1
    index: int = -1

    def sort_key(self) -> tuple:
        if self.kind == BRANCH:
            return (0, self.index)
        return (_KIND_ORDER[self.kind], len(self.x_poly), self.x_poly, len(self.y_poly), self.y_poly)

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def coordinates(self, F) -> tuple:
        """(x0, y0) of a rational finite place."""
        if self.kind == INFINITY or self.degree != 1:
            raise ValueError("only rational finite places have coordinates")
        x0 = F.neg(self.x_poly[0])
        if self.kind == BRANCH:
            return x0, F.zero
        lift = self.y_poly[0]
        y0 = F.neg(lift[0]) if lift else F.zero
        return x0, y0

    def __str__(self) -> str:
        if self.kind == INFINITY:
            return "inf"
        if self.kind == BRANCH:
            return f"Q{self.index + 1}"
        return f"P(h={list(self.x_poly)}, G={[list(c) for c in self.y_poly]})"


INFINITY_PLACE = Place(INFINITY)


def rational_place(C: SuperellipticCurve, x0, y0) -> Place:
    F = C.field
    if fp.evaluate(F, C.f_list(), x0) != F.pow(y0, C.N):
        raise ValueError("point is not on the curve")
    if y0 == F.zero:
        i = C.roots.index(x0)
        return Place(BRANCH, (F.neg(x0), F.one), ((), (F.one,)), 1, i)
    neg_y = F.neg(y0)
    return Place(FINITE, (F.neg(x0), F.one), ((neg_y,), (F.one,)), 1)


def branch_place(C: SuperellipticCurve, i: int) -> Place:
    F = C.field
    return Place(BRANCH, (F.neg(C.roots[i]), F.one), ((), (F.one,)), 1, i)


def rational_points(C: SuperellipticCurve) -> list[tuple]:
    """Affine F_Q-points (x, y), sorted."""
    if "points" not in C._cache:
        F = C.field
        f = C.f_list()
        pts = []
        for x in range(F.order):
            c = fp.evaluate(F, f, x)
            r = F.nth_root(c, C.N)
            if r is None:
                continue
            if c == F.zero:
                pts.append((x, F.zero))
            else:
                pts.extend((x, F.mul(r, F.pow(C.xi, k))) for k in range(C.N))
        C._cache["points"] = sorted(pts)
    return C._cache["points"]


def rational_places(C: SuperellipticCurve, include_infinity: bool = True) -> list[Place]:
    places = [rational_place(C, x, y) for x, y in rational_points(C)]
    if include_infinity:
        places.append(INFINITY_PLACE)
    return sorted(places)


def places_above(C: SuperellipticCurve, h: list) -> list[Place]:
    """All places over the prime h(x) of F_Q[x] (h monic irreducible)."""
    F = C.field
    h = tuple(fp.monic(F, list(h)))
    for i, a in enumerate(C.roots):
        if h == (F.neg(a), F.one):
            return [branch_place(C, i)]
    k = len(h) - 1
    if k == 1:
        K = F
        c = fp.evaluate(F, C.f_list(), F.neg(h[0]))
        poly = [F.neg(c)] + [F.zero] * (C.N - 1) + [F.one]
        factors = fp.factor(K, poly)
        out = []
        for g, _ in factors:
            lifted = tuple(tuple(fp.trim([a])) for a in g)
            out.append(Place(FINITE, h, lifted, len(g) - 1))
        return sorted(out)
    K = ResidueField(F, list(h))
    c = K._pack(fp.rem(F, C.f_list(), list(h)))
    poly = [K.neg(c)] + [K.zero] * (C.N - 1) + [K.one]
    out = []
    for g, _ in fp.factor(K, poly):
        lifted = tuple(tuple(K.lift(a)) for a in g)
        out.append(Place(FINITE, h, lifted, k * (len(g) - 1)))
    return sorted(out)


def place_ideal(C: SuperellipticCurve, P: Place) -> Ideal:
    """The prime ideal of A for a finite place."""
    if P.kind == INFINITY:
        raise ValueError("infinity is not a prime of A")
    key = ("place_ideal", P)
    if key not in C._cache:
        R = ring(C)
        h = list(P.x_poly)
        G = R.zero()
        for j, c in enumerate(P.y_poly):
            if c:
                G = R.add(G, R.y_power(j, list(c)))
        C._cache[key] = R.ideal_from_generators([R.from_poly(h), G], modulus=h)
    return C._cache[key]


@dataclass(frozen=True)
class Divisor:
    """Finite formal sum of places; terms are kept sorted with nonzero coefficients."""

    terms: tuple[tuple[Place, int], ...] = ()

    @staticmethod
    def from_dict(d: dict) -> "Divisor":
        return Divisor(tuple(sorted(((P, c) for P, c in d.items() if c), key=lambda t: t[0].sort_key())))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        return sum(c * P.degree for P, c in self.terms)

    def __add__(self, other: "Divisor") -> "Divisor":
        d = self.as_dict()
        for P, c in other.terms:
            d[P] = d.get(P, 0) + c
        return Divisor.from_dict(d)

    def __neg__(self) -> "Divisor":
        return Divisor(tuple((P, -c) for P, c in self.terms))

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor.from_dict({P: k * c for P, c in self.terms})

    __rmul__ = __mul__

    def coefficient(self, P: Place) -> int:
        return self.as_dict().get(P, 0)

    def is_effective(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def finite_part(self) -> "Divisor":
        return Divisor(tuple((P, c) for P, c in self.terms if P.kind != INFINITY))

    def support(self) -> list[Place]:
        return [P for P, _ in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for P, c in self.terms:
            parts.append(f"{'+' if c > 0 else '-'} {abs(c) if abs(c) != 1 else ''}{P}".replace("  ", " "))
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else s


def place_divisor(P: Place, c: int = 1) -> Divisor:
    return Divisor(((P, c),)) if c else Divisor()


# -- valuations and principal divisors ----------------------------------------

def _valuation_in(C: SuperellipticCurve, P: Place, member) -> int:
    """Largest k with member(P^k) true; member tests containment of g or I."""
    R = ring(C)
    Pk = place_ideal(C, P)
    k = 0
    while member(Pk):
        k += 1
        Pk = R.product(Pk, place_ideal(C, P))
    return k


def valuation(C: SuperellipticCurve, P: Place, g: list) -> int:
    """v_P(g) for a nonzero element g of A."""
    R = ring(C)
    if P.kind == INFINITY:
        return -R.wdeg(g)[0]
    return _valuation_in(C, P, lambda J: R.contains(J, g))


def _prime_factors(C: SuperellipticCurve, poly: list) -> list[list]:
    F = C.field
    if len(poly) <= 1:
        return []
    return [h for h, _ in fp.factor(F, poly)]


def divisor_of_function(C: SuperellipticCurve, g, denominator: list | None = None) -> Divisor:
    """div(g) for g in A (list of N polynomials in x, or a dict {(i, j): c} of
    monomials x^i y^j), optionally divided by a polynomial in x."""
    _require_squarefree(C)
    R = ring(C)
    g = as_element(C, g)
    if R.is_zero(g):
        raise ValueError("the zero function has no divisor")
    terms: dict = {}
    nm = R.norm(g)
    for h in _prime_factors(C, nm):
        for P in places_above(C, h):
            v = valuation(C, P, g)
            if v:
                terms[P] = v
    terms[INFINITY_PLACE] = -R.wdeg(g)[0]
    D = Divisor.from_dict(terms)
    if denominator is not None:
        D = D - divisor_of_function(C, R.from_poly(list(denominator)))
    if D.degree != 0:
        raise ArithmeticError(f"principal divisor of degree {D.degree}")
    return D


def as_element(C: SuperellipticCurve, g) -> list:
    R = ring(C)
    F = C.field
    if isinstance(g, dict):
        out = R.zero()
        for (i, j), c in g.items():
            mono = R.y_power(j, [F.zero] * i + [c])
            out = R.add(out, mono)
        return out
    return [fp.trim([c for c in x]) for x in g]


def ideal_to_divisor(C: SuperellipticCurve, I: Ideal) -> Divisor:
    """The effective divisor (away from infinity) of a nonzero ideal."""
    R = ring(C)
    terms = {}
    for h in _prime_factors(C, R.ideal_norm(I)):
        for P in places_above(C, h):
            v = _valuation_in(C, P, lambda J: R.is_subset(I, J))
            if v:
                terms[P] = v
    D = Divisor.from_dict(terms)
    if D.degree != I.degree:
        raise ArithmeticError("ideal factorization lost degree")
    return D


def effective_ideal(C: SuperellipticCurve, D: Divisor) -> Ideal:
    """Ideal of an effective divisor with no infinity component."""
    R = ring(C)
    I = R.unit_ideal()
    for P, c in D.terms:
        if P.kind == INFINITY:
            raise ValueError("infinity has no ideal")
        if c < 0:
            raise ValueError("divisor is not effective")
        I = R.product(I, R.power(place_ideal(C, P), c))
    return I


# -- Riemann-Roch spaces via local expansions ----------------------------------

def _series_mul(F, a: list, b: list, prec: int) -> list:
    out = [F.zero] * prec
    for i, x in enumerate(a[:prec]):
        if x == F.zero:
            continue
        for j in range(min(len(b), prec - i)):
            if b[j] != F.zero:
                out[i + j] = F.add(out[i + j], F.mul(x, b[j]))
    return out


def _series_inv(F, a: list, prec: int) -> list:
    if a[0] == F.zero:
        raise ZeroDivisionError("series is not a unit")
    inv0 = F.inv(a[0])
    out = [F.zero] * prec
    out[0] = inv0
    for k in range(1, prec):
        acc = F.zero
        for i in range(1, min(k, len(a) - 1) + 1):
            acc = F.add(acc, F.mul(a[i], out[k - i]))
        out[k] = F.neg(F.mul(acc, inv0))
    return out


def _poly_in_series(F, poly: list, s: list, prec: int) -> list:
    """poly(s) truncated, by Horner."""
    acc = [F.zero] * prec
    for c in reversed(poly):
        acc = _series_mul(F, acc, s, prec)
        acc[0] = F.add(acc[0], c)
    return acc


def local_expansion(C: SuperellipticCurve, P: Place, prec: int) -> tuple[list, list]:
    """Truncated series (x(t), y(t)) in a uniformizer t at a rational finite place.

    Away from the branch points t = x - x0 and y(t) is the root of Y^N = f(x0 + t)
    with y(0) = y0, found coefficient by coefficient (N y0^(N-1) is invertible).
    At a branch point t = y and x = alpha + s(t) with s = t^N / f1(alpha + s),
    f1 = f / (x - alpha), solved by fixed-point iteration.
    """
    F = C.field
    f = C.f_list()
    x0, y0 = P.coordinates(F)
    if P.kind == BRANCH:
        f1 = fp.exact_quo(F, f, [F.neg(x0), F.one])
        tN = [F.zero] * prec
        if C.N < prec:
            tN[C.N] = F.one
        s = [F.zero] * prec
        for _ in range(prec // C.N + 2):
            xs = list(s)
            xs[0] = F.add(xs[0], x0)
            s = _series_mul(F, tN, _series_inv(F, _poly_in_series(F, f1, xs, prec), prec), prec)
        xt = list(s)
        xt[0] = F.add(xt[0], x0)
        yt = [F.zero] * prec
        if prec > 1:
            yt[1] = F.one
        return xt, yt
    xt = [F.zero] * prec
    xt[0] = x0
    if prec > 1:
        xt[1] = F.one
    target = _poly_in_series(F, f, xt, prec)
    y = [F.zero] * prec
    y[0] = y0
    denom = F.inv(F.mul(F.from_int(C.N), F.pow(y0, C.N - 1)))
    for k in range(1, prec):
        # y^N with y_k = 0 so far; the t^k coefficient is linear in y_k
        yN = [F.one] + [F.zero] * (prec - 1)
        for _ in range(C.N):
            yN = _series_mul(F, yN, y, k + 1)
        y[k] = F.mul(F.sub(target[k], yN[k]), denom)
    return xt, y


def _monomial_series(C: SuperellipticCurve, P: Place, monomials: list[tuple[int, int]], prec: int) -> list[list]:
    F = C.field
    xt, yt = local_expansion(C, P, prec)
    maxi = max(i for i, _ in monomials)
    xp = [[F.one] + [F.zero] * (prec - 1)]
    for _ in range(maxi):
        xp.append(_series_mul(F, xp[-1], xt, prec))
    yp = [[F.one] + [F.zero] * (prec - 1)]
    for _ in range(C.N - 1):
        yp.append(_series_mul(F, yp[-1], yt, prec))
    return [_series_mul(F, xp[i], yp[j], prec) for i, j in monomials]


def rr_space(C: SuperellipticCurve, D: Divisor) -> list[tuple[list, list]]:
    """Basis of L(D) = {g : div(g) + D >= 0} as pairs (numerator in A, denominator in F_Q[x]).

    Only divisors supported on rational places are allowed.
    """
    _require_squarefree(C)
    F = C.field
    R = ring(C)
    for P, _ in D.terms:
        if P.degree != 1:
            raise ValueError("rr_space needs a divisor supported on rational places")
    d = D.as_dict()
    a_inf = d.pop(INFINITY_PLACE, 0)
    # clear finite poles with h = prod (x - x0)^k
    by_x: dict = {}
    for P, c in d.items():
        x0, _ = P.coordinates(F)
        e = C.N if P.kind == BRANCH else 1
        need = -(-c // e) if c > 0 else 0
        by_x[x0] = max(by_x.get(x0, 0), need)
    h = [F.one]
    for x0, k in by_x.items():
        if k:
            h = fp.mul(F, h, fp.pow_(F, [F.neg(x0), F.one], k))
    deg_h = len(h) - 1
    bound = a_inf + C.N * deg_h
    if bound < 0:
        return []
    m = C.deg_f
    monomials = [(i, j) for j in range(C.N) for i in range((bound - m * j) // C.N + 1) if m * j <= bound]
    if not monomials:
        return []
    # required order of vanishing of F = h g at each constrained place
    constraints = {}
    for x0, k in by_x.items():
        for P in places_above(C, [F.neg(x0), F.one]):
            e = C.N if P.kind == BRANCH else 1
            constraints[P] = k * e - d.get(P, 0)
    for P, c in d.items():
        if P not in constraints:
            constraints[P] = -c
    rows = []
    for P, need in sorted(constraints.items(), key=lambda t: t[0].sort_key()):
        if need <= 0:
            continue
        series = _monomial_series(C, P, monomials, need)
        for k in range(need):
            rows.append([s[k] for s in series])
    if rows:
        kern = la.kernel(F, rows, len(monomials))
    else:
        kern = la.identity(F, len(monomials))
    basis = []
    for v in kern:
        g = R.zero()
        for (i, j), c in zip(monomials, v):
            if c != F.zero:
                g[j] = fp.add(F, g[j], [F.zero] * i + [c])
        basis.append((g, h))
    return basis


def rr_dimension(C: SuperellipticCurve, D: Divisor) -> int:
    return len(rr_space(C, D))
