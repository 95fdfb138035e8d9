"""Dense univariate polynomials over Z and the cyclotomic machinery built on them.

Coefficients are stored low degree first; the zero polynomial has no
coefficients.  All arithmetic is exact (Python ints).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from . import arith
from .reports import CheckReport, make_report, timed


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, ``coeffs[i]`` is the coefficient of T^i."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(a) for a in c))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPoly":
        return cls([0] * k + [a])

    @classmethod
    def x_minus(cls, a: int) -> "IntPoly":
        return cls([-a, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self), len(other))
        return IntPoly(self[i] - other[i] for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        result, base = IntPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        return divmod_monic(self, other)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return divmod_monic(self, other)[0]

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        return divmod_monic(self, other)[1]

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = y * x + c
        return y

    def derivative(self) -> "IntPoly":
        return IntPoly(i * a for i, a in enumerate(self.coeffs) if i)

    def substitute_power(self, k: int) -> "IntPoly":
        """Return self(T^k)."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, a in enumerate(self.coeffs):
            out[i * k] = a
        return IntPoly(out)

    def __str__(self) -> str:
        return render(self.coeffs)


def render(coeffs: Sequence[int], var: str = "T") -> str:
    """Canonical exact rendering, highest degree first: ``T^4 - T^2 + 1``."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        a = coeffs[i]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        m = abs(a)
        if i == 0:
            body = str(m)
        else:
            mon = var if i == 1 else f"{var}^{i}"
            body = mon if m == 1 else f"{m}*{mon}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def divmod_monic(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division by a polynomial with leading coefficient +-1 (exact over Z)."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lc = b.lc
    if lc not in (1, -1):
        return _divmod_exact(a, b)
    r = list(a.coeffs)
    db = b.degree
    if len(r) - 1 < db:
        return IntPoly(), a
    q = [0] * (len(r) - db)
    bc = b.coeffs
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * lc
        if c:
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] -= c * bc[j]
    return IntPoly(q), IntPoly(r[:db])


def _divmod_exact(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    r = list(a.coeffs)
    db = b.degree
    if len(r) - 1 < db:
        return IntPoly(), a
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c, rem = divmod(r[k], b.lc)
        if rem:
            raise ValueError("inexact division over Z")
        q[k - db] = c
        for j in range(db + 1):
            r[k - db + j] -= c * b.coeffs[j]
    return IntPoly(q), IntPoly(r[:db])


def content(f: IntPoly) -> int:
    g = 0
    for a in f.coeffs:
        g = gcd(g, a)
    return g


# ---------------------------------------------------------------------------
# number-theoretic helpers re-exported for convenience

euler_phi = arith.euler_phi
mobius = arith.mobius


@lru_cache(maxsize=None)
def _cyclotomic_squarefree(m: int) -> IntPoly:
    # Moebius product; numerator factors first so every division is exact
    num = IntPoly([1])
    den = IntPoly([1])
    for d in arith.divisors(m):
        mu = arith.mobius(m // d)
        b = IntPoly.monomial(d) - IntPoly([1])
        if mu == 1:
            num = num * b
        elif mu == -1:
            den = den * b
    q, r = divmod_monic(num, den)
    assert r.is_zero()
    return q


@lru_cache(maxsize=None)
def cyclotomic(D: int) -> IntPoly:
    """The D-th cyclotomic polynomial.

    Uses Phi_D(T) = Phi_rad(D)(T^(D/rad D)) so only squarefree indices go
    through the Moebius product.
    """
    if D < 1:
        raise ValueError("cyclotomic index must be positive")
    rad = arith.radical(D)
    base = _cyclotomic_squarefree(rad)
    return base.substitute_power(D // rad) if rad != D else base


def cyclotomic_by_division(D: int) -> IntPoly:
    """Independent route: (T^D - 1) divided by Phi_d for every proper divisor d."""
    q = IntPoly.monomial(D) - IntPoly([1])
    for d in arith.divisors(D):
        if d != D:
            q, r = divmod_monic(q, cyclotomic_by_division(d))
            assert r.is_zero()
    return q


def pn_poly(N: int) -> IntPoly:
    """(T^N - 1)/(T - 1) = 1 + T + ... + T^(N-1); cross-checked against the cyclotomic product."""
    if N < 2:
        raise ValueError("N must be at least 2")
    as_sum = IntPoly([1] * N)
    as_prod = IntPoly([1])
    for d in arith.divisors(N):
        if d > 1:
            as_prod = as_prod * cyclotomic(d)
    if as_sum != as_prod:
        raise ArithmeticError(f"P_{N}: sum form and cyclotomic product disagree")
    return as_sum


def qnd_poly(N: int, D: int) -> IntPoly:
    """(T^N - 1)/(T^D - 1) for a proper divisor D of N."""
    if N < 2 or D < 1 or N % D or D >= N:
        raise ValueError(f"{D} is not a proper divisor of {N}")
    as_sum = IntPoly([1 if i % D == 0 else 0 for i in range(N - D + 1)])
    as_prod = IntPoly([1])
    for d in arith.divisors(N):
        if D % d:
            as_prod = as_prod * cyclotomic(d)
    if as_sum != as_prod:
        raise ArithmeticError(f"Q_{{{N},{D}}}: sum form and cyclotomic product disagree")
    return as_sum


# ---------------------------------------------------------------------------
# resultants

def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(r) - 1 - db + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0 and r:
        m = lb ** e
        r = [x * m for x in r]
    return r


def resultant(F: IntPoly, G: IntPoly) -> int:
    """Res(F, G) by the subresultant PRS (fraction-free).

    With F = lc(F) prod (T - x_i) this equals lc(F)^deg G * prod G(x_i).
    """
    if F.is_zero():
        raise ValueError("resultant with the zero polynomial")
    if G.is_zero():
        return 0
    a, b = list(F.coeffs), list(G.coeffs)
    da, db = len(a) - 1, len(b) - 1
    if db == 0:
        return b[0] ** da
    if da == 0:
        return a[0] ** db
    s = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da % 2 and db % 2:
            s = -s
    g = h = 1
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _pseudo_rem(a, b)
        if not r:
            return 0
        denom = g * h ** delta
        a, b = b, [x // denom for x in r]
        da, db = db, len(b) - 1
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)
        if db == 0:
            if da == 1:
                return s * b[0]
            return s * (b[0] ** da // h ** (da - 1))


def sylvester_resultant(F: IntPoly, G: IntPoly) -> int:
    """Determinant of the Sylvester matrix (Bareiss fraction-free elimination).

    Slow reference used only to cross-check :func:`resultant`.
    """
    m, n = F.degree, G.degree
    size = m + n
    if size == 0:
        return 1
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(F.coeffs)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(G.coeffs)):
            row[i + j] = c
        rows.append(row)
    return bareiss_det(rows)


def bareiss_det(mat: list[list[int]]) -> int:
    a = [row[:] for row in mat]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def discriminant(F: IntPoly) -> int:
    """Disc(F) = (-1)^(d(d-1)/2) Res(F, F') / lc(F)."""
    d = F.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(F, F.derivative())
    q, rem = divmod(r, F.lc)
    if rem:
        raise ArithmeticError("non-integral discriminant")
    return -q if (d * (d - 1) // 2) % 2 else q


# ---------------------------------------------------------------------------
# Bezout identity a F + b G = Res(F, G)

def bezout(F: IntPoly, G: IntPoly) -> tuple[IntPoly, IntPoly, int]:
    """Return (a, b, res) with a*F + b*G = Res(F, G), deg a < deg G, deg b < deg F.

    Solved as an integer linear system: the coefficient vector of (a, b) is
    res times the inverse Sylvester system applied to the constant 1, computed
    with the adjugate so everything stays in Z.
    """
    if not (F.is_monic() and G.is_monic()):
        raise ValueError("bezout expects monic inputs")
    res = resultant(F, G)
    if res == 0:
        raise ValueError("inputs share a common factor")
    m, n = F.degree, G.degree
    size = m + n
    if size == 0:
        return IntPoly(), IntPoly([1]), 1
    # columns: coefficients of T^0..T^(size-1); unknowns a_0..a_{n-1}, b_0..b_{m-1}
    cols = []
    for i in range(n):
        col = [0] * size
        for j, c in enumerate(F.coeffs):
            col[i + j] = c
        cols.append(col)
    for i in range(m):
        col = [0] * size
        for j, c in enumerate(G.coeffs):
            col[i + j] = c
        cols.append(col)
    mat = [[cols[j][i] for j in range(size)] for i in range(size)]
    rhs = [res] + [0] * (size - 1)
    sol = _solve_integer(mat, rhs)
    a = IntPoly(sol[:n])
    b = IntPoly(sol[n:])
    if a * F + b * G != IntPoly([res]):
        raise ArithmeticError("bezout identity failed verification")
    return a, b, res


def _solve_integer(mat: list[list[int]], rhs: list[int]) -> list[int]:
    from fractions import Fraction

    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(mat, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = []
    for i in range(n):
        v = a[i][n]
        if v.denominator != 1:
            raise ArithmeticError("non-integral Bezout coefficients")
        out.append(int(v))
    return out


def disc_pn_closed_form(N: int) -> int:
    return (-1) ** ((N - 1) * (N - 2) // 2) * N ** (N - 2)


@timed
def verify_disc_pn(N: int) -> CheckReport:
    """Direct discriminant of P_N against (-1)^((N-1)(N-2)/2) N^(N-2)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    expected = disc_pn_closed_form(N)
    actual = discriminant(pn_poly(N))
    return make_report("disc_pn", {"N": N}, expected, actual, expected == actual)
