"""Polynomials over a prime field F_p and the mod-p cyclotomic checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import arith, fieldpoly
from .fields import finite_field
from .intpoly import IntPoly, cyclotomic, divmod_monic, qnd_poly
from .reports import CheckReport, make_report, timed

MAX_MODULUS = 1 << 31


def _field(p: int):
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p >= MAX_MODULUS:
        raise ValueError("moduli are restricted to primes below 2^31")
    return finite_field(p)


@dataclass(frozen=True)
class FpPoly:
    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        _field(p)
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def field(self):
        return finite_field(self.p)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _same(self, other: "FpPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def _wrap(self, cs: list[int]) -> "FpPoly":
        return FpPoly(self.p, cs)

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._same(other)
        return self._wrap(fieldpoly.add(self.field, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._same(other)
        return self._wrap(fieldpoly.sub(self.field, list(self.coeffs), list(other.coeffs)))

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._same(other)
        return self._wrap(fieldpoly.mul(self.field, list(self.coeffs), list(other.coeffs)))

    def __pow__(self, e: int) -> "FpPoly":
        return self._wrap(fieldpoly.pow_(self.field, list(self.coeffs), e))

    def __divmod__(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        self._same(other)
        q, r = fieldpoly.divmod_(self.field, list(self.coeffs), list(other.coeffs))
        return self._wrap(q), self._wrap(r)

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def derivative(self) -> "FpPoly":
        return self._wrap(fieldpoly.derivative(self.field, list(self.coeffs)))

    def monic(self) -> "FpPoly":
        return self._wrap(fieldpoly.monic(self.field, list(self.coeffs)))

    def substitute_power(self, k: int) -> "FpPoly":
        return self._wrap(fieldpoly.compose_power(self.field, list(self.coeffs), k))

    def __str__(self) -> str:
        # coefficients shown as residues in [0, p)
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if not mon:
                terms.append(str(c))
            else:
                terms.append(mon if c == 1 else f"{c}*{mon}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class FpFactorization:
    p: int
    unit: int
    factors: tuple[tuple[FpPoly, int], ...]

    def expand(self) -> FpPoly:
        out = FpPoly(self.p, [self.unit])
        for h, t in self.factors:
            out = out * h ** t
        return out

    def __str__(self) -> str:
        parts = [f"({h})" + (f"^{t}" if t > 1 else "") for h, t in self.factors]
        if self.unit != 1 or not parts:
            parts.insert(0, str(self.unit))
        return " * ".join(parts)


def reduce_mod(F: IntPoly, p: int) -> FpPoly:
    """Coefficientwise reduction of an integer polynomial."""
    _field(p)
    return FpPoly(p, F.coeffs)


def fp_gcd(A: FpPoly, B: FpPoly) -> FpPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    A._same(B)
    return FpPoly(A.p, fieldpoly.gcd(A.field, list(A.coeffs), list(B.coeffs)))


def fp_factor(A: FpPoly) -> FpFactorization:
    """Irreducible factorization, factors ordered by degree then coefficients."""
    if A.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    raw = fieldpoly.factor(A.field, list(A.coeffs))
    factors = tuple((FpPoly(A.p, h), t) for h, t in raw)
    return FpFactorization(A.p, A.coeffs[-1], factors)


def is_separable(A: FpPoly) -> bool:
    """gcd(A, A') is constant; constants count as separable."""
    if A.is_zero():
        raise ValueError("the zero polynomial has no separability")
    if A.degree < 1:
        return True
    return fp_gcd(A, A.derivative()).degree == 0


def is_irreducible(A: FpPoly) -> bool:
    return fieldpoly.is_irreducible(A.field, list(A.coeffs))


@timed
def verify_phi_power_lemma(p: int, r: int, D: int) -> CheckReport:
    """Reduction of Phi_{p^r D} against (reduction of Phi_D)^phi(p^r) in F_p[T]."""
    if D < 1 or r < 1:
        raise ValueError("r and D must be positive")
    if D % p == 0:
        raise ValueError(f"p = {p} divides D = {D}")
    q = p ** r
    # the exact integer Phi_{qD}, bypassing the cache since these are large
    lhs = reduce_mod(cyclotomic.__wrapped__(q * D), p)
    base = reduce_mod(cyclotomic(D), p)
    # a^(p^(r-1) (p-1)) = (a^(p-1))(T^(p^(r-1))) because Frobenius fixes F_p
    rhs = (base ** (p - 1)).substitute_power(p ** (r - 1))
    params = {"p": p, "r": r, "D": D}
    return make_report("phi_power_lemma", params, str(rhs), str(lhs), lhs == rhs)


def _qnd_obligations(N: int) -> tuple[list[int], dict[int, FpPoly]]:
    phi = cyclotomic(N)
    primes = arith.prime_divisors(N)
    not_dividing = []
    cofactors = {}
    for ell in primes:
        q, rem = divmod_monic(qnd_poly(N, N // ell), phi)
        if not rem.is_zero():
            not_dividing.append(ell)
        cofactors[ell] = q
    gcds = {}
    for p in primes:
        g = FpPoly(p, [])
        for ell in primes:
            g = fp_gcd(g, reduce_mod(cofactors[ell], p))
        gcds[p] = g
    return not_dividing, gcds


@timed
def verify_qnd_ideal(N: int) -> CheckReport:
    """Both obligations behind (Q_{N,N/p} : p | N) = (Phi_N).

    (a) Phi_N divides Q_{N,N/p} for every prime p | N;
    (b) for each prime p | N the cofactors Q_{N,N/l}/Phi_N, l | N prime, are
        coprime in F_p[T].
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    not_dividing, gcds = _qnd_obligations(N)
    primes = arith.prime_divisors(N)
    expected = {"divisible": primes, "gcd": {str(p): "1" for p in primes}}
    actual = {
        "divisible": [ell for ell in primes if ell not in not_dividing],
        "gcd": {str(p): str(g) for p, g in gcds.items()},
    }
    ok = not not_dividing and all(g.degree == 0 for g in gcds.values())
    return make_report("qnd_ideal", {"N": N}, expected, actual, ok)
