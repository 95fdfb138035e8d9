"""Z[zeta_N] as Z[T]/(Phi_N): norms, units, c_N and polarization degrees."""

from __future__ import annotations

from dataclasses import dataclass

from . import arith
from .intpoly import IntPoly, cyclotomic, divmod_monic, resultant
from .reports import CheckReport, make_report, timed


@dataclass(frozen=True)
class CyclotomicElement:
    """An element of Z[zeta_N], stored as its remainder mod Phi_N."""

    N: int
    repr: IntPoly

    def __init__(self, N: int, poly: IntPoly | list[int]):
        if N < 1:
            raise ValueError("conductor must be positive")
        if not isinstance(poly, IntPoly):
            poly = IntPoly(poly)
        _, r = divmod_monic(poly, cyclotomic(N))
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "repr", r)

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CyclotomicElement":
        return cls(N, IntPoly.monomial(k % N))

    @classmethod
    def integer(cls, N: int, a: int) -> "CyclotomicElement":
        return cls(N, IntPoly([a]))

    def _same(self, other: "CyclotomicElement") -> None:
        if self.N != other.N:
            raise ValueError("elements of different cyclotomic rings")

    def __add__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._same(other)
        return CyclotomicElement(self.N, self.repr + other.repr)

    def __sub__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._same(other)
        return CyclotomicElement(self.N, self.repr - other.repr)

    def __mul__(self, other: "CyclotomicElement") -> "CyclotomicElement":
        self._same(other)
        return CyclotomicElement(self.N, self.repr * other.repr)

    def __pow__(self, e: int) -> "CyclotomicElement":
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = CyclotomicElement.integer(self.N, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def is_zero(self) -> bool:
        return self.repr.is_zero()

    def __str__(self) -> str:
        return str(self.repr).replace("T", f"z{self.N}")


def cyc_norm(x: CyclotomicElement) -> int:
    """Res(Phi_N, repr): the norm down to Z (signed)."""
    if x.is_zero():
        raise ValueError("norm of zero")
    return resultant(cyclotomic(x.N), x.repr)


def is_unit(x: CyclotomicElement) -> bool:
    if x.is_zero():
        return False
    return abs(cyc_norm(x)) == 1


def one_minus_zeta(N: int, k: int = 1) -> CyclotomicElement:
    """1 - zeta_N^k."""
    return CyclotomicElement.integer(N, 1) - CyclotomicElement.zeta(N, k)


def c_n_element(N: int) -> CyclotomicElement:
    """(1 - zeta_q)^(p^(r-1) - 1) for N = q = p^r; otherwise the product over the
    prime-power parts q_s = p_s^r_s of (1 - zeta_{q_s})^(p_s^(r_s - 1)),
    with zeta_{q_s} = zeta_N^(N/q_s)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    fac = arith.factorint(N)
    if len(fac) == 1:
        p, r = fac[0]
        return one_minus_zeta(N) ** (p ** (r - 1) - 1)
    out = CyclotomicElement.integer(N, 1)
    for p, r in fac:
        q = p ** r
        out = out * one_minus_zeta(N, N // q) ** (p ** (r - 1))
    return out


def norm_cn_closed_form(N: int) -> int:
    fac = arith.factorint(N)
    if len(fac) == 1:
        p, r = fac[0]
        return p ** (p ** (r - 1) - 1)
    phi = arith.euler_phi(N)
    out = 1
    for p, _ in fac:
        out *= p ** (phi // (p - 1))
    return out


@timed
def verify_norm_cn(N: int) -> CheckReport:
    """|Nm(c_N)| against the closed form; the sign of the resultant is recorded."""
    expected = norm_cn_closed_form(N)
    norm = cyc_norm(c_n_element(N))
    return make_report("norm_cn", {"N": N}, expected, abs(norm), abs(norm) == expected,
                       notes={"signed_norm": norm})


def polarization_degree(N: int, n: int) -> int:
    """|Nm(c_N)|^(n-1)."""
    if N < 2 or n < 2:
        raise ValueError("need N >= 2 and n >= 2")
    return abs(cyc_norm(c_n_element(N))) ** (n - 1)


@timed
def verify_tau_square(q: int) -> CheckReport:
    """tau_q^2 = c_q with tau_q = (1 - zeta_q)^((p^(r-1) - 1)/2), p odd."""
    fac = arith.factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, r = fac[0]
    if p == 2:
        raise ValueError("tau_q is only defined for odd p")
    tau = one_minus_zeta(q) ** ((p ** (r - 1) - 1) // 2)
    c = c_n_element(q)
    sq = tau * tau
    return make_report("tau_square", {"q": q}, str(c), str(sq), sq == c)
