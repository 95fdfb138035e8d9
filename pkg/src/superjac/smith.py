"""Smith normal form over Z and invariant factors of Z[T]/(F, G)."""

from __future__ import annotations

from dataclasses import dataclass

from .intpoly import IntPoly, cyclotomic, resultant
from .reports import CheckReport, make_report, timed


@dataclass(frozen=True)
class InvariantFactorization:
    """Z[T]/(F, G) ~ Z/d_1 + ... + Z/d_r with 1 < d_1 | d_2 | ... | d_r."""

    factors: tuple[int, ...]
    group_order: int

    @property
    def exponent(self) -> int:
        """Largest invariant factor; generates (F, G) n Z."""
        return self.factors[-1] if self.factors else 1


def smith_diagonal(mat: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form (nonnegative, divisibility chain, zeros last)."""
    a = [row[:] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        # pick the smallest nonzero entry in the trailing block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            changed = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        changed = True
            if changed:
                # move the smallest remaining entry of row/column t to the pivot
                cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
                _, i, j = min(cands)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue
            # row and column cleared; enforce divisibility on the rest
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    diag += [0] * (min(m, n) - len(diag))
    return diag


def multiplication_matrix(F: IntPoly, G: IntPoly) -> list[list[int]]:
    """Rows: coordinates of G * T^i mod F in the basis 1, T, ..., T^(deg F - 1)."""
    d = F.degree
    rows = []
    cur = G % F
    t = IntPoly([0, 1])
    for _ in range(d):
        rows.append([cur[k] for k in range(d)])
        cur = (cur * t) % F
    return rows


def invariant_factors(F: IntPoly, G: IntPoly) -> InvariantFactorization:
    """Invariant factors of the finite group Z[T]/(F, G) for monic coprime F, G."""
    if not (F.is_monic() and G.is_monic()):
        raise ValueError("invariant_factors expects monic inputs")
    res = resultant(F, G)
    if res == 0:
        raise ValueError("inputs share a common factor")
    if F.degree == 0:
        return InvariantFactorization((), 1)
    diag = smith_diagonal(multiplication_matrix(F, G))
    factors = tuple(d for d in diag if d != 1)
    order = 1
    for d in factors:
        order *= d
    if order != abs(res):
        raise ArithmeticError("group order disagrees with |Res(F, G)|")
    return InvariantFactorization(factors, order)


@timed
def verify_coprime_cyclotomics(D1: int, D2: int) -> CheckReport:
    """Z[T]/(Phi_D1, Phi_D2) is trivial when D1 < D2 and D1 does not divide D2."""
    if not (1 <= D1 < D2) or D2 % D1 == 0:
        raise ValueError("expects D1 < D2 with D1 not dividing D2")
    inv = invariant_factors(cyclotomic(D1), cyclotomic(D2))
    return make_report("coprime_cyclotomics", {"D1": D1, "D2": D2}, [], list(inv.factors), not inv.factors)
