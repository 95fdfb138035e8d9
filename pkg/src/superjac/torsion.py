"""F_l-subspaces of the Jacobian: l-torsion extraction, discrete logs, the delta matrix."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import arith
from . import linalg as la
from .curve import SuperellipticCurve, class_number, l_polynomial, new_curve
from .fields import finite_field
from .fppoly import FpPoly
from .picard import DivClass, class_add, class_mul, class_neg, class_sub, delta_action, random_class, zero_class

TORSION_SEED = 20240611
MAX_EXTENSION = 24
MAX_GROUP_ORDER = 10 ** 12
MAX_IDLE_SAMPLES = 40


class TorsionSearchError(RuntimeError):
    """The search bounds were exceeded before the torsion was found."""


class TorsionSpace:
    """An F_l-span of l-torsion classes with meet-in-the-middle discrete logs.

    Basis vectors are split in two halves; a table of all combinations of the
    first half is looked up with x minus each combination of the second half.
    """

    def __init__(self, C: SuperellipticCurve, ell: int):
        self.curve = C
        self.ell = ell
        self.basis: list[DivClass] = []
        self._low: dict | None = None
        self._high: list | None = None

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.ell ** self.rank

    def _combinations(self, vectors: list[DivClass]) -> list[tuple[tuple[int, ...], DivClass]]:
        out = [((), zero_class(self.curve))]
        for b in vectors:
            nxt = []
            for coeffs, x in out:
                cur = x
                for c in range(self.ell):
                    nxt.append((coeffs + (c,), cur))
                    cur = class_add(cur, b)
            out = nxt
        return out

    def _tables(self):
        if self._low is None:
            s = (self.rank + 1) // 2
            self._low = {x: coeffs for coeffs, x in self._combinations(self.basis[:s])}
            self._high = [(coeffs, class_neg(x)) for coeffs, x in self._combinations(self.basis[s:])]
        return self._low, self._high

    def dlog(self, x: DivClass) -> list[int] | None:
        """Coordinates of x in the basis, or None when x is outside the span."""
        low, high = self._tables()
        for hc, neg in high:
            y = class_add(x, neg)
            lc = low.get(y)
            if lc is not None:
                return list(lc) + list(hc)
        return None

    def combine(self, coeffs: list[int]) -> DivClass:
        out = zero_class(self.curve)
        for c, b in zip(coeffs, self.basis):
            if c % self.ell:
                out = class_add(out, class_mul(b, c % self.ell))
        return out

    def add(self, x: DivClass) -> bool:
        """Extend the basis by x (an l-torsion class) unless it already lies in the span."""
        if x.is_zero() or self.dlog(x) is not None:
            return False
        if not class_mul(x, self.ell).is_zero():
            raise ValueError("class is not l-torsion")
        self.basis.append(x)
        self._low = self._high = None
        return True

    def replace(self, i: int, x: DivClass) -> None:
        """Swap basis vector i for x; the caller guarantees the span is unchanged."""
        self.basis[i] = x
        self._low = self._high = None

    def matrix_of(self, op) -> list[list[int]]:
        """Matrix of an endomorphism preserving the span; column j is op(b_j)."""
        cols = []
        for b in self.basis:
            v = self.dlog(op(b))
            if v is None:
                raise ArithmeticError("the operator does not preserve the subspace")
            cols.append(v)
        return la.transpose(cols) if cols else []


def rank_bound(C: SuperellipticCurve, ell: int) -> int:
    """Upper bound for dim J(F_Q)[l]: min(2g, v_l |J|, multiplicity of 1 in the
    Frobenius characteristic polynomial mod l)."""
    order = class_number(C)
    L = list(l_polynomial(C).coeffs)
    charpoly = FpPoly(ell, list(reversed(L)))
    mult = 0
    lin = FpPoly(ell, [-1, 1])
    while charpoly.degree > 0 and (charpoly % lin).is_zero():
        charpoly = charpoly // lin
        mult += 1
    return min(2 * C.genus, arith.valuation(order, ell), mult)


def rational_torsion(C: SuperellipticCurve, ell: int, seed: int = TORSION_SEED,
                     seeds: list[DivClass] = (), target: int | None = None,
                     max_group_order: int = MAX_GROUP_ORDER,
                     max_idle: int = MAX_IDLE_SAMPLES) -> tuple[TorsionSpace, bool]:
    """Span of J(F_Q)[l] from cofactor multiples of random classes.

    Each sample is reduced against the stored l-power-torsion elements (keeping
    the longest ones), so Z/l^k factors with k > 1 do not bias the span.

    Returns the space and whether it is certified complete (its rank reached
    rank_bound, or `target`).
    """
    if ell == C.p or not arith.is_prime(ell):
        raise ValueError(f"l = {ell} must be a prime different from p = {C.p}")
    order = class_number(C)
    if order > max_group_order:
        raise TorsionSearchError(f"|J(F_Q)| = {order} exceeds the sampling bound {max_group_order}")
    bound = rank_bound(C, ell) if target is None else target
    cofactor = order // ell ** arith.valuation(order, ell)
    space = TorsionSpace(C, ell)
    # sylow[i] = (s_i, m_i) with s_i of order l^m_i and space.basis[i] = l^(m_i - 1) s_i
    sylow: list[tuple[DivClass, int]] = []

    def top(y: DivClass) -> tuple[int, DivClass]:
        m = 1
        while True:
            z = class_mul(y, ell)
            if z.is_zero():
                return m, y
            y, m = z, m + 1

    def insert(y: DivClass) -> bool:
        # reduce y against the stored elements; a longer y swaps in for a shorter s_j
        while not y.is_zero():
            m_y, y_top = top(y)
            v = space.dlog(y_top)
            if v is None:
                space.basis.append(y_top)
                space._low = space._high = None
                sylow.append((y, m_y))
                return True
            for i, c in enumerate(v):
                s_i, m_i = sylow[i]
                if c and m_i >= m_y:
                    y = class_sub(y, class_mul(s_i, c * ell ** (m_i - m_y)))
            short = [i for i, c in enumerate(v) if c and sylow[i][1] < m_y]
            if short:
                # l^(m_y-1) y is now a nonzero combination of shorter tops: swap y in
                j = short[0]
                old = sylow[j][0]
                sylow[j] = (y, m_y)
                space.replace(j, class_mul(y, ell ** (m_y - 1)))
                y = old
        return False

    for s in seeds:
        if not class_mul(s, ell).is_zero():
            raise ValueError("seed class is not l-torsion")
        insert(s)
    rng = random.Random(seed)
    idle = 0
    while space.rank < bound and idle < max_idle:
        y = class_mul(random_class(C, rng), cofactor)
        idle = 0 if insert(y) else idle + 1
    return space, space.rank >= bound


@dataclass
class TorsionBasis:
    curve: SuperellipticCurve
    ell: int
    space: TorsionSpace
    delta_matrix: list[list[int]]
    extension: int
    seed: int

    @property
    def generators(self) -> list[DivClass]:
        return self.space.basis

    @property
    def dim(self) -> int:
        return self.space.rank

    @property
    def field(self):
        return finite_field(self.ell)


def _extension_needed(C: SuperellipticCurve, ell: int, max_extension: int, max_group_order: int) -> int:
    need = ell ** (2 * C.genus)
    for k in range(1, max_extension + 1):
        order = class_number(C, k)
        if order % need == 0:
            if order > max_group_order:
                raise TorsionSearchError(f"J[{ell}] needs F_(Q^{k}) where |J| = {order} exceeds {max_group_order}")
            return k
    raise TorsionSearchError(f"J[{ell}] is not rational over F_(Q^k) for k <= {max_extension}")


def extend_curve(C: SuperellipticCurve, k: int) -> SuperellipticCurve:
    if k == 1:
        return C
    B = C.base_field
    f = [B.to_coeffs(c) for c in C.f_base] if B.degree > 1 else list(C.f_base)
    return new_curve(C.N, C.p, C.q, f=f, label=C.label, working_degree=C.extension_degree * k)


def torsion_basis(C: SuperellipticCurve, ell: int, seed: int = TORSION_SEED,
                  max_extension: int = MAX_EXTENSION,
                  max_group_order: int = MAX_GROUP_ORDER) -> TorsionBasis:
    """A basis of the full J[l] (2g classes of order l) and the matrix of delta on it.

    The working field is extended by the least k with l^(2g) dividing |J(F_(Q^k))|
    and then further while the rational l-torsion falls short of rank 2g.
    """
    key = ("torsion", ell, seed)
    if key in C._cache:
        return C._cache[key]
    g = C.genus
    k = _extension_needed(C, ell, max_extension, max_group_order)
    while k <= max_extension:
        Ck = extend_curve(C, k)
        if class_number(Ck) % ell ** (2 * g) == 0:
            space, _ = rational_torsion(Ck, ell, seed, target=2 * g, max_group_order=max_group_order)
            if space.rank == 2 * g:
                delta = space.matrix_of(delta_action)
                tb = TorsionBasis(Ck, ell, space, delta, k, seed)
                C._cache[key] = tb
                return tb
        k += 1
    raise TorsionSearchError(f"could not reach rank {2 * g} for J[{ell}]")


def kernel_subspace(tb: TorsionBasis, poly_coeffs: list[int]) -> list[list[int]]:
    """Basis (coordinate vectors) of ker G(delta) on J[l]; G has integer coefficients."""
    F = tb.field
    mat = la.poly_at_matrix(F, [c % tb.ell for c in poly_coeffs], tb.delta_matrix)
    return la.kernel(F, mat, tb.dim)
