"""Ideals of A = F_Q[x, y]/(y^N - f) as F_Q[x]-lattices.

An element of A is a list of N polynomials in x: entry j is the coefficient of
y^j.  An ideal I is free of rank N over F_Q[x]; we keep it in Hermite normal
form: rows b_0..b_{N-1}, row i has its pivot in column order[i] and zeros in
the columns before it (in that order), pivots are monic and the entries above a
pivot are reduced modulo it.  That form is unique, so ideals compare by rows.

When f is squarefree the affine curve is smooth, A is a Dedekind domain, and
effective divisors away from infinity are the same thing as nonzero ideals:
deg I = dim_{F_Q} A/I = sum of the pivot degrees.
"""

from __future__ import annotations

from . import fieldpoly as fp


class Ideal:
    __slots__ = ("rows", "order", "_deg", "_key")

    def __init__(self, rows: tuple, order: tuple):
        self.rows = rows
        self.order = order
        self._deg = None
        self._key = None

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.order, self.rows)
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def degree(self) -> int:
        if self._deg is None:
            self._deg = sum(len(r[c]) - 1 for r, c in zip(self.rows, self.order))
        return self._deg

    def pivots(self) -> list[tuple]:
        return [r[c] for r, c in zip(self.rows, self.order)]

    def __repr__(self) -> str:
        return f"Ideal(deg={self.degree}, pivots={[len(p) - 1 for p in self.pivots()]})"


class FunctionRing:
    """Arithmetic in A and on its ideals for one curve (or one cover degree)."""

    def __init__(self, F, N: int, f: list, xi):
        self.F = F
        self.N = N
        self.f = list(f)
        self.m = len(f) - 1
        self.xi = xi
        self.xi_pows = [F.pow(xi, k) for k in range(N)]
        self.default_order = tuple(range(N - 1, -1, -1))

    # -- elements ---------------------------------------------------------
    def zero(self) -> list:
        return [[] for _ in range(self.N)]

    def const(self, c) -> list:
        out = self.zero()
        out[0] = fp.trim([c])
        return out

    def from_poly(self, poly: list) -> list:
        out = self.zero()
        out[0] = list(poly)
        return out

    def y_power(self, j: int, coeff: list | None = None) -> list:
        out = self.zero()
        k, extra = j % self.N, j // self.N
        base = fp.pow_(self.F, self.f, extra) if extra else [self.F.one]
        out[k] = fp.mul(self.F, base, coeff if coeff is not None else [self.F.one])
        return out

    def is_zero(self, a: list) -> bool:
        return not any(a)

    def add(self, a: list, b: list) -> list:
        F = self.F
        return [fp.add(F, x, y) for x, y in zip(a, b)]

    def sub(self, a: list, b: list) -> list:
        F = self.F
        return [fp.sub(F, x, y) for x, y in zip(a, b)]

    def scale_poly(self, a: list, c: list) -> list:
        F = self.F
        return [fp.mul(F, x, c) for x in a]

    def mul(self, a: list, b: list) -> list:
        F, N = self.F, self.N
        lo = [[] for _ in range(N)]
        hi = [[] for _ in range(N)]
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                k = i + j
                prod = fp.mul(F, ai, bj)
                if k < N:
                    lo[k] = fp.add(F, lo[k], prod)
                else:
                    hi[k - N] = fp.add(F, hi[k - N], prod)
        for k in range(N):
            if hi[k]:
                lo[k] = fp.add(F, lo[k], fp.mul(F, hi[k], self.f))
        return lo

    def times_y(self, a: list) -> list:
        F = self.F
        out = [a[-1] and fp.mul(F, a[-1], self.f)] + [list(x) for x in a[:-1]]
        out[0] = out[0] or []
        return out

    def conj(self, a: list, k: int) -> list:
        """sigma^k(a): y -> xi^k y."""
        F = self.F
        out = []
        for j, aj in enumerate(a):
            c = self.xi_pows[(k * j) % self.N]
            out.append(fp.scale(F, aj, c) if aj else [])
        return out

    def norm(self, a: list) -> list:
        """prod_k sigma^k(a), a polynomial in x."""
        acc = list(a)
        for k in range(1, self.N):
            acc = self.mul(acc, self.conj(a, k))
        if any(acc[1:]):
            raise ArithmeticError("norm is not in F_Q[x]")
        return acc[0]

    def wdeg(self, a: list) -> tuple[int, int]:
        """(pole order at infinity, leading y-index); N deg a_j + m j is distinct per j."""
        best = (-1, -1)
        for j, aj in enumerate(a):
            if aj:
                w = self.N * (len(aj) - 1) + self.m * j
                if w > best[0]:
                    best = (w, j)
        if best[0] < 0:
            raise ValueError("zero has no pole order")
        return best

    # -- Hermite normal form -------------------------------------------------
    def hnf(self, gens, modulus: list | None = None, order: tuple | None = None) -> Ideal:
        """HNF of the F_Q[x]-span of `gens` (which must have full rank).

        `modulus`, if given, must be a polynomial d with d*A inside the span;
        entries are then kept reduced mod d.
        """
        F, N = self.F, self.N
        order = tuple(order) if order is not None else self.default_order
        redmod = modulus if modulus is not None and len(modulus) > 1 else None
        if modulus is not None and len(modulus) == 1:
            # a unit multiple of 1 lies in the span: it is the whole ring
            return self.unit_ideal(order)

        def reduce_row(r):
            if redmod is not None:
                return [fp.rem(F, x, redmod) if len(x) >= len(redmod) else x for x in r]
            return r

        rows = [reduce_row([list(x) for x in g]) for g in gens]
        rows = [r for r in rows if any(r)]
        done = []
        for c in order:
            cand = [r for r in rows if r[c]]
            rest = [r for r in rows if not r[c]]
            if redmod is not None:
                u = [[] for _ in range(N)]
                u[c] = list(redmod)
                cand.append(u)
            while len(cand) > 1:
                cand.sort(key=lambda r: len(r[c]))
                piv = cand[0]
                keep = [piv]
                pc = piv[c]
                for r in cand[1:]:
                    q = fp.quo(F, r[c], pc)
                    if q:
                        r = [fp.sub(F, x, fp.mul(F, q, y)) if y else x for x, y in zip(r, piv)]
                        r = reduce_row(r)
                    if r[c]:
                        keep.append(r)
                    elif any(r):
                        rest.append(r)
                cand = keep
            if not cand:
                raise ValueError("generators do not span a full-rank lattice")
            piv = cand[0]
            lc = piv[c][-1]
            if lc != F.one:
                inv = F.inv(lc)
                piv = [fp.scale(F, x, inv) for x in piv]
            done.append(piv)
            rows = rest
        # reduce entries above each pivot
        for j in range(1, N):
            cj = order[j]
            pj = done[j][cj]
            for i in range(j):
                e = done[i][cj]
                if len(e) >= len(pj):
                    q = fp.quo(F, e, pj)
                    done[i] = [fp.sub(F, x, fp.mul(F, q, y)) if y else x for x, y in zip(done[i], done[j])]
        return Ideal(tuple(tuple(tuple(x) for x in r) for r in done), order)

    def unit_ideal(self, order: tuple | None = None) -> Ideal:
        order = tuple(order) if order is not None else self.default_order
        rows = []
        for c in order:
            r = [()] * self.N
            r[c] = (self.F.one,)
            rows.append(tuple(r))
        return Ideal(tuple(rows), order)

    def basis(self, I: Ideal) -> list[list]:
        return [[list(x) for x in r] for r in I.rows]

    def min_poly(self, I: Ideal) -> list:
        """A nonzero polynomial in I: the last pivot when column 0 comes last, else the norm."""
        if I.order[-1] == 0:
            return list(I.rows[-1][0])
        return self.ideal_norm(I)

    def ideal_norm(self, I: Ideal) -> list:
        acc = [self.F.one]
        for p in I.pivots():
            acc = fp.mul(self.F, acc, list(p))
        return acc

    def reorder(self, I: Ideal, order: tuple | None = None) -> Ideal:
        order = tuple(order) if order is not None else self.default_order
        if order == I.order:
            return I
        return self.hnf(self.basis(I), self.min_poly(I), order)

    def ideal_from_generators(self, gens: list[list], modulus: list | None = None) -> Ideal:
        """The A-ideal generated by `gens`; each generator is multiplied by 1, y, ..., y^(N-1)."""
        spanning = []
        for g in gens:
            cur = [list(x) for x in g]
            for _ in range(self.N):
                spanning.append(cur)
                cur = self.times_y(cur)
        if modulus is None:
            for g in gens:
                if any(g):
                    modulus = self.norm(g)
                    break
        return self.hnf(spanning, modulus)

    def principal(self, a: list) -> Ideal:
        return self.ideal_from_generators([a], self.norm(a))

    def contains(self, I: Ideal, a: list) -> bool:
        F = self.F
        v = [list(x) for x in a]
        for r, c in zip(I.rows, I.order):
            if v[c]:
                q, rem = fp.divmod_(F, v[c], list(r[c]))
                if rem:
                    return False
                v = [fp.sub(F, x, fp.mul(F, q, list(y))) if y else x for x, y in zip(v, r)]
        return not any(v)

    def is_subset(self, I: Ideal, J: Ideal) -> bool:
        return all(self.contains(J, [list(x) for x in r]) for r in I.rows)

    # -- ideal arithmetic --------------------------------------------------
    def product(self, I: Ideal, J: Ideal, order: tuple | None = None) -> Ideal:
        if I.degree == 0:
            return self.reorder(J, order)
        if J.degree == 0:
            return self.reorder(I, order)
        B1, B2 = self.basis(I), self.basis(J)
        gens = [self.mul(b, c) for b in B1 for c in B2]
        d = fp.mul(self.F, self.min_poly(I), self.min_poly(J))
        return self.hnf(gens, d, order)

    def power(self, I: Ideal, e: int) -> Ideal:
        out = self.unit_ideal()
        base = I
        while e:
            if e & 1:
                out = self.product(out, base)
            e >>= 1
            if e:
                base = self.product(base, base)
        return out

    def conj_ideal(self, I: Ideal, k: int) -> Ideal:
        """sigma^k(I); column scaling keeps the echelon shape, pivots are renormalized."""
        k %= self.N
        if k == 0 or I.degree == 0:
            return I
        F = self.F
        rows = []
        for r, c in zip(I.rows, I.order):
            scaled = [fp.scale(F, list(x), self.xi_pows[(k * j) % self.N]) if x else [] for j, x in enumerate(r)]
            inv = F.inv(scaled[c][-1])
            rows.append(tuple(tuple(fp.scale(F, x, inv)) if x else () for x in scaled))
        return Ideal(tuple(rows), I.order)

    def conj_product(self, I: Ideal) -> Ideal:
        """prod_{k=1}^{N-1} sigma^k(I); times I this is the norm of I times A."""
        if I.degree == 0:
            return I
        acc = self.conj_ideal(I, 1)
        for k in range(2, self.N):
            acc = self.product(acc, self.conj_ideal(I, k))
        return acc

    def min_element(self, I: Ideal) -> list:
        """The nonzero element of I of least pole order at infinity (unique up to scalars),
        via weak Popov reduction of the HNF basis."""
        F, N = self.F, self.N
        rows = self.basis(I)
        info = [self.wdeg(r) for r in rows]
        while True:
            seen = {}
            clash = None
            for idx, (w, j) in enumerate(info):
                if j in seen:
                    clash = (seen[j], idx)
                    break
                seen[j] = idx
            if clash is None:
                break
            a, b = clash
            if info[a][0] < info[b][0]:
                a, b = b, a
            # cancel the leading term of row a using row b
            (wa, j), (wb, _) = info[a], info[b]
            shift = (wa - wb) // N
            c = F.div(rows[a][j][-1], rows[b][j][-1])
            mono = [F.zero] * shift + [c]
            rows[a] = [fp.sub(F, x, fp.mul(F, mono, y)) if y else x for x, y in zip(rows[a], rows[b])]
            info[a] = self.wdeg(rows[a])
        best = min(range(N), key=lambda i: info[i][0])
        row = rows[best]
        lc = row[info[best][1]][-1]
        return [fp.scale(F, x, F.inv(lc)) if x else [] for x in row]

    def colon(self, g: list, I: Ideal) -> Ideal:
        """(g) : I = g * I^{-1} for g in I, computed as g * conj_product(I) / norm(I)."""
        F = self.F
        nI = self.ideal_norm(I)
        bar = self.conj_product(I)
        gens = []
        for b in self.basis(bar):
            prod = self.mul(g, b)
            gens.append([fp.exact_quo(F, x, nI) if x else [] for x in prod])
        ng = self.norm(g)
        return self.hnf(gens, fp.exact_quo(F, ng, nI))

    def reduce(self, I: Ideal) -> Ideal:
        """The unique effective ideal of least degree in the class of [I - deg(I) inf]."""
        if I.degree == 0:
            return self.unit_ideal()
        I = self.reorder(I)
        g1 = self.min_element(I)
        J1 = self.colon(g1, I)
        if J1.degree == 0:
            return self.unit_ideal()
        g2 = self.min_element(J1)
        return self.colon(g2, J1)
