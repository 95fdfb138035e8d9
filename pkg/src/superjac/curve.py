"""Superelliptic curves y^N = f(x) over finite fields.

The curve is defined over F_q (f has coefficients there); all geometry happens
over a working field F_Q = F_{q^k}, the smallest extension containing the
roots of f and a primitive N-th root of unity xi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb, gcd

from . import arith, fieldpoly as fp
from .fields import TABLE_LIMIT, FiniteField, embedding, field_of_order, finite_field
from .intpoly import IntPoly


class CurveError(ValueError):
    """Invalid curve data (the defining conditions fail)."""


@dataclass(frozen=True, eq=False)
class SuperellipticCurve:
    N: int
    p: int
    q: int
    base_field: FiniteField
    field: FiniteField
    roots: tuple[int, ...]
    multiplicities: tuple[int, ...]
    f: tuple[int, ...]
    f_base: tuple[int, ...]
    xi: int
    label: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def Q(self) -> int:
        return self.field.order

    @property
    def n(self) -> int:
        return len(self.roots)

    @property
    def deg_f(self) -> int:
        return len(self.f) - 1

    @property
    def extension_degree(self) -> int:
        return self.field.degree // self.base_field.degree

    @property
    def genus(self) -> int:
        return genus(self)

    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self.multiplicities)

    def f_list(self) -> list[int]:
        return list(self.f)

    def describe(self) -> dict:
        F = self.field
        B = self.base_field
        return {
            "label": self.label,
            "N": self.N,
            "p": self.p,
            "q": self.q,
            "Q": self.Q,
            "f": [B.to_coeffs(c) for c in self.f_base],
            "roots": [[F.to_coeffs(a), e] for a, e in zip(self.roots, self.multiplicities)],
            "working_modulus": list(F.modulus),
            "xi": F.to_coeffs(self.xi),
            "genus": self.genus,
        }

    def __repr__(self) -> str:
        return f"SuperellipticCurve(N={self.N}, f over F_{self.q}, working F_{self.Q}, label={self.label!r})"


def _element(F: FiniteField, spec) -> int:
    """An element of F from an int (residue / encoded integer) or a coefficient list."""
    if isinstance(spec, (list, tuple)):
        return F.from_coeffs([int(c) for c in spec])
    if isinstance(spec, int):
        if F.degree == 1:
            return spec % F.p
        if not 0 <= spec < F.order:
            raise CurveError(f"{spec} does not encode an element of {F}")
        return spec
    raise CurveError(f"cannot read a field element from {spec!r}")


def _splitting_degree(F: FiniteField, f: list[int]) -> int:
    k = 1
    for h, _ in fp.factor(F, f):
        d = len(h) - 1
        k = k * d // gcd(k, d)
    return k


def new_curve(N: int, p: int, q: int | None = None, *, roots=None, f=None, label: str = "",
              working_degree: int | None = None) -> SuperellipticCurve:
    """Validate y^N = f(x) with f monic over F_q, given by roots [(a, e), ...] in F_q
    or by its coefficient list (low degree first), and pick the working field.

    `working_degree` forces [F_Q : F_q]; it must be a multiple of the minimal degree.
    """
    if q is None:
        q = p
    if not arith.is_prime(p):
        raise CurveError(f"{p} is not prime")
    B = field_of_order(q)
    if B.p != p:
        raise CurveError(f"q = {q} is not a power of p = {p}")
    if N < 2:
        raise CurveError("N must be at least 2")
    if N % p == 0:
        raise CurveError(f"the characteristic {p} divides N = {N}")
    if roots is None and f is None:
        raise CurveError("give f or its roots")
    root_spec = None
    if roots is not None:
        root_spec = [(_element(B, a), int(e)) for a, e in roots]
        if len({a for a, _ in root_spec}) != len(root_spec):
            raise CurveError("repeated root in the root list")
        if any(e < 1 for _, e in root_spec):
            raise CurveError("multiplicities must be positive")
        expanded = [B.one]
        for a, e in root_spec:
            expanded = fp.mul(B, expanded, fp.pow_(B, [B.neg(a), B.one], e))
    if f is not None:
        f_base = fp.trim([_element(B, c) for c in f])
        if roots is not None and f_base != expanded:
            raise CurveError("f does not match its root/multiplicity specification")
    else:
        f_base = expanded
    if len(f_base) < 2:
        raise CurveError("f must be nonconstant")
    if f_base[-1] != B.one:
        raise CurveError("f must be monic")
    deg_f = len(f_base) - 1
    if gcd(deg_f, N) != 1:
        raise CurveError(f"gcd(deg f, N) = gcd({deg_f}, {N}) = {gcd(deg_f, N)} != 1")
    # minimal working field
    k_unity = arith.multiplicative_order(q % N, N) if N > 1 else 1
    k_split = 1 if root_spec is not None else _splitting_degree(B, f_base)
    k_min = k_unity * k_split // gcd(k_unity, k_split)
    k = k_min if working_degree is None else working_degree
    if k % k_min:
        raise CurveError(f"working degree {k} is not a multiple of the minimal degree {k_min}")
    W = finite_field(p, B.degree * k)
    emb = embedding(B, W)
    f_work = [emb[c] for c in f_base]
    if root_spec is not None:
        work_roots = [(emb[a], e) for a, e in root_spec]
    else:
        work_roots = []
        for h, e in fp.factor(W, f_work):
            if len(h) != 2:
                raise ArithmeticError("f does not split over the working field")
            work_roots.append((W.neg(h[0]), e))
        work_roots.sort()
    for a, e in work_roots:
        if gcd(e, N) != 1:
            raise CurveError(f"gcd(e, N) = gcd({e}, {N}) != 1 for a root")
    if len(work_roots) < 2:
        raise CurveError("need at least two distinct roots (genus would be 0)")
    # f = prod (x - a)^e, rechecked by expansion
    check = [W.one]
    for a, e in work_roots:
        check = fp.mul(W, check, fp.pow_(W, [W.neg(a), W.one], e))
    if check != f_work:
        raise ArithmeticError("root data does not expand to f")
    return SuperellipticCurve(
        N=N, p=p, q=q, base_field=B, field=W,
        roots=tuple(a for a, _ in work_roots),
        multiplicities=tuple(e for _, e in work_roots),
        f=tuple(f_work), f_base=tuple(f_base),
        xi=W.root_of_unity(N), label=label,
    )


def curve_from_spec(spec: dict) -> SuperellipticCurve:
    """Build a curve from the JSON description {"N","p","q","roots"|"f","label"}."""
    try:
        return new_curve(
            int(spec["N"]), int(spec["p"]), int(spec.get("q", spec["p"])),
            roots=spec.get("roots"), f=spec.get("f"), label=str(spec.get("label", "")),
            working_degree=spec.get("working_degree"),
        )
    except KeyError as exc:
        raise CurveError(f"curve spec is missing {exc}") from None


def with_cover_degree(C: SuperellipticCurve, D: int) -> SuperellipticCurve:
    """The quotient curve y^D = f(x) over the same working field."""
    if D < 2 or C.N % D:
        raise CurveError(f"D = {D} is not a divisor > 1 of N = {C.N}")
    B = C.base_field
    k = C.extension_degree
    curve = new_curve(D, C.p, C.q, f=[B.to_coeffs(c) for c in C.f_base] if B.degree > 1 else list(C.f_base),
                      label=f"{C.label}/D{D}" if C.label else "", working_degree=k)
    if curve.roots != C.roots:
        # keep the branch points in the same order as the cover
        curve = SuperellipticCurve(
            N=D, p=C.p, q=C.q, base_field=B, field=C.field, roots=C.roots,
            multiplicities=C.multiplicities, f=C.f, f_base=C.f_base,
            xi=C.field.root_of_unity(D), label=curve.label,
        )
    return curve


def genus(C: SuperellipticCurve) -> int:
    """(N - 1)(n - 1)/2: totally ramified over the n roots and over infinity."""
    return (C.N - 1) * (C.n - 1) // 2


# -- point counting and the zeta function ---------------------------------------

def _brute_count(C: SuperellipticCurve, field_degree_over_base: int) -> int:
    """|C(F_{q^j})| by sweeping x; +1 for the single point at infinity."""
    B = C.base_field
    E = finite_field(C.p, B.degree * field_degree_over_base)
    emb = embedding(B, E)
    coeffs = [emb[c] for c in C.f_base]
    d = gcd(C.N, E.order - 1)
    total = 1
    if E.degree == 1:
        P = E.p
        log = E.log_table
        for x in range(P):
            acc = 0
            for c in reversed(coeffs):
                acc = (acc * x + c) % P
            if acc == 0:
                total += 1
            elif log[acc] % d == 0:
                total += d
        return total
    add, mul = E.add, E.mul
    log = E.log_table
    for x in range(E.order):
        acc = 0
        for c in reversed(coeffs):
            acc = add(mul(acc, x), c)
        if acc == 0:
            total += 1
        elif log[acc] % d == 0:
            total += d
    return total


def _newton_coeffs(power_sums: list[int], g: int, q: int) -> list[int]:
    """L(T) = prod (1 - a_i T) from s_1..s_g and the functional equation."""
    a = [1]
    for k in range(1, g + 1):
        acc = -sum(power_sums[i - 1] * a[k - i] for i in range(1, k + 1))
        if acc % k:
            raise ArithmeticError("point counts are inconsistent (Newton step not integral)")
        a.append(acc // k)
    for k in range(g + 1, 2 * g + 1):
        a.append(q ** (k - g) * a[2 * g - k])
    return a


def _power_sums(L: list[int], count: int) -> list[int]:
    """s_1..s_count of the inverse roots of L(T) = sum a_k T^k, a_0 = 1."""
    s = []
    deg = len(L) - 1
    for k in range(1, count + 1):
        acc = -k * (L[k] if k <= deg else 0)
        for i in range(1, k):
            acc -= (L[k - i] if k - i <= deg else 0) * s[i - 1]
        s.append(acc)
    return s


def _check_weil(L: list[int], g: int, q: int) -> None:
    if len(L) != 2 * g + 1 or L[-1] != q ** g:
        raise ArithmeticError("L-polynomial has the wrong shape")
    for k in range(1, g + 1):
        if L[k] ** 2 > comb(2 * g, k) ** 2 * q ** k:
            raise ArithmeticError("L-polynomial violates the Weil bound: point counting bug")


def l_polynomial_base(C: SuperellipticCurve) -> IntPoly:
    """L-polynomial of C over its field of definition F_q."""
    if "L_base" in C._cache:
        return C._cache["L_base"]
    g = C.genus
    q = C.q
    if q ** g > TABLE_LIMIT:
        raise OverflowError(f"counting over F_{q}^{g} is beyond the table limit")
    sums = [q ** j + 1 - _brute_count(C, j) for j in range(1, g + 1)]
    L = _newton_coeffs(sums, g, q)
    _check_weil(L, g, q)
    C._cache["L_base"] = IntPoly(L)
    return C._cache["L_base"]


def base_change(L: IntPoly, g: int, q: int, k: int) -> IntPoly:
    """L-polynomial over F_{q^k} from the one over F_q (inverse roots raised to k)."""
    s = _power_sums(list(L.coeffs) + [0] * (2 * g + 1 - len(L.coeffs)), g * k)
    sk = [s[j * k - 1] for j in range(1, g + 1)]
    return IntPoly(_newton_coeffs(sk, g, q ** k))


def l_polynomial(C: SuperellipticCurve) -> IntPoly:
    """L-polynomial over the working field F_Q; L(1) = |Pic^0(C/F_Q)|."""
    if "L" not in C._cache:
        L = base_change(l_polynomial_base(C), C.genus, C.q, C.extension_degree)
        _check_weil(list(L.coeffs), C.genus, C.Q)
        C._cache["L"] = L
    return C._cache["L"]


def class_number(C: SuperellipticCurve, extension: int = 1) -> int:
    """|J(F_{Q^extension})|."""
    L = l_polynomial(C)
    if extension != 1:
        L = base_change(L, C.genus, C.Q, extension)
    return L(1)


def count_points(C: SuperellipticCurve, m: int = 1, method: str = "auto") -> int:
    """|C(F_{Q^m})|, including infinity and the branch points.

    method "brute" sweeps the x-line of F_{Q^m}; "zeta" reads the count off the
    L-polynomial; "auto" sweeps when the field is small enough.
    """
    if m < 1:
        raise ValueError("extension degree must be positive")
    j = C.extension_degree * m
    if method == "brute" or (method == "auto" and C.q ** j <= TABLE_LIMIT):
        return _brute_count(C, j)
    if method not in ("auto", "zeta"):
        raise ValueError(f"unknown method {method!r}")
    s = _power_sums(list(l_polynomial_base(C).coeffs), j)
    return C.q ** j + 1 - s[j - 1]
