"""Dense univariate polynomials over a finite field object.

Polynomials are plain lists of field elements, lowest degree first, with no
trailing zeros; the zero polynomial is [].  Every function takes the field as
its first argument so the same code serves F_p, F_{p^d} and residue fields.
"""

from __future__ import annotations

import random as _random

from .arith import factorint

FACTOR_SEED = 20240611


def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _trim_field(F, a: list) -> list:
    z = F.zero
    while a and a[-1] == z:
        a.pop()
    return a


def degree(a: list) -> int:
    return len(a) - 1


def add(F, a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return _trim_field(F, out)


def sub(F, a: list, b: list) -> list:
    n = max(len(a), len(b))
    z = F.zero
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else z
        y = b[i] if i < len(b) else z
        out.append(F.sub(x, y))
    return _trim_field(F, out)


def neg(F, a: list) -> list:
    return [F.neg(c) for c in a]


def scale(F, a: list, c) -> list:
    if c == F.zero:
        return []
    return [F.mul(x, c) for x in a]


def shift(F, a: list, k: int) -> list:
    return [F.zero] * k + a if a else []


def mul(F, a: list, b: list) -> list:
    if not a or not b:
        return []
    z = F.zero
    out = [z] * (len(a) + len(b) - 1)
    fadd, fmul = F.add, F.mul
    for i, x in enumerate(a):
        if x == z:
            continue
        for j, y in enumerate(b):
            if y != z:
                out[i + j] = fadd(out[i + j], fmul(x, y))
    return _trim_field(F, out)


def divmod_(F, a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    r = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    q = [F.zero] * (len(a) - db)
    fsub, fmul = F.sub, F.mul
    z = F.zero
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if c == z:
            continue
        c = fmul(c, inv_lc)
        q[k - db] = c
        for i in range(db + 1):
            if b[i] != z:
                r[k - db + i] = fsub(r[k - db + i], fmul(c, b[i]))
    return _trim_field(F, q), _trim_field(F, r[:db])


def rem(F, a: list, b: list) -> list:
    return divmod_(F, a, b)[1]


def quo(F, a: list, b: list) -> list:
    return divmod_(F, a, b)[0]


def exact_quo(F, a: list, b: list) -> list:
    q, r = divmod_(F, a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(F, a: list) -> list:
    if not a:
        return []
    if a[-1] == F.one:
        return list(a)
    return scale(F, a, F.inv(a[-1]))


def gcd(F, a: list, b: list) -> list:
    while b:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def xgcd(F, a: list, b: list) -> tuple[list, list, list]:
    """(g, s, t) with s*a + t*b = g; g is monic unless both inputs are zero."""
    r0, r1 = list(a), list(b)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if r0:
        c = F.inv(r0[-1])
        r0, s0, t0 = scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)
    return r0, s0, t0


def powmod(F, a: list, e: int, m: list) -> list:
    result = [F.one]
    base = rem(F, a, m)
    while e:
        if e & 1:
            result = rem(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = rem(F, mul(F, base, base), m)
    return rem(F, result, m) if len(m) > 1 else []


def pow_(F, a: list, e: int) -> list:
    result = [F.one]
    while e:
        if e & 1:
            result = mul(F, result, a)
        e >>= 1
        if e:
            a = mul(F, a, a)
    return result


def derivative(F, a: list) -> list:
    out = []
    for i in range(1, len(a)):
        out.append(F.mul(F.from_int(i), a[i]))
    return _trim_field(F, out)


def evaluate(F, a: list, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def compose_power(F, a: list, k: int) -> list:
    """a(T^k)."""
    if not a:
        return []
    out = [F.zero] * ((len(a) - 1) * k + 1)
    for i, c in enumerate(a):
        out[i * k] = c
    return out


def from_roots(F, roots) -> list:
    out = [F.one]
    for r in roots:
        out = mul(F, out, [F.neg(r), F.one])
    return out


def x_poly(F) -> list:
    return [F.zero, F.one]


# -- factorization ------------------------------------------------------------

def _pth_root(F, a: list) -> list:
    """b with b^p = a, for a whose exponents are all multiples of p."""
    p = F.p
    e = F.order // p
    return _trim_field(F, [F.pow(a[i], e) for i in range(0, len(a), p)])


def squarefree_decomposition(F, a: list) -> list[tuple[list, int]]:
    """Monic squarefree coprime s_i with a = lc * prod s_i^i (only nonconstant s_i)."""
    a = monic(F, a)
    out: dict[int, list] = {}
    _sqf(F, a, 1, out)
    return sorted(((s, m) for m, s in out.items() if len(s) > 1), key=lambda t: t[1])


def _sqf(F, a: list, mult: int, out: dict) -> None:
    if len(a) <= 1:
        return
    da = derivative(F, a)
    if not da:
        _sqf(F, _pth_root(F, a), mult * F.p, out)
        return
    c = gcd(F, a, da)
    w = exact_quo(F, a, c)
    i = 1
    while len(w) > 1:
        y = gcd(F, w, c)
        z = exact_quo(F, w, y)
        if len(z) > 1:
            key = i * mult
            out[key] = mul(F, out[key], z) if key in out else z
        i += 1
        w = y
        c = exact_quo(F, c, y)
    if len(c) > 1:
        _sqf(F, _pth_root(F, c), mult * F.p, out)


def distinct_degree(F, a: list) -> list[tuple[list, int]]:
    """For monic squarefree a: pairs (product of all irreducible factors of degree d, d)."""
    out = []
    x = x_poly(F)
    h = x
    d = 0
    rest = list(a)
    while len(rest) > 1:
        d += 1
        if 2 * d > len(rest) - 1:
            out.append((rest, len(rest) - 1))
            break
        h = powmod(F, h, F.order, rest)
        g = gcd(F, rest, sub(F, h, x))
        if len(g) > 1:
            out.append((g, d))
            rest = exact_quo(F, rest, g)
            h = rem(F, h, rest)
    return out


def _random_poly(F, length: int, rng) -> list:
    # not forced monic: with d = 1 and q even, a monic linear candidate
    # x + c has the same trace pattern for every c and never splits
    return _trim_field(F, [F.random(rng) for _ in range(length)])


def equal_degree(F, a: list, d: int, rng) -> list[list]:
    """Split monic squarefree a, all of whose irreducible factors have degree d."""
    n = len(a) - 1
    if n == d:
        return [a]
    if n == 0:
        return []
    q = F.order
    while True:
        r = _random_poly(F, n, rng)
        if F.p == 2:
            # trace map to F_2
            t = rem(F, r, a)
            acc = t
            for _ in range(F.degree * d - 1):
                t = rem(F, mul(F, t, t), a)
                acc = add(F, acc, t)
            cand = acc
        else:
            cand = sub(F, powmod(F, r, (q ** d - 1) // 2, a), [F.one])
        g = gcd(F, a, cand)
        if 1 < len(g) < len(a):
            return equal_degree(F, g, d, rng) + equal_degree(F, exact_quo(F, a, g), d, rng)


def factor(F, a: list, seed: int = FACTOR_SEED) -> list[tuple[list, int]]:
    """Monic irreducible factors with multiplicities, sorted by (degree, coefficients)."""
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    rng = _random.Random(seed)
    out = []
    for s, m in squarefree_decomposition(F, a):
        for g, d in distinct_degree(F, s):
            for h in equal_degree(F, g, d, rng):
                out.append((h, m))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def roots(F, a: list) -> list:
    """Distinct roots in F, sorted."""
    if not a:
        raise ValueError("every element is a root of zero")
    a = monic(F, a)
    if len(a) <= 1:
        return []
    x = x_poly(F)
    g = gcd(F, a, sub(F, powmod(F, x, F.order, a), x))
    if len(g) <= 1:
        return []
    rng = _random.Random(FACTOR_SEED)
    return sorted(F.neg(h[0]) for h in equal_degree(F, g, 1, rng))


def is_irreducible(F, a: list) -> bool:
    """Rabin's test."""
    n = len(a) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    a = monic(F, a)
    x = x_poly(F)

    def frob_power(k: int) -> list:
        h = x
        for _ in range(k):
            h = powmod(F, h, F.order, a)
        return h

    if sub(F, frob_power(n), x):
        return False
    for r, _ in factorint(n):
        if len(gcd(F, a, sub(F, frob_power(n // r), x))) > 1:
            return False
    return True
