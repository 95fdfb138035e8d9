"""Finite fields F_p and F_{p^d} small enough for log tables.

An element of F_{p^d} = F_p[u]/(h) is stored as the integer sum c_i p^i, where
c_0 + c_1 u + ... is its reduced representative.  So 0 and 1 mean what they
look like, and for d = 1 the encoding is just the residue.
"""

from __future__ import annotations

import random as _random
from functools import lru_cache
from itertools import combinations, product
from math import gcd

from .arith import factorint, is_prime

# Above this order the exp/log/Zech tables become too large to be worth it.
TABLE_LIMIT = 1 << 22


class FiniteField:
    """Common interface; concrete fields are PrimeField and ExtensionField."""

    p: int
    degree: int
    order: int
    zero = 0
    one = 1

    # -- tables --------------------------------------------------------
    def _build_tables(self) -> None:
        q = self.order
        if q > TABLE_LIMIT:
            raise OverflowError(f"field of order {q} is too large for log tables")
        m = q - 1
        exp = [0] * (2 * m)
        log = [-1] * q
        x = 1
        step = self._times_generator
        for k in range(m):
            exp[k] = x
            log[x] = k
            x = step(x)
        if x != 1 or (m > 0 and any(v < 0 for v in log[1:])):
            raise ArithmeticError("generator is not primitive")
        exp[m:] = exp[:m]
        self._exp, self._log = exp, log

    @property
    def exp_table(self) -> list[int]:
        if not hasattr(self, "_exp"):
            self._build_tables()
        return self._exp

    @property
    def log_table(self) -> list[int]:
        if not hasattr(self, "_log"):
            self._build_tables()
        return self._log

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self.log_table[a]

    def exp(self, k: int) -> int:
        return self.exp_table[k % (self.order - 1)]

    # -- derived operations ---------------------------------------------
    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        m = self.order - 1
        if self.order <= TABLE_LIMIT:
            return self.exp_table[(self.log_table[a] * e) % m]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def from_int(self, k: int) -> int:
        return k % self.p

    def random(self, rng: _random.Random) -> int:
        return rng.randrange(self.order)

    def random_nonzero(self, rng: _random.Random) -> int:
        return rng.randrange(1, self.order)

    def elements(self) -> range:
        return range(self.order)

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** times)

    def root_of_unity(self, n: int) -> int:
        """exp((q-1)/n): a primitive n-th root of unity, canonical for this field."""
        if (self.order - 1) % n:
            raise ValueError(f"no primitive {n}-th root of unity in F_{self.order}")
        return self.exp((self.order - 1) // n)

    def is_nth_power(self, a: int, n: int) -> bool:
        if a == 0:
            return True
        return self.log(a) % gcd(n, self.order - 1) == 0

    def nth_root(self, a: int, n: int) -> int | None:
        """Some b with b^n = a (the one with smallest log), or None."""
        if a == 0:
            return 0
        m = self.order - 1
        d = gcd(n, m)
        la = self.log(a)
        if la % d:
            return None
        # solve n*k = la (mod m)
        k = (la // d) * pow(n // d, -1, m // d) % (m // d)
        return self.exp(k)

    def count_nth_roots(self, a: int, n: int) -> int:
        if a == 0:
            return 1
        d = gcd(n, self.order - 1)
        return d if self.log(a) % d == 0 else 0

    def __repr__(self) -> str:
        return f"F_{self.order}"

    def __reduce__(self):
        return (finite_field, (self.p, self.degree))


class PrimeField(FiniteField):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.degree = 1
        self.order = p
        self.modulus = (0, 1)
        self.generator = _smallest_primitive_mod(p)

    def _times_generator(self, a: int) -> int:
        return a * self.generator % self.p

    def add(self, a: int, b: int) -> int:
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a: int, b: int) -> int:
        s = a - b
        return s + self.p if s < 0 else s

    def neg(self, a: int) -> int:
        return self.p - a if a else 0

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        return pow(a, e, self.p)

    def to_coeffs(self, a: int) -> list[int]:
        return [a]

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if any(c % self.p for c in cs[1:]):
            raise ValueError(f"{cs} is not an element of F_{self.p}")
        return cs[0] % self.p if cs else 0


class ExtensionField(FiniteField):
    def __init__(self, p: int, degree: int, modulus: tuple[int, ...]):
        self.p = p
        self.degree = degree
        self.order = p ** degree
        self.modulus = modulus
        self.generator = self._smallest_primitive()
        self._build_tables()
        m = self.order - 1
        log, exp = self._log, self._exp
        # zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
        zech = [0] * m
        for k in range(m):
            x = exp[k]
            c = x % p
            y = x - c + (c + 1) % p
            zech[k] = log[y] if y else -1
        self._zech = zech
        self._m = m
        self._half = m // 2 if p != 2 else 0

    # digit-level helpers, only used while building the tables
    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, ds) -> int:
        a = 0
        for c in reversed(ds):
            a = a * self.p + c
        return a

    def _slow_mul(self, a: int, b: int) -> int:
        p, d, h = self.p, self.degree, self.modulus
        x, y = self._digits(a), self._digits(b)
        prod = [0] * (2 * d - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(d):
                    prod[k - d + i] -= c * h[i]
            prod[k] = 0
        return self._undigits([c % p for c in prod[:d]])

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _smallest_primitive(self) -> int:
        m = self.order - 1
        primes = [r for r, _ in factorint(m)] if m > 1 else []
        for g in range(1, self.order):
            if all(self._slow_pow(g, m // r) != 1 for r in primes):
                return g
        raise ArithmeticError("no primitive element found")

    def _times_generator(self, a: int) -> int:
        if not hasattr(self, "_gen_rows"):
            self._gen_rows = [self._digits(self._slow_mul(self.p ** i, self.generator)) for i in range(self.degree)]
        p, rows = self.p, self._gen_rows
        out = [0] * self.degree
        i = 0
        while a:
            a, c = divmod(a, p)
            if c:
                row = rows[i]
                for k in range(self.degree):
                    out[k] += c * row[k]
            i += 1
        return self._undigits([c % p for c in out])

    def add(self, a: int, b: int) -> int:
        if not a:
            return b
        if not b:
            return a
        log = self._log
        la = log[a]
        z = self._zech[(log[b] - la) % self._m]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a: int) -> int:
        if not a or self.p == 2:
            return a
        return self._exp[self._log[a] + self._half]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[self._m - self._log[a]]

    def div(self, a: int, b: int) -> int:
        if not b:
            raise ZeroDivisionError("division by zero")
        if not a:
            return 0
        return self._exp[self._log[a] - self._log[b] + self._m]

    def to_coeffs(self, a: int) -> list[int]:
        return self._digits(a)

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if len(cs) > self.degree:
            raise ValueError(f"{cs} has too many coordinates for F_{self.order}")
        return self._undigits([c % self.p for c in cs] + [0] * (self.degree - len(cs)))


def _smallest_primitive_mod(p: int) -> int:
    if p == 2:
        return 1
    primes = [r for r, _ in factorint(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in primes):
            return g
    raise ArithmeticError("no primitive root")


def _is_irreducible_mod_p(h: tuple[int, ...], p: int) -> bool:
    from . import fieldpoly

    return fieldpoly.is_irreducible(finite_field(p, 1), list(h))


def canonical_modulus(p: int, degree: int) -> tuple[int, ...]:
    """Monic irreducible of the given degree: fewest nonzero terms, then smallest
    value when read as a base-p integer (low coefficient = lowest digit)."""
    if degree == 1:
        return (0, 1)
    nonzero = range(1, p)
    for weight in range(2, degree + 2):
        found = []
        # the constant term is nonzero and T^degree is present
        for middle in combinations(range(1, degree), weight - 2):
            for const, *mids in product(nonzero, *[nonzero] * len(middle)):
                h = [0] * (degree + 1)
                h[0], h[degree] = const, 1
                for pos, c in zip(middle, mids):
                    h[pos] = c
                found.append(tuple(h))
        found.sort(key=lambda h: sum(c * p ** i for i, c in enumerate(h)))
        for h in found:
            if _is_irreducible_mod_p(h, p):
                return h
    raise ArithmeticError("no irreducible polynomial found")


@lru_cache(maxsize=None)
def finite_field(p: int, degree: int = 1) -> FiniteField:
    """The field with p^degree elements (cached; one canonical model per order)."""
    if degree < 1:
        raise ValueError("degree must be positive")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if degree == 1:
        return PrimeField(p)
    return ExtensionField(p, degree, canonical_modulus(p, degree))


def field_of_order(q: int) -> FiniteField:
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, d = f[0]
    return finite_field(p, d)


@lru_cache(maxsize=None)
def embedding(small: FiniteField, big: FiniteField) -> tuple[int, ...]:
    """Table sending each element of `small` to its image in `big`.

    The generator u of `small` goes to the smallest root of its modulus in `big`.
    """
    if small.p != big.p or big.degree % small.degree:
        raise ValueError(f"{small} does not embed in {big}")
    if small is big:
        return tuple(range(small.order))
    from . import fieldpoly

    h = [big.from_int(c) for c in small.modulus]
    if small.degree == 1:
        image_u = 0
    else:
        image_u = min(fieldpoly.roots(big, h))
    powers = [1]
    for _ in range(small.degree - 1):
        powers.append(big.mul(powers[-1], image_u))
    table = []
    for a in range(small.order):
        acc = 0
        for c, pw in zip(small.to_coeffs(a), powers):
            if c:
                acc = big.add(acc, big.mul(big.from_int(c), pw))
        table.append(acc)
    return tuple(table)


class ResidueField:
    """F[x]/(h) for a monic irreducible h over a finite field F.

    Elements are tuples of length deg h (coefficients low to high).  Used for
    residue fields of places of degree > 1; no tables, plain polynomial arithmetic.
    """

    def __init__(self, base: FiniteField, modulus: list[int]):
        from . import fieldpoly

        self._fp = fieldpoly
        self.base = base
        self.modulus = list(modulus)
        self.k = len(modulus) - 1
        self.p = base.p
        self.order = base.order ** self.k
        self.degree = base.degree * self.k
        self.zero = (0,) * self.k
        self.one = (1,) + (0,) * (self.k - 1)

    def _pack(self, poly: list[int]) -> tuple:
        return tuple(poly) + (0,) * (self.k - len(poly))

    def lift(self, a: tuple) -> list[int]:
        return self._fp.trim(list(a))

    def embed(self, c: int) -> tuple:
        return self._pack(self._fp.trim([c]))

    def add(self, a, b):
        F = self.base
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        F = self.base
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        F = self.base
        return tuple(F.neg(x) for x in a)

    def mul(self, a, b):
        fp = self._fp
        return self._pack(fp.rem(self.base, fp.mul(self.base, self.lift(a), self.lift(b)), self.modulus))

    def inv(self, a):
        fp = self._fp
        g, s, _ = fp.xgcd(self.base, self.lift(a), self.modulus)
        if len(g) != 1:
            raise ZeroDivisionError("inverse of zero")
        return self._pack(fp.scale(self.base, s, self.base.inv(g[0])))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def random(self, rng: _random.Random):
        return tuple(self.base.random(rng) for _ in range(self.k))

    def random_nonzero(self, rng: _random.Random):
        while True:
            a = self.random(rng)
            if a != self.zero:
                return a

    def from_int(self, k: int):
        return self.embed(self.base.from_int(k))

    def __repr__(self) -> str:
        return f"{self.base}[x]/({self.modulus})"
