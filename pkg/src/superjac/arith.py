"""Elementary integer arithmetic used throughout (trial division is plenty here)."""

from __future__ import annotations

from functools import lru_cache
from math import gcd


@lru_cache(maxsize=4096)
def factorint(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p, e), ...) with increasing p."""
    if m < 1:
        raise ValueError("factorint expects a positive integer")
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_divisors(m: int) -> list[int]:
    return [p for p, _ in factorint(m)]


def omega(m: int) -> int:
    return len(factorint(m)) if m > 1 else 0


def radical(m: int) -> int:
    r = 1
    for p, _ in factorint(m):
        r *= p
    return r


@lru_cache(maxsize=4096)
def divisors(m: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorint(m):
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError("euler_phi expects a positive integer")
    r = m
    for p, _ in factorint(m):
        r = r // p * (p - 1)
    return r


def mobius(m: int) -> int:
    if m < 1:
        raise ValueError("mobius expects a positive integer")
    f = factorint(m)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def multiplicative_order(a: int, m: int) -> int:
    if gcd(a, m) != 1:
        raise ValueError("a must be a unit mod m")
    if m == 1:
        return 1
    order = euler_phi(m)
    for p, _ in factorint(order):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def valuation(m: int, p: int) -> int:
    if m == 0:
        raise ValueError("valuation of zero")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def primes_up_to(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime(k)]
