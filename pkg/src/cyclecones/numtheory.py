"""Exact arithmetic functions: Bernoulli numbers, zeta values at negative
integers, divisor sums, the Möbius function, and square-divisor enumeration.

Everything returns exact values (``int`` or ``fractions.Fraction``); no
floating point is used anywhere.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

__all__ = [
    "Factorization",
    "bernoulli",
    "zeta_negative",
    "sigma",
    "moebius",
    "square_divisors",
    "factorize",
    "divisors",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer as (prime, exponent) pairs.

    Primes are strictly increasing and exponents >= 1; the empty tuple
    represents ``1``.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.pairs]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.pairs):
            raise ValueError("exponents must be >= 1")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def value(self) -> int:
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n


def factorize(m: int) -> Factorization:
    """Factor m >= 1 by trial division.

    Intended for desk scale (m up to about 10**7); larger inputs work but
    get slow, and there is deliberately no probabilistic fallback.
    """
    if m < 1:
        raise ValueError(f"factorize requires m >= 1, got {m}")
    pairs = []
    for p in _trial_divisors(m):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            pairs.append((p, e))
        if m == 1:
            break
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def _trial_divisors(m):
    yield 2
    yield 3
    p = 5
    while p * p <= m:
        yield p
        yield p + 2
        p += 6


# Bernoulli cache: grown under a lock so concurrent callers always see the
# same values as a single-threaded computation.
_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the convention B_1 = -1/2.

    Computed from the defining recurrence sum_{j<=n} C(n+1, j) B_j = 0.
    """
    if n < 0:
        raise ValueError(f"bernoulli requires n >= 0, got {n}")
    if n >= 3 and n % 2 == 1:
        return Fraction(0)
    with _bern_lock:
        while len(_bern) <= n:
            k = len(_bern)
            acc = sum(comb(k + 1, j) * _bern[j] for j in range(k))
            _bern.append(Fraction(-acc, k + 1))
        return _bern[n]


def zeta_negative(s: int) -> Fraction:
    """zeta(-s) = -B_{s+1}/(s+1) for integer s >= 1."""
    if s < 1:
        raise ValueError(f"zeta_negative requires s >= 1, got {s}")
    return -bernoulli(s + 1) / (s + 1)


def sigma(s: int, m: int) -> Fraction:
    """Sum of the s-th powers of the positive divisors of m, exactly."""
    if m < 1:
        raise ValueError(f"sigma requires m >= 1, got {m}")
    total = 1
    for p, e in factorize(m).pairs:
        if s == 0:
            total *= e + 1
        else:
            q = p**s
            total *= (q ** (e + 1) - 1) // (q - 1)
    return Fraction(total)


def moebius(t: int) -> int:
    """Möbius function of t >= 1."""
    if t < 1:
        raise ValueError(f"moebius requires t >= 1, got {t}")
    f = factorize(t)
    if any(e > 1 for _, e in f.pairs):
        return 0
    return -1 if len(f.pairs) % 2 else 1


def square_divisors(m: int) -> list[int]:
    """All t >= 1 with t**2 | m, in ascending order."""
    if m < 1:
        raise ValueError(f"square_divisors requires m >= 1, got {m}")
    return [t for t in range(1, isqrt(m) + 1) if m % (t * t) == 0]


def divisors(m: int) -> list[int]:
    """All positive divisors of m, ascending."""
    if m < 1:
        raise ValueError(f"divisors requires m >= 1, got {m}")
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
    return small + large[::-1]
