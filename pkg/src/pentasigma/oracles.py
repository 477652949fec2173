"""Classical baselines for verification and benchmarking.

Nothing here touches pentagonal numbers, sigma, or Euler's recurrence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

import numpy as np

__all__ = [
    "OracleKind",
    "OracleTable",
    "divisor_count",
    "divisor_counts_sieve",
    "primes_sieve",
    "partition_count_bruteforce",
    "BRUTEFORCE_LIMIT",
]

BRUTEFORCE_LIMIT = 60


class OracleKind(enum.Enum):
    DIVISOR_COUNTS = "divisor_counts"
    PRIMES = "primes"
    PARTITIONS = "partitions"


@dataclass(frozen=True)
class OracleTable:
    """``values[k]`` is the oracle value for argument ``offset + k``."""

    kind: OracleKind
    bound: int
    values: tuple[int, ...]
    offset: int = 0

    def __getitem__(self, n: int) -> int:
        return self.values[n - self.offset]


def divisor_count(n: int) -> int:
    """Number of divisors of ``n`` by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError("divisor_count needs n >= 1")
    r = isqrt(n)
    count = 0
    for k in range(1, r + 1):
        if n % k == 0:
            count += 2
    if r * r == n:
        count -= 1
    return count


def divisor_counts_sieve(N: int) -> OracleTable:
    """``d(1..N)`` by marking the multiples of every k."""
    if N < 1:
        raise ValueError("N must be >= 1")
    d = np.zeros(N + 1, dtype=np.int64)
    for k in range(1, N + 1):
        d[k::k] += 1
    return OracleTable(OracleKind.DIVISOR_COUNTS, N, tuple(d[1:].tolist()), offset=1)


def primes_sieve(N: int) -> OracleTable:
    """Primes ``<= N`` by the sieve of Eratosthenes."""
    if N < 2:
        raise ValueError("N must be >= 2")
    is_prime = np.ones(N + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(N) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return OracleTable(OracleKind.PRIMES, N, tuple(np.nonzero(is_prime)[0].tolist()))


def _count_partitions(n: int, largest: int) -> int:
    if n == 0:
        return 1
    return sum(_count_partitions(n - part, part) for part in range(min(n, largest), 0, -1))


def partition_count_bruteforce(n: int) -> int:
    """Count partitions of ``n`` by enumerating them (no memoization)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > BRUTEFORCE_LIMIT:
        raise ValueError(f"enumeration bound is {BRUTEFORCE_LIMIT}, got {n}")
    return _count_partitions(n, n)
