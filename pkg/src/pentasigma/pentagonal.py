"""Generalized pentagonal numbers and Euler's pentagonal sequence.

The generalized pentagonal number of index ``i`` is ``(3*i*i + i) // 2``.
Euler's function ``prod_{m>=1} (1 - x**m)`` has coefficient ``(-1)**i`` at
each of these exponents and 0 elsewhere; that coefficient sequence is
called ``sigma0`` throughout the package.

All membership decisions use exact integer arithmetic: ``g`` is pentagonal
exactly when ``24*g + 1`` is a perfect square ``r*r`` (then ``r = |6i+1|``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from .sequences import SignSequence

INT64_MAX = 2**63 - 1

__all__ = [
    "PentagonalTerm",
    "PentFamily",
    "PentClass",
    "generalized_pentagonal",
    "pentagonal_index",
    "pentagonal_terms_up_to",
    "sigma0",
    "sigma0_array",
    "classify_pentagonal",
    "partial_sum_sigma0",
]


@dataclass(frozen=True)
class PentagonalTerm:
    index: int
    value: int
    sign: int


class PentFamily(enum.Enum):
    EI_MINUS = "EI-"  # 6k^2 - k
    EI_PLUS = "EI+"  # 6k^2 + k
    OI_MINUS = "OI-"  # 6k^2 + 5k + 1
    OI_PLUS = "OI+"  # 6k^2 + 7k + 2
    NOT_PENTAGONAL = "none"

    @property
    def even_indexed(self) -> bool:
        return self in (PentFamily.EI_MINUS, PentFamily.EI_PLUS)

    @property
    def odd_indexed(self) -> bool:
        return self in (PentFamily.OI_MINUS, PentFamily.OI_PLUS)


@dataclass(frozen=True)
class PentClass:
    family: PentFamily
    k: int | None = None


def generalized_pentagonal(i: int) -> int:
    """Return ``(3*i**2 + i) // 2``.

    Raises ``OverflowError`` when the result does not fit a signed 64-bit
    integer.
    """
    i = int(i)
    g = (3 * i * i + i) // 2
    if g > INT64_MAX:
        raise OverflowError(f"pentagonal number of index {i} exceeds int64")
    return g


def pentagonal_index(g: int) -> int | None:
    """Return the index ``i`` with ``generalized_pentagonal(i) == g``, or None."""
    if g < 0:
        return None
    d = 24 * g + 1
    r = isqrt(d)
    if r * r != d:
        return None
    # r = 6i + 1 for i >= 0, r = -(6i + 1) for i < 0
    if r % 6 == 1:
        return (r - 1) // 6
    return -((r + 1) // 6)


def pentagonal_terms_up_to(N: int) -> list[PentagonalTerm]:
    """All generalized pentagonal numbers ``<= N``, ascending by value."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    terms = [PentagonalTerm(0, 0, 1)]
    k = 1
    while True:
        # index -k gives the smaller value of the pair
        lo = generalized_pentagonal(-k)
        if lo > N:
            break
        sign = -1 if k % 2 else 1
        terms.append(PentagonalTerm(-k, lo, sign))
        hi = lo + k
        if hi <= N:
            terms.append(PentagonalTerm(k, hi, sign))
        k += 1
    return terms


@lru_cache(maxsize=16)
def _pentagonal_arrays(N: int) -> tuple[np.ndarray, np.ndarray]:
    terms = pentagonal_terms_up_to(N)
    values = np.array([t.value for t in terms], dtype=np.int64)
    signs = np.array([t.sign for t in terms], dtype=np.int64)
    values.setflags(write=False)
    signs.setflags(write=False)
    return values, signs


def sigma0(n: int) -> int:
    """Coefficient of ``x**n`` in Euler's function; 0 for ``n < 0``."""
    i = pentagonal_index(int(n))
    if i is None:
        return 0
    return -1 if i % 2 else 1


def sigma0_array(N: int) -> np.ndarray:
    """``sigma0(0..N)`` as a fresh ``int64`` array."""
    out = np.zeros(N + 1, dtype=np.int64)
    values, signs = _pentagonal_arrays(N)
    out[values] = signs
    return out


def classify_pentagonal(g: int) -> PentClass:
    """Family and witness ``k`` of a generalized pentagonal number.

    ``0`` belongs to both even-indexed families; it is reported as
    ``EI_MINUS`` with ``k = 0``.
    """
    if g < 0:
        raise ValueError("g must be nonnegative")
    i = pentagonal_index(g)
    if i is None:
        return PentClass(PentFamily.NOT_PENTAGONAL)
    if i == 0:
        return PentClass(PentFamily.EI_MINUS, 0)
    if i % 2 == 0:
        family = PentFamily.EI_PLUS if i > 0 else PentFamily.EI_MINUS
        return PentClass(family, abs(i) // 2)
    family = PentFamily.OI_PLUS if i > 0 else PentFamily.OI_MINUS
    return PentClass(family, (abs(i) - 1) // 2)


def partial_sum_sigma0(N: int) -> SignSequence:
    """Prefix sums ``S(n) = sigma0(0) + ... + sigma0(n)`` for ``n <= N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return SignSequence(np.cumsum(sigma0_array(N)))
