"""Exact truncated power series over the integers.

This module is the slow, obviously-correct side of every series identity
checked in the package. Coefficients are Python ints, multiplication is the
schoolbook product (zero coefficients are skipped, which keeps the sparse
Euler products cheap without changing the algorithm), and every operation
demands that both operands share one degree bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
__all__ = [
    "TruncatedSeries",
    "multiply",
    "one",
    "euler_function",
    "geometric",
    "euler_omit",
    "sigma_function_series",
    "rho_series_oracle",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series modulo ``x**(N+1)``; ``coefficients[k]`` is the x^k term."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @classmethod
    def from_terms(cls, N: int, terms: dict[int, int]) -> "TruncatedSeries":
        coeffs = [0] * (N + 1)
        for k, c in terms.items():
            if 0 <= k <= N:
                coeffs[k] += c
        return cls(tuple(coeffs))

    @property
    def degree_bound(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.degree_bound != self.degree_bound:
            raise ValueError(
                f"degree bounds differ: {self.degree_bound} vs {other.degree_bound}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return multiply(self, other)

    def shift(self, h: int) -> "TruncatedSeries":
        """Multiply by ``x**h`` and truncate."""
        if h < 0:
            raise ValueError("shift must be nonnegative")
        N = self.degree_bound
        if h > N:
            return TruncatedSeries((0,) * (N + 1))
        return TruncatedSeries((0,) * h + self.coefficients[: N + 1 - h])

    def tolist(self) -> list[int]:
        return list(self.coefficients)


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Schoolbook product of two series with the same degree bound."""
    a._check(b)
    N = a.degree_bound
    out = [0] * (N + 1)
    b_nonzero = [(k, c) for k, c in enumerate(b.coefficients) if c]
    for i, ca in enumerate(a.coefficients):
        if not ca:
            continue
        limit = N - i
        for k, cb in b_nonzero:
            if k > limit:
                break
            out[i + k] += ca * cb
    return TruncatedSeries(tuple(out))


def one(N: int) -> TruncatedSeries:
    return TruncatedSeries.from_terms(N, {0: 1})


@lru_cache(maxsize=8)
def euler_function(N: int) -> TruncatedSeries:
    """``prod_{m=1..N} (1 - x**m)`` expanded by multiplying the factors."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    result = one(N)
    for m in range(1, N + 1):
        result = multiply(result, TruncatedSeries.from_terms(N, {0: 1, m: -1}))
    return result


def geometric(j: int, N: int) -> TruncatedSeries:
    """``1 + x**j + x**(2j) + ...`` truncated at degree N."""
    if j < 1:
        raise ValueError("geometric series needs a stride j >= 1")
    if N < 0:
        raise ValueError("N must be nonnegative")
    return TruncatedSeries(tuple(1 if m % j == 0 else 0 for m in range(N + 1)))


def euler_omit(j: int, N: int) -> TruncatedSeries:
    """Euler's function with the factor ``(1 - x**j)`` removed.

    For ``j == 0`` nothing is removed.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return euler_function(N)
    return multiply(geometric(j, N), euler_function(N))


def sigma_function_series(N: int) -> TruncatedSeries:
    """``sum_{h=0..N} x**h * euler_omit(h)`` truncated at degree N."""
    euler = euler_function(N)
    total = euler
    for h in range(1, N + 1):
        total = total + multiply(geometric(h, N), euler).shift(h)
    return total


def rho_series_oracle(N: int) -> TruncatedSeries:
    """``1 + sum_{k>=1} x**k / (1 - x**k)`` truncated at degree N.

    Each rational term is expanded as ``x**k`` times a geometric series.
    """
    total = one(N)
    for k in range(1, N + 1):
        total = total + geometric(k, N).shift(k)
    return total

