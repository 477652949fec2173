"""Recovering equal-part partition counts from the sigma-sequence.

Multiplying Euler's function by ``sum rho(n) x^n`` gives the sigma-function,
so for every ``n``::

    sum_i (-1)**i * rho(n - g_i) = sigma(n)        g_i = (3i^2 + i) / 2

The ``i = 0`` term is ``rho(n)`` itself, which makes this a forward
recurrence. Replacing ``sigma`` by ``(1, 0, 0, ...)`` gives Euler's
recurrence for the partition numbers ``p(n)``.

In matrix form, ``E @ rho = sigma`` where ``E`` is the lower-triangular
Toeplitz matrix with first column ``sigma0``; its inverse is the
lower-triangular Toeplitz matrix with first column ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import InconsistencyError
from .pentagonal import _pentagonal_arrays, sigma0_array
from .sequences import SignSequence
from .sigma_sequence import SigmaSequence

__all__ = [
    "RhoSequence",
    "PartitionSequence",
    "ToeplitzLower",
    "rho_up_to",
    "partition_up_to",
    "euler_matrix",
    "euler_inverse",
    "apply",
    "primes_up_to",
]

_INT64_SAFE = 2**62


class RhoSequence(SignSequence):
    """Values ``rho(0..N)``: ``rho(0) = 1`` and ``rho(n) = d(n)`` for ``n >= 1``."""


@dataclass(frozen=True)
class PartitionSequence:
    values: tuple[int, ...]

    @property
    def bound(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n] if n >= 0 else 0

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ToeplitzLower:
    """Lower-triangular Toeplitz matrix given by its first column.

    ``entry(r, c) = first_column[r - c]`` for ``r >= c``, else 0.
    """

    first_column: tuple[int, ...]

    def __post_init__(self):
        if not self.first_column:
            raise ValueError("matrix order must be at least 1")
        object.__setattr__(self, "first_column", tuple(int(v) for v in self.first_column))

    @property
    def order(self) -> int:
        return len(self.first_column)

    def entry(self, r: int, c: int) -> int:
        n = self.order
        if not (0 <= r < n and 0 <= c < n):
            raise IndexError(f"({r}, {c}) outside a {n}x{n} matrix")
        return self.first_column[r - c] if r >= c else 0

    def dense(self) -> list[list[int]]:
        col = self.first_column
        n = self.order
        return [[col[r - c] if r >= c else 0 for c in range(n)] for r in range(n)]

    def __matmul__(self, other: "ToeplitzLower") -> "ToeplitzLower":
        # products of lower-triangular Toeplitz matrices stay Toeplitz
        if not isinstance(other, ToeplitzLower):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return ToeplitzLower(tuple(apply(self, other.first_column)))


def _check_sigma(sigma, N: int) -> np.ndarray:
    values = sigma.values if isinstance(sigma, SignSequence) else np.asarray(sigma, dtype=np.int64)
    if len(values) < N + 1:
        raise ValueError(f"sigma covers 0..{len(values) - 1}, need 0..{N}")
    return values[: N + 1]


def rho_up_to(N: int, sigma: SigmaSequence | Sequence[int]) -> RhoSequence:
    """Run the pentagonal recurrence on ``sigma(0..N)``.

    Raises ``InconsistencyError`` if ``sigma(0) != 1`` or a negative count
    appears; both mean the sigma input is wrong.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    s = _check_sigma(sigma, N)
    if s[0] != 1:
        raise InconsistencyError(f"sigma(0) must be 1, got {int(s[0])}")
    g, sign = _pentagonal_arrays(N)
    # drop the i = 0 term; what remains is moved to the right-hand side
    g, sign = g[1:], sign[1:]
    rho = np.zeros(N + 1, dtype=np.int64)
    rho[0] = 1
    k = 0
    for n in range(1, N + 1):
        while k < len(g) and g[k] <= n:
            k += 1
        value = int(s[n]) - int(np.dot(sign[:k], rho[n - g[:k]]))
        if value < 0:
            raise InconsistencyError(f"recurrence gave rho({n}) = {value} < 0")
        rho[n] = value
    return RhoSequence(rho)


def partition_up_to(N: int) -> PartitionSequence:
    """Partition numbers ``p(0..N)`` by Euler's recurrence, exact."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    g, sign = _pentagonal_arrays(N)
    g = g[1:]
    sign = sign[1:].astype(object)
    p = np.zeros(N + 1, dtype=object)
    p[0] = 1
    k = 0
    for n in range(1, N + 1):
        while k < len(g) and g[k] <= n:
            k += 1
        p[n] = -np.dot(sign[:k], p[n - g[:k]])
    return PartitionSequence(tuple(int(v) for v in p))


def euler_matrix(n: int) -> ToeplitzLower:
    """Leading ``(n+1) x (n+1)`` block of Euler's matrix."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ToeplitzLower(tuple(sigma0_array(n).tolist()))


def euler_inverse(n: int) -> ToeplitzLower:
    """Inverse of ``euler_matrix(n)``, built from the partition numbers."""
    return ToeplitzLower(partition_up_to(n).values)


def apply(matrix: ToeplitzLower, v) -> list[int]:
    """Exact product ``matrix @ v``.

    Uses only the nonzero diagonals of the matrix. Falls back to Python
    integers whenever int64 could overflow.
    """
    if isinstance(v, SignSequence):
        v = v.values
    vals = list(v) if not isinstance(v, np.ndarray) else v.tolist()
    n = matrix.order
    if len(vals) != n:
        raise ValueError(f"vector length {len(vals)} does not match matrix order {n}")
    diagonals = [(k, c) for k, c in enumerate(matrix.first_column) if c]
    max_c = max((abs(c) for _, c in diagonals), default=0)
    max_v = max((abs(int(x)) for x in vals), default=0)
    if max(max_c, max_v, max_c * max_v * len(diagonals)) < _INT64_SAFE:
        x = np.array(vals, dtype=np.int64)
        out = np.zeros(n, dtype=np.int64)
    else:
        x = np.array([int(t) for t in vals], dtype=object)
        out = np.zeros(n, dtype=object)
    for k, c in diagonals:
        out[k:] += c * x[: n - k]
    return [int(t) for t in out]


def primes_up_to(N: int, rho: RhoSequence) -> list[int]:
    """Integers ``2 <= n <= N`` with exactly two equal-part partitions."""
    if rho.bound < N:
        raise ValueError(f"rho covers 0..{rho.bound}, need 0..{N}")
    if N < 2:
        return []
    return (np.nonzero(rho.values[2 : N + 1] == 2)[0] + 2).tolist()
