"""The sigma-sequence: anti-diagonal sums of the sigma-matrix.

``sigma(n) = sum_{j=0..n} sigma_j(n - j)``. Two exact routes are provided:

``"columns"``
    Stream every column ``j = 0..N`` and add it into the anti-diagonals.
    O(N^2) time, O(N) memory.

``"hyperbola"`` (default)
    For ``j >= 1`` the anti-diagonal term unrolls to
    ``sum_{s>=1} sigma0(n - s*j)``, a sum over pairs ``(j, s)``. With
    ``K = isqrt(N)`` every pair with ``s*j <= N`` has ``j <= K`` or
    ``s <= K``, and the pairs with ``j > K`` for a fixed ``s`` sum to the
    stride-``s`` lace shifted by ``s*(K+1)``. That needs only ``2K`` laces:
    O(N^1.5) time.

Neither route looks at divisor counts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .pentagonal import partial_sum_sigma0, sigma0_array
from .sequences import SignSequence
from .sigma_matrix import lace

__all__ = [
    "SigmaSequence",
    "SplitConvention",
    "SigmaSplit",
    "sigma_up_to",
    "split_sigma",
    "sigma_u_intervals",
    "split_comparison",
]


class SigmaSequence(SignSequence):
    """Values ``sigma(0..N)``."""


class SplitConvention(enum.Enum):
    PAPER_LITERAL = "paper-literal"  # upper: terms with n > 2j
    REGION_BASED = "region-based"  # upper: terms in cells with j > i


@dataclass(frozen=True)
class SigmaSplit:
    convention: SplitConvention
    upper: SignSequence
    lower: SignSequence


def _sigma_columns(N: int) -> np.ndarray:
    s0 = sigma0_array(N)
    out = s0.copy()
    for j in range(1, N + 1):
        out[j:] += lace(s0, j)[: N + 1 - j]
    return out


def _sigma_hyperbola(N: int) -> np.ndarray:
    s0 = sigma0_array(N)
    out = s0.copy()
    K = isqrt(N)
    for j in range(1, K + 1):
        laced = lace(s0, j)
        # j <= K, every s >= 1
        out[j:] += laced[: N + 1 - j]
        # j > K with multiplier s = j (role swap): start at s*(K+1)
        start = j * (K + 1)
        if start <= N:
            out[start:] += laced[: N + 1 - start]
    return out


_METHODS = {"columns": _sigma_columns, "hyperbola": _sigma_hyperbola}


def sigma_up_to(N: int, method: str = "hyperbola") -> SigmaSequence:
    """``sigma(0..N)``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    try:
        fn = _METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(_METHODS)}") from None
    try:
        return SigmaSequence(fn(N))
    except MemoryError as exc:
        from .exceptions import ResourceLimitError

        raise ResourceLimitError(f"cannot allocate sigma sequence of length {N + 1}") from exc


def split_sigma(N: int, convention: SplitConvention | str) -> SigmaSplit:
    """Split each anti-diagonal sum into an upper and a lower part.

    For the cell ``(i, j)`` on anti-diagonal ``n = i + j``:

    * ``PAPER_LITERAL`` counts it as upper when ``n > 2j`` (``i > j``);
    * ``REGION_BASED`` counts it as upper when ``j > i`` (region UPPER).
    """
    try:
        convention = SplitConvention(convention)
    except ValueError:
        raise ValueError(f"unknown split convention: {convention!r}") from None
    if N < 0:
        raise ValueError("N must be nonnegative")
    s0 = sigma0_array(N)
    upper = np.zeros(N + 1, dtype=np.int64)
    lower = np.zeros(N + 1, dtype=np.int64)
    for j in range(N + 1):
        col = s0 if j == 0 else lace(s0, j)
        i_max = N - j
        # rows i <= j go one way, rows i > j the other
        cut = min(j, i_max) + 1
        low_i, high_i = col[:cut], col[cut : i_max + 1]
        if convention is SplitConvention.PAPER_LITERAL:
            lower[j : j + cut] += low_i
            upper[j + cut : N + 1] += high_i
        else:
            # j > i strictly: rows 0..j-1 are upper, row j (diagonal) is lower
            up_cut = min(j, i_max + 1)
            upper[j : j + up_cut] += col[:up_cut]
            lower[j + up_cut : N + 1] += col[up_cut : i_max + 1]
    return SigmaSplit(convention, SignSequence(upper), SignSequence(lower))


def sigma_u_intervals(n: int) -> int:
    """Evaluate the piecewise-constant interval formula at ``n``.

    For each ``k >= 0``::

        [6k^2 - k,      6k^2 + k)        ->  0
        [6k^2 + k,      6k^2 + 5k + 1)   ->  1
        [6k^2 + 5k + 1, 6k^2 + 7k + 2)   ->  0
        [6k^2 + 7k + 2, 6k^2 + 11k + 5)  -> -1

    The last interval of ``k`` ends where the first of ``k + 1`` begins, so
    the intervals tile the nonnegative integers.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = isqrt(n // 6)
    while 6 * k * k - k > n:
        k -= 1
    while 6 * k * k + 11 * k + 5 <= n:
        k += 1
    if n < 6 * k * k + k:
        return 0
    if n < 6 * k * k + 5 * k + 1:
        return 1
    if n < 6 * k * k + 7 * k + 2:
        return 0
    return -1


def split_comparison(N: int) -> list[dict]:
    """Side-by-side rows of both upper sequences, the interval formula and S(n)."""
    lit = split_sigma(N, SplitConvention.PAPER_LITERAL).upper
    reg = split_sigma(N, SplitConvention.REGION_BASED).upper
    S = partial_sum_sigma0(N)
    return [
        {
            "n": n,
            "upper_paper_literal": lit[n],
            "upper_region_based": reg[n],
            "interval_formula": sigma_u_intervals(n),
            "partial_sum": S[n],
        }
        for n in range(N + 1)
    ]
