from math import ceil

import pytest
from hypothesis import given, settings, strategies as st

from pentasigma import power_series as ps
from pentasigma.pentagonal import partial_sum_sigma0
from pentasigma.sigma_matrix import laced_sigma
from pentasigma.sigma_sequence import (
    SplitConvention,
    sigma_u_intervals,
    sigma_up_to,
    split_comparison,
    split_sigma,
)


def brute_sigma(n):
    """sum_{j<=n} sum_{t>=0} sigma0(n - j - t*j) with sigma0 from an index scan."""
    pent = {}
    for i in range(-n - 1, n + 2):
        pent[(3 * i * i + i) // 2] = -1 if i % 2 else 1
    s0 = lambda m: pent.get(m, 0) if m >= 0 else 0
    total = s0(n)
    for j in range(1, n + 1):
        total += sum(s0(m) for m in range(n - j, -1, -j))
    return total


SIGMA_0_26 = [1, 0, 0, -1, -1, -2, 0, -1, 1, 2, 1, 2, 3, 1, -1, 3,
              -2, -1, -3, -1, -2, -2, -5, 0, -1, 1, -3]
PUBLISHED_0_26 = [1, 0, 0, -1, -1, -2, 0, -1, 1, 2, 1, 2, 3, 1, -1, 3,
                  -2, -2, -1, -3, -2, -2, -5, 0, -1, 1, -3]


def test_sigma_small():
    assert sigma_up_to(0).tolist() == [1]
    assert [brute_sigma(n) for n in range(27)] == SIGMA_0_26
    assert sigma_up_to(26).tolist() == SIGMA_0_26


def test_published_list_differs_only_at_17_to_19():
    got = sigma_up_to(26).tolist()
    assert [n for n in range(27) if got[n] != PUBLISHED_0_26[n]] == [17, 18, 19]


def test_sigma_3_worked_example():
    assert laced_sigma(0, 3) + laced_sigma(1, 2) + laced_sigma(2, 1) + laced_sigma(3, 0) == -1
    assert sigma_up_to(3)[3] == -1


@pytest.mark.parametrize("N", [0, 1, 2, 3, 4, 8, 9, 15, 16, 17, 99, 100, 101, 500])
def test_routes_agree(N):
    assert sigma_up_to(N, "hyperbola") == sigma_up_to(N, "columns")


def test_matches_series_oracle():
    N = 600
    assert sigma_up_to(N).tolist() == ps.sigma_function_series(N).tolist()


def test_unknown_method():
    with pytest.raises(ValueError):
        sigma_up_to(5, "fft")


def test_deterministic():
    assert sigma_up_to(5000) == sigma_up_to(5000)


def test_split_examples():
    for conv in SplitConvention:
        split = split_sigma(0, conv)
        assert split.upper[0] + split.lower[0] == 1
    lit = split_sigma(30, SplitConvention.PAPER_LITERAL)
    assert lit.upper[7] == 0
    reg = split_sigma(30, SplitConvention.REGION_BASED)
    assert reg.upper[7] == -1
    S = partial_sum_sigma0(30)
    assert all(reg.upper[n] == S[ceil(n / 2) - 1] for n in range(1, 31))


def split_by_hand(N, upper_when):
    upper = [0] * (N + 1)
    for n in range(N + 1):
        upper[n] = sum(laced_sigma(j, n - j) for j in range(n + 1) if upper_when(n - j, j))
    return upper


def test_split_matches_hand_sums():
    N = 40
    lit = split_sigma(N, "paper-literal").upper.tolist()
    assert lit == split_by_hand(N, lambda i, j: i > j)
    reg = split_sigma(N, "region-based").upper.tolist()
    assert reg == split_by_hand(N, lambda i, j: j > i)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 400), st.sampled_from(list(SplitConvention)))
def test_split_completeness(N, conv):
    split = split_sigma(N, conv)
    assert (split.upper.values + split.lower.values).tolist() == sigma_up_to(N).tolist()


def test_unknown_convention():
    with pytest.raises(ValueError):
        split_sigma(5, "diagonal")


@pytest.mark.parametrize("n, v", [(0, 1), (3, -1), (13, 0), (7, 1), (12, 0), (15, -1), (22, 0)])
def test_intervals(n, v):
    assert sigma_u_intervals(n) == v


def test_interval_law():
    S = partial_sum_sigma0(3000)
    assert [sigma_u_intervals(n) for n in range(3001)] == S.tolist()


def test_split_comparison_rows():
    rows = split_comparison(7)
    assert rows[7] == {
        "n": 7,
        "upper_paper_literal": 0,
        "upper_region_based": -1,
        "interval_formula": 1,
        "partial_sum": 1,
    }
