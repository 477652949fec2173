import pytest
from hypothesis import given, strategies as st

from pentasigma import power_series as ps
from pentasigma.pentagonal import sigma0
from pentasigma.power_series import TruncatedSeries, multiply


def divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def series(N):
    return st.lists(st.integers(-50, 50), min_size=N + 1, max_size=N + 1).map(
        lambda c: TruncatedSeries(tuple(c))
    )


def test_multiply_identities():
    assert multiply(ps.one(0), ps.one(0)).tolist() == [1]
    one_minus_x = TruncatedSeries((1, -1, 0, 0, 0, 0))
    assert multiply(one_minus_x, ps.geometric(1, 5)).tolist() == [1, 0, 0, 0, 0, 0]


def test_multiply_rejects_mixed_bounds():
    with pytest.raises(ValueError):
        multiply(ps.one(3), ps.one(4))
    with pytest.raises(ValueError):
        ps.one(3) + ps.one(4)


@given(st.integers(0, 12).flatmap(lambda N: st.tuples(series(N), series(N), series(N))))
def test_multiply_ring_laws(abc):
    a, b, c = abc
    N = a.degree_bound
    assert multiply(a, b) == multiply(b, a)
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, ps.one(N)) == a


def test_euler_function():
    assert ps.euler_function(0).tolist() == [1]
    assert ps.euler_function(15).tolist() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]
    e = ps.euler_function(26)
    assert e[22] == 1 and e[26] == 1


def test_euler_function_is_pentagonal_sequence():
    e = ps.euler_function(400)
    assert e.tolist() == [sigma0(n) for n in range(401)]


def test_geometric():
    assert ps.geometric(1, 3).tolist() == [1, 1, 1, 1]
    assert ps.geometric(3, 7).tolist() == [1, 0, 0, 1, 0, 0, 1, 0]
    assert [k for k, c in enumerate(ps.geometric(5, 12).tolist()) if c] == [0, 5, 10]
    with pytest.raises(ValueError):
        ps.geometric(0, 5)


def direct_product_omitting(j, N):
    """prod_{m=1..N, m != j} (1 - x^m) by factor multiplication."""
    result = ps.one(N)
    for m in range(1, N + 1):
        if m != j:
            result = multiply(result, TruncatedSeries.from_terms(N, {0: 1, m: -1}))
    return result


def test_euler_omit():
    assert ps.euler_omit(0, 15) == ps.euler_function(15)
    assert ps.euler_omit(1, 8).tolist() == [1, 0, -1, -1, -1, 0, 0, 1, 1]
    assert ps.euler_omit(5, 8)[5] == 2


@pytest.mark.parametrize("j", [1, 2, 3, 5, 7, 13, 40])
def test_euler_omit_matches_direct_product(j):
    assert ps.euler_omit(j, 40) == direct_product_omitting(j, 40)


def test_lacing_formula_for_euler_omit():
    N = 60
    for j in range(1, N + 1):
        got = ps.euler_omit(j, N).tolist()
        want = [sum(sigma0(n - t * j) for t in range(n // j + 1)) for n in range(N + 1)]
        assert got == want


# computed by the series route and cross-checked against three others
# (column streaming, the hyperbola fold, and the recurrence run on d(n))
SIGMA_0_26 = [1, 0, 0, -1, -1, -2, 0, -1, 1, 2, 1, 2, 3, 1, -1, 3,
              -2, -1, -3, -1, -2, -2, -5, 0, -1, 1, -3]


def test_sigma_function_series():
    assert ps.sigma_function_series(0).tolist() == [1]
    s = ps.sigma_function_series(26)
    assert s.tolist() == SIGMA_0_26
    assert s[12] == 3
    assert s[22] == -5


def test_rho_series_oracle():
    assert ps.rho_series_oracle(0).tolist() == [1]
    r = ps.rho_series_oracle(60)
    assert r.tolist()[1:13] == [1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]
    assert all(r[n] == len(divisors(n)) for n in range(1, 61))
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59):
        assert r[p] == 2


@pytest.mark.parametrize("N", [0, 1, 2, 10, 57, 200])
def test_identity_euler_times_rho(N):
    lhs = multiply(ps.euler_function(N), ps.rho_series_oracle(N))
    assert lhs == ps.sigma_function_series(N)
