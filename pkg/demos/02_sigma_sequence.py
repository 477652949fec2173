"""
Anti-diagonal sums: the sigma-sequence
======================================

sigma(n) adds up the anti-diagonal i + j = n of the sigma-matrix. It is
also the coefficient list of Euler's function times the divisor-count
generating function, which gives an independent check.
"""

from pentasigma import power_series as ps
from pentasigma import sigma_up_to, split_sigma, sigma_u_intervals, partial_sum_sigma0

sigma = sigma_up_to(40)
print(sigma.tolist())

# the same numbers from exact series multiplication
series = ps.multiply(ps.euler_function(40), ps.rho_series_oracle(40))
print(series.tolist() == sigma.tolist())

# two fast routes: O(N^2) column streaming and the O(N^1.5) hyperbola fold
print(sigma_up_to(3000, "columns") == sigma_up_to(3000, "hyperbola"))

# upper/lower decompositions of each anti-diagonal
lit = split_sigma(20, "paper-literal")
reg = split_sigma(20, "region-based")
S = partial_sum_sigma0(20)
print(" n  sigma  lit.up  reg.up  interval  S(n)")
for n in range(21):
    print(f"{n:2d} {sigma[n]:6d} {lit.upper[n]:7d} {reg.upper[n]:7d} {sigma_u_intervals(n):9d} {S[n]:5d}")
