"""
Divisor counts and primes from the pentagonal recurrence
========================================================

Given sigma, each rho(n) follows from earlier values through the pentagonal
numbers, exactly like Euler's recurrence for the partition numbers. The
same answer comes from multiplying sigma by the inverse Euler matrix, whose
first column is the partition numbers.
"""

import time

from pentasigma import (
    apply,
    euler_inverse,
    euler_matrix,
    partition_up_to,
    primes_up_to,
    rho_up_to,
    sigma_up_to,
)
from pentasigma.oracles import primes_sieve

sigma = sigma_up_to(30)
rho = rho_up_to(30, sigma)
print(rho.tolist())
print(primes_up_to(30, rho))

# the matrix route
print(apply(euler_inverse(30), sigma) == rho.tolist())
print(euler_inverse(8).dense()[-1])  # partition numbers written backward
print(apply(euler_matrix(30), rho) == sigma.tolist())

# partition numbers outgrow 64-bit integers quickly
print(partition_up_to(500)[500])

# at scale
N = 100_000
start = time.perf_counter()
primes = primes_up_to(N, rho_up_to(N, sigma_up_to(N)))
elapsed = time.perf_counter() - start
print(len(primes), primes == list(primes_sieve(N).values), f"{elapsed:.2f} s")
