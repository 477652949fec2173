"""Divisor counts and primes from Euler's pentagonal number theorem.

The number of partitions of ``n`` into equal parts, ``rho(n)``, is the
divisor count ``d(n)`` (with ``rho(0) = 1``). Multiplying its generating
function by Euler's function gives a "sigma-function" whose coefficients
``sigma(n)`` can be built from the pentagonal sequence alone, after which
``rho`` follows from a pentagonal recurrence, and primes are the ``n`` with
``rho(n) == 2``.
"""

from .divisor_engine import (
    PartitionSequence,
    RhoSequence,
    ToeplitzLower,
    apply,
    euler_inverse,
    euler_matrix,
    partition_up_to,
    primes_up_to,
    rho_up_to,
)
from .exceptions import InconsistencyError, PentasigmaError, ResourceLimitError
from .pentagonal import (
    PentClass,
    PentFamily,
    PentagonalTerm,
    classify_pentagonal,
    generalized_pentagonal,
    partial_sum_sigma0,
    pentagonal_terms_up_to,
    sigma0,
)
from .sequences import SignSequence
from .sigma_matrix import (
    Property,
    PropertyReport,
    Region,
    RegionTag,
    SigmaMatrixWindow,
    build_window,
    laced_sigma,
    region_of,
    scan_property,
)
from .sigma_sequence import (
    SigmaSequence,
    SigmaSplit,
    SplitConvention,
    sigma_u_intervals,
    sigma_up_to,
    split_sigma,
)

__version__ = "0.1.0"
