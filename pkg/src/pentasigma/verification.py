"""Invariant suites that compare the fast paths against the oracles.

Each suite returns a :class:`SuiteResult`. Suites may also attach
report-only findings: observations about ambiguous readings that are
recorded but never affect ``passed``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import power_series as ps
from .divisor_engine import apply, euler_inverse, euler_matrix, primes_up_to, rho_up_to
from .exceptions import ResourceLimitError
from .oracles import divisor_counts_sieve, primes_sieve
from .pentagonal import partial_sum_sigma0
from .sigma_matrix import ASSERTABLE, build_window, laced_sigma, report_only_findings, scan_property
from .sigma_sequence import SplitConvention, sigma_u_intervals, sigma_up_to, split_sigma

SUITE_CAPS = {
    "identity14": 5000,
    "lacing21": 1024,
    "properties": 2048,
    "splits": 20000,
    "roundtrip": 10**6,
    "primes": 10**6,
}
SUITES = tuple(SUITE_CAPS)
INVERSE_PATH_CAP = 2000
MAX_LISTED = 20


@dataclass
class SuiteResult:
    suite: str
    bound: int
    violations: list = field(default_factory=list)
    report_only: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, **violation) -> None:
        self.violations.append(violation)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bound": self.bound,
            "pass": self.passed,
            "violation_count": len(self.violations),
            "violations": self.violations[:MAX_LISTED],
        }


def _diff(result: SuiteResult, label: str, got, want) -> None:
    got, want = list(got), list(want)
    if len(got) != len(want):
        result.add(check=label, detail=f"length {len(got)} != {len(want)}")
        return
    for n, (a, b) in enumerate(zip(got, want)):
        if a != b:
            result.add(check=label, n=n, got=int(a), expected=int(b))


def suite_identity14(n: int) -> SuiteResult:
    res = SuiteResult("identity14", n)
    lhs = ps.multiply(ps.euler_function(n), ps.rho_series_oracle(n))
    rhs = ps.sigma_function_series(n)
    _diff(res, "euler*rho == sigma-function", lhs.coefficients, rhs.coefficients)
    _diff(res, "sigma_up_to == sigma-function", sigma_up_to(n).tolist(), rhs.coefficients)
    return res


def suite_lacing21(n: int) -> SuiteResult:
    res = SuiteResult("lacing21", n)
    window = build_window(n, n)
    for j in range(n + 1):
        series = ps.euler_omit(j, n)
        for i in range(n + 1):
            want = series[i]
            got = laced_sigma(j, i)
            if got != want or window.entry(i, j) != want:
                res.add(check="lacing", i=i, j=j, laced=got, window=window.entry(i, j), series=want)
    return res


def suite_properties(n: int) -> SuiteResult:
    res = SuiteResult("properties", n)
    window = build_window(n, n)
    for prop in ASSERTABLE:
        report = scan_property(window, prop)
        for i, j, e, expected in report.violations:
            res.add(check=prop.value, i=i, j=j, entry=e, expected=expected)
    for report in report_only_findings(window):
        res.report_only.append(
            {
                "finding": report.property_id.value,
                "description": report.description,
                "holds": report.passed,
                "violation_count": len(report.violations),
                "first_violations": [
                    {"i": i, "j": j, "entry": e} for i, j, e, _ in report.violations[:MAX_LISTED]
                ],
            }
        )
    return res


def suite_splits(n: int) -> SuiteResult:
    res = SuiteResult("splits", n)
    sigma = sigma_up_to(n).tolist()
    S = partial_sum_sigma0(n)
    intervals = [sigma_u_intervals(m) for m in range(n + 1)]
    _diff(res, "interval formula == partial sums", intervals, S.tolist())
    for conv in SplitConvention:
        split = split_sigma(n, conv)
        total = (split.upper.values + split.lower.values).tolist()
        _diff(res, f"{conv.value}: upper + lower == sigma", total, sigma)
        mismatches = [m for m in range(n + 1) if split.upper[m] != intervals[m]]
        res.report_only.append(
            {
                "finding": f"upper({conv.value}) vs interval formula",
                "holds": not mismatches,
                "mismatch_count": len(mismatches),
                "first_mismatches": [
                    {"n": m, "upper": split.upper[m], "interval": intervals[m]}
                    for m in mismatches[:MAX_LISTED]
                ],
            }
        )
    return res


def suite_roundtrip(n: int) -> SuiteResult:
    res = SuiteResult("roundtrip", n)
    sigma = sigma_up_to(n)
    rho = rho_up_to(n, sigma)
    if rho[0] != 1:
        res.add(check="rho(0) == 1", got=rho[0])
    if n >= 1:
        _diff(res, "rho == divisor sieve", rho.values[1:].tolist(), divisor_counts_sieve(n).values)
    _diff(res, "E @ rho == sigma", apply(euler_matrix(n), rho), sigma.tolist())
    m = min(n, INVERSE_PATH_CAP)
    via_inverse = apply(euler_inverse(m), sigma.values[: m + 1])
    _diff(res, f"E^-1 @ sigma == rho (n <= {m})", via_inverse, rho.values[: m + 1].tolist())
    return res


def suite_primes(n: int) -> SuiteResult:
    res = SuiteResult("primes", n)
    if n < 2:
        return res
    rho = rho_up_to(n, sigma_up_to(n))
    got = primes_up_to(n, rho)
    want = list(primes_sieve(n).values)
    if got != want:
        extra = sorted(set(got) - set(want))
        missing = sorted(set(want) - set(got))
        res.add(check="primes == sieve", extra=extra[:MAX_LISTED], missing=missing[:MAX_LISTED])
    return res


_RUNNERS = {
    "identity14": suite_identity14,
    "lacing21": suite_lacing21,
    "properties": suite_properties,
    "splits": suite_splits,
    "roundtrip": suite_roundtrip,
    "primes": suite_primes,
}


def run_suite(name: str, n: int) -> SuiteResult:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if n > SUITE_CAPS[name]:
        raise ResourceLimitError(f"suite {name} is capped at n <= {SUITE_CAPS[name]}, got {n}")
    return _RUNNERS[name](n)


def verify(n: int, suites=SUITES) -> dict:
    """Run ``suites`` at bound ``n`` and assemble the JSON-ready report."""
    results = [run_suite(s, n) for s in suites]
    return {
        "bound": n,
        "pass": all(r.passed for r in results),
        "suites": [r.to_dict() for r in results],
        "report_only": [
            dict(suite=r.suite, **finding) for r in results for finding in r.report_only
        ],
    }
