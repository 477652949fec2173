"""The sigma-matrix: column ``j`` holds the j-laced sequence ``sigma_j``.

``sigma_j(i)`` is the coefficient of ``x**i`` in Euler's function with the
factor ``(1 - x**j)`` removed. Multiplying by ``1/(1 - x**j)`` sums
``sigma0`` along stride ``j``::

    sigma_j(i) = sigma0(i) + sigma0(i - j) + sigma0(i - 2j) + ...
               = sigma0(i) + sigma_j(i - j)

Column 0 is ``sigma0`` itself and row 0 is all ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .exceptions import ResourceLimitError
from .pentagonal import (
    PentFamily,
    _pentagonal_arrays,
    classify_pentagonal,
    sigma0,
    sigma0_array,
)

DEFAULT_CELL_CAP = 10**8

__all__ = [
    "Region",
    "RegionTag",
    "Property",
    "PropertyReport",
    "SigmaMatrixWindow",
    "lace",
    "laced_sigma",
    "build_window",
    "region_of",
    "scan_property",
    "report_only_findings",
]


class Region(enum.Enum):
    UPPER = "U"
    LAMBDA1 = "L1"
    LAMBDA2 = "L2"


_REGION_CODES = (Region.UPPER, Region.LAMBDA1, Region.LAMBDA2)


@dataclass(frozen=True)
class RegionTag:
    region: Region
    on_correction_border: bool = False


def region_of(i: int, j: int) -> RegionTag:
    """Region of cell ``(i, j)``.

    UPPER above the diagonal (``j > i``), LAMBDA1 between the diagonal and
    the correction border ``i == 2j`` inclusive, LAMBDA2 below the border.
    """
    if i < 0 or j < 0:
        raise ValueError("cell indices must be nonnegative")
    if j > i:
        return RegionTag(Region.UPPER)
    if i <= 2 * j:
        return RegionTag(Region.LAMBDA1, i == 2 * j)
    return RegionTag(Region.LAMBDA2)


def lace(base: np.ndarray, j: int) -> np.ndarray:
    """Stride-``j`` running sums: ``out[i] = base[i] + base[i-j] + ...``."""
    if j < 1:
        raise ValueError("lace stride must be >= 1")
    L = len(base)
    pad = (-L) % j
    grid = np.concatenate([base, np.zeros(pad, dtype=base.dtype)]).reshape(-1, j)
    return np.cumsum(grid, axis=0).ravel()[:L]


def laced_sigma(j: int, i: int) -> int:
    """``sigma_j(i)``; zero for negative ``i``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if i < 0:
        return 0
    if j == 0:
        return sigma0(i)
    return sum(sigma0(m) for m in range(i, -1, -j))


def _column(s0: np.ndarray, j: int) -> np.ndarray:
    return s0.copy() if j == 0 else lace(s0, j)


@dataclass(frozen=True)
class SigmaMatrixWindow:
    """Dense rows ``0..R`` by columns ``0..C`` of the sigma-matrix."""

    rows: int
    cols: int
    entries: np.ndarray = field(repr=False)
    region_codes: np.ndarray = field(repr=False)
    border: np.ndarray = field(repr=False)

    def entry(self, i: int, j: int) -> int:
        if i < 0 or j < 0:
            return 0
        return int(self.entries[i, j])

    def region(self, i: int, j: int) -> RegionTag:
        return RegionTag(_REGION_CODES[self.region_codes[i, j]], bool(self.border[i, j]))

    def region_labels(self) -> list[list[str]]:
        labels = np.array([r.value for r in _REGION_CODES], dtype=object)
        return labels[self.region_codes].tolist()

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows + 1, self.cols + 1


def build_window(R: int, C: int, cell_cap: int = DEFAULT_CELL_CAP) -> SigmaMatrixWindow:
    """Materialize entries ``sigma_j(i)`` for ``0 <= i <= R``, ``0 <= j <= C``."""
    if R < 0 or C < 0:
        raise ValueError("window bounds must be nonnegative")
    cells = (R + 1) * (C + 1)
    if cells > cell_cap:
        raise ResourceLimitError(f"window of {cells} cells exceeds cap {cell_cap}")
    s0 = sigma0_array(R)
    entries = np.empty((R + 1, C + 1), dtype=np.int64)
    for j in range(C + 1):
        entries[:, j] = _column(s0, j)

    ii, jj = np.indices((R + 1, C + 1))
    codes = np.where(jj > ii, 0, np.where(ii <= 2 * jj, 1, 2)).astype(np.uint8)
    border = ii == 2 * jj
    for arr in (entries, codes, border):
        arr.setflags(write=False)
    return SigmaMatrixWindow(R, C, entries, codes, border)


class Property(enum.Enum):
    P2_4 = "P2_4"
    P2_5 = "P2_5"
    P2_6 = "P2_6"
    P2_7 = "P2_7"
    P2_9 = "P2_9"
    # report-only readings, never part of a pass/fail verdict
    P2_4_LITERAL = "P2_4_LITERAL"
    P2_7_SMALL_ROWS = "P2_7_SMALL_ROWS"
    P2_9_LITERAL = "P2_9_LITERAL"

    @property
    def report_only(self) -> bool:
        return self in _REPORT_ONLY


_REPORT_ONLY = frozenset({Property.P2_4_LITERAL, Property.P2_7_SMALL_ROWS, Property.P2_9_LITERAL})
ASSERTABLE = (Property.P2_4, Property.P2_5, Property.P2_6, Property.P2_7, Property.P2_9)

_DESCRIPTIONS = {
    Property.P2_4: "entry(i,j) == sigma0(i) whenever j > i",
    Property.P2_5: "entry(i,i) >= 0",
    Property.P2_6: "|entry(i,j)| >= 2 (j >= 1) => i = g + t*j, g pentagonal, t >= 0",
    Property.P2_7: "i >= 4, sigma0(i) == 0 => (entry(i,i-2), entry(i,i-1), entry(i,i)) == (-1,-1,1)",
    Property.P2_9: "entry >= 2 => i = g + t*j with g even-indexed; entry <= -2 => g odd-indexed",
    Property.P2_4_LITERAL: "as printed: entry(i,j) == sigma0(i) whenever i > j",
    Property.P2_7_SMALL_ROWS: "near-diagonal triple at rows i in {1,2,3} (recorded, not asserted)",
    Property.P2_9_LITERAL: "as printed: entry <= -2 => i = g + t*j with g even-indexed",
}


@dataclass
class PropertyReport:
    property_id: Property
    rows: int
    cols: int
    violations: list[tuple[int, int, int, str]] = field(default_factory=list)

    @property
    def description(self) -> str:
        return _DESCRIPTIONS[self.property_id]

    @property
    def report_only(self) -> bool:
        return self.property_id.report_only

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "property": self.property_id.value,
            "description": self.description,
            "rows": self.rows,
            "cols": self.cols,
            "report_only": self.report_only,
            "pass": self.passed,
            "violations": [
                {"i": i, "j": j, "entry": e, "expected": exp} for i, j, e, exp in self.violations
            ],
        }


def _offset_families(i: int, j: int) -> set[PentFamily]:
    """Families of pentagonal g with ``i = g + t*j`` for some ``t >= 0``."""
    values, _ = _pentagonal_arrays(i)
    found = set()
    for g in values.tolist():
        if (i - g) % j == 0:
            found.add(classify_pentagonal(g).family)
    return found


def _scan_p2_4(w: SigmaMatrixWindow, upper: bool) -> list:
    s0 = sigma0_array(w.rows)
    ii, jj = np.indices(w.shape)
    mask = (jj > ii) if upper else (ii > jj)
    bad = mask & (w.entries != s0[:, None])
    return [
        (int(i), int(j), int(w.entries[i, j]), f"sigma0({i}) = {int(s0[i])}")
        for i, j in zip(*np.nonzero(bad))
    ]


def _scan_p2_5(w: SigmaMatrixWindow) -> list:
    n = min(w.rows, w.cols)
    diag = np.diagonal(w.entries)[: n + 1]
    return [(int(k), int(k), int(diag[k]), ">= 0") for k in np.nonzero(diag < 0)[0]]


def _scan_p2_6(w: SigmaMatrixWindow) -> list:
    out = []
    for i, j in zip(*np.nonzero(np.abs(w.entries) >= 2)):
        i, j = int(i), int(j)
        if j == 0:
            continue
        if not _offset_families(i, j) - {PentFamily.NOT_PENTAGONAL}:
            out.append((i, j, w.entry(i, j), "i = pentagonal + multiple of j"))
    return out


def _triple(w: SigmaMatrixWindow, i: int) -> tuple[int, int, int]:
    return w.entry(i, i - 2), w.entry(i, i - 1), w.entry(i, i)


def _scan_p2_7(w: SigmaMatrixWindow, rows) -> list:
    out = []
    for i in rows:
        if i > w.cols or sigma0(i) != 0:
            continue
        got = _triple(w, i)
        if got != (-1, -1, 1):
            for j, e, want in zip((i - 2, i - 1, i), got, (-1, -1, 1)):
                if e != want:
                    out.append((i, j, e, f"{want} (near-diagonal triple)"))
    return out


def _scan_p2_9(w: SigmaMatrixWindow, literal: bool) -> list:
    out = []
    for i, j in zip(*np.nonzero(np.abs(w.entries) >= 2)):
        i, j = int(i), int(j)
        if j == 0:
            continue
        e = w.entry(i, j)
        families = _offset_families(i, j)
        if e >= 2 or literal:
            ok = any(f.even_indexed for f in families)
            want = "i = even-indexed pentagonal + multiple of j"
        else:
            ok = any(f.odd_indexed for f in families)
            want = "i = odd-indexed pentagonal + multiple of j"
        if not ok:
            out.append((i, j, e, want))
    return out


def scan_property(window: SigmaMatrixWindow, prop: Property | str) -> PropertyReport:
    """Check one property cell by cell over ``window`` and collect violations."""
    try:
        prop = Property(prop)
    except ValueError:
        raise ValueError(f"unknown property id: {prop!r}") from None
    w = window
    if prop is Property.P2_4:
        violations = _scan_p2_4(w, upper=True)
    elif prop is Property.P2_4_LITERAL:
        violations = _scan_p2_4(w, upper=False)
    elif prop is Property.P2_5:
        violations = _scan_p2_5(w)
    elif prop is Property.P2_6:
        violations = _scan_p2_6(w)
    elif prop is Property.P2_7:
        violations = _scan_p2_7(w, range(4, w.rows + 1))
    elif prop is Property.P2_7_SMALL_ROWS:
        violations = _scan_p2_7(w, range(1, min(3, w.rows) + 1))
    elif prop is Property.P2_9:
        violations = _scan_p2_9(w, literal=False)
    else:
        violations = _scan_p2_9(w, literal=True)
    return PropertyReport(prop, w.rows, w.cols, violations)


def report_only_findings(window: SigmaMatrixWindow) -> list[PropertyReport]:
    return [scan_property(window, p) for p in Property if p.report_only]
