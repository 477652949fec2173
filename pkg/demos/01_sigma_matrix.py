"""
The sigma-matrix and its regions
================================

Column j of the sigma-matrix lists the coefficients of Euler's function
with the factor (1 - x^j) removed. Column 0 is the pentagonal sequence
itself and row 0 is a row of ones.
"""

import numpy as np

from pentasigma import build_window, scan_property, sigma0

# a small window, rows 0..12 and columns 0..12
w = build_window(12, 12)
print(w.entries)

# column 0 is the pentagonal sequence
print(w.entries[:, 0].tolist())
print([sigma0(i) for i in range(13)])

# above the diagonal every column repeats column 0
upper = np.triu_indices(13, k=1)
print(np.all(w.entries[upper] == w.entries[upper[0], 0]))

# region labels: U above the diagonal, L1 down to the border i = 2j, L2 below
for row in w.region_labels()[:7]:
    print(" ".join(f"{label:>2}" for label in row[:7]))

# entries with |value| >= 2 never appear above the diagonal
big = np.argwhere(np.abs(w.entries) >= 2)
print([(int(i), int(j)) for i, j in big if j > 0])

# the property scanners on a larger window
window = build_window(256, 256)
for prop in ("P2_4", "P2_5", "P2_6", "P2_7", "P2_9"):
    report = scan_property(window, prop)
    print(prop, "holds" if report.passed else f"{len(report.violations)} violation(s): {report.violations[:3]}")
