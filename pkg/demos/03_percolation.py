"""
Giant component in random subgraphs
===================================

Keep each edge of G(12, 6, 3) with probability c/d and watch the largest
component appear once c passes 1.
"""

import math

from johnson_spectra import alpha_bar, predicted_fraction, threshold_scan

###############################################################################
# For c > 1 the predicted giant share is 1 - abar/c, where abar < 1 solves
# x e^{-x} = c e^{-c}.
for c in (1.1, 1.5, 2.0, 3.0):
    print(f"c={c}: abar={alpha_bar(c):.6f}, predicted share={predicted_fraction(c):.4f}")

###############################################################################
# Simulate. Trials reuse the same random stream at every c, so the kept edge
# sets are nested and the curve is monotone.
rows = threshold_scan((12, 6, 3), [0.5, 0.8, 1.0, 1.2, 1.5, 2.0, 3.0], trials=20, seed=7)
N = rows[0].vertex_count
print(f"N = {N}, d = {rows[0].degree}, lambda/d = {rows[0].lambda_over_d}, ln N = {math.log(N):.2f}")
for row in rows:
    print(f"c={row.c}: mean L1/N = {row.mean_fraction:.3f} +- {row.std_fraction:.3f}"
          f"  predicted {row.predicted:.3f}  max L2 = {max(row.second_sizes)}")
