"""
Checking eigenvalue bounds
==========================

Evaluate the Kneser, Brouwer and G(4t, 2t, t) statements on exact spectra,
then scan the normalized ratio for G(n, alpha n + f_r, alpha^2 n + f_s).
"""

from fractions import Fraction

from johnson_spectra import scan_bounds, verify_bound

###############################################################################
# Kneser graphs G(n, r, 0): lambda = r/(n - r) * d exactly.
for n, r in [(5, 2), (9, 3), (20, 6)]:
    rep = verify_bound((n, r, 0), "lovasz")
    print(rep.params, rep.actual, rep.predicted, rep.claim_holds)

###############################################################################
# Brouwer's regime (r - s)(n - 1) >= r(n - r): lambda sits at i = 1.
rep = verify_bound((20, 5, 1), "brouwer")
print(rep.params, "applicable", rep.applicable, "ratio", rep.ratio, "argmax", rep.argmax)
print(verify_bound((8, 4, 2), "brouwer").applicable)

###############################################################################
# G(4t, 2t, t): |E_t(2)| has a closed form; the scan also reports from which
# t onward lambda is carried by i = 2.
res = scan_bounds([(4 * t, 2 * t, t) for t in range(2, 16)], "t4")
print("closed form holds:", all(r.identity_holds for r in res.reports))
print("lambda = |E_t(2)| from", res.threshold, "on")

###############################################################################
# With r fixed and n growing, lambda / ((s/r) d) creeps toward 1.
res = scan_bounds([(n, 3, 1) for n in range(10, 61, 5)], "t5.1")
for rep in res.reports:
    print(rep.params, f"{float(rep.ratio):.4f}")

###############################################################################
# The normalized ratio rho = lambda n / (d max{1, |f_s - 2 alpha f_r|, f_r^2/n})
# along two families; it stays bounded.
half = scan_bounds([(4 * t, 2 * t, t) for t in range(2, 40)], "main", Fraction(1, 2))
third = scan_bounds([(3 * m, m, -(-m // 3)) for m in range(6, 40)], "main", Fraction(1, 3))
print("max rho, alpha = 1/2:", half.max_ratio)
print("max rho, alpha = 1/3:", third.max_ratio)
