"""
Lotka's law: fitting the productivity exponent and testing the fit
==================================================================

The productivity distribution says how many authors wrote exactly x
papers.  Lotka's law models it as y = C / x^n.  The exponent comes from
least squares on (log10 x, log10 y); C from a truncated zeta sum; the
Kolmogorov-Smirnov statistic compares observed and expected cumulative
shares.
"""

from bibmet import (
    fit_lotka_least_squares,
    fixtures,
    ks_critical_value,
    ks_test,
    lotka_constant,
)

dist = fixtures.author_productivity()
print(f"{dist.total_authors} authors; {dict(dist.pairs)[1]} wrote a single paper")

# Fit on the regression variant of the distribution (see the fixtures
# module for why it differs from the counted one at x = 9).
fit = fit_lotka_least_squares(fixtures.author_productivity_regression())
c = lotka_constant(fit.n)
print(f"fitted exponent n = {fit.n:.5f}, constant C = {c:.4f}")

# How far is the data from the fitted law, and from the canonical n = 2?
for n, constant, label in ((fit.n, c, "fitted"), (2.0, lotka_constant(2.0), "n = 2")):
    report = ks_test(dist, n, constant, alpha=0.01, mode="standard")
    print(f"{label}: D_max = {report.d_max:.4f} at x = {report.x_at_dmax}, "
          f"critical {report.critical_value:.4f} -> {report.verdict}")

# The legacy convention divides the exponent (not a tabulated
# coefficient) by sqrt(N); both are available.
print("critical values at alpha = 0.01:",
      f"standard {ks_critical_value(dist.total_authors, 0.01):.4f},",
      f"legacy {ks_critical_value(dist.total_authors, 0.01, mode='paper', n=fit.n):.4f}")
