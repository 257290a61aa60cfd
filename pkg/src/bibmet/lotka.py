"""Author-productivity power-law analysis.

Lotka's law states that the number of authors who write exactly x papers
falls off as y = C / x^n, with the canonical exponent n = 2.  This module
estimates the exponent by ordinary least squares in log10-log10 space,
computes the normalizing constant C by truncated zeta summation, and
checks goodness of fit with a one-sample Kolmogorov-Smirnov test on the
cumulative proportions.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, replace

from .corpus import Corpus
from .errors import DomainError
from .tables import ProductivityDistribution

#: Critical-value coefficients for the one-sample K-S test, coeff / sqrt(N).
KS_COEFFICIENTS = {0.20: 1.07, 0.15: 1.14, 0.10: 1.22, 0.05: 1.36, 0.01: 1.63}

CRITICAL_MODES = ("standard", "paper")


def productivity_distribution(corpus: Corpus) -> ProductivityDistribution:
    """Histogram of papers-per-author over the corpus.

    Author identity is the exact name string; the sum of x * y_x equals
    the corpus's total author slots.
    """
    if not corpus.records:
        raise DomainError("cannot build a productivity distribution from an empty corpus")
    papers_by_author = Counter()
    for record in corpus.records:
        for name in record.authors:
            papers_by_author[name] += 1
    histogram = Counter(papers_by_author.values())
    return ProductivityDistribution(tuple(sorted(histogram.items())))


@dataclass(frozen=True)
class LotkaFit:
    """Least-squares power-law fit in log10 space.

    ``slope`` keeps its sign; ``n`` is its magnitude.  The regression
    sums are retained so the fit can be audited against hand-computed
    tables.  ``c`` is the normalizing constant, filled in separately by
    :func:`lotka_constant`.
    """

    n: float
    slope: float
    sum_x: float
    sum_y: float
    sum_xy: float
    sum_x2: float
    n_points: int
    points_used: tuple[int, ...]
    warnings: tuple[str, ...] = ()
    c: float | None = None

    def with_constant(self, c: float) -> "LotkaFit":
        return replace(self, c=c)

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "slope": self.slope,
            "c": self.c,
            "sums": {
                "sum_x": self.sum_x,
                "sum_y": self.sum_y,
                "sum_xy": self.sum_xy,
                "sum_x2": self.sum_x2,
                "n_points": self.n_points,
            },
            "points_used": list(self.points_used),
            "warnings": list(self.warnings),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def fit_lotka_least_squares(dist: ProductivityDistribution,
                            include_top_class: bool = True) -> LotkaFit:
    """Fit the exponent by OLS on (log10 x, log10 y).

    Zero-count pairs are excluded (their log is undefined).  When the
    distribution's largest x is a collapsed "x or more" class, pass
    ``include_top_class=False`` to drop it, which is standard practice;
    the default keeps it as its nominal x.
    """
    pairs = list(dist.pairs)
    if not include_top_class:
        pairs = pairs[:-1]
    pairs = [(x, y) for x, y in pairs if y > 0]
    if len(pairs) < 2:
        raise DomainError("power-law fit needs at least two distinct x values "
                          "with nonzero counts; regression is singular")
    xs = [math.log10(x) for x, _ in pairs]
    ys = [math.log10(y) for _, y in pairs]
    m = len(pairs)
    sx = math.fsum(xs)
    sy = math.fsum(ys)
    sxy = math.fsum(a * b for a, b in zip(xs, ys))
    sx2 = math.fsum(a * a for a in xs)
    denominator = m * sx2 - sx * sx
    if denominator == 0:
        raise DomainError("all x values identical; regression is singular")
    slope = (m * sxy - sx * sy) / denominator
    notes = []
    if slope >= 0:
        notes.append("non-decreasing frequencies: slope is not negative, "
                     "the data do not look like a decaying power law")
    return LotkaFit(
        n=abs(slope), slope=slope,
        sum_x=sx, sum_y=sy, sum_xy=sxy, sum_x2=sx2,
        n_points=m, points_used=tuple(x for x, _ in pairs),
        warnings=tuple(notes),
    )


def lotka_constant(n: float, method: str = "zeta_truncated",
                   truncation: int = 20) -> float:
    """Normalizing constant C = 1 / sum_{x>=1} x^(-n).

    The infinite sum is evaluated as an explicit sum of the first
    ``truncation - 1`` terms plus an Euler-Maclaurin estimate of the
    tail:

        sum_{x=1}^{P-1} x^(-n) + P^(1-n)/(n-1) + P^(-n)/2
            + (n/24) (P-1)^(-(n+1))

    with P = ``truncation``.  Requires n > 1 (the series diverges at or
    below 1).
    """
    if method != "zeta_truncated":
        raise DomainError(f"unknown method {method!r}; expected 'zeta_truncated'")
    if n <= 1:
        raise DomainError(f"normalizing constant undefined for exponent {n} <= 1")
    if truncation < 2:
        raise DomainError("truncation must be >= 2")
    p = truncation
    head = math.fsum(x ** (-n) for x in range(1, p))
    tail = p ** (1 - n) / (n - 1) + 0.5 * p ** (-n) + (n / 24.0) * (p - 1) ** (-(n + 1))
    return 1.0 / (head + tail)


def expected_frequencies(n: float, c: float, xs) -> tuple[float, ...]:
    """Expected proportion of authors at each productivity: c / x^n."""
    if not 0 < c <= 1:
        raise DomainError(f"constant c must be in (0, 1], got {c}")
    if n <= 0:
        raise DomainError(f"exponent must be positive, got {n}")
    out = []
    for x in xs:
        if x < 1:
            raise DomainError(f"productivity x must be >= 1, got {x}")
        out.append(c * x ** (-n))
    return tuple(out)


@dataclass(frozen=True)
class KSRow:
    x: int
    observed: int
    observed_prop: float
    observed_cum: float
    expected_prop: float
    expected_cum: float
    abs_diff: float


@dataclass(frozen=True)
class KSReport:
    """One-sample K-S comparison of observed and expected cumulative shares."""

    rows: tuple[KSRow, ...]
    d_max: float
    x_at_dmax: int
    critical_value: float
    alpha: float
    mode: str
    n: float
    c: float
    total_authors: int

    @property
    def verdict(self) -> str:
        return "fits" if self.d_max <= self.critical_value else "rejected"

    def to_csv(self) -> str:
        lines = [
            f"# n={self.n:.6f} c={self.c:.6f} alpha={self.alpha} mode={self.mode}",
            f"# d_max={self.d_max:.6f} at x={self.x_at_dmax} "
            f"critical={self.critical_value:.6f} verdict={self.verdict}",
            "x,y,observed,observed_cum,expected,expected_cum,diff",
        ]
        for r in self.rows:
            lines.append(f"{r.x},{r.observed},{r.observed_prop:.6f},"
                         f"{r.observed_cum:.6f},{r.expected_prop:.6f},"
                         f"{r.expected_cum:.6f},{r.abs_diff:.6f}")
        return "\n".join(lines) + "\n"


def ks_critical_value(total_authors: int, alpha: float = 0.01,
                      mode: str = "standard", n: float | None = None) -> float:
    """Critical deviation for the one-sample K-S test.

    ``standard`` uses the tabulated large-sample coefficients
    (coeff(alpha) / sqrt(N)); ``paper`` divides the fitted exponent by
    sqrt(N), a nonstandard convention kept for reproducing legacy
    analyses.
    """
    if total_authors <= 0:
        raise DomainError("critical value needs a positive author count")
    coeff = _ks_coefficient(alpha)
    if mode == "standard":
        return coeff / math.sqrt(total_authors)
    if mode == "paper":
        if n is None or n <= 0:
            raise DomainError("paper-mode critical value needs a positive exponent")
        return n / math.sqrt(total_authors)
    raise DomainError(f"unknown critical-value mode {mode!r}; "
                      f"expected one of {CRITICAL_MODES}")


def ks_test(dist: ProductivityDistribution, n: float, c: float,
            alpha: float = 0.01, mode: str = "standard") -> KSReport:
    """Compare observed and expected cumulative productivity shares.

    The distribution is re-expressed on the contiguous integer grid
    1..max(x) (absent x values contribute zero observed counts), so the
    maximum deviation does not depend on how the input was written down.
    """
    if n <= 1:
        raise DomainError(f"K-S test needs exponent > 1, got {n}")
    if not 0 < c <= 1:
        raise DomainError(f"constant c must be in (0, 1], got {c}")
    _ks_coefficient(alpha)  # validate early
    total = dist.total_authors
    if total <= 0:
        raise DomainError("K-S test needs a distribution with authors in it")

    observed = dict(dist.pairs)
    grid = range(1, max(dist.xs) + 1)
    rows = []
    obs_cum = 0.0
    exp_cum = 0.0
    d_max = -1.0
    x_at = grid[0]
    for x in grid:
        y = observed.get(x, 0)
        obs_prop = y / total
        obs_cum += obs_prop
        exp_prop = c * x ** (-n)
        exp_cum += exp_prop
        diff = abs(obs_cum - exp_cum)
        rows.append(KSRow(x, y, obs_prop, obs_cum, exp_prop, exp_cum, diff))
        if diff > d_max:
            d_max = diff
            x_at = x
    critical = ks_critical_value(total, alpha=alpha, mode=mode, n=n)
    return KSReport(rows=tuple(rows), d_max=d_max, x_at_dmax=x_at,
                    critical_value=critical, alpha=alpha, mode=mode,
                    n=n, c=c, total_authors=total)


def _ks_coefficient(alpha: float) -> float:
    for level, coeff in KS_COEFFICIENTS.items():
        if math.isclose(alpha, level, rel_tol=0, abs_tol=1e-9):
            return coeff
    supported = ", ".join(str(a) for a in sorted(KS_COEFFICIENTS))
    raise DomainError(f"unsupported significance level {alpha}; "
                      f"supported: {supported}")
