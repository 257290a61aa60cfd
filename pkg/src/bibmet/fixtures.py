"""Bundled reference dataset: brain-concussion research output, 2008-2017.

The package ships the published count tables of a Web-of-Science search
on brain concussion (8486 records, 41264 author slots).  The original
record-level export is not redistributable, so these printed tables are
the ground truth the test suite reproduces.

Two caveats carried over from the source tabulation:

* The authorship matrix totals 7482 papers (its 2017 column was
  truncated to 494), which does not reconcile with the yearly table's
  8486.  Each table is self-consistent and is used on its own terms.
* The productivity distribution exists in two variants: the counted one
  (113 authors with 9 papers, total 23767) and the one the source's
  log-log regression actually used (133 at x = 9).  See
  :func:`author_productivity_regression`.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .tables import AuthorshipMatrix, ProductivityDistribution, YearlySeries

YEARLY = "concussion_yearly.csv"
AUTHORSHIP = "concussion_authorship.csv"
PRODUCTIVITY = "concussion_author_productivity.csv"
PRODUCTIVITY_REGRESSION = "concussion_author_productivity_regression.csv"

#: Cap used when collapsing the authorship matrix for collaboration metrics.
DEFAULT_CAP = 10


def fixture_text(name: str) -> str:
    return resources.files("bibmet.data").joinpath(name).read_text(encoding="utf-8")


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture (for CLI-style consumption)."""
    return Path(str(resources.files("bibmet.data").joinpath(name)))


def yearly_counts() -> YearlySeries:
    """Publications per year (totals 8486 over 2008-2017)."""
    return YearlySeries.from_csv(fixture_text(YEARLY))


def authorship_matrix() -> AuthorshipMatrix:
    """Full papers-by-author-count matrix (classes 1..50, total 7482)."""
    return AuthorshipMatrix.from_csv(fixture_text(AUTHORSHIP))


def collaboration_matrix(cap: int = DEFAULT_CAP) -> AuthorshipMatrix:
    """The authorship matrix with classes >= ``cap`` folded together."""
    return authorship_matrix().collapse(cap)


def author_productivity() -> ProductivityDistribution:
    """Counted productivity distribution (23767 authors)."""
    return ProductivityDistribution.from_csv(fixture_text(PRODUCTIVITY))


def author_productivity_regression() -> ProductivityDistribution:
    """Productivity distribution as used by the source's regression.

    Identical to :func:`author_productivity` except at x = 9, where the
    published regression's log value implies a count of 133 rather than
    the printed 113.  Fitting this variant reproduces the published
    regression sums and the exponent 1.9691.
    """
    return ProductivityDistribution.from_csv(fixture_text(PRODUCTIVITY_REGRESSION))
