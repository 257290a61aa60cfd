"""Publication records and the count tables built from them.

A :class:`Corpus` is an immutable bag of :class:`PublicationRecord`
objects.  Every downstream metric is a pure function of counts, so merge
order of corpora never affects results; only record ids must stay unique.
No attempt is made to disambiguate author names across records: a paper
with j authors contributes j author slots, and the same name string on
two papers counts as one author with two papers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import DomainError
from .tables import AuthorshipMatrix, YearlySeries

YEAR_MIN = 1000
YEAR_MAX = 3000


def _normalize_authors(authors) -> tuple[str, ...]:
    # trim, drop empties, collapse duplicates (first occurrence wins)
    seen = {}
    for name in authors:
        name = str(name).strip()
        if name and name not in seen:
            seen[name] = None
    return tuple(seen)


@dataclass(frozen=True)
class PublicationRecord:
    """One publication: an opaque id, a year, and an ordered author list."""

    id: str
    year: int
    authors: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "authors", _normalize_authors(self.authors))
        if not self.id:
            raise ValueError("record id must be non-empty")
        if not isinstance(self.year, int) or not YEAR_MIN <= self.year <= YEAR_MAX:
            raise ValueError(f"year {self.year!r} outside [{YEAR_MIN}, {YEAR_MAX}]")
        if not self.authors:
            raise ValueError(f"record {self.id}: at least one author required")

    @property
    def author_count(self) -> int:
        return len(self.authors)


@dataclass(frozen=True)
class Corpus:
    """An immutable collection of publication records with unique ids."""

    records: tuple[PublicationRecord, ...]
    provenance: str = ""

    def __post_init__(self):
        ids = [r.id for r in self.records]
        if len(set(ids)) != len(ids):
            dup = next(i for i, c in Counter(ids).items() if c > 1)
            raise ValueError(f"duplicate record id: {dup!r}")

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def author_slots(self) -> int:
        """Total (paper, author-position) occurrences."""
        return sum(r.author_count for r in self.records)

    def merge(self, *others: "Corpus", provenance: str | None = None) -> "Corpus":
        records = self.records
        sources = [self.provenance]
        for other in others:
            records = records + other.records
            sources.append(other.provenance)
        if provenance is None:
            provenance = " + ".join(s for s in sources if s)
        return Corpus(records, provenance=provenance)


def build_yearly_series(corpus: Corpus) -> YearlySeries:
    """Count papers per year, zero-filling gap years inside the span."""
    if not corpus.records:
        raise DomainError("cannot build a yearly series from an empty corpus")
    by_year = Counter(r.year for r in corpus.records)
    lo, hi = min(by_year), max(by_year)
    return YearlySeries(tuple((y, by_year.get(y, 0)) for y in range(lo, hi + 1)))


def build_authorship_matrix(corpus: Corpus, cap: int = 10,
                            collapse: bool = True) -> AuthorshipMatrix:
    """Tabulate papers by author-count class and year.

    With ``collapse`` enabled, papers with ``cap`` or more authors land in
    the top class; otherwise classes extend to the largest author count
    present and ``cap`` is ignored.
    """
    if cap < 2:
        raise DomainError("cap must be >= 2")
    if not corpus.records:
        raise DomainError("cannot build an authorship matrix from an empty corpus")
    cells = Counter()
    max_j = 1
    for r in corpus.records:
        j = r.author_count
        max_j = max(max_j, j)
        if collapse and j > cap:
            j = cap
        cells[(j, r.year)] += 1
    lo = min(r.year for r in corpus.records)
    hi = max(r.year for r in corpus.records)
    years = tuple(range(lo, hi + 1))
    top = cap if collapse else max_j
    classes = tuple(range(1, top + 1))
    counts = tuple(
        tuple(cells.get((j, y), 0) for y in years) for j in classes
    )
    return AuthorshipMatrix(classes, years, counts, collapsed=collapse,
                            cap=cap if collapse else max(2, top))
