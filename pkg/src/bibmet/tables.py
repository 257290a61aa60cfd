"""Tabular count data: yearly output, authorship pattern, author productivity.

These three immutable types are the common currency of the toolkit.  Each
one round-trips through a small CSV dialect (comma separated, ``#`` comment
lines ignored, LF line endings, rows in ascending key order):

* :class:`YearlySeries`        header ``year,papers``
* :class:`AuthorshipMatrix`    header ``authors,<year>,<year>,...``
* :class:`ProductivityDistribution`  header ``x,y``

In the matrix dialect the first column holds the author-count class; a
trailing ``+`` on the last class label (``10+``) marks a collapsed top
class that absorbs all larger author counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Mapping, Union

from .errors import ParseError

TableShape = Literal["yearly", "matrix", "distribution"]


@dataclass(frozen=True)
class YearlySeries:
    """Publication counts per year, with cumulative and percentage views."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("a yearly series needs at least one entry")
        prev = None
        for year, papers in self.entries:
            if not isinstance(year, int) or not isinstance(papers, int):
                raise ValueError("years and counts must be integers")
            if papers < 0:
                raise ValueError(f"negative paper count for {year}")
            if prev is not None and year <= prev:
                raise ValueError("years must be strictly increasing")
            prev = year

    @property
    def years(self) -> tuple[int, ...]:
        return tuple(y for y, _ in self.entries)

    @property
    def papers(self) -> tuple[int, ...]:
        return tuple(p for _, p in self.entries)

    @property
    def total(self) -> int:
        return sum(self.papers)

    @property
    def cumulative(self) -> tuple[int, ...]:
        out, acc = [], 0
        for _, p in self.entries:
            acc += p
            out.append(acc)
        return tuple(out)

    @property
    def percentages(self) -> tuple[float, ...]:
        """Per-year share of the total, in percent."""
        total = self.total
        if total == 0:
            return tuple(0.0 for _ in self.entries)
        return tuple(100.0 * p / total for p in self.papers)

    def count(self, year: int) -> int:
        for y, p in self.entries:
            if y == year:
                return p
        raise KeyError(year)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def to_csv(self) -> str:
        lines = ["year,papers"]
        lines += [f"{y},{p}" for y, p in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "YearlySeries":
        return _parse_yearly(text)


@dataclass(frozen=True)
class AuthorshipMatrix:
    """Counts of papers by author-count class and year.

    ``counts[i][k]`` is the number of papers in year ``years[k]`` written
    by exactly ``classes[i]`` authors; when ``collapsed`` is true the last
    class means "``cap`` or more authors" and ``cap == classes[-1]``.
    """

    classes: tuple[int, ...]
    years: tuple[int, ...]
    counts: tuple[tuple[int, ...], ...]
    collapsed: bool = False
    cap: int = 10

    def __post_init__(self):
        if not self.classes or not self.years:
            raise ValueError("matrix needs at least one class and one year")
        if any(not isinstance(j, int) or j < 1 for j in self.classes):
            raise ValueError("author-count classes must be integers >= 1")
        if list(self.classes) != sorted(set(self.classes)):
            raise ValueError("classes must be strictly increasing")
        if list(self.years) != sorted(set(self.years)):
            raise ValueError("years must be strictly increasing")
        if self.cap < 2:
            raise ValueError("cap must be >= 2")
        if self.collapsed and self.classes[-1] != self.cap:
            raise ValueError("collapsed matrix must end at the cap class")
        if len(self.counts) != len(self.classes):
            raise ValueError("one count row per class required")
        for row in self.counts:
            if len(row) != len(self.years):
                raise ValueError("one count per year required in each row")
            if any(not isinstance(c, int) or c < 0 for c in row):
                raise ValueError("counts must be non-negative integers")

    def year_index(self, year: int) -> int:
        try:
            return self.years.index(year)
        except ValueError:
            raise KeyError(year) from None

    def year_total(self, year: int) -> int:
        k = self.year_index(year)
        return sum(row[k] for row in self.counts)

    def class_total(self, j: int) -> int:
        i = self.classes.index(j)
        return sum(self.counts[i])

    @property
    def grand_total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def class_counts(self, year: int | None = None) -> dict[int, int]:
        """Mapping class -> paper count, for one year or pooled over all."""
        if year is None:
            return {j: self.class_total(j) for j in self.classes}
        k = self.year_index(year)
        return {j: self.counts[i][k] for i, j in enumerate(self.classes)}

    def author_slots(self, year: int | None = None) -> int:
        """Total author slots (sum of class * count) using nominal classes.

        For a collapsed matrix this undercounts true slots, since papers in
        the top class contribute only ``cap`` each.
        """
        counts = self.class_counts(year)
        return sum(j * c for j, c in counts.items())

    def yearly_series(self) -> YearlySeries:
        return YearlySeries(tuple((y, self.year_total(y)) for y in self.years))

    def drop_empty_years(self) -> "AuthorshipMatrix":
        """Remove year columns with no papers (zero-filled gap years)."""
        keep = [k for k, y in enumerate(self.years) if self.year_total(y) > 0]
        if len(keep) == len(self.years):
            return self
        if not keep:
            raise ValueError("matrix has no papers in any year")
        years = tuple(self.years[k] for k in keep)
        counts = tuple(tuple(row[k] for k in keep) for row in self.counts)
        return AuthorshipMatrix(self.classes, years, counts,
                                collapsed=self.collapsed, cap=self.cap)

    def collapse(self, cap: int) -> "AuthorshipMatrix":
        """Fold all classes >= ``cap`` into a single top class."""
        if cap < 2:
            raise ValueError("cap must be >= 2")
        if self.collapsed and cap > self.cap:
            raise ValueError(
                f"cannot expand a matrix already collapsed at {self.cap} to {cap}")
        classes = tuple(range(1, cap + 1))
        rows = []
        for j in classes:
            if j < cap:
                if j in self.classes:
                    rows.append(self.counts[self.classes.index(j)])
                else:
                    rows.append(tuple(0 for _ in self.years))
            else:
                top = [0] * len(self.years)
                for i, jj in enumerate(self.classes):
                    if jj >= cap:
                        for k, c in enumerate(self.counts[i]):
                            top[k] += c
                rows.append(tuple(top))
        return AuthorshipMatrix(classes, self.years, tuple(rows),
                                collapsed=True, cap=cap)

    def to_csv(self) -> str:
        header = "authors," + ",".join(str(y) for y in self.years)
        lines = [header]
        for i, j in enumerate(self.classes):
            label = f"{j}+" if self.collapsed and i == len(self.classes) - 1 else str(j)
            lines.append(label + "," + ",".join(str(c) for c in self.counts[i]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "AuthorshipMatrix":
        return _parse_matrix(text)


@dataclass(frozen=True)
class ProductivityDistribution:
    """Author-productivity histogram: ``y`` authors wrote exactly ``x`` papers."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("a productivity distribution needs at least one pair")
        prev = None
        for x, y in self.pairs:
            if not isinstance(x, int) or not isinstance(y, int):
                raise ValueError("x and y must be integers")
            if x < 1:
                raise ValueError("papers-per-author count x must be >= 1")
            if y < 0:
                raise ValueError("author count y must be >= 0")
            if prev is not None and x <= prev:
                raise ValueError("x values must be strictly increasing")
            prev = x

    @property
    def xs(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def ys(self) -> tuple[int, ...]:
        return tuple(y for _, y in self.pairs)

    @property
    def total_authors(self) -> int:
        return sum(self.ys)

    @property
    def author_slots(self) -> int:
        """Total papers-per-author occurrences (sum of x * y)."""
        return sum(x * y for x, y in self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def to_csv(self) -> str:
        lines = ["x,y"]
        lines += [f"{x},{y}" for x, y in self.pairs]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "ProductivityDistribution":
        return _parse_distribution(text)


CountTable = Union[YearlySeries, AuthorshipMatrix, ProductivityDistribution]


def parse_counts_csv(text: str, shape: TableShape) -> CountTable:
    """Parse a CSV fixture of the declared shape.

    ``shape`` selects the expected header: ``yearly`` (``year,papers``),
    ``matrix`` (``authors,<year>,...``) or ``distribution`` (``x,y``).
    Raises :class:`ParseError` with the offending line number on header
    mismatch, non-integer cells, or out-of-order keys.
    """
    if shape == "yearly":
        return _parse_yearly(text)
    if shape == "matrix":
        return _parse_matrix(text)
    if shape == "distribution":
        return _parse_distribution(text)
    raise ValueError(f"unknown table shape: {shape!r}")


def write_counts_csv(table: CountTable) -> str:
    """Serialize any of the three table types to its CSV dialect."""
    return table.to_csv()


def _rows(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.lstrip("\ufeff").strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, [cell.strip() for cell in line.split(",")]


def _int_cell(cell: str, lineno: int, what: str) -> int:
    try:
        return int(cell)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {cell!r}", line=lineno) from None


def _parse_yearly(text: str) -> YearlySeries:
    rows = _rows(text)
    lineno, header = _header(rows, "year,papers")
    entries = []
    prev = None
    for lineno, cells in rows:
        if len(cells) != 2:
            raise ParseError(f"expected 2 cells, got {len(cells)}", line=lineno)
        year = _int_cell(cells[0], lineno, "year")
        papers = _int_cell(cells[1], lineno, "paper count")
        if papers < 0:
            raise ParseError(f"negative paper count {papers}", line=lineno)
        if prev is not None and year <= prev:
            raise ParseError(f"year {year} out of increasing order", line=lineno)
        prev = year
        entries.append((year, papers))
    if not entries:
        raise ParseError("no data rows", line=lineno)
    return YearlySeries(tuple(entries))


def _parse_matrix(text: str) -> AuthorshipMatrix:
    rows = _rows(text)
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise ParseError("empty input, expected 'authors,<year>,...' header", line=1) from None
    if len(header) < 2 or header[0] != "authors":
        raise ParseError("expected header 'authors,<year>,...'", line=lineno)
    years = tuple(_int_cell(c, lineno, "header year") for c in header[1:])
    if list(years) != sorted(set(years)):
        raise ParseError("header years must be strictly increasing", line=lineno)

    classes: list[int] = []
    counts: list[tuple[int, ...]] = []
    collapsed_at: int | None = None
    for lineno, cells in rows:
        if collapsed_at is not None:
            raise ParseError("collapsed class marker '+' must be on the last row",
                             line=lineno)
        if len(cells) != len(years) + 1:
            raise ParseError(
                f"expected {len(years) + 1} cells, got {len(cells)}", line=lineno)
        label = cells[0]
        if label.endswith("+"):
            collapsed_at = lineno
            label = label[:-1]
        j = _int_cell(label, lineno, "author-count class")
        if j < 1:
            raise ParseError(f"author-count class {j} must be >= 1", line=lineno)
        if classes and j <= classes[-1]:
            raise ParseError(f"class {j} out of increasing order", line=lineno)
        row = tuple(_int_cell(c, lineno, "count") for c in cells[1:])
        if any(c < 0 for c in row):
            raise ParseError("negative count", line=lineno)
        classes.append(j)
        counts.append(row)
    if not classes:
        raise ParseError("no data rows", line=lineno)
    collapsed = collapsed_at is not None
    if collapsed and classes[-1] < 2:
        raise ParseError("collapsed top class must be >= 2", line=collapsed_at)
    cap = classes[-1] if collapsed else max(2, classes[-1])
    return AuthorshipMatrix(tuple(classes), years, tuple(counts),
                            collapsed=collapsed, cap=cap)


def _parse_distribution(text: str) -> ProductivityDistribution:
    rows = _rows(text)
    lineno, header = _header(rows, "x,y")
    pairs = []
    prev = None
    for lineno, cells in rows:
        if len(cells) != 2:
            raise ParseError(f"expected 2 cells, got {len(cells)}", line=lineno)
        x = _int_cell(cells[0], lineno, "x")
        y = _int_cell(cells[1], lineno, "y")
        if x < 1:
            raise ParseError(f"x must be >= 1, got {x}", line=lineno)
        if y < 0:
            raise ParseError(f"y must be >= 0, got {y}", line=lineno)
        if prev is not None and x <= prev:
            raise ParseError(f"x {x} out of increasing order", line=lineno)
        prev = x
        pairs.append((x, y))
    if not pairs:
        raise ParseError("no data rows", line=lineno)
    return ProductivityDistribution(tuple(pairs))


def _header(rows: Iterator[tuple[int, list[str]]], expected: str) -> tuple[int, list[str]]:
    try:
        lineno, cells = next(rows)
    except StopIteration:
        raise ParseError(f"empty input, expected {expected!r} header", line=1) from None
    if cells != expected.split(","):
        raise ParseError(
            f"expected header {expected!r}, got {','.join(cells)!r}", line=lineno)
    return lineno, cells
