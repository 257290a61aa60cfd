"""Reader and writer for Web-of-Science-style tagged plain-text exports.

The format is line oriented.  Each field starts with a two-character tag
in columns 1-2 (``PT``, ``AU``, ``PY``, ``UT``, ...) followed by a space
and the value; additional values continue on lines indented by exactly
three spaces.  A record ends at a line reading ``ER``, the file ends at
``EF``.  Example record:

    PT J
    AU Smith, A
       Jones, B
    PY 2015
    UT WOS:000123456700001
    ER

Only ``AU`` (authors), ``PY`` (publication year) and ``UT`` (accession
id) are interpreted; everything else is carried past.  Blocks missing a
usable ``AU`` or ``PY`` are skipped and tallied rather than aborting the
whole file, so one mangled export block cannot kill a batch run.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass
from typing import TextIO, Union

from .corpus import YEAR_MAX, YEAR_MIN, Corpus, PublicationRecord
from .errors import EmptyCorpusError

_TAG_RE = re.compile(r"^[A-Z][A-Z0-9](?: |$)")
_CONTINUATION = "   "

RECORD_END = "ER"
FILE_END = "EF"


@dataclass(frozen=True)
class WosParseResult:
    """A parsed corpus plus the tally of skipped (unusable) blocks."""

    corpus: Corpus
    skipped: int
    skipped_lines: tuple[int, ...]  # starting line of each skipped block


def parse_wos_export(source: Union[str, TextIO], provenance: str = "") -> WosParseResult:
    """Parse a tagged export into a corpus.

    ``source`` may be the text itself or a readable text stream.  Records
    with at least one ``AU`` value and a parseable ``PY`` year become
    :class:`PublicationRecord` objects; the ``UT`` value is used as the
    record id when present, otherwise a sequential synthetic id is
    assigned.  Raises :class:`EmptyCorpusError` if nothing parses,
    naming the first malformed block's line number when there is one.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = source

    records: list[PublicationRecord] = []
    skipped_lines: list[int] = []
    seen_ids: set[str] = set()
    synthetic = 0

    fields: dict[str, list[str]] = {}
    current_tag: str | None = None
    block_start: int | None = None

    def finalize(start_line: int) -> None:
        nonlocal synthetic
        authors = [a for a in fields.get("AU", []) if a.strip()]
        year = _parse_year(fields.get("PY", []))
        if not authors or year is None:
            skipped_lines.append(start_line)
            return
        ut = next((v.strip() for v in fields.get("UT", []) if v.strip()), None)
        if ut is None or ut in seen_ids:
            synthetic += 1
            rid = f"rec{synthetic:06d}"
            while rid in seen_ids:
                synthetic += 1
                rid = f"rec{synthetic:06d}"
        else:
            rid = ut
        seen_ids.add(rid)
        records.append(PublicationRecord(rid, year, tuple(authors)))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            current_tag = None
            continue
        if line.startswith(_CONTINUATION) and not line[:2].strip():
            if current_tag is not None and block_start is not None:
                fields.setdefault(current_tag, []).append(line.strip())
            continue
        if not _TAG_RE.match(line):
            # stray unindented text; treat as part of the current field
            if current_tag is not None and block_start is not None:
                fields.setdefault(current_tag, []).append(line.strip())
            continue
        tag, value = line[:2], line[3:].strip()
        if tag == FILE_END:
            break
        if tag == RECORD_END:
            if block_start is not None:
                finalize(block_start)
            fields, current_tag, block_start = {}, None, None
            continue
        if block_start is None:
            block_start = lineno
        current_tag = tag
        fields.setdefault(tag, []).append(value)

    if block_start is not None and fields:
        # trailing block without an ER terminator is malformed
        skipped_lines.append(block_start)

    if not records:
        if skipped_lines:
            raise EmptyCorpusError(
                "no parseable records; first malformed block starts here",
                line=skipped_lines[0])
        raise EmptyCorpusError("no records found in input")

    return WosParseResult(
        corpus=Corpus(tuple(records), provenance=provenance),
        skipped=len(skipped_lines),
        skipped_lines=tuple(skipped_lines),
    )


def parse_wos_file(path, provenance: str | None = None) -> WosParseResult:
    """Parse a tagged export file (UTF-8)."""
    with io.open(path, "r", encoding="utf-8") as fh:
        return parse_wos_export(fh, provenance=provenance if provenance is not None else str(path))


def write_wos_export(corpus: Corpus) -> str:
    """Serialize a corpus back to the tagged format.

    Output is deterministic and round-trips through
    :func:`parse_wos_export` (ids, years, author lists and order are
    preserved).
    """
    lines: list[str] = []
    for record in corpus.records:
        lines.append("PT J")
        for i, author in enumerate(record.authors):
            lines.append(f"AU {author}" if i == 0 else f"{_CONTINUATION}{author}")
        lines.append(f"PY {record.year}")
        lines.append(f"UT {record.id}")
        lines.append(RECORD_END)
        lines.append("")
    lines.append(FILE_END)
    return "\n".join(lines) + "\n"


def _parse_year(values: list[str]) -> int | None:
    for v in values:
        v = v.strip()
        if v:
            try:
                year = int(v)
            except ValueError:
                return None
            return year if YEAR_MIN <= year <= YEAR_MAX else None
    return None
