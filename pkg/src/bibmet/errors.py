"""Exception types shared across the toolkit.

Two failure families matter to callers: malformed input data
(:class:`ParseError` and friends, CLI exit code 1) and mathematically
invalid requests such as a zero denominator or an exponent outside a
formula's domain (:class:`DomainError`, CLI exit code 2).
"""

from __future__ import annotations


class BibmetError(Exception):
    """Base class for all toolkit errors."""


class ParseError(BibmetError, ValueError):
    """Malformed input data.

    ``line`` is the 1-based line number in the input text where the
    problem was detected, when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EmptyCorpusError(ParseError):
    """An ingest produced no usable publication records."""


class DomainError(BibmetError, ValueError):
    """A metric was requested outside its mathematical domain."""
