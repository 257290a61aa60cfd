"""Command-line frontend.

Subcommands: ``ingest``, ``growth``, ``collab``, ``lotka``, ``ks``,
``report``, ``synth``.  Data goes to standard output (or ``--output``),
diagnostics to standard error.  Exit codes: 0 success, 1 unreadable or
malformed input, 2 a metric was requested outside its mathematical
domain, 64 usage errors.  Output never contains timestamps or color, so
identical input and flags produce byte-identical output (``NO_COLOR``
is therefore trivially honored).

Defaults mirror the legacy analysis conventions the bundled fixtures
come from: author-class cap 10 with collapsing on, ``paper`` RGR
convention, RGR averaging blocks of the first 4 entries and the rest,
alpha 0.01.  A ``--config`` file with ``key = value`` lines (keys named
after long flags) supplies defaults; command-line flags win.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import warnings
from pathlib import Path

from . import __version__
from .collab import PARTITIONS, authorship_pattern_report
from .corpus import Corpus, build_authorship_matrix, build_yearly_series
from .errors import DomainError, ParseError
from .growth import build_growth_report
from .lotka import (
    KSReport,
    fit_lotka_least_squares,
    ks_test,
    lotka_constant,
    productivity_distribution,
)
from .synth import PowerLawSpec, sample_corpus_from_spec, sample_productivity, spec_from_json
from .tables import AuthorshipMatrix, ProductivityDistribution, YearlySeries
from .wos import parse_wos_file, write_wos_export


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def entrypoint() -> None:
    sys.exit(main())


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _apply_config(argv)
        parser = _build_parser()
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 64
    except SystemExit as exc:  # --help / --version
        return 0 if exc.code in (None, 0) else 64

    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args) or 0
        for w in caught:
            print(f"bibmet: warning: {w.message}", file=sys.stderr)
        return code
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 64
    except DomainError as exc:
        print(f"bibmet: domain error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, OSError, UnicodeDecodeError, ValueError) as exc:
        # ValueError covers type-level validation of loaded data, e.g.
        # duplicate record ids when merging exports
        print(f"bibmet: input error: {exc}", file=sys.stderr)
        return 1


# ---------------------------------------------------------------------------
# configuration file

def _apply_config(argv: list[str]) -> list[str]:
    """Expand ``--config FILE`` into flags inserted after the subcommand.

    Config lines read ``key = value`` with keys spelled like the long
    flags (``convention = standard``); a value of ``true`` adds a bare
    switch, ``false`` omits it.  Explicit command-line flags override the
    config because they come later.
    """
    path = None
    rest: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token == "--config":
            if i + 1 >= len(argv):
                raise _UsageError("bibmet: --config needs a file argument")
            path = argv[i + 1]
            i += 2
            continue
        if token.startswith("--config="):
            path = token.split("=", 1)[1]
            i += 1
            continue
        rest.append(token)
        i += 1
    if path is None:
        return rest
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"bibmet: cannot read config file: {exc}") from exc
    flags: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise _UsageError(f"bibmet: config line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        flag = "--" + key.replace("_", "-")
        if value.lower() == "true":
            flags.append(flag)
        elif value.lower() == "false":
            continue
        else:
            flags.extend([flag, value])
    if not rest:
        return flags
    return [rest[0], *flags, *rest[1:]]


# ---------------------------------------------------------------------------
# parser construction

def _build_parser() -> _Parser:
    parser = _Parser(prog="bibmet",
                     description="Bibliometric growth, collaboration and "
                                 "author-productivity analysis.")
    parser.add_argument("--version", action="version", version=f"bibmet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_output(p):
        p.add_argument("--output", metavar="PATH",
                       help="write data here instead of standard output")

    p = sub.add_parser("ingest", help="parse tagged exports and emit a count table")
    p.add_argument("files", nargs="+", metavar="FILE", help="tagged .txt export(s)")
    p.add_argument("--emit", choices=["yearly", "matrix", "distribution", "wos"],
                   default="yearly", help="which table to emit (default yearly)")
    p.add_argument("--cap", type=int, default=10, help="author-class cap (default 10)")
    p.add_argument("--no-collapse", action="store_true",
                   help="do not fold author counts above the cap into one class")
    p.add_argument("--strict", action="store_true",
                   help="fail if any export block had to be skipped")
    p.add_argument("--source-comment", action="store_true",
                   help="prepend a '# source: ...' comment naming the inputs")
    add_output(p)
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("growth", help="growth ratios, RGR and doubling time")
    p.add_argument("--series", metavar="CSV", help="yearly counts (year,papers)")
    p.add_argument("--wos", nargs="+", metavar="FILE", help="tagged export(s)")
    _add_growth_flags(p)
    p.add_argument("--format", choices=["csv", "json", "markdown"], default="csv")
    add_output(p)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("collab", help="collaboration indices (CI, DC, CAI, CC, MCC)")
    p.add_argument("--matrix", metavar="CSV", help="authorship matrix (authors,<years>)")
    p.add_argument("--wos", nargs="+", metavar="FILE", help="tagged export(s)")
    _add_collab_flags(p)
    p.add_argument("--format", choices=["csv", "json", "markdown"], default="csv")
    add_output(p)
    p.set_defaults(func=_cmd_collab)

    p = sub.add_parser("lotka", help="least-squares power-law fit of author productivity")
    p.add_argument("--dist", metavar="CSV", help="productivity distribution (x,y)")
    p.add_argument("--wos", nargs="+", metavar="FILE", help="tagged export(s)")
    p.add_argument("--fit", action="store_true",
                   help="fit the exponent (the default action)")
    _add_lotka_flags(p)
    add_output(p)
    p.set_defaults(func=_cmd_lotka)

    p = sub.add_parser("ks", help="Kolmogorov-Smirnov goodness-of-fit test")
    p.add_argument("--dist", metavar="CSV", help="productivity distribution (x,y)")
    p.add_argument("--wos", nargs="+", metavar="FILE", help="tagged export(s)")
    p.add_argument("--n", type=float, help="exponent (with --c; default: fitted)")
    p.add_argument("--c", type=float, help="constant (with --n; default: computed)")
    _add_ks_flags(p)
    _add_lotka_flags(p)
    add_output(p)
    p.set_defaults(func=_cmd_ks)

    p = sub.add_parser("report", help="full pipeline: all tables and metrics")
    p.add_argument("--wos", nargs="+", metavar="FILE", help="tagged export(s)")
    p.add_argument("--series", metavar="CSV", help="yearly counts table")
    p.add_argument("--matrix", metavar="CSV", help="authorship matrix table")
    p.add_argument("--dist", metavar="CSV", help="productivity distribution table")
    p.add_argument("--out-dir", metavar="DIR",
                   help="write CSV/JSON files here instead of markdown to stdout")
    p.add_argument("--strict", action="store_true",
                   help="fail if any export block had to be skipped")
    _add_growth_flags(p)
    _add_collab_flags(p)
    _add_ks_flags(p)
    _add_lotka_flags(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("synth", help="deterministic synthetic data generation")
    p.add_argument("--spec", required=True, metavar="JSON",
                   help="generator spec file (kind: productivity or corpus)")
    p.add_argument("--emit", choices=["wos", "yearly", "matrix", "distribution"],
                   help="output format (corpus specs default to wos; "
                        "productivity specs emit a distribution)")
    p.add_argument("--cap", type=int, default=10)
    p.add_argument("--no-collapse", action="store_true")
    add_output(p)
    p.set_defaults(func=_cmd_synth)

    return parser


def _add_growth_flags(p):
    p.add_argument("--convention", choices=["paper", "standard"], default="paper",
                   help="RGR definition (default paper)")
    p.add_argument("--block-split", type=int, default=4, metavar="K",
                   help="entries in the first RGR averaging block (default 4)")
    p.add_argument("--exact-ln2", action="store_true",
                   help="use ln 2 instead of 0.693 for doubling time")


def _add_collab_flags(p):
    p.add_argument("--cap", type=int, default=10, help="author-class cap (default 10)")
    p.add_argument("--no-collapse", action="store_true",
                   help="keep author-count classes above the cap separate")
    p.add_argument("--partition", choices=sorted(PARTITIONS), default="multi",
                   help="co-authorship class partition (default multi)")


def _add_ks_flags(p):
    p.add_argument("--alpha", type=float, default=0.01,
                   help="significance level (default 0.01)")
    p.add_argument("--ks-mode", choices=["standard", "paper"], default="standard",
                   help="critical-value convention (default standard)")


def _add_lotka_flags(p):
    p.add_argument("--exclude-top", action="store_true",
                   help="drop the distribution's top (collapsed) class from the fit")
    p.add_argument("--truncation", type=int, default=20, metavar="P",
                   help="zeta truncation point for the constant (default 20)")


# ---------------------------------------------------------------------------
# shared input plumbing

def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_corpus(files, strict: bool) -> Corpus:
    results = [parse_wos_file(f) for f in files]
    skipped = sum(r.skipped for r in results)
    total = sum(len(r.corpus) for r in results)
    print(f"bibmet: parsed {total} record(s) from {len(files)} file(s), "
          f"skipped {skipped} block(s)", file=sys.stderr)
    if strict and skipped:
        raise ParseError(f"strict mode: {skipped} block(s) skipped")
    corpus = results[0].corpus
    if len(results) > 1:
        corpus = corpus.merge(*[r.corpus for r in results[1:]])
    return corpus


def _need_series(args) -> YearlySeries:
    if getattr(args, "series", None):
        return YearlySeries.from_csv(Path(args.series).read_text(encoding="utf-8"))
    if getattr(args, "wos", None):
        return build_yearly_series(_load_corpus(args.wos, False))
    raise _UsageError("bibmet: provide --series or --wos")


def _need_matrix(args) -> AuthorshipMatrix:
    if getattr(args, "matrix", None):
        matrix = AuthorshipMatrix.from_csv(Path(args.matrix).read_text(encoding="utf-8"))
        if not args.no_collapse and not matrix.collapsed:
            matrix = matrix.collapse(args.cap)
        return matrix
    if getattr(args, "wos", None):
        return build_authorship_matrix(_load_corpus(args.wos, False),
                                       cap=args.cap, collapse=not args.no_collapse)
    raise _UsageError("bibmet: provide --matrix or --wos")


def _need_distribution(args) -> ProductivityDistribution:
    if getattr(args, "dist", None):
        return ProductivityDistribution.from_csv(
            Path(args.dist).read_text(encoding="utf-8"))
    if getattr(args, "wos", None):
        return productivity_distribution(_load_corpus(args.wos, False))
    raise _UsageError("bibmet: provide --dist or --wos")


def _fit_with_constant(dist, args):
    fit = fit_lotka_least_squares(dist, include_top_class=not args.exclude_top)
    return fit.with_constant(lotka_constant(fit.n, truncation=args.truncation))


# ---------------------------------------------------------------------------
# subcommands

def _cmd_ingest(args) -> int:
    corpus = _load_corpus(args.files, args.strict)
    if args.emit == "yearly":
        text = build_yearly_series(corpus).to_csv()
    elif args.emit == "matrix":
        text = build_authorship_matrix(corpus, cap=args.cap,
                                       collapse=not args.no_collapse).to_csv()
    elif args.emit == "distribution":
        text = productivity_distribution(corpus).to_csv()
    else:
        text = write_wos_export(corpus)
    if args.source_comment and args.emit != "wos":
        text = f"# source: {' '.join(args.files)}\n" + text
    _emit(text, args.output)
    return 0


def _cmd_growth(args) -> int:
    report = build_growth_report(_need_series(args), convention=args.convention,
                                 block_split=args.block_split,
                                 exact_ln2=args.exact_ln2)
    if args.format == "csv":
        text = report.to_csv()
    elif args.format == "markdown":
        text = report.to_markdown()
    else:
        text = json.dumps(dataclasses.asdict(report), indent=2, sort_keys=True) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_collab(args) -> int:
    report = authorship_pattern_report(_need_matrix(args),
                                       partition=PARTITIONS[args.partition])
    if args.format == "csv":
        text = report.to_csv()
    elif args.format == "markdown":
        text = report.to_markdown()
    else:
        payload = {
            "rows": [dataclasses.asdict(r) for r in report.rows],
            "total": dataclasses.asdict(report.total),
            "class_summary": [dataclasses.asdict(s) for s in report.class_summary],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_lotka(args) -> int:
    fit = _fit_with_constant(_need_distribution(args), args)
    _emit(fit.to_json(), args.output)
    return 0


def _cmd_ks(args) -> int:
    dist = _need_distribution(args)
    if (args.n is None) != (args.c is None):
        raise _UsageError("bibmet: provide both --n and --c, or neither")
    if args.n is None:
        fit = _fit_with_constant(dist, args)
        n, c = fit.n, fit.c
    else:
        n, c = args.n, args.c
    report = ks_test(dist, n, c, alpha=args.alpha, mode=args.ks_mode)
    _emit(report.to_csv(), args.output)
    return 0


def _cmd_report(args) -> int:
    if not (args.wos or args.series or args.matrix or args.dist):
        raise _UsageError("bibmet report: no inputs; provide --wos, --series, "
                          "--matrix and/or --dist")
    corpus = _load_corpus(args.wos, args.strict) if args.wos else None

    series = matrix = dist = None
    if args.series:
        series = YearlySeries.from_csv(Path(args.series).read_text(encoding="utf-8"))
    elif corpus:
        series = build_yearly_series(corpus)
    if args.matrix:
        matrix = AuthorshipMatrix.from_csv(Path(args.matrix).read_text(encoding="utf-8"))
        if not args.no_collapse and not matrix.collapsed:
            matrix = matrix.collapse(args.cap)
    elif corpus:
        matrix = build_authorship_matrix(corpus, cap=args.cap,
                                         collapse=not args.no_collapse)
    if args.dist:
        dist = ProductivityDistribution.from_csv(
            Path(args.dist).read_text(encoding="utf-8"))
    elif corpus:
        dist = productivity_distribution(corpus)

    skipped_sections = []

    def best_effort(name, compute):
        # one undefined section (e.g. growth on a single-year corpus)
        # should not take down the whole report
        try:
            return compute()
        except DomainError as exc:
            skipped_sections.append(name)
            print(f"bibmet: skipping {name} section: {exc}", file=sys.stderr)
            return None

    growth_report = None
    if series is not None:
        growth_report = best_effort("growth", lambda: build_growth_report(
            series, convention=args.convention, block_split=args.block_split,
            exact_ln2=args.exact_ln2))
    collab_report = None
    if matrix is not None:
        collab_report = best_effort("collaboration", lambda: authorship_pattern_report(
            matrix, partition=PARTITIONS[args.partition]))
    fit = ks_report = None
    if dist is not None:
        fit = best_effort("productivity", lambda: _fit_with_constant(dist, args))
        if fit is not None:
            ks_report = best_effort("productivity", lambda: ks_test(
                dist, fit.n, fit.c, alpha=args.alpha, mode=args.ks_mode))
            if ks_report is None:
                fit = None

    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        written = []

        def write(name, text):
            (out / name).write_text(text, encoding="utf-8")
            written.append(name)

        if series is not None:
            write("yearly.csv", series.to_csv())
        if growth_report is not None:
            write("growth.csv", growth_report.to_csv())
        if matrix is not None:
            write("authorship.csv", matrix.to_csv())
        if collab_report is not None:
            write("collab.csv", collab_report.to_csv())
        if dist is not None:
            write("productivity.csv", dist.to_csv())
        if fit is not None:
            write("lotka.json", fit.to_json())
        if ks_report is not None:
            write("ks.csv", ks_report.to_csv())
        print(f"bibmet: wrote {len(written)} file(s) to {out}", file=sys.stderr)
        return 0

    sections = []
    if growth_report is not None:
        sections.append("## Growth\n\n" + growth_report.to_markdown())
    if collab_report is not None:
        sections.append("## Collaboration\n\n" + collab_report.to_markdown())
    if fit is not None:
        sections.append("## Author productivity\n\n" + _lotka_markdown(fit, ks_report))
    _emit("\n".join(sections), None)
    return 0


def _lotka_markdown(fit, ks_report: KSReport) -> str:
    lines = [
        f"Fitted exponent n = {fit.n:.4f} (slope {fit.slope:.4f}), "
        f"constant C = {fit.c:.4f}.",
        "",
        f"K-S: D_max = {ks_report.d_max:.4f} at x = {ks_report.x_at_dmax}, "
        f"critical value {ks_report.critical_value:.4f} "
        f"(alpha {ks_report.alpha}, {ks_report.mode} mode): "
        f"**{ks_report.verdict}**.",
        "",
        "| x | authors | observed cum. | expected cum. | diff |",
        "|---|---|---|---|---|",
    ]
    for r in ks_report.rows:
        lines.append(f"| {r.x} | {r.observed} | {r.observed_cum:.4f} | "
                     f"{r.expected_cum:.4f} | {r.abs_diff:.4f} |")
    return "\n".join(lines) + "\n"


def _cmd_synth(args) -> int:
    spec = spec_from_json(Path(args.spec).read_text(encoding="utf-8"))
    if isinstance(spec, PowerLawSpec):
        if args.emit not in (None, "distribution"):
            raise _UsageError("bibmet synth: productivity specs only emit a distribution")
        text = sample_productivity(spec).to_csv()
    else:
        corpus = sample_corpus_from_spec(spec)
        emit = args.emit or "wos"
        if emit == "wos":
            text = write_wos_export(corpus)
        elif emit == "yearly":
            text = build_yearly_series(corpus).to_csv()
        elif emit == "matrix":
            text = build_authorship_matrix(corpus, cap=args.cap,
                                           collapse=not args.no_collapse).to_csv()
        else:
            text = productivity_distribution(corpus).to_csv()
    _emit(text, args.output)
    return 0


if __name__ == "__main__":
    entrypoint()
