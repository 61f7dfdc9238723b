"""Command-line front end.

Subcommands:

    compile   parse and validate a grammar file
    gen       generate one surface form from a feature structure
    paradigm  print the 18-cell paradigm of a lexicon entry
    test      regenerate an expected-forms corpus and report mismatches
    data      locate (or copy out) the bundled Arabic grammar files

Exit codes: 0 success, 1 format or I/O error, 2 unclassifiable input,
3 rule application failure, 4 unknown lemma.
"""

from __future__ import annotations

import argparse
import logging
import shutil
import sys
from pathlib import Path

from . import arabic, report
from .errors import (
    CorpusError,
    FSParseError,
    GrammarBuildError,
    GrammarParseError,
    LexiconError,
    MissingBaseFeature,
    NoClauseMatched,
    OperatorError,
    UnclassifiableInput,
    UnhandledForm,
)
from .featstruct import parse_fs
from .grammar import parse_grammar
from .hierarchy import (
    build_hierarchy,
    format_pass_trace,
    generate_once_with_trace,
    generate_with_trace,
)

EXIT_OK = 0
EXIT_FORMAT = 1
EXIT_UNCLASSIFIABLE = 2
EXIT_RULE = 3
EXIT_LOOKUP = 4

_FORMAT_ERRORS = (FSParseError, GrammarParseError, LexiconError, CorpusError,
                  MissingBaseFeature, OSError, UnicodeDecodeError)
_RULE_ERRORS = (NoClauseMatched, OperatorError, UnhandledForm)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="morphgen",
        description="Compile word-grammar files and generate inflected forms.")
    parser.add_argument("--verbose", action="store_true",
                        help="show engine warnings on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="parse and validate a grammar file")
    p.add_argument("grammar", help="grammar file")

    p = sub.add_parser("gen", help="generate one surface form")
    p.add_argument("grammar", help="grammar file")
    p.add_argument("fs", nargs="?", help="feature-structure text")
    p.add_argument("-f", "--fs-file", help="read the feature structure from a file")
    p.add_argument("--trace", action="store_true",
                   help="print the node reached and rule fired per pass")
    p.add_argument("--one-pass", action="store_true",
                   help="classify once without the stem/affix pass protocol")
    p.add_argument("--strict", action="store_true",
                   help="error out when classification reaches a bare node")
    p.add_argument("--assimilation", action="store_true",
                   help="apply sun-letter assimilation to the article")

    p = sub.add_parser("paradigm", help="print an entry's full paradigm")
    p.add_argument("grammar", help="grammar file")
    p.add_argument("lexicon", help="lexicon file")
    p.add_argument("lemma", help="entry to inflect")
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.add_argument("--figure", metavar="PATH",
                   help="also render the paradigm as a figure")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--assimilation", action="store_true")

    p = sub.add_parser("test", help="regenerate an expected-forms corpus")
    p.add_argument("grammar", help="grammar file")
    p.add_argument("lexicon", help="lexicon file")
    p.add_argument("corpus", help="expected-forms file")
    p.add_argument("--report-dir", metavar="DIR",
                   help="write results.tsv and summary.png here")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--assimilation", action="store_true")

    p = sub.add_parser("data", help="locate or copy the bundled data files")
    p.add_argument("--dir", metavar="DIR", help="copy the bundled files here")

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.verbose else logging.ERROR,
        format="%(levelname)s %(message)s", force=True)
    command = {
        "compile": _cmd_compile,
        "gen": _cmd_gen,
        "paradigm": _cmd_paradigm,
        "test": _cmd_test,
        "data": _cmd_data,
    }[args.command]
    try:
        return command(args)
    except GrammarParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except GrammarBuildError as exc:
        for diagnostic in exc.errors:
            print(f"error: {diagnostic}", file=sys.stderr)
        return EXIT_FORMAT
    except _FORMAT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except UnclassifiableInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNCLASSIFIABLE
    except _RULE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RULE


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _load_hierarchy(path):
    return build_hierarchy(parse_grammar(_read(path)))


def _cmd_compile(args):
    text = _read(args.grammar)
    try:
        decls = parse_grammar(text)
        hierarchy = build_hierarchy(decls)
    except GrammarParseError as exc:
        print(f"{args.grammar}:{exc.line or '?'}: {exc.message}", file=sys.stderr)
        return EXIT_FORMAT
    except GrammarBuildError as exc:
        for diagnostic in exc.errors:
            print(f"{args.grammar}: {diagnostic}", file=sys.stderr)
        return EXIT_FORMAT
    if not decls:
        print("warning: no declarations", file=sys.stderr)
    rules = sum(1 for n in hierarchy.nodes.values() if n.rule is not None)
    print(f"ok: {len(decls)} declarations, {len(hierarchy.nodes) - 1} nodes, "
          f"{rules} rules")
    return EXIT_OK


def _cmd_gen(args):
    hierarchy = _load_hierarchy(args.grammar)
    if args.fs is not None and args.fs_file:
        print("error: give the feature structure inline or with -f, not both",
              file=sys.stderr)
        return EXIT_FORMAT
    if args.fs is not None:
        fs_text = args.fs
    elif args.fs_file:
        fs_text = _read(args.fs_file)
    else:
        print("error: missing feature structure (inline argument or -f FILE)",
              file=sys.stderr)
        return EXIT_FORMAT
    fs = parse_fs(fs_text)
    if args.one_pass:
        output, traces = generate_once_with_trace(hierarchy, fs,
                                                  strict=args.strict)
    else:
        output, traces = generate_with_trace(hierarchy, fs, strict=args.strict)
    if args.assimilation:
        output = arabic.apply_assimilation(output)
    if args.trace:
        for trace in traces:
            print(format_pass_trace(trace))
    print(output)
    return EXIT_OK


def _find_entry(entries, lemma):
    for entry in entries:
        if entry.lemma == lemma:
            return entry
    return None


def _cmd_paradigm(args):
    hierarchy = _load_hierarchy(args.grammar)
    entries = arabic.load_lexicon(_read(args.lexicon))
    entry = _find_entry(entries, args.lemma)
    if entry is None:
        print(f"error: lemma '{args.lemma}' not in lexicon", file=sys.stderr)
        return EXIT_LOOKUP
    table = arabic.paradigm(entry, hierarchy, assimilation=args.assimilation,
                            strict=args.strict)
    if args.tsv:
        print("def\tcase\t" + "\t".join(arabic.NUMBERS))
        for definite in arabic.DEFS:
            for case in arabic.CASES:
                forms = [table.cell(n, case, definite) for n in arabic.NUMBERS]
                print(f"{definite}\t{case}\t" + "\t".join(forms))
    else:
        _print_paradigm_table(table)
    if args.figure:
        report.save_paradigm_figure(table, args.figure)
    return EXIT_OK


def _print_paradigm_table(table):
    header = ["def", "case", "singular", "dual", "plural"]
    rows = [header]
    for definite in arabic.DEFS:
        for case in arabic.CASES:
            rows.append([definite, case]
                        + [table.cell(n, case, definite) for n in arabic.NUMBERS])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    for row in rows:
        print("  ".join(cell.ljust(width) for cell, width in zip(row, widths))
              .rstrip())


def _cmd_test(args):
    hierarchy = _load_hierarchy(args.grammar)
    entries = arabic.load_lexicon(_read(args.lexicon))
    by_lemma = {entry.lemma: entry for entry in entries}
    gold = arabic.parse_gold_corpus(_read(args.corpus))
    if not gold:
        print("warning: empty corpus", file=sys.stderr)
    rows = []
    for row in gold:
        entry = by_lemma.get(row.lemma)
        if entry is None:
            raise CorpusError(f"lemma '{row.lemma}' not in lexicon", row.line)
        fs = arabic.inflection_fs(entry, row.number, row.case, row.definite)
        actual = generate_with_trace(hierarchy, fs, strict=args.strict)[0]
        if args.assimilation:
            actual = arabic.apply_assimilation(actual)
        rows.append(report.RowResult(row.lemma, row.number, row.case,
                                     row.definite, row.expected, actual))
    run = report.summarize(rows)
    for description, expected, actual in run.failures:
        print(f'FAIL {description}: expected "{expected}", got "{actual}"')
    print(f"{run.passed}/{run.total} forms match")
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        report.write_results_tsv(rows, out / "results.tsv")
        report.save_run_figure(rows, out / "summary.png")
    return EXIT_OK if run.ok else EXIT_FORMAT


def _cmd_data(args):
    names = [arabic.GRAMMAR_FILE, arabic.LEXICON_FILE, arabic.GOLD_FILE,
             arabic.ENGLISH_TOY_FILE]
    if args.dir:
        target = Path(args.dir)
        target.mkdir(parents=True, exist_ok=True)
        for name in names:
            shutil.copyfile(arabic.data_path(name), target / name)
            print(target / name)
    else:
        for name in names:
            print(arabic.data_path(name))
    return EXIT_OK


def run():
    raise SystemExit(main())
