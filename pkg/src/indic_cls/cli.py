"""Command-line interface.

Text subcommands stream UTF-8 lines from stdin (or ``--input``) to
stdout, so they compose with standard shell pipelines.  Exit codes:
0 success (possibly with warnings on stderr), 1 usage error, 2 data
error, 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, TextIO

from . import __version__
from .cls import WORD_BOUNDARY, text_to_cls
from .corpus import (
    DEFAULT_LID_TEMPLATE,
    LidScheme,
    TargetFlavor,
    corpus_stats,
    format_stats,
    load_manifest,
    prep_corpus,
)
from .errors import IndicClsError
from .native import build_lexicon, cls_text_to_ns, load_lexicon, save_lexicon
from .scoring import (
    EvalReport,
    ReportRow,
    render_report,
    report_from_score,
    score_corpus,
)
from .script import LanguageId, ScriptId, detect_script, normalize, transliterate_offset

USAGE_EXIT = 1
DATA_EXIT = 2
INTERNAL_EXIT = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this toolkit reserves 2 for data errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _lang(value: str) -> LanguageId:
    try:
        return LanguageId.from_name(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _script(value: str) -> ScriptId:
    try:
        return ScriptId.from_name(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="indic-cls",
        description="Common-label-set text processing for Indic scripts.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_io(p, output=True):
        p.add_argument("--input", help="read from this file instead of stdin")
        if output:
            p.add_argument("--output", help="write to this file instead of stdout")

    p = sub.add_parser("detect", help="detect the script of each input line")
    add_io(p)
    p.add_argument(
        "--counts", action="store_true", help="append per-script code point counts"
    )

    p = sub.add_parser("to-cls", help="convert native-script lines to CLS text")
    add_io(p)
    p.add_argument("--lang", type=_lang, required=True)
    p.add_argument("--boundary", default=WORD_BOUNDARY)
    p.add_argument("--no-schwa", dest="schwa", action="store_false")
    p.add_argument("--no-geminate", dest="geminate", action="store_false")
    _add_strictness(p)

    p = sub.add_parser("to-ns", help="convert CLS lines back to native script")
    add_io(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--lang", type=_lang, help="mono mode: fixed language")
    mode.add_argument(
        "--unified",
        action="store_true",
        help="unified mode: dispatch on each line's LID token",
    )
    p.add_argument(
        "--lexicon",
        action="append",
        default=[],
        metavar="LANG=PATH",
        help="lexicon file for a language (repeatable)",
    )
    p.add_argument("--fuzzy", action="store_true", help="repair one bad label per word")
    p.add_argument("--boundary", default=WORD_BOUNDARY)
    p.add_argument("--lid-format", default=DEFAULT_LID_TEMPLATE)
    _add_strictness(p)

    p = sub.add_parser("translit", help="offset-transliterate between scripts")
    add_io(p)
    p.add_argument("--from", dest="source", type=_script, required=True)
    p.add_argument("--to", dest="target", type=_script, required=True)

    p = sub.add_parser("prep", help="emit training targets from a manifest")
    p.add_argument("--manifest", required=True)
    p.add_argument(
        "--flavor",
        type=TargetFlavor,
        choices=list(TargetFlavor),
        required=True,
        metavar="{native,native-lid,cls,cls-lid}",
    )
    p.add_argument("--output", help="target file (default stdout)")
    p.add_argument("--errors", help="error report file (default stderr summary)")
    p.add_argument("--lid-format", default=DEFAULT_LID_TEMPLATE)
    p.add_argument("--boundary", default=WORD_BOUNDARY)

    p = sub.add_parser("lexicon", help="lexicon utilities")
    lex_sub = p.add_subparsers(dest="lexicon_command", required=True, parser_class=_Parser)
    p = lex_sub.add_parser("build", help="build a lexicon from native text")
    p.add_argument("--lang", type=_lang, required=True)
    p.add_argument("--corpus", help="native-script text file (default stdin)")
    p.add_argument("--output", required=True)

    p = sub.add_parser("score", help="score hypotheses against references")
    p.add_argument("--refs", required=True, help="reference TSV: id<TAB>text")
    p.add_argument("--hyps", required=True, help="hypothesis TSV: id<TAB>text")
    p.add_argument("--langs", help="optional id<TAB>language TSV")
    p.add_argument(
        "--missing",
        choices=["as-deletions", "error"],
        default="as-deletions",
        help="policy for references without a hypothesis",
    )
    p.add_argument("--cer", action="store_true", help="include character error rate")
    p.add_argument(
        "--normalize",
        action="store_true",
        help="normalize both sides before comparison",
    )
    p.add_argument("--system", default="system", help="row label for the report")
    p.add_argument("--out", help="also write the report as TSV to this file")

    p = sub.add_parser("stats", help="per-language hours and utterance counts")
    p.add_argument("--manifest", required=True)

    p = sub.add_parser("report", help="render a WER grid as a table or TSV")
    p.add_argument("--values", required=True, help="TSV grid: header then rows")
    p.add_argument("--format", choices=["table", "tsv"], default="table")

    return parser


def _add_strictness(p):
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--strict",
        action="store_true",
        help="abort on the first failing word (exit 2)",
    )
    group.add_argument(
        "--lenient",
        dest="strict",
        action="store_false",
        help="skip failing words, report them on stderr (default)",
    )


def _open_lines(path: str | None) -> Iterable[str]:
    if path is None:
        return (line.rstrip("\n") for line in sys.stdin)
    return (line.rstrip("\n") for line in open(path, encoding="utf-8"))


def _open_output(path: str | None) -> TextIO:
    return sys.stdout if path is None else open(path, "w", encoding="utf-8")


def _close_output(handle: TextIO) -> None:
    if handle is not sys.stdout:
        handle.close()


def _cmd_detect(args) -> int:
    out = _open_output(args.output)
    for line in _open_lines(args.input):
        result = detect_script(normalize(line))
        if result.script is not None:
            verdict = result.script.name.lower()
        else:
            verdict = "mixed" if result.is_mixed else "none"
        if args.counts:
            tally = ",".join(
                f"{s.name.lower()}:{n}" for s, n in sorted(
                    result.counts.items(), key=lambda kv: kv[0].name
                )
            )
            print(f"{verdict}\t{tally}", file=out)
        else:
            print(verdict, file=out)
    _close_output(out)
    return 0


def _cmd_to_cls(args) -> int:
    out = _open_output(args.output)
    warnings = 0
    for line_no, line in enumerate(_open_lines(args.input), 1):
        result = text_to_cls(
            line,
            args.lang,
            schwa=args.schwa,
            geminate=args.geminate,
            strict=args.strict,
            boundary=args.boundary,
        )
        for err in result.errors:
            warnings += 1
            print(f"line {line_no}: {err}", file=sys.stderr)
        print(result.text, file=out)
    _close_output(out)
    if warnings:
        print(f"{warnings} word(s) skipped", file=sys.stderr)
    return 0


def _parse_lexicon_args(pairs: list[str]):
    lexicons = {}
    for pair in pairs:
        name, _, path = pair.partition("=")
        if not path:
            raise IndicClsError(f"--lexicon wants LANG=PATH, got {pair!r}")
        lang = LanguageId.from_name(name)
        lexicons[lang] = load_lexicon(path, lang)
    return lexicons


def _cmd_to_ns(args) -> int:
    lexicons = _parse_lexicon_args(args.lexicon)
    scheme = LidScheme(args.lid_format)
    out = _open_output(args.output)
    warnings = 0
    for line_no, line in enumerate(_open_lines(args.input), 1):
        result = cls_text_to_ns(
            line,
            None if args.unified else args.lang,
            lexicons=lexicons,
            fuzzy=args.fuzzy,
            strict=args.strict,
            boundary=args.boundary,
            lid=scheme,
        )
        for err in result.errors:
            warnings += 1
            print(f"line {line_no}: {err}", file=sys.stderr)
        print(result.text, file=out)
    _close_output(out)
    if warnings:
        print(f"{warnings} word(s) skipped", file=sys.stderr)
    return 0


def _cmd_translit(args) -> int:
    out = _open_output(args.output)
    for line in _open_lines(args.input):
        print(transliterate_offset(normalize(line), args.source, args.target), file=out)
    _close_output(out)
    return 0


def _cmd_prep(args) -> int:
    manifest = load_manifest(args.manifest)
    result = prep_corpus(
        manifest,
        args.flavor,
        scheme=LidScheme(args.lid_format),
        boundary=args.boundary,
    )
    out = _open_output(args.output)
    for line in result.lines:
        print(line, file=out)
    _close_output(out)
    records = [(r, "error") for r in result.errors]
    records += [(r, "warning") for r in result.warnings]
    if args.errors:
        with open(args.errors, "w", encoding="utf-8") as handle:
            for record, severity in records:
                handle.write(
                    f"{record.utt_id}\t{severity}:{record.stage}\t{record.message}\n"
                )
    else:
        for record, severity in records:
            print(
                f"{severity} {record.utt_id} [{record.stage}]: {record.message}",
                file=sys.stderr,
            )
    if result.errors or result.warnings:
        print(
            f"{len(result.lines)} line(s), {len(result.errors)} error(s), "
            f"{len(result.warnings)} warning(s)",
            file=sys.stderr,
        )
    return 0


def _cmd_lexicon_build(args) -> int:
    lexicon = build_lexicon(_open_lines(args.corpus), args.lang)
    save_lexicon(lexicon, args.output)
    print(
        f"{len(lexicon)} entries written to {args.output}"
        + (f", {lexicon.skipped} word(s) skipped" if lexicon.skipped else ""),
        file=sys.stderr,
    )
    return 0


def _read_tsv_map(path: str) -> dict[str, str]:
    mapping: dict[str, str] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            utt_id, _, text = line.partition("\t")
            if utt_id in mapping:
                raise IndicClsError(f"{path}:{line_no}: duplicate id {utt_id!r}")
            mapping[utt_id] = text
    return mapping


def _cmd_score(args) -> int:
    refs = _read_tsv_map(args.refs)
    hyps = _read_tsv_map(args.hyps)
    langs = None
    if args.langs:
        langs = {
            utt_id: LanguageId.from_name(name)
            for utt_id, name in _read_tsv_map(args.langs).items()
        }
    score = score_corpus(
        refs,
        hyps,
        langs,
        missing_hyp=args.missing,
        apply_normalize=args.normalize,
    )
    report = report_from_score(score, args.system, include_cer=args.cer)
    print(render_report(report))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(render_report(report, "tsv") + "\n")
    return 0


def _cmd_stats(args) -> int:
    print(format_stats(corpus_stats(load_manifest(args.manifest))))
    return 0


def _cmd_report(args) -> int:
    rows: list[list[str]] = []
    for line in _open_lines(args.values):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append(line.split("\t"))
    if not rows:
        report = EvalReport((), ())
    else:
        languages = tuple(rows[0][1:])
        body = []
        for cells in rows[1:]:
            values = {
                lang: (None if cell in ("", "-", "n/a") else float(cell))
                for lang, cell in zip(languages, cells[1:])
            }
            body.append(ReportRow(cells[0], values))
        report = EvalReport(languages, tuple(body))
    print(render_report(report, args.format))
    return 0


_COMMANDS = {
    "detect": _cmd_detect,
    "to-cls": _cmd_to_cls,
    "to-ns": _cmd_to_ns,
    "translit": _cmd_translit,
    "prep": _cmd_prep,
    "score": _cmd_score,
    "stats": _cmd_stats,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    for stream in (sys.stdin, sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse already printed the message
        return exit_.code or 0
    try:
        if args.command == "lexicon":
            return _cmd_lexicon_build(args)
        return _COMMANDS[args.command](args)
    except (IndicClsError, UnicodeDecodeError, OSError, ValueError) as exc:
        print(f"indic-cls {args.command}: {exc}", file=sys.stderr)
        return DATA_EXIT
    except BrokenPipeError:
        return 0
    except Exception as exc:  # pragma: no cover - defensive
        print(f"indic-cls {args.command}: internal error: {exc!r}", file=sys.stderr)
        return INTERNAL_EXIT


if __name__ == "__main__":
    sys.exit(main())
