"""Word and character error rates with comparison reports.

Rates follow the standard ASR definition: substitutions, deletions and
insertions from a minimal-cost alignment, divided by the reference
length.  Corpus scores pool counts across utterances (total errors over
total reference tokens), never average per-utterance rates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, NamedTuple, Sequence

from .errors import (
    MissingHypothesisError,
    UndefinedRateError,
    UnknownIdError,
)
from .script import LanguageId, normalize


class EditOp(Enum):
    MATCH = "match"
    SUBSTITUTE = "sub"
    DELETE = "del"
    INSERT = "ins"


class AlignStep(NamedTuple):
    op: EditOp
    ref_index: int | None
    hyp_index: int | None


@dataclass(frozen=True)
class Alignment:
    """A minimal-cost alignment of two token sequences."""

    steps: tuple[AlignStep, ...]
    matches: int
    substitutions: int
    deletions: int
    insertions: int

    @property
    def cost(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    @property
    def ref_len(self) -> int:
        return self.matches + self.substitutions + self.deletions

    @property
    def hyp_len(self) -> int:
        return self.matches + self.substitutions + self.insertions


def edit_distance_alignment(ref: Sequence, hyp: Sequence) -> Alignment:
    """Dynamic-programming alignment with unit costs.

    Ties on the backtrace prefer match over substitution over deletion
    over insertion, so equal-cost alignments resolve deterministically.
    """
    m, n = len(ref), len(hyp)
    rows: list[list[int]] = [list(range(n + 1))]
    prev = rows[0]
    for i in range(1, m + 1):
        cur = [i] + [0] * n
        ref_token = ref[i - 1]
        for j in range(1, n + 1):
            diag = prev[j - 1] + (ref_token != hyp[j - 1])
            up = prev[j] + 1
            left = cur[j - 1] + 1
            cur[j] = diag if diag <= up and diag <= left else min(up, left)
        rows.append(cur)
        prev = cur

    steps: list[AlignStep] = []
    matches = subs = dels = ins = 0
    i, j = m, n
    while i > 0 or j > 0:
        here = rows[i][j]
        if i > 0 and j > 0 and ref[i - 1] == hyp[j - 1] and rows[i - 1][j - 1] == here:
            steps.append(AlignStep(EditOp.MATCH, i - 1, j - 1))
            matches += 1
            i -= 1
            j -= 1
        elif i > 0 and j > 0 and rows[i - 1][j - 1] + 1 == here:
            steps.append(AlignStep(EditOp.SUBSTITUTE, i - 1, j - 1))
            subs += 1
            i -= 1
            j -= 1
        elif i > 0 and rows[i - 1][j] + 1 == here:
            steps.append(AlignStep(EditOp.DELETE, i - 1, None))
            dels += 1
            i -= 1
        else:
            steps.append(AlignStep(EditOp.INSERT, None, j - 1))
            ins += 1
            j -= 1
    steps.reverse()
    return Alignment(tuple(steps), matches, subs, dels, ins)


@dataclass(frozen=True)
class ErrorRate:
    """Rate plus the counts it came from.

    `empty_reference` flags the both-empty degenerate case where the
    rate is 0 by convention.
    """

    rate: float
    substitutions: int
    deletions: int
    insertions: int
    matches: int
    ref_tokens: int
    empty_reference: bool = False

    @property
    def errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions


def _rate_from(ref_tokens: Sequence, hyp_tokens: Sequence) -> ErrorRate:
    if not ref_tokens:
        if hyp_tokens:
            raise UndefinedRateError(
                "reference is empty but the hypothesis is not"
            )
        return ErrorRate(0.0, 0, 0, 0, 0, 0, empty_reference=True)
    a = edit_distance_alignment(ref_tokens, hyp_tokens)
    return ErrorRate(
        a.cost / len(ref_tokens),
        a.substitutions,
        a.deletions,
        a.insertions,
        a.matches,
        len(ref_tokens),
    )


def wer(ref: str, hyp: str) -> ErrorRate:
    """Word error rate over whitespace tokens; may exceed 1."""
    return _rate_from(ref.split(), hyp.split())


def cer(ref: str, hyp: str) -> ErrorRate:
    """Character error rate over normalized code points, spaces excluded."""
    return _rate_from(_cer_tokens(ref), _cer_tokens(hyp))


def _cer_tokens(text: str) -> list[str]:
    return [c for c in normalize(text) if not c.isspace()]


@dataclass
class PooledCounts:
    """Error and reference-token sums over a set of utterances."""

    utterances: int = 0
    substitutions: int = 0
    deletions: int = 0
    insertions: int = 0
    ref_tokens: int = 0

    def add(self, rate: ErrorRate) -> None:
        self.utterances += 1
        self.substitutions += rate.substitutions
        self.deletions += rate.deletions
        self.insertions += rate.insertions
        self.ref_tokens += rate.ref_tokens

    @property
    def errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    @property
    def rate(self) -> float | None:
        """Pooled rate; None (undefined) without reference tokens."""
        if self.ref_tokens == 0:
            return None if self.errors else 0.0
        return self.errors / self.ref_tokens


@dataclass
class CorpusScore:
    """Pooled word and character counts, overall and per language."""

    word: PooledCounts = field(default_factory=PooledCounts)
    char: PooledCounts = field(default_factory=PooledCounts)
    by_lang: dict[LanguageId, "CorpusScore"] = field(default_factory=dict)

    @property
    def wer(self) -> float | None:
        return self.word.rate

    @property
    def cer(self) -> float | None:
        return self.char.rate


def score_corpus(
    refs: Mapping[str, str],
    hyps: Mapping[str, str],
    langs: Mapping[str, LanguageId] | None = None,
    *,
    missing_hyp: str = "as-deletions",
    apply_normalize: bool = False,
) -> CorpusScore:
    """Score a hypothesis set against references, pooling counts.

    Every hypothesis id must exist among the references.  A reference
    without a hypothesis counts as fully deleted under the default
    ``missing_hyp="as-deletions"`` policy and raises under ``"error"``.
    `langs` assigns utterances to per-language buckets; ids it does not
    cover land only in the overall score.  `apply_normalize` runs both
    sides through text normalization before comparing words.
    """
    if missing_hyp not in ("as-deletions", "error"):
        raise ValueError(f"bad missing_hyp policy {missing_hyp!r}")
    unknown = set(hyps) - set(refs)
    if unknown:
        raise UnknownIdError(
            f"hypothesis ids not in the references: {sorted(unknown)[:5]}"
        )
    score = CorpusScore()
    for utt_id in refs:
        ref = refs[utt_id]
        hyp = hyps.get(utt_id)
        if hyp is None:
            if missing_hyp == "error":
                raise MissingHypothesisError(f"no hypothesis for {utt_id!r}")
            hyp = ""
        if apply_normalize:
            ref, hyp = normalize(ref), normalize(hyp)
        word_rate = _rate_from(ref.split(), hyp.split())
        char_rate = _rate_from(_cer_tokens(ref), _cer_tokens(hyp))
        buckets = [score]
        lang = (langs or {}).get(utt_id)
        if lang is not None:
            buckets.append(score.by_lang.setdefault(lang, CorpusScore()))
        for bucket in buckets:
            bucket.word.add(word_rate)
            bucket.char.add(char_rate)
    return score


@dataclass(frozen=True)
class ReportRow:
    """One system's per-language percentages (None renders as n/a)."""

    system: str
    wer: Mapping[str, float | None]
    cer: Mapping[str, float | None] | None = None


@dataclass(frozen=True)
class EvalReport:
    languages: tuple[str, ...]
    rows: tuple[ReportRow, ...]


def report_from_score(
    score: CorpusScore, system: str, *, include_cer: bool = False
) -> EvalReport:
    """Tabulate a corpus score as one report row ('overall' plus languages)."""
    langs = ["overall"] + [lang.value for lang in score.by_lang]
    pct = lambda rate: None if rate is None else 100.0 * rate
    wer_cells = {"overall": pct(score.wer)}
    cer_cells = {"overall": pct(score.cer)}
    for lang, sub in score.by_lang.items():
        wer_cells[lang.value] = pct(sub.wer)
        cer_cells[lang.value] = pct(sub.cer)
    return EvalReport(
        tuple(langs),
        (ReportRow(system, wer_cells, cer_cells if include_cer else None),),
    )


def _format_cell(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.1f}"


def render_report(report: EvalReport, fmt: str = "table") -> str:
    """Render a report as an aligned text table or as TSV.

    Both formats print identical one-decimal values; rows with CER data
    get a second `(CER)` line under their WER line.
    """
    header = ["system"] + list(report.languages)
    grid: list[list[str]] = [header]
    for row in report.rows:
        grid.append(
            [row.system] + [_format_cell(row.wer.get(l)) for l in report.languages]
        )
        if row.cer is not None:
            grid.append(
                [f"{row.system} (CER)"]
                + [_format_cell(row.cer.get(l)) for l in report.languages]
            )
    if fmt == "tsv":
        return "\n".join("\t".join(cells) for cells in grid)
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")
    widths = [max(len(row[i]) for row in grid) for i in range(len(header))]
    lines = []
    for cells in grid:
        padded = [cells[0].ljust(widths[0])] + [
            cells[i].rjust(widths[i]) for i in range(1, len(cells))
        ]
        lines.append("  ".join(padded).rstrip())
    return "\n".join(lines)
