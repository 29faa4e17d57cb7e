"""Language-ID tokens and ASR corpus preparation.

A language-ID (LID) token is a literal tag such as ``<hindi`` prepended
to a training target so a multilingual model sees which language it is
transcribing.  This module owns the tag format, the manifest reader,
the four training-target flavors (native or CLS text, each with or
without the tag) and per-language duration statistics.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple

from .cls import WORD_BOUNDARY, ClsInventory, text_to_cls
from .errors import AlreadyTaggedError, ManifestError, MissingLidError
from .script import LanguageId, detect_script, normalize

DEFAULT_LID_TEMPLATE = "<{lang}"


@dataclass(frozen=True)
class LidScheme:
    """How LID token surfaces are built from language names.

    The default renders ``<hindi``, ``<gujarati``, ...; any template
    with a ``{lang}`` placeholder that keeps the five surfaces distinct
    is accepted.
    """

    template: str = DEFAULT_LID_TEMPLATE
    surfaces: dict[LanguageId, str] = field(init=False, repr=False)

    def __post_init__(self):
        surfaces = {
            lang: self.template.format(lang=lang.value) for lang in LanguageId
        }
        if len(set(surfaces.values())) != len(surfaces):
            raise ValueError(f"template {self.template!r} collapses LID surfaces")
        if any(" " in s or not s for s in surfaces.values()):
            raise ValueError(f"template {self.template!r} yields unusable surfaces")
        object.__setattr__(self, "surfaces", surfaces)

    def surface(self, lang: LanguageId) -> str:
        return self.surfaces[lang]

    def parse(self, token: str) -> LanguageId | None:
        for lang, surface in self.surfaces.items():
            if token == surface:
                return lang
        return None


DEFAULT_LID = LidScheme()


def inject_lid(
    lang: LanguageId, transcript: str, scheme: LidScheme = DEFAULT_LID
) -> str:
    """Prepend the language tag; a tag-only line for empty transcripts."""
    first = transcript.split(maxsplit=1)[0] if transcript.split() else None
    if first is not None and scheme.parse(first) is not None:
        raise AlreadyTaggedError(f"transcript already starts with {first!r}")
    surface = scheme.surface(lang)
    return f"{surface} {transcript}" if transcript else surface


def strip_lid(
    tagged: str, scheme: LidScheme = DEFAULT_LID
) -> tuple[LanguageId, str]:
    """Split a tagged line into (language, rest); inverse of inject_lid."""
    for lang, surface in scheme.surfaces.items():
        if tagged == surface:
            return lang, ""
        if tagged.startswith(surface + " "):
            return lang, tagged[len(surface) + 1 :]
    raise MissingLidError(f"no LID token at the start of {tagged[:40]!r}")


class TargetFlavor(Enum):
    """The four training-target variants."""

    NATIVE = "native"
    NATIVE_LID = "native-lid"
    CLS = "cls"
    CLS_LID = "cls-lid"

    @property
    def wants_cls(self) -> bool:
        return self in (TargetFlavor.CLS, TargetFlavor.CLS_LID)

    @property
    def wants_lid(self) -> bool:
        return self in (TargetFlavor.NATIVE_LID, TargetFlavor.CLS_LID)


@dataclass(frozen=True)
class Utterance:
    """One corpus record; the audio path is carried, never opened."""

    utt_id: str
    lang: LanguageId
    duration_ms: int
    audio_path: str
    transcript: str

    @property
    def duration_sec(self) -> float:
        return self.duration_ms / 1000.0


class ManifestIssue(NamedTuple):
    utt_id: str
    message: str


@dataclass
class Manifest:
    utterances: list[Utterance]
    warnings: list[ManifestIssue] = field(default_factory=list)

    def __iter__(self):
        return iter(self.utterances)

    def __len__(self) -> int:
        return len(self.utterances)


def parse_manifest(lines: Iterable[str]) -> Manifest:
    """Parse manifest lines: id, language, seconds, audio path, transcript.

    Tab-separated, UTF-8, '#' comments.  Structural problems (wrong
    field count, unknown language, bad or negative duration, duplicate
    id) are fatal; a transcript whose script disagrees with its
    language, or an empty transcript, is a warning.
    """
    utterances: list[Utterance] = []
    warnings: list[ManifestIssue] = []
    seen: set[str] = set()
    for line_no, line in enumerate(lines, 1):
        line = line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise ManifestError(line_no, f"expected 5 fields, got {len(parts)}")
        utt_id, lang_name, duration, audio_path, transcript = parts
        if not utt_id:
            raise ManifestError(line_no, "empty utterance id")
        if utt_id in seen:
            raise ManifestError(line_no, f"duplicate id {utt_id!r}")
        seen.add(utt_id)
        try:
            lang = LanguageId.from_name(lang_name)
        except ValueError as exc:
            raise ManifestError(line_no, str(exc)) from None
        try:
            seconds = float(duration)
        except ValueError:
            raise ManifestError(line_no, f"bad duration {duration!r}") from None
        if seconds < 0:
            raise ManifestError(line_no, f"negative duration {duration!r}")
        utterances.append(
            Utterance(utt_id, lang, round(seconds * 1000), audio_path, transcript)
        )
        if not transcript.strip():
            warnings.append(ManifestIssue(utt_id, "empty transcript"))
        else:
            detected = detect_script(normalize(transcript))
            if detected.is_mixed:
                warnings.append(ManifestIssue(utt_id, "mixed-script transcript"))
            elif detected.has_indic and detected.script is not lang.script:
                warnings.append(
                    ManifestIssue(
                        utt_id,
                        f"transcript in {detected.script.name.lower()}, "
                        f"expected {lang.script.name.lower()}",
                    )
                )
    return Manifest(utterances, warnings)


def load_manifest(path: str | os.PathLike) -> Manifest:
    with open(path, encoding="utf-8") as handle:
        return parse_manifest(handle)


class PrepRecord(NamedTuple):
    utt_id: str
    stage: str
    message: str


@dataclass
class PrepResult:
    """Training-target lines plus an error and a warning channel.

    Every utterance lands in exactly one of `lines` or `errors`, so
    ``len(lines) + len(errors)`` always equals the manifest size.
    Warnings (empty transcripts) accompany an emitted line.
    """

    flavor: TargetFlavor
    lines: list[str]
    errors: list[PrepRecord]
    warnings: list[PrepRecord]


def prep_corpus(
    manifest: Manifest,
    flavor: TargetFlavor,
    *,
    scheme: LidScheme = DEFAULT_LID,
    schwa: bool = True,
    geminate: bool = True,
    boundary: str = WORD_BOUNDARY,
    inventory: ClsInventory | None = None,
) -> PrepResult:
    """Emit `id<TAB>target` lines for one flavor, in manifest order.

    CLS conversion is strict per utterance: one failing word sends the
    whole utterance to the error channel.
    """
    lines: list[str] = []
    errors: list[PrepRecord] = []
    warnings: list[PrepRecord] = []
    for utt in manifest:
        target = utt.transcript
        if not target.strip():
            warnings.append(PrepRecord(utt.utt_id, "transcript", "empty transcript"))
        if flavor.wants_cls:
            try:
                target = text_to_cls(
                    target,
                    utt.lang,
                    schwa=schwa,
                    geminate=geminate,
                    strict=True,
                    boundary=boundary,
                    inventory=inventory,
                ).text
            except Exception as exc:
                errors.append(PrepRecord(utt.utt_id, "cls", str(exc)))
                continue
        if flavor.wants_lid:
            try:
                target = inject_lid(utt.lang, target, scheme)
            except AlreadyTaggedError as exc:
                errors.append(PrepRecord(utt.utt_id, "lid", str(exc)))
                continue
        lines.append(f"{utt.utt_id}\t{target}")
    return PrepResult(flavor, lines, errors, warnings)


@dataclass(frozen=True)
class LangStats:
    lang: LanguageId | None  # None marks the totals row
    utterances: int
    duration_ms: int

    @property
    def hours(self) -> float:
        return self.duration_ms / 3_600_000

    @property
    def hours_display(self) -> int:
        # round half up for table display; exact value stays in duration_ms
        return int(self.hours + 0.5)


@dataclass(frozen=True)
class CorpusStats:
    rows: tuple[LangStats, ...]

    @property
    def total(self) -> LangStats:
        return LangStats(
            None,
            sum(r.utterances for r in self.rows),
            sum(r.duration_ms for r in self.rows),
        )


def corpus_stats(manifest: Manifest) -> CorpusStats:
    """Per-language utterance counts and durations, plus an exact total.

    Durations accumulate as integer milliseconds, so the totals row is
    the exact column sum regardless of summation order.
    """
    utts: dict[LanguageId, int] = {lang: 0 for lang in LanguageId}
    ms: dict[LanguageId, int] = {lang: 0 for lang in LanguageId}
    for utt in manifest:
        utts[utt.lang] += 1
        ms[utt.lang] += utt.duration_ms
    return CorpusStats(
        tuple(LangStats(lang, utts[lang], ms[lang]) for lang in LanguageId)
    )


def format_stats(stats: CorpusStats) -> str:
    rows = [("language", "hours", "utterances")]
    for r in stats.rows:
        rows.append((r.lang.value, str(r.hours_display), str(r.utterances)))
    total = stats.total
    rows.append(("total", str(total.hours_display), str(total.utterances)))
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    return "\n".join(
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in rows
    )
