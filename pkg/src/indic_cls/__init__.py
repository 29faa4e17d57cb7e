"""Common-label-set text processing for five Indic languages.

Hindi, Marathi, Gujarati, Bengali and Odia are written in four scripts
whose Unicode blocks share one slot layout.  This package exploits that
to map all of them onto a single phonetic label inventory (the common
label set, CLS) and back:

* ``script``  - normalization, script detection, offset transliteration
* ``akshara`` - orthographic-syllable segmentation
* ``cls``     - native script -> CLS labels (schwa deletion, geminates)
* ``native``  - CLS labels -> native script (rule inverse + lexicon)
* ``corpus``  - LID tags, manifests, training targets, duration stats
* ``scoring`` - WER/CER with alignments and comparison reports
"""

__version__ = "0.1.0"

from .akshara import (
    Akshara,
    NucleusKind,
    ParsedWord,
    classify_char,
    render_aksharas,
    segment_aksharas,
)
from .cls import (
    WORD_BOUNDARY,
    ClsInventory,
    ClsTextResult,
    ClsWord,
    SchwaRules,
    SyllableLabels,
    default_inventory,
    geminate_correct,
    schwa_delete,
    schwa_rules_for,
    text_to_cls,
    word_to_cls,
)
from .corpus import (
    DEFAULT_LID,
    LidScheme,
    Manifest,
    PrepResult,
    TargetFlavor,
    Utterance,
    corpus_stats,
    format_stats,
    inject_lid,
    load_manifest,
    parse_manifest,
    prep_corpus,
    strip_lid,
)
from .errors import IndicClsError
from .native import (
    Lexicon,
    NsFlag,
    NsResult,
    build_lexicon,
    cls_text_to_ns,
    cls_word_to_ns,
    load_lexicon,
    save_lexicon,
)
from .scoring import (
    Alignment,
    EditOp,
    ErrorRate,
    EvalReport,
    ReportRow,
    cer,
    edit_distance_alignment,
    render_report,
    report_from_score,
    score_corpus,
    wer,
)
from .script import (
    CharCategory,
    DetectionResult,
    LanguageId,
    ScriptId,
    detect_script,
    from_common_index,
    normalize,
    to_common_index,
    transliterate_offset,
)
from .wordgen import random_sentence, random_word, shared_slots

__all__ = [name for name in dir() if not name.startswith("_")]
