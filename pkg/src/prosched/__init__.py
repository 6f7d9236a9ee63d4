"""Prosody schedule compiler: text/IPA/pinyin to duration-pitch-energy schedules."""

from .aligner import Alignment, align, project_span
from .lexicon import Lexicon, lint_dictionary, load_lexicon, load_mappings
from .mandarin import compile_pinyin, parse_pinyin, tone_contour
from .markup import EffectKind, EffectSpan, parse_markup
from .rules import RuleSet, apply_rules, convert_ipa, load_rules, tokenize_ipa
from .schedule import (EffectPolicy, ProsodySchedule, ScheduleEntry,
                       apply_question_accent, build_english, deserialize,
                       from_annotated, serialize)

__version__ = "0.1.0"

__all__ = [
    "Alignment", "align", "project_span",
    "Lexicon", "lint_dictionary", "load_lexicon", "load_mappings",
    "compile_pinyin", "parse_pinyin", "tone_contour",
    "EffectKind", "EffectSpan", "parse_markup",
    "RuleSet", "apply_rules", "convert_ipa", "load_rules", "tokenize_ipa",
    "EffectPolicy", "ProsodySchedule", "ScheduleEntry",
    "apply_question_accent", "build_english", "deserialize",
    "from_annotated", "serialize",
]
