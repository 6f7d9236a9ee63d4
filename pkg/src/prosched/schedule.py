"""Prosody schedules: the artifact's output contract.

A ProsodySchedule is an ordered list of entries, one per phoneme, each
carrying a repeat count (how many encoder-state copies the consumer should
make) plus per-subphoneme duration scales and pitch/energy offsets.
Durations are multiplicative on the model's predictions; pitch and energy
offsets are additive in the model's normalized units.

Serialization is canonical JSON under the fixed version tag "present/1":
``{version, language, source_text, entries: [{symbol, repeat,
duration_scale, pitch_offset, energy_offset}]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields, replace

from . import aligner
from .errors import (EmptyText, NoVowelInWord, SchemaViolation,
                     VersionMismatch, WordNotFound)
from .lexicon import Lexicon
from .mandarin import PitchedPhone
from .markup import EffectKind, EffectSpan
from .phonemes import ARPA_VOWELS, SCHEDULE_SYMBOLS, strip_stress
from .rules import AnnotatedPhone

VERSION = "present/1"
LANGUAGES = ("en", "de", "hu", "es", "cmn")

WH_WORDS = frozenset({
    "what", "who", "whom", "whose", "where", "when", "why", "which", "how",
})


@dataclass(frozen=True)
class ScheduleEntry:
    symbol: str
    repeat: int = 1
    duration_scale: tuple[float, ...] = (1.0,)
    pitch_offset: tuple[float, ...] = (0.0,)
    energy_offset: tuple[float, ...] = (0.0,)

    def __post_init__(self):
        if self.symbol not in SCHEDULE_SYMBOLS:
            raise SchemaViolation("entry.symbol", f"unknown symbol {self.symbol!r}")
        if self.repeat < 1:
            raise SchemaViolation("entry.repeat", "repeat must be >= 1")
        for name in ("duration_scale", "pitch_offset", "energy_offset"):
            vec = tuple(float(v) for v in getattr(self, name))
            object.__setattr__(self, name, vec)
            if len(vec) != self.repeat:
                raise SchemaViolation(
                    f"entry.{name}", f"length {len(vec)} != repeat {self.repeat}")
        if any(d < 0 for d in self.duration_scale):
            raise SchemaViolation("entry.duration_scale", "negative duration scale")

    @property
    def is_neutral(self) -> bool:
        return (self.repeat == 1 and self.duration_scale == (1.0,)
                and self.pitch_offset == (0.0,) and self.energy_offset == (0.0,))


@dataclass(frozen=True)
class WordEntrySpan:
    """Which schedule entries belong to one source word."""
    word: str
    entry_start: int
    entry_end: int


@dataclass(frozen=True)
class ProsodySchedule:
    language: str
    entries: tuple[ScheduleEntry, ...]
    source_text: str = ""
    version: str = VERSION
    word_map: tuple[WordEntrySpan, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.language not in LANGUAGES:
            raise SchemaViolation("language", f"unknown language {self.language!r}")

    @property
    def is_neutral(self) -> bool:
        return all(entry.is_neutral for entry in self.entries)


@dataclass
class EffectPolicy:
    """Numeric magnitudes for the English text effects.

    The markup layer reports raw counts only; these knobs decide what a
    count is worth.  Durations are multiplicative, pitch/energy additive.
    Elongation scale: 1 + elongation_gain * (extra letters beyond the first),
    capped at elongation_cap; with pitch marks present the vowel splits into
    min(magnitude, split_cap) subphonemes.
    """
    emphasis_energy: float = 1.0
    emphasis_pitch: float = 0.5
    elongation_gain: float = 0.5
    elongation_cap: float = 4.0
    mark_pitch: float = 0.5
    accent_low: float = -0.5
    accent_high: float = 1.0
    split_cap: int = 5

    @classmethod
    def from_file(cls, stream, base: "EffectPolicy | None" = None) -> "EffectPolicy":
        """Read ``key = value`` lines; unknown keys raise SchemaViolation.

        Settings land on a copy of `base` (defaults when omitted), so
        multiple sources stack instead of resetting each other.
        """
        if isinstance(stream, (bytes, bytearray)):
            stream = stream.decode("utf-8")
        if isinstance(stream, str):
            lines = stream.splitlines()
        else:
            lines = [line.rstrip("\n") for line in stream]
        policy = replace(base) if base is not None else cls()
        known = {f.name: f.type for f in fields(cls)}
        for line in lines:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SchemaViolation("policy", f"expected key = value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in known:
                raise SchemaViolation(f"policy.{key}", "unknown policy key")
            cast = int if key == "split_cap" else float
            try:
                setattr(policy, key, cast(value.strip()))
            except ValueError:
                raise SchemaViolation(f"policy.{key}", f"bad value {value.strip()!r}") from None
        return policy


# -- construction helpers -------------------------------------------------------


class _EntryDraft:
    """Mutable working form of a ScheduleEntry."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        self.repeat = 1
        self.duration = [1.0]
        self.pitch = [0.0]
        self.energy = [0.0]

    def split(self, repeat: int) -> None:
        if repeat <= self.repeat:
            return
        self.duration = _respan(self.duration, repeat)
        self.pitch = _respan(self.pitch, repeat)
        self.energy = _respan(self.energy, repeat)
        self.repeat = repeat

    def freeze(self) -> ScheduleEntry:
        return ScheduleEntry(self.symbol, self.repeat, tuple(self.duration),
                             tuple(self.pitch), tuple(self.energy))


def _respan(values: list[float], repeat: int) -> list[float]:
    """Stretch a per-subphoneme vector to a new repeat count."""
    if len(values) == 1:
        return values * repeat
    return [values[min(int(k * len(values) / repeat), len(values) - 1)]
            for k in range(repeat)]


def _ramp(low: float, high: float, count: int) -> list[float]:
    if count == 1:
        return [high]
    return [low + (high - low) * k / (count - 1) for k in range(count)]


def _rise_fall(peak: float, end: float, count: int) -> list[float]:
    """Sample the piecewise-linear path 0 -> peak (at 1/2) -> end at k/count."""
    out = []
    for k in range(1, count + 1):
        t = k / count
        if t <= 0.5:
            out.append(peak * (t / 0.5))
        else:
            out.append(peak + (end - peak) * ((t - 0.5) / 0.5))
    return out


# -- English pipeline ------------------------------------------------------------


def _words_with_spans(text: str) -> list[tuple[str, int, int]]:
    words = []
    i = 0
    while i < len(text):
        if text[i].isalpha() or text[i] == "'":
            j = i
            while j < len(text) and (text[j].isalpha() or text[j] == "'"):
                j += 1
            words.append((text[i:j], i, j))
            i = j
        else:
            i += 1
    return words


def build_english(clean_text: str, effects: list[EffectSpan], lexicon: Lexicon,
                  mappings, policy: EffectPolicy | None = None) -> ProsodySchedule:
    """Compile clean English text plus effect spans into a schedule.

    Words come from the lexicon (first pronunciation); sub-word effects are
    projected onto phonemes through the grapheme aligner.  Raises
    WordNotFound listing every out-of-vocabulary word, EmptyText for no
    words at all.
    """
    policy = policy or EffectPolicy()
    if not clean_text.strip():
        raise EmptyText("no words in input")
    words = _words_with_spans(clean_text)
    if not words:
        raise EmptyText("no words in input")

    missing = [w for w, _, _ in words if w.lower().strip("'") not in lexicon]
    if missing:
        raise WordNotFound(missing)

    drafts: list[_EntryDraft] = []
    word_spans: list[WordEntrySpan] = []
    alignments: list[aligner.Alignment] = []
    for word, _, _ in words:
        key = word.lower().strip("'")
        pron = tuple(strip_stress(s) for s in lexicon.lookup(key)[0])
        alignment = aligner.align(key, pron, mappings)
        start = len(drafts)
        drafts.extend(_EntryDraft(sym) for sym in pron)
        word_spans.append(WordEntrySpan(key, start, len(drafts)))
        alignments.append(alignment)

    def word_at(pos: int) -> int | None:
        for idx, (word, s, e) in enumerate(words):
            if s <= pos < e:
                return idx
        return None

    def project(effect: EffectSpan, idx: int) -> list[int]:
        word, s, e = words[idx]
        lo = max(effect.char_start, s) - s
        hi = min(effect.char_end, e) - s
        # strip_stress'd key may be shorter than the raw word (apostrophes)
        hi = min(hi, len(word.lower().strip("'")))
        if lo >= hi:
            return []
        span = word_spans[idx]
        local = aligner.project_span(alignments[idx], (lo, hi))
        return [span.entry_start + k for k in sorted(local)]

    elongated: dict[int, int] = {}  # entry index -> magnitude
    marked: dict[int, list[EffectSpan]] = {}

    for effect in effects:
        if effect.kind == EffectKind.EMPHASIS:
            for idx, (word, s, e) in enumerate(words):
                if effect.char_start < e and s < effect.char_end:
                    span = word_spans[idx]
                    for draft in drafts[span.entry_start:span.entry_end]:
                        draft.energy = [v + policy.emphasis_energy for v in draft.energy]
                        draft.pitch = [v + policy.emphasis_pitch for v in draft.pitch]
        elif effect.kind == EffectKind.ELONGATION:
            idx = word_at(effect.char_start)
            if idx is None:
                continue
            targets = project(effect, idx)
            vowel = _first_vowel(drafts, targets) or _nearest_vowel(drafts, word_spans[idx], targets)
            if vowel is None:
                continue
            base = effect.char_end - effect.char_start
            extra = max(0, effect.magnitude - base - 1)
            scale = min(1.0 + policy.elongation_gain * extra, policy.elongation_cap)
            drafts[vowel].duration = [scale] * drafts[vowel].repeat
            elongated[vowel] = effect.magnitude
        elif effect.kind in (EffectKind.PITCH_UP, EffectKind.PITCH_DOWN):
            idx = word_at(effect.char_start)
            if idx is None:
                continue
            targets = project(effect, idx)
            vowel = _first_vowel(drafts, targets)
            if vowel is None:
                continue
            marked.setdefault(vowel, []).append(effect)

    # pitch marks: constant offset on a plain vowel, contour on an elongated one
    for vowel, marks in marked.items():
        ups = [m for m in marks if m.kind == EffectKind.PITCH_UP]
        downs = [m for m in marks if m.kind == EffectKind.PITCH_DOWN]
        if vowel in elongated:
            repeat = min(elongated[vowel], policy.split_cap)
            drafts[vowel].split(max(repeat, 2))
            peak = policy.mark_pitch * sum(m.magnitude for m in ups)
            dip = -policy.mark_pitch * sum(m.magnitude for m in downs)
            if ups and downs:
                contour = _rise_fall(peak, dip, drafts[vowel].repeat)
            elif ups:
                contour = _ramp(0.0, peak, drafts[vowel].repeat)
            else:
                contour = _ramp(0.0, dip, drafts[vowel].repeat)
            drafts[vowel].pitch = [p + c for p, c in zip(drafts[vowel].pitch, contour)]
        else:
            delta = (policy.mark_pitch * sum(m.magnitude for m in ups)
                     - policy.mark_pitch * sum(m.magnitude for m in downs))
            drafts[vowel].pitch = [p + delta for p in drafts[vowel].pitch]

    schedule = ProsodySchedule(
        language="en",
        entries=tuple(draft.freeze() for draft in drafts),
        source_text=clean_text,
        word_map=tuple(word_spans))

    for effect in effects:
        if effect.kind == EffectKind.QUESTION:
            indices = [idx for idx, (w, s, e) in enumerate(words)
                       if effect.char_start < e and s < effect.char_end]
            schedule = apply_question_accent(schedule, indices, policy)
    return schedule


def _first_vowel(drafts, indices) -> int | None:
    for k in indices:
        if drafts[k].symbol in ARPA_VOWELS:
            return k
    return None


def _nearest_vowel(drafts, span: WordEntrySpan, targets) -> int | None:
    """Closest vowel entry in the word to the projected target indices."""
    vowels = [k for k in range(span.entry_start, span.entry_end)
              if drafts[k].symbol in ARPA_VOWELS]
    if not vowels:
        return None
    if not targets:
        return vowels[0]
    anchor = targets[0]
    return min(vowels, key=lambda k: abs(k - anchor))


def apply_question_accent(schedule: ProsodySchedule, question_words: list[int],
                          policy: EffectPolicy | None = None) -> ProsodySchedule:
    """Low-to-high accent on the locus of interrogation and the final word.

    `question_words` indexes the schedule's word map.  The locus is the
    first wh-word among them, or the final word when none is present.
    """
    policy = policy or EffectPolicy()
    if schedule.word_map is None or not question_words:
        return schedule
    words = schedule.word_map
    locus = next((k for k in question_words if words[k].word in WH_WORDS),
                 question_words[-1])
    accent_targets = {locus, question_words[-1]}

    entries = [_thaw(e) for e in schedule.entries]
    for idx in accent_targets:
        span = words[idx]
        vowels = [k for k in range(span.entry_start, span.entry_end)
                  if entries[k].symbol in ARPA_VOWELS]
        if not vowels:
            raise NoVowelInWord(span.word)
        target = entries[vowels[-1]]
        target.split(max(target.repeat, 2))
        ramp = _ramp(policy.accent_low, policy.accent_high, target.repeat)
        target.pitch = [p + r for p, r in zip(target.pitch, ramp)]
    return replace(schedule, entries=tuple(e.freeze() for e in entries))


def _thaw(entry: ScheduleEntry) -> _EntryDraft:
    draft = _EntryDraft(entry.symbol)
    draft.repeat = entry.repeat
    draft.duration = list(entry.duration_scale)
    draft.pitch = list(entry.pitch_offset)
    draft.energy = list(entry.energy_offset)
    return draft


# -- transfer / mandarin ingestion ---------------------------------------------


def from_annotated(phones, language: str, source_text: str = "") -> ProsodySchedule:
    """Build a schedule from an AnnotatedPhone stream or a Mandarin pitch plan.

    Plain phones become repeat-1 entries; PitchedPhones expand to one
    subphoneme per pitch sample, with the rule's own pitch change added on
    top of the tone samples.
    """
    entries = []
    for item in phones:
        if isinstance(item, PitchedPhone):
            phone = item.phone
            repeat = item.repeat
            pitches = tuple(phone.pitch_change + p for p in item.pitches)
        else:
            phone = item
            repeat = 1
            pitches = (phone.pitch_change,)
        entries.append(ScheduleEntry(
            symbol=phone.symbol,
            repeat=repeat,
            duration_scale=(float(phone.duration_factor),) * repeat,
            pitch_offset=pitches,
            energy_offset=(phone.energy_change,) * repeat))
    return ProsodySchedule(language=language, entries=tuple(entries),
                           source_text=source_text)


# -- serialization -----------------------------------------------------------------


def serialize(schedule: ProsodySchedule) -> bytes:
    """Canonical JSON bytes; deserialize(serialize(s)) == s."""
    doc = {
        "version": schedule.version,
        "language": schedule.language,
        "source_text": schedule.source_text,
        "entries": [
            {
                "symbol": e.symbol,
                "repeat": e.repeat,
                "duration_scale": list(e.duration_scale),
                "pitch_offset": list(e.pitch_offset),
                "energy_offset": list(e.energy_offset),
            }
            for e in schedule.entries
        ],
    }
    return (json.dumps(doc, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def _require(doc: dict, key: str, kind, path: str):
    if key not in doc:
        raise SchemaViolation(f"{path}.{key}", "missing field")
    value = doc[key]
    if not isinstance(value, kind):
        raise SchemaViolation(f"{path}.{key}", f"expected {kind.__name__}")
    return value


def _float_vector(value, path: str) -> tuple[float, ...]:
    if not isinstance(value, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
        raise SchemaViolation(path, "expected a list of numbers")
    return tuple(float(v) for v in value)


def deserialize(data: bytes | str) -> ProsodySchedule:
    """Parse schedule JSON, validating the schema with precise error paths."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaViolation("$", f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaViolation("$", "top level must be an object")
    version = _require(doc, "version", str, "$")
    if version != VERSION:
        raise VersionMismatch(version, VERSION)
    language = _require(doc, "language", str, "$")
    source_text = _require(doc, "source_text", str, "$")
    raw_entries = _require(doc, "entries", list, "$")
    entries = []
    for i, raw in enumerate(raw_entries):
        path = f"entries[{i}]"
        if not isinstance(raw, dict):
            raise SchemaViolation(path, "expected an object")
        symbol = _require(raw, "symbol", str, path)
        repeat = _require(raw, "repeat", int, path)
        if isinstance(repeat, bool):
            raise SchemaViolation(f"{path}.repeat", "expected int")
        try:
            entries.append(ScheduleEntry(
                symbol=symbol,
                repeat=repeat,
                duration_scale=_float_vector(raw.get("duration_scale"),
                                             f"{path}.duration_scale"),
                pitch_offset=_float_vector(raw.get("pitch_offset"),
                                           f"{path}.pitch_offset"),
                energy_offset=_float_vector(raw.get("energy_offset"),
                                            f"{path}.energy_offset")))
        except SchemaViolation as exc:
            suffix = exc.path.removeprefix("entry.")
            raise SchemaViolation(f"{path}.{suffix}", exc.reason) from None
    if language not in LANGUAGES:
        raise SchemaViolation("$.language", f"unknown language {language!r}")
    return ProsodySchedule(language=language, entries=tuple(entries),
                           source_text=source_text)
