"""Mandarin front end: toned pinyin to subphoneme pitch plans.

Input is pre-segmented toned pinyin ("ni3hao3 ma5": spaces separate words,
tone digits 1-5 end syllables, a missing digit means neutral tone, "v"
writes the umlauted u).  Each syllable splits into initial + rime, expands
through the cmn rule set, and its vowel nucleus is subdivided so the tone
contour can be sampled per subphoneme.  Pitch values live on the model's
normalized scale and always stay within [-2.0, +2.0].
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import (InvalidSubdivisions, InvalidTone, InvalidToneDigit,
                     UnparsableSyllable)
from .phonemes import ARPA_VOWELS, PAUSE
from .rules import AnnotatedPhone, RuleSet, Token, apply_rules_traced

NEUTRAL_TONE = 5

# tone number -> five-point-scale contour; pitch = point - 3
TONE_POINTS = {1: (5, 5), 2: (2, 4), 3: (2, 1, 2), 4: (5, 2), 5: ()}

INITIALS = (
    "zh", "ch", "sh",
    "b", "p", "m", "f", "d", "t", "n", "l", "g", "k", "h",
    "j", "q", "x", "r", "z", "c", "s",
)

RIMES = frozenset({
    "a", "o", "e", "i", "u", "v", "er",
    "ai", "ei", "ao", "ou", "an", "en", "ang", "eng", "ong",
    "ia", "ie", "iao", "iu", "ian", "in", "iang", "ing", "iong",
    "ua", "uo", "uai", "ui", "uan", "un", "uang", "ueng",
    "ve", "van", "vn",
})

# syllables spelled with y/w rewrite to their zero-initial rime form
_YW_REWRITES = {
    "yi": "i", "ya": "ia", "ye": "ie", "yao": "iao", "you": "iu",
    "yan": "ian", "yin": "in", "yang": "iang", "ying": "ing", "yong": "iong",
    "yu": "v", "yue": "ve", "yuan": "van", "yun": "vn", "yo": "o",
    "wu": "u", "wa": "ua", "wo": "uo", "wai": "uai", "wei": "ui",
    "wan": "uan", "wen": "un", "wang": "uang", "weng": "ueng",
}


@dataclass
class ToneContour:
    tone: int
    points: tuple[int, ...]
    pitches: tuple[float, ...]


@dataclass
class SyllableSpec:
    pinyin: str
    initial: str
    rime: str
    tone: int
    word_initial: bool = False
    phones: tuple[AnnotatedPhone, ...] = ()
    nucleus_index: int = -1


@dataclass(frozen=True)
class PitchedPhone:
    """One phone with its subphoneme pitch samples; repeat = len(pitches)."""
    phone: AnnotatedPhone
    pitches: tuple[float, ...]

    @property
    def repeat(self) -> int:
        return len(self.pitches)


@dataclass
class MandarinConfig:
    subdivisions: int = 3
    max_pitch_jump: float = 2.0
    word_pause_duration: float = 0.3
    insert_word_pauses: bool = True


def tone_contour(tone: int) -> ToneContour:
    """Contour of a tone on the five-point scale, normalized to [-2, +2]."""
    if tone not in TONE_POINTS:
        raise InvalidTone(tone)
    points = TONE_POINTS[tone]
    if not points:
        return ToneContour(tone, (), (0.0,))
    return ToneContour(tone, points, tuple(float(p - 3) for p in points))


def _split_syllable(text: str, position: int) -> tuple[str, str]:
    for initial in INITIALS:  # list is longest-first where it matters
        if text.startswith(initial) and text[len(initial):] in RIMES:
            return initial, text[len(initial):]
    if text in RIMES:
        return "", text
    raise UnparsableSyllable(text, position)


def _split_neutral_run(text: str, position: int) -> list[str]:
    """Split an undigited letter run into syllables, longest match first."""
    if not text:
        return []
    for end in range(len(text), 0, -1):
        head = text[:end]
        norm = _YW_REWRITES.get(head, head)
        try:
            _split_syllable(norm, position)
        except UnparsableSyllable:
            continue
        try:
            return [head] + _split_neutral_run(text[end:], position + end)
        except UnparsableSyllable:
            continue
    raise UnparsableSyllable(text, position)


def parse_pinyin(text: str) -> list[SyllableSpec]:
    """Parse space-separated words of toned pinyin into syllable specs."""
    syllables: list[SyllableSpec] = []
    offset = 0
    for word in text.split():
        position = text.index(word, offset)
        offset = position + len(word)
        first_in_word = True
        for raw, tone, pos in _word_syllables(word, position):
            norm = _YW_REWRITES.get(raw, raw)
            initial, rime = _split_syllable(norm, pos)
            label = raw + (str(tone) if tone is not None else "")
            syllables.append(SyllableSpec(
                pinyin=label, initial=initial, rime=rime,
                tone=tone if tone is not None else NEUTRAL_TONE,
                word_initial=first_in_word))
            first_in_word = False
    return syllables


def _word_syllables(word: str, position: int):
    """Yield (letters, tone or None, position) per syllable of one word."""
    chunk_start = 0
    i = 0
    while i < len(word):
        ch = word[i]
        if ch.isdigit():
            chunk = word[chunk_start:i].lower()
            if not chunk:
                raise UnparsableSyllable(word, position + i)
            if ch not in "12345":
                raise InvalidToneDigit(ch, word)
            yield chunk, int(ch), position + chunk_start
            i += 1
            chunk_start = i
        elif ch == "'":
            # explicit syllable separator inside a word
            for part in _split_neutral_run(word[chunk_start:i].lower(),
                                           position + chunk_start):
                yield part, None, position + chunk_start
            i += 1
            chunk_start = i
        elif ch.isalpha():
            i += 1
        else:
            raise UnparsableSyllable(word, position + i)
    tail = word[chunk_start:].lower()
    if tail:
        for part in _split_neutral_run(tail, position + chunk_start):
            yield part, None, position + chunk_start


def expand_syllable(spec: SyllableSpec, rule_set: RuleSet,
                    syllable_id: int | None = None) -> SyllableSpec:
    """Fill in the ARPAbet expansion and nucleus index of one syllable.

    Neutral-tone syllables come out with every duration factor halved.
    """
    tokens = [Token(spec.initial)] if spec.initial else []
    tokens.append(Token(spec.rime))
    phones, fires = apply_rules_traced(tokens, rule_set)

    nucleus = -1
    for fire in fires:
        if fire.rule.nucleus_index is not None:
            nucleus = fire.emit_start + fire.rule.nucleus_index
    if nucleus < 0:
        vowels = [k for k, ph in enumerate(phones)
                  if ph.symbol in ARPA_VOWELS and ph.duration_factor > 0]
        nucleus = vowels[0] if vowels else len(phones) - 1

    scale = 0.5 if spec.tone == NEUTRAL_TONE else 1.0
    phones = [replace(ph, duration_factor=ph.duration_factor * scale,
                      syllable_id=syllable_id)
              for ph in phones]
    return replace(spec, phones=tuple(phones), nucleus_index=nucleus)


def _sample_contour(pitches: tuple[float, ...], fraction: float) -> float:
    """Piecewise-linear contour value at `fraction` in [0, 1]."""
    if len(pitches) == 1:
        return pitches[0]
    scaled = fraction * (len(pitches) - 1)
    left = min(int(scaled), len(pitches) - 2)
    t = scaled - left
    return pitches[left] + (pitches[left + 1] - pitches[left]) * t


def assign_pitch(spec: SyllableSpec, subdivisions: int = 3) -> list[PitchedPhone]:
    """Distribute the tone contour over one expanded syllable.

    Phones before the nucleus take the contour start pitch and phones after
    it the end pitch; the nucleus splits into `subdivisions` subphonemes
    sampled at fractions k/n along the contour.  Pauses carry pitch 0.
    """
    contour = tone_contour(spec.tone)
    minimum = max(2, len(contour.pitches) - 1)
    if subdivisions < minimum:
        raise InvalidSubdivisions(subdivisions, minimum)
    if not spec.phones:
        return []
    start, end = contour.pitches[0], contour.pitches[-1]
    plan: list[PitchedPhone] = []
    for index, phone in enumerate(spec.phones):
        if phone.symbol == PAUSE:
            plan.append(PitchedPhone(phone, (0.0,)))
        elif index < spec.nucleus_index:
            plan.append(PitchedPhone(phone, (start,)))
        elif index > spec.nucleus_index:
            plan.append(PitchedPhone(phone, (end,)))
        else:
            samples = tuple(
                _sample_contour(contour.pitches, k / subdivisions)
                for k in range(1, subdivisions + 1))
            plan.append(PitchedPhone(phone, samples))
    return plan


def _edge_index(syl: list[PitchedPhone], last: bool) -> int | None:
    order = reversed(range(len(syl))) if last else range(len(syl))
    for k in order:
        if syl[k].phone.symbol != PAUSE:
            return k
    return None


def _set_pitch(item: PitchedPhone, sample: int, value: float) -> PitchedPhone:
    pitches = list(item.pitches)
    pitches[sample] = value
    return PitchedPhone(item.phone, tuple(pitches))


def smooth_boundaries(syllables: list[list[PitchedPhone]],
                      max_jump: float = 2.0) -> list[list[PitchedPhone]]:
    """Shrink cross-syllable pitch jumps larger than `max_jump`.

    Both boundary subphonemes move symmetrically toward their mutual mean
    until the gap equals exactly `max_jump`; all other pitch samples are
    untouched.  Pauses carry no pitch and are smoothed across.  The
    operation is idempotent because every adjusted gap lands on the
    threshold and each boundary owns its two samples exclusively.
    """
    out = [list(syl) for syl in syllables]
    for i in range(len(out) - 1):
        a_idx = _edge_index(out[i], last=True)
        b_idx = _edge_index(out[i + 1], last=False)
        if a_idx is None or b_idx is None:
            continue
        a = out[i][a_idx].pitches[-1]
        b = out[i + 1][b_idx].pitches[0]
        gap = b - a
        if abs(gap) <= max_jump:
            continue
        mean = (a + b) / 2.0
        half = max_jump / 2.0 if gap > 0 else -max_jump / 2.0
        out[i][a_idx] = _set_pitch(out[i][a_idx], -1, mean - half)
        out[i + 1][b_idx] = _set_pitch(out[i + 1][b_idx], 0, mean + half)
    return out


def insert_word_pauses(syllables: list[list[PitchedPhone]],
                       specs: list[SyllableSpec],
                       pause_duration_factor: float = 0.3) -> list[PitchedPhone]:
    """Flatten syllable plans, inserting a pause at each word boundary."""
    stream: list[PitchedPhone] = []
    for index, (plan, spec) in enumerate(zip(syllables, specs)):
        if index > 0 and spec.word_initial:
            pause = AnnotatedPhone(PAUSE, pause_duration_factor)
            stream.append(PitchedPhone(pause, (0.0,)))
        stream.extend(plan)
    return stream


def compile_pinyin(text: str, rule_set: RuleSet,
                   config: MandarinConfig | None = None) -> list[PitchedPhone]:
    """Full pipeline: parse, expand, assign tone pitch, smooth, add pauses."""
    config = config or MandarinConfig()
    specs = [expand_syllable(spec, rule_set, syllable_id=i)
             for i, spec in enumerate(parse_pinyin(text))]
    plans = [assign_pitch(spec, config.subdivisions) for spec in specs]
    plans = smooth_boundaries(plans, config.max_pitch_jump)
    if config.insert_word_pauses:
        return insert_word_pauses(plans, specs, config.word_pause_duration)
    return [item for plan in plans for item in plan]
