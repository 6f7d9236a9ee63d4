"""Prosodic-markup extraction from raw English text.

Recognized markup, all of which is removed from the clean text:

* CAPS words (length >= 2, not on the acronym list) and ``*asterisk*``
  delimited words mark emphasis.
* A run of three or more identical letters, or tildes following a letter,
  marks elongation; the run collapses back to the dictionary spelling and
  the magnitude records letter count plus tilde count.
* ``^`` / ``_`` runs immediately before a letter mark a pitch rise / drop
  of that many steps on the letters that follow.
* A sentence-terminal ``?`` marks the sentence as a question.

Only raw counts are reported here; converting magnitudes into
duration/pitch/energy numbers is schedule policy.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import EmptyInput, UnbalancedDelimiter

MARKUP_CHARS = set("*~_^?")


class EffectKind(enum.Enum):
    EMPHASIS = "emphasis"
    ELONGATION = "elongation"
    PITCH_UP = "pitch_up"
    PITCH_DOWN = "pitch_down"
    QUESTION = "question"


@dataclass(frozen=True)
class EffectSpan:
    kind: EffectKind
    char_start: int  # into clean text, inclusive
    char_end: int    # exclusive
    magnitude: int = 1


def parse_markup(raw_text: str, lexicon=None,
                 acronyms: frozenset[str] = frozenset()):
    """Split raw text into clean text plus a list of EffectSpans.

    `lexicon` (anything supporting ``in``) guides repeated-letter collapse;
    `acronyms` lists CAPS words that are spelling, not emphasis.  Raises
    EmptyInput for blank input and UnbalancedDelimiter for an odd number of
    ``*`` inside one whitespace-delimited group.
    """
    if not raw_text or not raw_text.strip():
        raise EmptyInput("no text to parse")
    scanner = _Scanner(raw_text, lexicon, acronyms)
    return scanner.run()


class _Scanner:
    def __init__(self, raw: str, lexicon, acronyms: frozenset[str]):
        self.raw = raw
        self.lexicon = lexicon
        self.acronyms = acronyms
        self.clean: list[str] = []
        self.effects: list[EffectSpan] = []
        self.sentence_start = 0

    def run(self):
        for group, is_space in self._groups():
            if is_space:
                self.clean.extend(group)
            else:
                self._group(group)
        text = "".join(self.clean)
        effects = [e for e in self.effects if _has_alpha(text, e)]
        effects = _merge_overlaps(effects)
        effects.sort(key=lambda e: (e.char_start, e.kind.value, e.char_end))
        return text, effects

    def _groups(self):
        raw, i = self.raw, 0
        while i < len(raw):
            is_space = raw[i].isspace()
            j = i
            while j < len(raw) and raw[j].isspace() == is_space:
                j += 1
            yield raw[i:j], is_space
            i = j

    # -- one whitespace-delimited group ------------------------------------

    def _group(self, group: str) -> None:
        if group.count("*") % 2 == 1:
            raise UnbalancedDelimiter(group)
        letters = [ch for ch in group if ch.isalpha()]
        caps = (len(letters) >= 2 and all(ch.isupper() for ch in letters)
                and "".join(letters) not in self.acronyms)

        out = self.clean
        group_start = len(out)
        emphasis_open: int | None = None
        # pitch marks waiting for their letter span: (kind, count, clean start)
        open_marks: list[tuple[EffectKind, int, int]] = []
        in_word = False

        def close_word():
            nonlocal in_word
            if in_word:
                for kind, count, start in open_marks:
                    self.effects.append(EffectSpan(kind, start, len(out), count))
                open_marks.clear()
                in_word = False

        i = 0
        while i < len(group):
            ch = group[i]
            if ch.isalpha():
                in_word = True
                i = self._letter_run(group, i, caps)
            elif ch in "^_":
                # pitch marks extend the pending set; they close a word only
                # when something other than marks or letters follows
                kind = EffectKind.PITCH_UP if ch == "^" else EffectKind.PITCH_DOWN
                count = 0
                while i < len(group) and group[i] == ch:
                    count += 1
                    i += 1
                open_marks.append((kind, count, len(out)))
            elif ch == "*":
                close_word()
                if emphasis_open is None:
                    emphasis_open = len(out)
                else:
                    self.effects.append(
                        EffectSpan(EffectKind.EMPHASIS, emphasis_open, len(out)))
                    emphasis_open = None
                i += 1
            elif ch == "?":
                close_word()
                while i < len(group) and group[i] == "?":
                    i += 1
                self._question(len(out))
            elif ch == "~":
                i += 1  # stray tilde with no preceding letter
            else:
                close_word()
                out.append(ch)
                if ch in ".!":
                    self.sentence_start = len(out)
                i += 1
        close_word()
        if emphasis_open is not None:
            self.effects.append(
                EffectSpan(EffectKind.EMPHASIS, emphasis_open, len(out)))
        if caps:
            start, end = _trim_to_alpha("".join(out), group_start, len(out))
            if start < end:
                self.effects.append(EffectSpan(EffectKind.EMPHASIS, start, end))

    def _letter_run(self, group: str, i: int, caps: bool) -> int:
        """Consume one same-letter run (with interspersed tildes); return new i.

        Letters already sitting at the clean tail of the same word merge
        into the run: removing markup ("aa?a") must not leave a fresh
        triple behind, or a second parse would collapse it (idempotence).
        """
        out = self.clean
        letter = group[i]
        run_letters = 0
        tildes = 0
        j = i
        while j < len(group) and (group[j] == letter or group[j] == "~"):
            if group[j] == "~":
                tildes += 1
            else:
                run_letters += 1
            j += 1

        # match against the form the run will emit (caps words emit
        # lowercase); mixed case never merges, mirroring the run scanner,
        # so mixed-case adjacency survives re-parsing unchanged
        emitted = letter.lower() if caps else letter
        tail = 0
        while tail < len(out) and out[-1 - tail] == emitted:
            tail += 1
        combined = run_letters + tail
        run_start = len(out) - tail

        keep = combined
        if combined >= 3:
            k = run_start
            while k > 0 and out[k - 1].isalpha():
                k -= 1
            before = "".join(out[k:run_start])
            rest = "".join(c for c in group[j:] if c.isalpha())
            keep = self._collapse(before, letter, rest)
        if keep < tail:
            del out[run_start + keep:]
            self._clamp_effects(len(out))
        out.extend(emitted * max(0, keep - tail))
        if combined >= 3 or tildes > 0:
            self.effects.append(EffectSpan(
                EffectKind.ELONGATION, run_start, run_start + keep,
                combined + tildes))
        return j

    def _clamp_effects(self, new_len: int) -> None:
        self.effects = [
            EffectSpan(e.kind, min(e.char_start, new_len),
                       min(e.char_end, new_len), e.magnitude)
            for e in self.effects]
        self.sentence_start = min(self.sentence_start, new_len)

    def _collapse(self, before: str, letter: str, rest: str) -> int:
        """Letters to keep for a >=3 run: dictionary form, ties to shorter."""
        for keep in (1, 2):
            form = (before + letter * keep + rest).lower()
            if self.lexicon is not None and form in self.lexicon:
                return keep
        return 1

    def _question(self, end: int) -> None:
        text = "".join(self.clean)
        start = self.sentence_start
        while start < end and not text[start].isalpha():
            start += 1
        if start < end:
            self.effects.append(EffectSpan(EffectKind.QUESTION, start, end))
        self.sentence_start = end


def _has_alpha(text: str, e: EffectSpan) -> bool:
    return any(text[k].isalpha() for k in range(e.char_start, e.char_end))


def _trim_to_alpha(text: str, start: int, end: int) -> tuple[int, int]:
    while start < end and not text[start].isalpha():
        start += 1
    while end > start and not text[end - 1].isalpha():
        end -= 1
    return start, end


def _merge_overlaps(effects: list[EffectSpan]) -> list[EffectSpan]:
    """Union overlapping spans of the same kind (keeps the max magnitude)."""
    merged: list[EffectSpan] = []
    for e in sorted(effects, key=lambda s: (s.kind.value, s.char_start, s.char_end)):
        if (merged and merged[-1].kind == e.kind
                and e.char_start < merged[-1].char_end):
            prev = merged.pop()
            e = EffectSpan(e.kind, prev.char_start,
                           max(prev.char_end, e.char_end),
                           max(prev.magnitude, e.magnitude))
        merged.append(e)
    return merged
