"""Pronouncing-dictionary and grapheme-mapping-table ingestion.

The dictionary format is CMU-dict text: one ``WORD  PH1 PH2 ...`` entry per
line, ``;;;`` comment lines, and ``WORD(2)`` style alternate pronunciations
that merge under the base key.  The mapping table is one allowed
grapheme-to-phoneme rewrite per line, tab separated, with ``_`` standing for
the empty side.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

from . import aligner
from .errors import BothSidesEmpty, MalformedLine, NotFound, UnknownSymbol
from .phonemes import ARPABET, PAUSE, strip_stress

Pron = tuple[str, ...]


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    pronunciations: tuple[Pron, ...]


@dataclass
class Lexicon:
    entries: dict[str, LexiconEntry] = field(default_factory=dict)
    stress_retained: bool = False

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, word: str) -> tuple[Pron, ...]:
        """All pronunciations of `word`; raises NotFound for unknown words."""
        entry = self.entries.get(word.lower())
        if entry is None:
            raise NotFound(word)
        return entry.pronunciations

    def get(self, word: str) -> tuple[Pron, ...] | None:
        entry = self.entries.get(word.lower())
        return entry.pronunciations if entry else None

    def __eq__(self, other) -> bool:
        return isinstance(other, Lexicon) and self.entries == other.entries


def _decode(source) -> io.TextIOBase:
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, str):
        return io.StringIO(source)
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8")


def load_lexicon(source, format: str = "cmudict", *,
                 retain_stress: bool = False) -> Lexicon:
    """Parse a pronouncing-dictionary stream into a Lexicon.

    Only the CMU-dict text format is supported.  Stress digits are
    stripped unless `retain_stress`; alternate pronunciations merge under
    the base headword, case-folded.
    """
    if format != "cmudict":
        raise ValueError(f"unsupported dictionary format {format!r}")
    lex = Lexicon(stress_retained=retain_stress)
    prons: dict[str, list[Pron]] = {}
    for line_no, raw in enumerate(_decode(source), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise MalformedLine(line_no, line, "expected word and phonemes")
        head, symbols = parts[0], parts[1:]
        word = head.lower()
        if word.endswith(")") and "(" in word:
            base, _, variant = word.partition("(")
            if not variant[:-1].isdigit():
                raise MalformedLine(line_no, line, "bad alternate marker")
            word = base
        if not word:
            raise MalformedLine(line_no, line, "empty headword")
        pron = []
        for sym in symbols:
            bare = strip_stress(sym)
            if bare not in ARPABET and bare != PAUSE:
                raise UnknownSymbol(sym, line_no)
            pron.append(sym if retain_stress else bare)
        prons.setdefault(word, []).append(tuple(pron))
    for word, plist in prons.items():
        lex.entries[word] = LexiconEntry(word, tuple(plist))
    return lex


def dump_lexicon(lexicon: Lexicon) -> str:
    """Serialize back to CMU-dict text; re-loading is a fixed point."""
    lines = []
    for word in sorted(lexicon.entries):
        for idx, pron in enumerate(lexicon.entries[word].pronunciations):
            head = word.upper() if idx == 0 else f"{word.upper()}({idx + 1})"
            lines.append(f"{head}  {' '.join(pron)}")
    return "\n".join(lines) + "\n"


def load_mappings(source) -> frozenset[tuple[str, Pron]]:
    """Parse the allowed grapheme-phoneme mapping table.

    One mapping per line: graphemes, a tab, then the phoneme list; ``_``
    denotes the empty side.  Duplicates collapse.
    """
    mappings: set[tuple[str, Pron]] = set()
    for line_no, raw in enumerate(_decode(source), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if "\t" not in line:
            raise MalformedLine(line_no, line, "expected TAB between graphemes and phonemes")
        left, right = line.split("\t", 1)
        graphemes = "" if left.strip() == "_" else left.strip().lower()
        right = right.strip()
        if right == "_" or not right:
            phonemes: Pron = ()
        else:
            phonemes = tuple(right.split())
            for sym in phonemes:
                if sym not in ARPABET and sym != PAUSE:
                    raise UnknownSymbol(sym, line_no)
        if not graphemes and not phonemes:
            raise BothSidesEmpty(line_no)
        if len(graphemes) > aligner.MAX_GRAPHEME_SIDE:
            raise MalformedLine(line_no, line, "grapheme side longer than 4")
        if len(phonemes) > aligner.MAX_PHONEME_SIDE:
            raise MalformedLine(line_no, line, "phoneme side longer than 3")
        mappings.add((graphemes, phonemes))
    return frozenset(mappings)


def lint_dictionary(lexicon: Lexicon, mappings) -> list[tuple[str, Pron, aligner.Alignment, int]]:
    """Entries whose least-cost alignment is positive: candidate dictionary errors.

    Sorted by descending cost, then word, so the most suspicious entries
    come first.
    """
    report = []
    for word, entry in lexicon.entries.items():
        for pron in entry.pronunciations:
            bare = tuple(strip_stress(s) for s in pron)
            result = aligner.align(word, bare, mappings)
            if result.cost > 0:
                report.append((word, pron, result, result.cost))
    report.sort(key=lambda item: (-item[3], item[0]))
    return report
