"""Grapheme-to-phoneme alignment by dynamic programming.

Finds a monotone partition of a grapheme string and a phoneme sequence into
pairs, using only pairs from an allowed mapping table where possible and
falling back to least-cost single-unit substitutions, insertions and
deletions otherwise.

Cost model: a pair from the allowed table costs 0; a disallowed pair costs
max(len(grapheme side), len(phoneme side)).  The search space only ever
builds disallowed pairs of single units (one grapheme, one phoneme, or one
of each), which is cost-neutral: any larger disallowed chunk decomposes
into single units at the same total cost.  (A flat unit-cost-per-pair
model would be the obvious alternative; it was rejected because chunky
disallowed pairs would then undercut their own decomposition, e.g. a
two-letter chunk against one phoneme would cost 1 instead of 2.)

Tie-breaking among equal-cost alignments, in order:
  1. maximise the units (graphemes + phonemes) covered by allowed pairs,
  2. at the leftmost divergence, prefer the pair consuming more phonemes,
  3. then the pair consuming more graphemes (greedy-longest),
  4. then the lexicographically smallest (graphemes, phonemes) pair.
Rules 2-4 make the output deterministic; rules 1-3 are what reproduce the
conventional alignments for words like "where" (wh taken as a digraph) while
still placing insertions as early as possible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RangeOutOfBounds

MAX_GRAPHEME_SIDE = 4
MAX_PHONEME_SIDE = 3

Pair = tuple[str, tuple[str, ...]]


@dataclass(frozen=True)
class AlignedPair:
    graphemes: str
    phonemes: tuple[str, ...]
    allowed: bool

    def __str__(self) -> str:
        left = self.graphemes if self.graphemes else "∅"
        right = " ".join(self.phonemes) if self.phonemes else "∅"
        return f"{left}→{right}"


@dataclass(frozen=True)
class Alignment:
    pairs: tuple[AlignedPair, ...]
    cost: int

    def __str__(self) -> str:
        return ", ".join(str(p) for p in self.pairs)

    def grapheme_spans(self) -> list[tuple[int, int]]:
        """Half-open char span of each pair's grapheme side."""
        spans = []
        pos = 0
        for pair in self.pairs:
            spans.append((pos, pos + len(pair.graphemes)))
            pos += len(pair.graphemes)
        return spans

    def phoneme_spans(self) -> list[tuple[int, int]]:
        spans = []
        pos = 0
        for pair in self.pairs:
            spans.append((pos, pos + len(pair.phonemes)))
            pos += len(pair.phonemes)
        return spans


def _transitions(graphemes: str, phonemes: tuple[str, ...], i: int, j: int,
                 mappings: frozenset[Pair], by_first: dict[str, list[Pair]],
                 inserts: list[Pair]):
    """Yield (dg, dp, pair, cost, allowed_units) moves available at (i, j)."""
    m, n = len(graphemes), len(phonemes)
    candidates = inserts
    if i < m:
        candidates = candidates + by_first.get(graphemes[i], [])
    for g, p in candidates:
        if not g and not p:
            continue  # a degenerate mapping must not stall the scan
        if graphemes[i:i + len(g)] != g:
            continue
        if tuple(phonemes[j:j + len(p)]) != p:
            continue
        yield len(g), len(p), (g, p), 0, len(g) + len(p)
    if i < m and j < n:
        pair = (graphemes[i], (phonemes[j],))
        if pair not in mappings:
            yield 1, 1, pair, 1, 0
    if i < m:
        pair = (graphemes[i], ())
        if pair not in mappings:
            yield 1, 0, pair, 1, 0
    if j < n:
        pair = ("", (phonemes[j],))
        if pair not in mappings:
            yield 0, 1, pair, 1, 0


def align(graphemes: str, phonemes: tuple[str, ...] | list[str],
          mappings: frozenset[Pair] | set[Pair]) -> Alignment:
    """Least-cost monotone alignment of `graphemes` against `phonemes`."""
    phonemes = tuple(phonemes)
    mappings = frozenset(mappings)
    by_first: dict[str, list[Pair]] = {}
    inserts: list[Pair] = []
    for g, p in mappings:
        if g:
            by_first.setdefault(g[0], []).append((g, p))
        else:
            inserts.append((g, p))

    m, n = len(graphemes), len(phonemes)
    # best[(i, j)] = (cost to go, -allowed units to go); both are additive.
    best: dict[tuple[int, int], tuple[int, int]] = {(m, n): (0, 0)}
    for i in range(m, -1, -1):
        for j in range(n, -1, -1):
            if i == m and j == n:
                continue
            cell = None
            for dg, dp, _pair, cost, units in _transitions(
                    graphemes, phonemes, i, j, mappings, by_first, inserts):
                tail = best[(i + dg, j + dp)]
                key = (cost + tail[0], -units + tail[1])
                if cell is None or key < cell:
                    cell = key
            best[(i, j)] = cell

    # Forward reconstruction under the documented tie-break.
    pairs: list[AlignedPair] = []
    i = j = 0
    while (i, j) != (m, n):
        target = best[(i, j)]
        chosen = None
        chosen_rank = None
        for dg, dp, pair, cost, units in _transitions(
                graphemes, phonemes, i, j, mappings, by_first, inserts):
            tail = best[(i + dg, j + dp)]
            if (cost + tail[0], -units + tail[1]) != target:
                continue
            rank = (-dp, -dg, pair)
            if chosen_rank is None or rank < chosen_rank:
                chosen_rank = rank
                chosen = (dg, dp, pair, cost == 0)
        dg, dp, pair, allowed = chosen
        pairs.append(AlignedPair(pair[0], pair[1], allowed))
        i += dg
        j += dp

    return Alignment(tuple(pairs), best[(0, 0)][0])


def align_word(graphemes: str, pronunciations, mappings) -> Alignment:
    """Align against each pronunciation and keep the least-cost result."""
    best = None
    for pron in pronunciations:
        cand = align(graphemes, pron, mappings)
        if best is None or cand.cost < best.cost:
            best = cand
    if best is None:
        raise ValueError("no pronunciations given")
    return best


def project_span(alignment: Alignment, char_range: tuple[int, int]) -> set[int]:
    """Phoneme indices whose aligned grapheme substring overlaps `char_range`.

    Pairs with an empty grapheme side (insertions) never project; a range
    aligned only to silent letters projects to the empty set.
    """
    start, end = char_range
    length = sum(len(p.graphemes) for p in alignment.pairs)
    if start < 0 or end > length or start > end:
        raise RangeOutOfBounds(start, end, length)
    indices: set[int] = set()
    for pair, (g0, g1), (p0, p1) in zip(
            alignment.pairs, alignment.grapheme_spans(), alignment.phoneme_spans()):
        if not pair.graphemes:
            continue
        if start < g1 and g0 < end:
            indices.update(range(p0, p1))
    return indices
