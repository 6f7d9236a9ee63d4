"""Ordered, context-sensitive rewrite rules from source symbols to ARPAbet.

Rule files are plain UTF-8 text, one rule per line::

    source tokens [| LEFT _ RIGHT] -> SYM[:D[:P[:E]]] ... [@PRIORITY]

* Source tokens are IPA segments or pinyin units, space separated.  A
  leading "ˈ" requires the token to be stressed, a trailing "ː" (or ":")
  requires it to be long.  "." is a syllable break and "‖" a word
  separator; both are ordinary tokens.
* LEFT/RIGHT context predicates: "#" (boundary), "V" (vowel), "C"
  (consonant), or "{a,b,c}" (explicit symbol set).  Either side may be
  empty.
* Targets are ARPAbet symbols or the pause ",".  D is a multiplicative
  duration factor and defaults to the language default (1.0, or 0.7 for
  the fast-speech languages es/hu); P and E are additive pitch and energy
  offsets defaulting to 0.  A "*" prefix marks the target as the syllable
  nucleus, which tonal-language callers use to aim the tone contour.
* Lines starting with "#" are comments; "@N" sets the rule priority
  (default 0).

Matching is a left-to-right scan.  At every position the first rule wins
in order of priority (descending), source length (descending), feature and
context specificity (descending); each fired rule consumes its source
tokens, so every input token belongs to exactly one rule application.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field, replace

from .errors import (LengthMismatch, MalformedRule, NoRuleMatches,
                     UnknownArpabet, UnknownIpaSymbol)
from .phonemes import SCHEDULE_SYMBOLS

LANGUAGES = ("de", "hu", "es", "cmn")
DEFAULT_DURATION = {"de": 1.0, "hu": 0.7, "es": 0.7, "cmn": 1.0}

SYLLABLE_BREAK = "."
WORD_SEP = "‖"

STRESS_MARK = "ˈ"
SECONDARY_STRESS = "ˌ"
LENGTH_MARKS = ("ː", ":")  # IPA triangular colon plus the ASCII fallback

# crude IPA vowel detection for the V/C context classes
_VOWEL_CHARS = set("aeiouyøœɛɪʏʊɔəɐɑʌæɒ")


@dataclass(frozen=True)
class Token:
    symbol: str
    long: bool = False
    stressed: bool = False

    @property
    def is_word_sep(self) -> bool:
        return self.symbol == WORD_SEP

    @property
    def is_vowel(self) -> bool:
        return bool(self.symbol) and self.symbol[0] in _VOWEL_CHARS

    def __str__(self) -> str:
        return (STRESS_MARK if self.stressed else "") + self.symbol + \
            ("ː" if self.long else "")


@dataclass(frozen=True)
class SourceElement:
    symbol: str
    long: bool | None = None      # None = don't care
    stressed: bool | None = None

    def matches(self, token: Token) -> bool:
        if self.symbol != token.symbol:
            return False
        if self.long is not None and self.long != token.long:
            return False
        if self.stressed is not None and self.stressed != token.stressed:
            return False
        return True

    @property
    def specificity(self) -> int:
        return (self.long is not None) + (self.stressed is not None)


@dataclass(frozen=True)
class Context:
    kind: str  # "boundary", "vowel", "consonant", "set"
    symbols: frozenset[str] = frozenset()

    def holds(self, token: Token | None) -> bool:
        at_boundary = token is None or token.is_word_sep
        if self.kind == "boundary":
            return at_boundary
        if token is None:
            return False
        if self.kind == "vowel":
            return token.is_vowel
        if self.kind == "consonant":
            return not token.is_vowel and not token.is_word_sep
        return token.symbol in self.symbols


@dataclass(frozen=True)
class MappingRule:
    source: tuple[SourceElement, ...]
    targets: tuple[str, ...]
    durations: tuple[float, ...]
    pitch_changes: tuple[float, ...]
    energy_changes: tuple[float, ...]
    left: Context | None = None
    right: Context | None = None
    priority: int = 0
    nucleus_index: int | None = None
    line_no: int | None = None

    def __post_init__(self):
        n = len(self.targets)
        if n < 1:
            raise LengthMismatch("rule must emit at least one target", self.line_no)
        if not (len(self.durations) == len(self.pitch_changes)
                == len(self.energy_changes) == n):
            raise LengthMismatch(
                f"targets {n} vs D/P/E "
                f"{len(self.durations)}/{len(self.pitch_changes)}/{len(self.energy_changes)}",
                self.line_no)
        if any(d < 0 for d in self.durations):
            raise LengthMismatch("negative duration factor", self.line_no)

    @property
    def specificity(self) -> int:
        ctx = (self.left is not None) + (self.right is not None)
        return ctx + sum(e.specificity for e in self.source)

    def sort_key(self):
        return (-self.priority, -len(self.source), -self.specificity,
                tuple(e.symbol for e in self.source),
                self.targets)


@dataclass(frozen=True)
class AnnotatedPhone:
    symbol: str
    duration_factor: float = 1.0
    pitch_change: float = 0.0
    energy_change: float = 0.0
    syllable_id: int | None = None


@dataclass(frozen=True)
class RuleFire:
    rule: MappingRule
    source_start: int
    source_len: int
    emit_start: int
    emit_len: int


@dataclass
class RuleSet:
    language: str
    rules: tuple[MappingRule, ...] = ()
    default_duration: float = 1.0
    source_symbols: frozenset[str] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.rules)


def _parse_context(text: str, line_no: int, raw: str) -> Context | None:
    text = text.strip()
    if not text:
        return None
    if text == "#":
        return Context("boundary")
    if text == "V":
        return Context("vowel")
    if text == "C":
        return Context("consonant")
    if text.startswith("{") and text.endswith("}"):
        symbols = frozenset(s.strip() for s in text[1:-1].split(",") if s.strip())
        if not symbols:
            raise MalformedRule(line_no, raw, "empty context set")
        return Context("set", symbols)
    raise MalformedRule(line_no, raw, f"bad context {text!r}")


def _parse_source_token(text: str) -> SourceElement:
    long_flag: bool | None = None
    stressed: bool | None = None
    if text.startswith(STRESS_MARK):
        stressed = True
        text = text[len(STRESS_MARK):]
    for mark in LENGTH_MARKS:
        if text.endswith(mark) and len(text) > len(mark):
            long_flag = True
            text = text[:-len(mark)]
            break
    return SourceElement(text, long_flag, stressed)


def _parse_target(spec: str, line_no: int, raw: str, default_d: float):
    nucleus = spec.startswith("*")
    if nucleus:
        spec = spec[1:]
    parts = spec.split(":")
    if not parts[0] or len(parts) > 4:
        raise MalformedRule(line_no, raw, f"bad target {spec!r}")
    symbol = parts[0]
    if symbol not in SCHEDULE_SYMBOLS:
        raise UnknownArpabet(symbol, line_no)
    try:
        d = float(parts[1]) if len(parts) > 1 and parts[1] != "" else default_d
        p = float(parts[2]) if len(parts) > 2 and parts[2] != "" else 0.0
        e = float(parts[3]) if len(parts) > 3 and parts[3] != "" else 0.0
    except ValueError:
        raise MalformedRule(line_no, raw, f"bad number in target {spec!r}") from None
    return symbol, d, p, e, nucleus


def parse_rule_line(line: str, line_no: int, language: str) -> MappingRule | None:
    """Parse one rule line; returns None for blank/comment lines.

    Comments are whole lines starting with "#" ("#" inside a rule is the
    boundary context predicate, so there are no inline comments).
    """
    raw = line
    line = line.strip()
    if not line or line.startswith("#"):
        return None
    if "->" not in line:
        raise MalformedRule(line_no, raw, "missing '->'")
    lhs, rhs = line.split("->", 1)

    left = right = None
    source_part = lhs
    if "|" in lhs:
        source_part, ctx_part = lhs.split("|", 1)
        if "_" not in ctx_part:
            raise MalformedRule(line_no, raw, "context must contain '_'")
        left_txt, right_txt = ctx_part.split("_", 1)
        left = _parse_context(left_txt, line_no, raw)
        right = _parse_context(right_txt, line_no, raw)
    source = tuple(_parse_source_token(t) for t in source_part.split())
    if not source:
        raise MalformedRule(line_no, raw, "empty source")

    priority = 0
    targets, durs, pitches, energies = [], [], [], []
    nucleus_index: int | None = None
    default_d = DEFAULT_DURATION.get(language, 1.0)
    for item in rhs.split():
        if item.startswith("@"):
            try:
                priority = int(item[1:])
            except ValueError:
                raise MalformedRule(line_no, raw, f"bad priority {item!r}") from None
            continue
        symbol, d, p, e, nucleus = _parse_target(item, line_no, raw, default_d)
        if nucleus:
            nucleus_index = len(targets)
        targets.append(symbol)
        durs.append(d)
        pitches.append(p)
        energies.append(e)
    if not targets:
        raise MalformedRule(line_no, raw, "no targets")
    return MappingRule(source, tuple(targets), tuple(durs), tuple(pitches),
                       tuple(energies), left, right, priority, nucleus_index,
                       line_no)


def load_rules(source, language: str) -> RuleSet:
    """Load a rule file for `language`; rules come out match-ordered."""
    if language not in LANGUAGES:
        raise ValueError(f"unknown language {language!r}")
    if isinstance(source, (bytes, bytearray)):
        stream = io.StringIO(source.decode("utf-8"))
    elif isinstance(source, str):
        stream = io.StringIO(source)
    elif isinstance(source, io.TextIOBase):
        stream = source
    else:
        stream = io.TextIOWrapper(source, encoding="utf-8")

    rules = []
    symbols = set()
    for line_no, line in enumerate(stream, start=1):
        rule = parse_rule_line(line, line_no, language)
        if rule is None:
            continue
        rules.append(rule)
        for elem in rule.source:
            symbols.add(elem.symbol)
        if rule.left and rule.left.kind == "set":
            symbols.update(rule.left.symbols)
        if rule.right and rule.right.kind == "set":
            symbols.update(rule.right.symbols)
    rules.sort(key=MappingRule.sort_key)
    return RuleSet(language, tuple(rules),
                   DEFAULT_DURATION.get(language, 1.0), frozenset(symbols))


def tokenize_ipa(text: str, rule_set: RuleSet) -> list[Token]:
    """Longest-match tokenization of an IPA string against the rule alphabet.

    Stress marks attach to the following segment, length marks to the
    preceding one; spaces become word separators; "." is a syllable break.
    Unknown codepoints raise UnknownIpaSymbol.
    """
    alphabet = sorted(
        (s for s in rule_set.source_symbols if s not in (SYLLABLE_BREAK, WORD_SEP)),
        key=len, reverse=True)
    tokens: list[Token] = []
    pending_stress = False
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace() or ch == WORD_SEP:
            if tokens and not tokens[-1].is_word_sep:
                tokens.append(Token(WORD_SEP))
            i += 1
            continue
        if ch == STRESS_MARK:
            pending_stress = True
            i += 1
            continue
        if ch == SECONDARY_STRESS:
            i += 1
            continue
        if ch in LENGTH_MARKS:
            if not tokens or tokens[-1].symbol in (SYLLABLE_BREAK, WORD_SEP):
                raise UnknownIpaSymbol(ch, i)
            tokens[-1] = replace(tokens[-1], long=True)
            i += 1
            continue
        if ch == SYLLABLE_BREAK:
            tokens.append(Token(SYLLABLE_BREAK))
            i += 1
            continue
        for symbol in alphabet:
            if text.startswith(symbol, i):
                tokens.append(Token(symbol, stressed=pending_stress))
                pending_stress = False
                i += len(symbol)
                break
        else:
            raise UnknownIpaSymbol(ch, i)
    while tokens and tokens[-1].is_word_sep:
        tokens.pop()
    return tokens


def _rule_matches(rule: MappingRule, tokens: list[Token], pos: int) -> bool:
    if pos + len(rule.source) > len(tokens):
        return False
    for offset, elem in enumerate(rule.source):
        if not elem.matches(tokens[pos + offset]):
            return False
    if rule.left is not None:
        prev = tokens[pos - 1] if pos > 0 else None
        if not rule.left.holds(prev):
            return False
    if rule.right is not None:
        after = pos + len(rule.source)
        nxt = tokens[after] if after < len(tokens) else None
        if not rule.right.holds(nxt):
            return False
    return True


def apply_rules_traced(tokens: list[Token],
                       rule_set: RuleSet) -> tuple[list[AnnotatedPhone], list[RuleFire]]:
    """Left-to-right rewrite returning phones plus per-rule fire records."""
    phones: list[AnnotatedPhone] = []
    fires: list[RuleFire] = []
    pos = 0
    while pos < len(tokens):
        for rule in rule_set.rules:
            if _rule_matches(rule, tokens, pos):
                emit_start = len(phones)
                for sym, d, p, e in zip(rule.targets, rule.durations,
                                        rule.pitch_changes, rule.energy_changes):
                    phones.append(AnnotatedPhone(sym, d, p, e))
                fires.append(RuleFire(rule, pos, len(rule.source),
                                      emit_start, len(rule.targets)))
                pos += len(rule.source)
                break
        else:
            raise NoRuleMatches(str(tokens[pos]), pos)
    return phones, fires


def apply_rules(tokens: list[Token], rule_set: RuleSet) -> list[AnnotatedPhone]:
    """Rewrite a token sequence into annotated ARPAbet phones."""
    phones, _ = apply_rules_traced(tokens, rule_set)
    return phones


def convert_ipa(text: str, rule_set: RuleSet) -> list[AnnotatedPhone]:
    """Tokenize an IPA transcription and apply the rule set."""
    return apply_rules(tokenize_ipa(text, rule_set), rule_set)
