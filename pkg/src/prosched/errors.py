"""Exception types raised across the pipeline.

Class names double as the error names printed by the CLI, so they follow
the domain vocabulary rather than Python's ``...Error`` convention.
"""


class PipelineError(Exception):
    """Base class for all domain errors in this package."""


# -- markup ------------------------------------------------------------------

class EmptyInput(PipelineError):
    pass


class UnbalancedDelimiter(PipelineError):
    def __init__(self, group: str):
        super().__init__(f"odd number of '*' in {group!r}")
        self.group = group


# -- lexicon / mapping tables --------------------------------------------------

class MalformedLine(PipelineError):
    def __init__(self, line_no: int, text: str, reason: str = ""):
        detail = f": {reason}" if reason else ""
        super().__init__(f"line {line_no}: cannot parse {text!r}{detail}")
        self.line_no = line_no
        self.text = text


class UnknownSymbol(PipelineError):
    def __init__(self, symbol: str, line_no: int):
        super().__init__(f"unknown phoneme symbol {symbol!r} on line {line_no}")
        self.symbol = symbol
        self.line_no = line_no


class BothSidesEmpty(PipelineError):
    def __init__(self, line_no: int):
        super().__init__(f"line {line_no}: mapping with empty graphemes and empty phonemes")
        self.line_no = line_no


class NotFound(PipelineError, KeyError):
    def __init__(self, word: str):
        PipelineError.__init__(self, f"word {word!r} not in lexicon")
        self.word = word


# -- aligner -------------------------------------------------------------------

class RangeOutOfBounds(PipelineError):
    def __init__(self, start: int, end: int, length: int):
        super().__init__(f"char range [{start}, {end}) outside grapheme string of length {length}")
        self.start = start
        self.end = end


# -- transfer rules --------------------------------------------------------------

class MalformedRule(PipelineError):
    def __init__(self, line_no: int, text: str, reason: str = ""):
        detail = f": {reason}" if reason else ""
        super().__init__(f"rule line {line_no}: cannot parse {text!r}{detail}")
        self.line_no = line_no
        self.text = text


class LengthMismatch(PipelineError):
    def __init__(self, what: str, line_no: int | None = None):
        where = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"vector length mismatch: {what}{where}")
        self.line_no = line_no


class UnknownArpabet(PipelineError):
    def __init__(self, symbol: str, line_no: int | None = None):
        where = f" on line {line_no}" if line_no is not None else ""
        super().__init__(f"{symbol!r} is not an ARPAbet symbol{where}")
        self.symbol = symbol
        self.line_no = line_no


class UnknownIpaSymbol(PipelineError):
    def __init__(self, codepoint: str, position: int):
        super().__init__(f"cannot tokenize {codepoint!r} at position {position}")
        self.codepoint = codepoint
        self.position = position


class NoRuleMatches(PipelineError):
    def __init__(self, symbol: str, position: int):
        super().__init__(f"no rule matches {symbol!r} at position {position}")
        self.symbol = symbol
        self.position = position


# -- mandarin ---------------------------------------------------------------------

class UnparsableSyllable(PipelineError):
    def __init__(self, text: str, position: int):
        super().__init__(f"cannot parse pinyin syllable {text!r} at position {position}")
        self.text = text
        self.position = position


class InvalidToneDigit(PipelineError):
    def __init__(self, digit: str, syllable: str):
        super().__init__(f"tone digit {digit!r} in {syllable!r} is outside 1..5")
        self.digit = digit


class InvalidTone(PipelineError):
    def __init__(self, tone: int):
        super().__init__(f"tone {tone} is outside 1..5")
        self.tone = tone


class InvalidSubdivisions(PipelineError):
    def __init__(self, n: int, minimum: int):
        super().__init__(f"subdivisions {n} below minimum {minimum}")
        self.n = n


# -- schedule -----------------------------------------------------------------------

class WordNotFound(PipelineError):
    def __init__(self, words: list[str]):
        super().__init__("words not in lexicon: " + ", ".join(sorted(set(words))))
        self.words = words


class EmptyText(PipelineError):
    pass


class NoVowelInWord(PipelineError):
    def __init__(self, word: str):
        super().__init__(f"word {word!r} has no vowel phoneme to accent")
        self.word = word


class VersionMismatch(PipelineError):
    def __init__(self, found: str, expected: str):
        super().__init__(f"schedule version {found!r}, expected {expected!r}")
        self.found = found


class SchemaViolation(PipelineError):
    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason
