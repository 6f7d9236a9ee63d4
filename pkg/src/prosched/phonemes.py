"""ARPAbet symbol inventory shared by every module.

The set is the 39 CMU Pronouncing Dictionary phonemes plus AX (schwa, from
the extended ARPAbet) and the pause symbol ",".
"""

ARPA_VOWELS = frozenset({
    "AA", "AE", "AH", "AO", "AW", "AX", "AY", "EH", "ER", "EY",
    "IH", "IY", "OW", "OY", "UH", "UW",
})

ARPA_CONSONANTS = frozenset({
    "B", "CH", "D", "DH", "F", "G", "HH", "JH", "K", "L", "M", "N",
    "NG", "P", "R", "S", "SH", "T", "TH", "V", "W", "Y", "Z", "ZH",
})

ARPABET = ARPA_VOWELS | ARPA_CONSONANTS

PAUSE = ","

SCHEDULE_SYMBOLS = ARPABET | {PAUSE}


def strip_stress(symbol: str) -> str:
    """Drop a trailing CMU stress digit (AH0 -> AH)."""
    if symbol and symbol[-1] in "012":
        return symbol[:-1]
    return symbol


def is_vowel(symbol: str) -> bool:
    return symbol in ARPA_VOWELS
