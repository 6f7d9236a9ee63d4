"""Reader for the "present/1" schedule wire format.

The bridge only consumes schedule files, so this is an independent parser
of the published JSON schema, not an import of the compiler package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import SchemaViolation, VersionMismatch

VERSION = "present/1"


@dataclass(frozen=True)
class Entry:
    symbol: str
    repeat: int
    duration_scale: tuple[float, ...]
    pitch_offset: tuple[float, ...]
    energy_offset: tuple[float, ...]


@dataclass(frozen=True)
class Schedule:
    language: str
    source_text: str
    entries: tuple[Entry, ...]

    @property
    def total_repeats(self) -> int:
        return sum(e.repeat for e in self.entries)


def _vector(raw, repeat: int, path: str) -> tuple[float, ...]:
    if not isinstance(raw, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw):
        raise SchemaViolation(path, "expected a list of numbers")
    if len(raw) != repeat:
        raise SchemaViolation(path, f"length {len(raw)} != repeat {repeat}")
    return tuple(float(v) for v in raw)


def load_schedule(data: bytes | str) -> Schedule:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaViolation("$", f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaViolation("$", "top level must be an object")
    version = doc.get("version")
    if not isinstance(version, str):
        raise SchemaViolation("$.version", "missing or not a string")
    if version != VERSION:
        raise VersionMismatch(version, VERSION)
    language = doc.get("language")
    if not isinstance(language, str):
        raise SchemaViolation("$.language", "missing or not a string")
    source_text = doc.get("source_text", "")
    if not isinstance(source_text, str):
        raise SchemaViolation("$.source_text", "not a string")
    raw_entries = doc.get("entries")
    if not isinstance(raw_entries, list):
        raise SchemaViolation("$.entries", "missing or not a list")

    entries = []
    for i, raw in enumerate(raw_entries):
        path = f"entries[{i}]"
        if not isinstance(raw, dict):
            raise SchemaViolation(path, "expected an object")
        symbol = raw.get("symbol")
        if not isinstance(symbol, str) or not symbol:
            raise SchemaViolation(f"{path}.symbol", "missing or empty")
        repeat = raw.get("repeat")
        if not isinstance(repeat, int) or isinstance(repeat, bool) or repeat < 1:
            raise SchemaViolation(f"{path}.repeat", "expected an int >= 1")
        duration = _vector(raw.get("duration_scale"), repeat, f"{path}.duration_scale")
        if any(d < 0 for d in duration):
            raise SchemaViolation(f"{path}.duration_scale", "negative duration scale")
        entries.append(Entry(
            symbol=symbol,
            repeat=repeat,
            duration_scale=duration,
            pitch_offset=_vector(raw.get("pitch_offset"), repeat, f"{path}.pitch_offset"),
            energy_offset=_vector(raw.get("energy_offset"), repeat, f"{path}.energy_offset")))
    return Schedule(language=language, source_text=source_text,
                    entries=tuple(entries))


def neutral_schedule(symbols: list[str], language: str = "en",
                     source_text: str = "") -> Schedule:
    """Identity schedule: repeat 1, scale 1, offsets 0 for every symbol."""
    return Schedule(
        language=language, source_text=source_text,
        entries=tuple(Entry(s, 1, (1.0,), (0.0,), (0.0,)) for s in symbols))
