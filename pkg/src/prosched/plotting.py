"""Static pitch-contour rendering of a schedule, as SVG or ASCII.

Output is byte-deterministic: same schedule in, same bytes out.  The x axis
is cumulative duration scale (so zero-duration phones collapse to ticks)
and the y axis is the pitch offset in model units.
"""

from __future__ import annotations

from .schedule import ProsodySchedule

_W, _H = 840, 320
_MARGIN = 48


def _segments(schedule: ProsodySchedule):
    """(x0, x1, pitch, symbol, first_of_entry) per subphoneme."""
    segs = []
    x = 0.0
    for entry in schedule.entries:
        for k in range(entry.repeat):
            width = max(entry.duration_scale[k], 0.0)
            segs.append((x, x + width, entry.pitch_offset[k], entry.symbol, k == 0))
            x += width
    return segs, x


def render_svg(schedule: ProsodySchedule) -> str:
    segs, total = _segments(schedule)
    if not segs:
        total = 1.0
    pitches = [s[2] for s in segs] or [0.0]
    lo = min(min(pitches), -2.0) - 0.25
    hi = max(max(pitches), 2.0) + 0.25
    span_x = max(total, 1e-6)

    def sx(v: float) -> float:
        return _MARGIN + (v / span_x) * (_W - 2 * _MARGIN)

    def sy(v: float) -> float:
        return _H - _MARGIN - ((v - lo) / (hi - lo)) * (_H - 2 * _MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<line x1="{_MARGIN}" y1="{sy(0.0):.2f}" x2="{_W - _MARGIN}" '
        f'y2="{sy(0.0):.2f}" stroke="#bbbbbb" stroke-dasharray="4 3"/>',
        f'<text x="{_MARGIN}" y="20" font-family="monospace" font-size="13">'
        f'pitch offsets: {_escape(schedule.source_text)} [{schedule.language}]</text>',
    ]
    for x0, x1, pitch, _sym, _first in segs:
        if x1 > x0:
            parts.append(
                f'<line x1="{sx(x0):.2f}" y1="{sy(pitch):.2f}" '
                f'x2="{sx(x1):.2f}" y2="{sy(pitch):.2f}" '
                f'stroke="#d62728" stroke-width="3"/>')
        else:
            parts.append(
                f'<circle cx="{sx(x0):.2f}" cy="{sy(pitch):.2f}" r="2.5" '
                f'fill="#d62728"/>')
    # connect consecutive segments so the contour reads as a line
    for prev, cur in zip(segs, segs[1:]):
        parts.append(
            f'<line x1="{sx(cur[0]):.2f}" y1="{sy(prev[2]):.2f}" '
            f'x2="{sx(cur[0]):.2f}" y2="{sy(cur[2]):.2f}" '
            f'stroke="#d62728" stroke-width="1"/>')
    for x0, x1, _pitch, sym, first in segs:
        if first:
            parts.append(
                f'<text x="{sx(x0):.2f}" y="{_H - _MARGIN + 18}" '
                f'font-family="monospace" font-size="12">{_escape(sym)}</text>')
    for level in (-2, -1, 0, 1, 2):
        parts.append(
            f'<text x="8" y="{sy(level) + 4:.2f}" font-family="monospace" '
            f'font-size="11">{level:+d}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_ascii(schedule: ProsodySchedule, rows: int = 13) -> str:
    segs, _total = _segments(schedule)
    if not segs:
        return "(empty schedule)\n"
    pitches = [s[2] for s in segs]
    lo = min(min(pitches), -2.0)
    hi = max(max(pitches), 2.0)
    grid = [[" "] * (2 * len(segs)) for _ in range(rows)]
    for col, (_x0, _x1, pitch, _sym, _first) in enumerate(segs):
        level = (pitch - lo) / (hi - lo) if hi > lo else 0.5
        row = rows - 1 - round(level * (rows - 1))
        grid[row][2 * col] = "█"
        grid[row][2 * col + 1] = "█"
    labels = []
    for _x0, _x1, _p, sym, first in segs:
        labels.append(f"{sym:<2.2}" if first else "  ")
    lines = ["".join(row).rstrip() for row in grid]
    lines.append("".join(labels).rstrip())
    lines.append(f"pitch range [{lo:+.1f}, {hi:+.1f}]  "
                 f"source: {schedule.source_text}")
    return "\n".join(lines) + "\n"


def _escape(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;"))
