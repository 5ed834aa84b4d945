"""Line-oriented text format for g-blinks and invariant report rows.

One g-blink per line: ``packed-permutation | red-set``, optionally followed
by ``+kV`` for k isolated vertices, e.g.::

    10 3 2 11 4 6 5 9 8 12 7 1 | 1 2 3
    | +1V
"""

from __future__ import annotations

from .gblink import GBlink, GBlinkCode, StructureError, from_code


def format_code(code: GBlinkCode) -> str:
    left = " ".join(str(x) for x in code.packed)
    right = " ".join(str(k) for k in sorted(code.reds))
    line = f"{left} | {right}".strip()
    if line == "|":
        line = "|"
    if code.isolated_vertices:
        line = f"{line} +{code.isolated_vertices}V".strip()
    return line


def format_gblink(g: GBlink) -> str:
    return format_code(g.code())


def parse_gblink(line: str) -> GBlink:
    """Parse the textual format; round-trips canonical codes byte-exactly."""
    text = line.strip()
    iso = 0
    if text.endswith("V"):
        text, _, tail = text.rpartition("+")
        tail = tail[:-1]
        if not tail.isdigit():
            raise StructureError(f"bad isolated-vertex suffix in {line!r}")
        iso = int(tail)
        text = text.strip()
    if "|" not in text:
        raise StructureError(f"missing '|' separator in {line!r}")
    left, _, right = text.partition("|")
    packed = tuple(int(t) for t in left.split())
    reds = frozenset(int(t) for t in right.split())
    if sorted(packed) != list(range(1, len(packed) + 1)):
        raise StructureError("packed part is not a permutation of 1..2n")
    if len(packed) % 2 != 0:
        raise StructureError("packed permutation must have even length")
    g = from_code(GBlinkCode(packed, reds, iso))
    if any(not 1 <= k <= g.n for k in reds):
        raise StructureError("red set out of range")
    return g


def iter_gblinks(lines) -> list[GBlink]:
    out = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.append(parse_gblink(line))
    return out
