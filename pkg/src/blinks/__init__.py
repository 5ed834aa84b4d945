"""Blinks: closed oriented 3-manifolds as red/green plane graphs.

The package represents spaces by g-blinks (combinatorial maps), computes
their homology and quantum invariants, converts them to 3-gems for
homeomorphism certification, reproduces the small-space census pipeline,
and draws blinks and their framed-link views.
"""

from .gblink import (
    GBlink,
    GBlinkCode,
    StructureError,
    blocks,
    break_at,
    compare,
    find_breakpairs,
    from_code,
    has_alternating_zigzag,
    is_alternating,
    merge,
    transform,
    zigzag_cycles,
)
from .textio import format_gblink, parse_gblink

__all__ = [
    "GBlink",
    "GBlinkCode",
    "StructureError",
    "blocks",
    "break_at",
    "compare",
    "find_breakpairs",
    "from_code",
    "format_gblink",
    "has_alternating_zigzag",
    "is_alternating",
    "merge",
    "parse_gblink",
    "transform",
    "zigzag_cycles",
]
