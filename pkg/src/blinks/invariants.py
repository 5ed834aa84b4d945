"""Classification keys and report formatting for homology + quantum invariants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gblink import GBlink
from .homology import HomologyGroup, homology
from .wrt import UnsupportedInput, wrt

KEY_DECIMALS = 7  # quantization below the tables' printed precision


@dataclass(frozen=True)
class HGnQIKey:
    """Homology group plus the conjugation-normalized invariant sequence."""

    hg: HomologyGroup
    qi: tuple[tuple[float, float], ...]  # (re, im) per level, r = 3..r_max

    @property
    def conjugated(self) -> "HGnQIKey":
        return HGnQIKey(self.hg, tuple((re, -im if im else im) for re, im in self.qi))


def _quantize(z: complex) -> tuple[float, float]:
    re = round(z.real, KEY_DECIMALS)
    im = round(z.imag, KEY_DECIMALS)
    return (re + 0.0, im + 0.0)  # normalize -0.0


def normalize_conjugation(values: list[complex]) -> list[complex]:
    """Conjugate the whole sequence when its first entry with nonzero
    imaginary part (after quantization) has a negative one."""
    for z in values:
        im = round(z.imag, KEY_DECIMALS)
        if im != 0.0:
            if im < 0.0:
                return [z.conjugate() for z in values]
            break
    return values


def qi_sequence(g: GBlink, r_max: int, r_min: int = 3) -> list[complex]:
    """wrt values with isolated vertices substituted by reference pieces
    (each contributes a factor 1 / wrt(S3))."""
    from .wrt import _normalization
    out = []
    if g.isolated_vertices:
        bare = GBlink(g.angle, g.reds, 0, _validate=False)
        for r in range(r_min, r_max + 1):
            dim, _, _ = _normalization(r)
            out.append(wrt(bare, r) * dim ** (g.isolated_vertices / 2.0))
    else:
        out = [wrt(g, r) for r in range(r_min, r_max + 1)]
    return out


def hgnqi_key(g: GBlink, r_max: int = 8) -> HGnQIKey:
    """Classification key; equal for a g-blink and its color swap."""
    if r_max < 3:
        raise ValueError("r_max must be at least 3")
    values = normalize_conjugation(qi_sequence(g, r_max))
    return HGnQIKey(homology(g), tuple(_quantize(z) for z in values))


def format_complex(z: complex, decimals: int = 10) -> str:
    re, im = z.real, z.imag
    sign = "+" if im >= 0 else "-"
    return f"{re:.{decimals}f} {sign} {abs(im):.{decimals}f}i"


def report_line(g: GBlink, r_max: int = 8) -> str:
    """One report row: canonical code, homology, then fixed-precision
    invariant fields per level."""
    from .textio import format_gblink
    parts = [format_gblink(g), str(homology(g))]
    for i, z in enumerate(qi_sequence(g, r_max)):
        parts.append(f"r={i + 3}: {format_complex(z)}")
    return " | ".join(parts)
