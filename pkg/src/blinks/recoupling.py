"""Numerical recoupling data at a primitive root of unity.

All evaluations are at A = exp(i*pi/(2r)).  Quantum integers and their
factorials are real; loop, theta and tetrahedral coefficients follow the
standard Temperley-Lieb recoupling normalizations.  Inadmissible entries
evaluate to zero.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np


class Level:
    """Tables for one level r >= 3 over the spin domain I = {0..r-2}."""

    def __init__(self, r: int):
        if r < 3:
            raise ValueError("level must be at least 3")
        self.r = r
        self.d = r - 1
        self.A = complex(math.cos(math.pi / (2 * r)), math.sin(math.pi / (2 * r)))
        top = 2 * r
        s = math.sin(math.pi / r)
        # quantum integers [k] = sin(k*pi/r)/sin(pi/r); [k] = 0 for k = 0, r
        self.bracket = np.array([math.sin(k * math.pi / r) / s for k in range(top)])
        fact = np.ones(top)
        for k in range(1, top):
            fact[k] = fact[k - 1] * self.bracket[k]
        self.fact = fact
        n = np.arange(self.d)
        self.delta = ((-1.0) ** n) * self.bracket[n + 1]
        self.adm = self._admissible_table()
        self.theta = self._theta_table()
        self.inv_theta = np.where(self.adm, 1.0 / np.where(self.adm, self.theta, 1.0), 0.0)
        self.lam = self._lambda_table()

    def _admissible_table(self) -> np.ndarray:
        d = self.d
        a, b, c = np.ogrid[0:d, 0:d, 0:d]
        return ((a + b + c) % 2 == 0) & (a + b - c >= 0) & (b + c - a >= 0) \
            & (c + a - b >= 0) & (a + b + c <= 2 * self.r - 4)

    def _theta_table(self) -> np.ndarray:
        d = self.d
        a, b, c = np.meshgrid(np.arange(d), np.arange(d), np.arange(d),
                              indexing="ij")
        m = (a + b - c) // 2
        n = (b + c - a) // 2
        p = (c + a - b) // 2
        out = np.zeros((d, d, d))
        mask = self.adm
        mm, nn, pp = m[mask], n[mask], p[mask]
        f = self.fact
        val = ((-1.0) ** (mm + nn + pp)) * f[mm + nn + pp + 1] * f[nn] * f[mm] * f[pp] \
            / (f[mm + nn] * f[nn + pp] * f[pp + mm])
        out[mask] = val
        return out

    def _lambda_table(self) -> np.ndarray:
        d = self.d
        a, b, c = np.meshgrid(np.arange(d), np.arange(d), np.arange(d),
                              indexing="ij")
        expo = a * (a + 2) + b * (b + 2) - c * (c + 2)
        sign = (-1.0) ** ((a + b - c) // 2)
        phase = np.exp(1j * math.pi * expo / (4 * self.r))
        return np.where(self.adm, sign * phase, 0.0)

    def admissible(self, a: int, b: int, c: int) -> bool:
        return bool(self.adm[a, b, c])

    def tet(self, a, b, c, dd, e, f) -> np.ndarray:
        """Vectorized tetrahedral evaluation; zero where any of the four
        triples (a,b,f), (b,c,e), (c,d,f), (a,d,e) is inadmissible."""
        a, b, c, dd, e, f = np.broadcast_arrays(
            *(np.asarray(x, dtype=np.int64) for x in (a, b, c, dd, e, f)))
        ok = self.adm[a, b, f] & self.adm[b, c, e] & self.adm[c, dd, f] \
            & self.adm[a, dd, e]
        out = np.zeros(a.shape)
        if not ok.any():
            return out
        aa, bb, cc, d2, ee, ff = (x[ok] for x in (a, b, c, dd, e, f))
        fa = self.fact
        a1 = (aa + bb + ff) // 2
        a2 = (bb + cc + ee) // 2
        a3 = (cc + d2 + ff) // 2
        a4 = (aa + d2 + ee) // 2
        b1 = (bb + d2 + ee + ff) // 2
        b2 = (aa + cc + ee + ff) // 2
        b3 = (aa + bb + cc + d2) // 2
        lo = np.maximum.reduce([a1, a2, a3, a4])
        hi = np.minimum.reduce([b1, b2, b3])
        interior = np.ones(aa.shape)
        for bj in (b1, b2, b3):
            for ai in (a1, a2, a3, a4):
                interior *= fa[bj - ai]
        exterior = fa[aa] * fa[bb] * fa[cc] * fa[d2] * fa[ee] * fa[ff]
        total = np.zeros(aa.shape)
        for s in range(int(lo.min()), int(hi.max()) + 1):
            live = (lo <= s) & (s <= hi)
            if not live.any():
                continue
            den = np.ones(aa.shape)
            for ai in (a1, a2, a3, a4):
                den *= fa[np.where(live, s - ai, 0)]
            for bj in (b1, b2, b3):
                den *= fa[np.where(live, bj - s, 0)]
            term = np.where(live & (den != 0),
                            ((-1.0) ** s) * fa[s + 1] / np.where(den == 0, 1.0, den),
                            0.0)
            total += term
        out[ok] = interior / exterior * total
        return out


@lru_cache(maxsize=32)
def level(r: int) -> Level:
    return Level(r)
