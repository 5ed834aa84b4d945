"""First homology of the space of a g-blink via its linking matrix."""

from __future__ import annotations

from dataclasses import dataclass

from .gblink import (
    GBlink,
    face_neighbor,
    gedge_of,
    vertex_neighbor,
    zigzag_cycles,
)
from .snf import diagonal, smith_normal_form


@dataclass(frozen=True)
class HomologyGroup:
    """(Betti number, torsion coefficients with divisibility chain)."""

    betti: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.torsion:
            assert self.torsion[0] >= 2
            assert all(self.torsion[i + 1] % self.torsion[i] == 0
                       for i in range(len(self.torsion) - 1))

    def __str__(self) -> str:
        parts = []
        if self.betti or not self.torsion:
            parts.append(f"({self.betti})")
        t = list(self.torsion)
        while t:
            val = t[0]
            mult = t.count(val)
            parts.append(f"{val}^{mult}" if mult > 1 else str(val))
            t = t[mult:]
        return " ".join(parts)


def linking_matrix(g: GBlink) -> list[list[int]]:
    """Symmetric matrix over the g-zigzags: diagonal holds per-component
    writhes, off-diagonal entries the classical linking numbers.

    Crossing signs between distinct components always sum to an even number;
    the off-diagonal entries are half that sum.  (Accumulating the full sum
    instead fails the pinned torsion values of the quaternionic-space merge
    family, which is what fixes this convention.)
    """
    cycles = zigzag_cycles(g)
    k = len(cycles)
    zid = {}
    tail = {}
    for i, cyc in enumerate(cycles):
        for pos, x in enumerate(cyc):
            zid[x] = i
            tail[x] = pos % 2 == 0  # zigzag edges run from even to odd slots
    size = k + g.isolated_vertices
    n_mat = [[0] * size for _ in range(size)]
    for e in range(1, g.n + 1):
        l1, l2, l3, l4 = 4 * e - 3, 4 * e - 2, 4 * e - 1, 4 * e
        u = l2 if tail[l2] else l4
        v = l1 if tail[l1] else l3
        face_adjacent = face_neighbor(u) == v
        green = e not in g.reds
        s = 1 if green == face_adjacent else -1
        i, j = zid[u], zid[v]
        if i == j:
            n_mat[i][j] += s
        else:
            n_mat[i][j] += s
            n_mat[j][i] += s
    for i in range(size):
        for j in range(size):
            if i != j:
                assert n_mat[i][j] % 2 == 0, "odd crossing-sign sum between components"
                n_mat[i][j] //= 2
    return n_mat


def homology_from_matrix(mat: list[list[int]]) -> HomologyGroup:
    if not mat:
        return HomologyGroup(0, ())
    d, _, _ = smith_normal_form(mat)
    diag = diagonal(d)
    betti = sum(1 for x in diag if x == 0)
    torsion = tuple(sorted(x for x in diag if x > 1))
    return HomologyGroup(betti, torsion)


def homology(g: GBlink) -> HomologyGroup:
    """Betti number and torsion of the first homology of the induced space."""
    return homology_from_matrix(linking_matrix(g))
