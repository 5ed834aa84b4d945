"""Four-valent plane maps with over/under crossings (framed-link diagrams).

Crossing k owns slots 4k..4k+3 in clockwise order; the strand runs straight
through (slot i to slot i+2 mod 4), arcs join slots of (possibly equal)
crossings.  ``over[k]`` records which diagonal is the overpass: 0 for the
{0,2} diagonal, 1 for {1,3}.  Crossing-free unknot components are carried
as a count.  Faces are checkerboard-colorable; the conversion to a blink
takes the class of the external face as white.

This is the working representation for the calculus moves; g-blinks convert
to and from it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .blink import Blink, blink_to_gblink
from .gblink import GBlink, StructureError, gedge_of


@dataclass(frozen=True)
class BFLMap:
    arcs: tuple[int, ...]        # involution on slots 0..4n-1, no fixed points
    over: tuple[int, ...]        # per crossing: 0 or 1 (over diagonal)
    white_corner: int | None     # a corner id known to bound a white face
    free_loops: int = 0

    def __post_init__(self):
        n = len(self.over)
        if len(self.arcs) != 4 * n:
            raise StructureError("slot count must be 4 * crossings")
        for s, t in enumerate(self.arcs):
            if not 0 <= t < 4 * n or self.arcs[t] != s or t == s:
                raise StructureError("arcs must form a fixed-point-free involution")

    @property
    def n(self) -> int:
        return len(self.over)

    # -- faces and corners ---------------------------------------------------
    # corner c sits clockwise between slot c and slot (next in rotation);
    # corner ids coincide with slot ids.

    def _rot_next(self, s: int) -> int:
        return (s // 4) * 4 + (s % 4 + 1) % 4

    def faces(self) -> list[tuple[int, ...]]:
        """Faces as cyclic corner sequences."""
        n4 = 4 * self.n
        nxt = [0] * n4  # corner successor: cross the arc at rot_next(corner)
        for c in range(n4):
            nxt[c] = self.arcs[self._rot_next(c)]
        seen = [False] * n4
        out = []
        for start in range(n4):
            if seen[start]:
                continue
            walk = [start]
            seen[start] = True
            cur = nxt[start]
            while cur != start:
                walk.append(cur)
                seen[cur] = True
                cur = nxt[cur]
            out.append(tuple(walk))
        return out

    def face_colors(self) -> dict[int, bool]:
        """corner -> is_white, by checkerboard propagation from white_corner."""
        faces = self.faces()
        corner_face = {}
        for i, f in enumerate(faces):
            for c in f:
                corner_face[c] = i
        # two faces are adjacent when they share an arc: the arc attached at
        # slot s separates the corners flanking s at its crossing
        adj: dict[int, set[int]] = {i: set() for i in range(len(faces))}
        for s in range(4 * self.n):
            f1 = corner_face[s]
            f2 = corner_face[self._rot_prev(s)]
            if f1 != f2:
                adj[f1].add(f2)
                adj[f2].add(f1)
        color: dict[int, bool] = {}
        if not faces:
            return {}
        start_face = corner_face[self.white_corner] if self.white_corner is not None else 0
        stack = [(start_face, True)]
        while stack:
            f, col = stack.pop()
            if f in color:
                if color[f] != col:
                    raise StructureError("diagram faces are not checkerboard colorable")
                continue
            color[f] = col
            for g in adj[f]:
                stack.append((g, not col))
        if len(color) != len(faces):
            # disconnected diagram: color remaining components, external white
            for f in range(len(faces)):
                if f not in color:
                    stack = [(f, True)]
                    while stack:
                        ff, col = stack.pop()
                        if ff in color:
                            continue
                        color[ff] = col
                        for gg in adj[ff]:
                            stack.append((gg, not col))
        return {c: color[cf] for c, cf in corner_face.items()}

    def _rot_prev(self, s: int) -> int:
        return (s // 4) * 4 + (s % 4 - 1) % 4

    # -- strands ---------------------------------------------------------------

    def strand_next(self, s: int) -> int:
        """Follow the strand out of slot s: cross to the opposite slot, then
        traverse its arc."""
        opposite = (s // 4) * 4 + (s % 4 + 2) % 4
        return self.arcs[opposite]

    def components(self) -> list[tuple[int, ...]]:
        """Strand components as oriented slot cycles (entering slots).

        The orbit of strand_next visits one orientation; the reverse
        traversal covers the complementary slots, so both are merged and the
        forward cycle is returned, one per geometric component.
        """
        seen = set()
        out = []
        for start in range(4 * self.n):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            cur = self.strand_next(start)
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                cur = self.strand_next(cur)
            for s in cyc:
                seen.add((s // 4) * 4 + (s % 4 + 2) % 4)
            out.append(tuple(cyc))
        return out

    def is_over_slot(self, s: int) -> bool:
        return (s % 4) % 2 == self.over[s // 4]


def gblink_to_bflmap(g: GBlink) -> BFLMap:
    """Crossings = g-edges; slot 4(k-1)+i holds quadruple label 4(k-1)+i+1.

    Corner between slots 0 and 1 of a crossing lies in a black region (a
    g-vertex); corners alternate colors around the crossing.
    """
    if g.isolated_vertices:
        raise StructureError("carry isolated vertices separately")
    arcs = [0] * (4 * g.n)
    for x in g.labels:
        arcs[x - 1] = g.angle[x] - 1
    over = tuple(0 if k not in g.reds else 1 for k in range(1, g.n + 1))
    white = 1 if g.n else None  # corner between slots 1 and 2 bounds g-face f1
    return BFLMap(tuple(arcs), over, white)


def bflmap_to_gblink(m: BFLMap) -> GBlink:
    """Blink of the diagram (external class white), then its g-blink."""
    if m.n == 0:
        return GBlink([0], isolated_vertices=m.free_loops)
    colors = m.face_colors()
    faces = m.faces()
    corner_face = {}
    for i, f in enumerate(faces):
        for c in f:
            corner_face[c] = i
    black_faces = [i for i, f in enumerate(faces) if not colors[f[0]]]
    face_pos = {i: p for p, i in enumerate(black_faces)}
    # darts: one per black corner; crossing k has black corners at b, b+2
    # where b = 0 or 1 depending on local coloring
    dart_id = {}
    rotation = [[] for _ in black_faces]
    for i in black_faces:
        for c in faces[i]:
            dart_id[c] = None
    # assign dart ids per crossing: dart 2k = lower black corner, 2k+1 = other
    reds = set()
    for k in range(m.n):
        base = 4 * k
        blacks = [base + j for j in range(4) if not colors[base + j]]
        if len(blacks) != 2 or (blacks[1] - blacks[0]) % 4 != 2:
            raise StructureError("crossing quadrants are not checkerboard")
        dart_id[blacks[0]] = 2 * k
        dart_id[blacks[1]] = 2 * k + 1
        # color: over strand exits at slots d, d+2; the corner clockwise after
        # an over slot has a fixed color; red when that corner is white
        over_slot = base + m.over[k]
        if colors[over_slot]:
            reds.add(k)
    # face walks run counterclockwise around black regions; the blink's
    # rotations are clockwise
    for p, i in enumerate(black_faces):
        rotation[p] = tuple(dart_id[c] for c in reversed(faces[i]))
    blink = Blink(tuple(rotation), frozenset(reds), 0, m.free_loops)
    return blink_to_gblink(blink)
