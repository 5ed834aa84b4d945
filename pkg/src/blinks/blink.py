"""Blinks as plane graphs: rotation systems, conversions, framed-link view.

A blink is a plane graph with red/green edges.  Edges are numbered 0..m-1;
edge i owns darts 2i and 2i+1 (opposite dart = dart ^ 1).  The rotation lists
darts clockwise around each vertex.  The g-blink of a blink forgets the
choice of external face; conversely every g-face of a g-blink yields one
blink with that face outside.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .gblink import (
    GBlink,
    StructureError,
    _label_map,
    disjoint_union,
    face_neighbor,
    gedge_of,
    vertex_neighbor,
    zigzag_neighbor,
)


@dataclass(frozen=True)
class Blink:
    rotation: tuple[tuple[int, ...], ...]
    reds: frozenset[int] = frozenset()
    external_face: int = 0
    isolated_vertices: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "reds", frozenset(self.reds))
        darts = sorted(d for rot in self.rotation for d in rot)
        if darts != list(range(len(darts))):
            raise StructureError("rotation system darts must be 0..2m-1, once each")
        if len(darts) % 2 != 0:
            raise StructureError("odd number of darts")
        if any(not 0 <= e < self.num_edges for e in self.reds):
            raise StructureError("red set mentions unknown edge")
        if self.isolated_vertices < 0:
            raise StructureError("negative isolated vertex count")
        if any(not rot for rot in self.rotation):
            raise StructureError("degree-0 vertices go in isolated_vertices")
        if self.num_edges and not 0 <= self.external_face < len(self.faces()):
            raise StructureError("external face out of range")
        for nv, ne, nf in self.component_counts():
            if nv - ne + nf != 2:
                raise StructureError("rotation system is not planar (genus != 0)")

    @property
    def num_vertices(self) -> int:
        return len(self.rotation)

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def dart_vertex_table(self) -> list[int]:
        table = [0] * (2 * self.num_edges)
        for v, rot in enumerate(self.rotation):
            for d in rot:
                table[d] = v
        return table

    def faces(self) -> list[tuple[int, ...]]:
        """Face walks as dart cycles (cross the edge, turn clockwise),
        sorted by minimum dart."""
        nd = 2 * self.num_edges
        nxt = [0] * nd
        for rot in self.rotation:
            for i, d in enumerate(rot):
                nxt[d ^ 1] = rot[(i + 1) % len(rot)]
        seen = [False] * nd
        out = []
        for start in range(nd):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            cur = nxt[start]
            while cur != start:
                cyc.append(cur)
                seen[cur] = True
                cur = nxt[cur]
            out.append(tuple(cyc))
        return out

    def vertex_components(self) -> list[set[int]]:
        dv = self.dart_vertex_table()
        comps, seen = [], set()
        for v0 in range(self.num_vertices):
            if v0 in seen:
                continue
            stack, verts = [v0], set()
            while stack:
                v = stack.pop()
                if v in verts:
                    continue
                verts.add(v)
                for d in self.rotation[v]:
                    stack.append(dv[d ^ 1])
            seen |= verts
            comps.append(verts)
        return comps

    def component_counts(self) -> list[tuple[int, int, int]]:
        """(vertices, edges, faces) for each connected component."""
        dv = self.dart_vertex_table()
        out = []
        for verts in self.vertex_components():
            darts = {d for v in verts for d in self.rotation[v]}
            nf = sum(1 for f in self.faces() if f and f[0] in darts)
            out.append((len(verts), len(darts) // 2, nf))
        return out


# -- Blink -> GBlink ----------------------------------------------------------

def blink_to_gblink(b: Blink) -> GBlink:
    """The unique g-blink of a blink: four map vertices per blink edge,
    colors copied, angle adjacency from the clockwise rotations."""
    if b.num_edges == 0:
        return GBlink([0], isolated_vertices=b.num_vertices + b.isolated_vertices)
    # flags: (dart, side) with side 0 = before the dart clockwise (parity 0),
    # side 1 = after (parity 1)
    adj_f: dict[tuple[int, int], tuple[int, int]] = {}
    adj_v: dict[tuple[int, int], tuple[int, int]] = {}
    adj_a: dict[tuple[int, int], tuple[int, int]] = {}
    for rot in b.rotation:
        deg = len(rot)
        for i, d in enumerate(rot):
            adj_f[(d, 0)] = (d, 1)
            adj_f[(d, 1)] = (d, 0)
            nxt = rot[(i + 1) % deg]
            adj_a[(d, 1)] = (nxt, 0)
            adj_a[(nxt, 0)] = (d, 1)
    for e in range(b.num_edges):
        d, dd = 2 * e, 2 * e + 1
        adj_v[(d, 0)] = (dd, 1)
        adj_v[(dd, 1)] = (d, 0)
        adj_v[(d, 1)] = (dd, 0)
        adj_v[(dd, 0)] = (d, 1)
    parity1 = [(d, 1) for d in range(2 * b.num_edges)]
    out: GBlink | None = None
    labeled: set[tuple[int, int]] = set()
    for start in parity1:
        if start in labeled:
            continue
        lab = _label_map(start, adj_f.__getitem__, adj_v.__getitem__,
                         adj_a.__getitem__)
        labeled |= lab.keys()
        m = len(lab)
        angle = [0] * (m + 1)
        for old, new in lab.items():
            angle[new] = lab[adj_a[old]]
        reds = set()
        inv = {v: k for k, v in lab.items()}
        for k in range(1, m // 4 + 1):
            if inv[4 * k - 3][0] // 2 in b.reds:
                reds.add(k)
        piece = GBlink(angle, reds)
        out = piece if out is None else disjoint_union(out, piece)
    assert out is not None
    iso = b.isolated_vertices + sum(1 for rot in b.rotation if not rot)
    if iso:
        out = GBlink(out.angle, out.reds, iso, _validate=False)
    return out


# -- GBlink -> Blinks ---------------------------------------------------------

def gblink_to_blinks(g: GBlink) -> list[Blink]:
    """One blink per g-face chosen as external; all convert back to g."""
    if g.n == 0:
        if g.isolated_vertices == 0:
            return [Blink((), frozenset())]
        return [Blink((), frozenset(), 0, g.isolated_vertices)]
    faces = g.gface_orbits()
    return [_blink_with_external(g, f) for f in range(len(faces))]


def _blink_with_external(g: GBlink, face_index: int) -> Blink:
    gverts = g.gvertex_orbits()
    rotation = []
    # darts: edge k-1 has darts 2(k-1) (odd flag pair) and 2(k-1)+1 (even pair)?
    # Use: the two darts of blink edge k are its two face-edge flag pairs;
    # assign dart id by the odd label of the pair: (4k-3,4k-2) -> 2(k-1),
    # (4k-1,4k) -> 2(k-1)+1.
    def dart_of(label: int) -> int:
        k = gedge_of(label)
        off = (label - 1) % 4
        return 2 * (k - 1) + (0 if off in (0, 1) else 1)

    for orb in gverts:
        # walk the polygon crossing face-edges from even to odd labels
        start = next(x for x in orb if x % 2 == 0)
        darts = []
        x = start
        while True:
            darts.append(dart_of(x))
            x = g.angle[face_neighbor(x)]
            if x == start:
                break
        rotation.append(tuple(darts))
    reds = frozenset(k - 1 for k in g.reds)
    blink = Blink(rotation, reds, 0, g.isolated_vertices)
    # locate the blink face corresponding to the chosen g-face orbit
    gfaces = g.gface_orbits()
    target = set(gfaces[face_index])
    ext = _face_of_gface(g, blink, target)
    if ext != 0:
        blink = Blink(rotation, reds, ext, g.isolated_vertices)
    return blink


def _face_of_gface(g: GBlink, blink: Blink, gface_labels: set[int]) -> int:
    """Blink face whose corners realize the g-face polygon.

    The corner clockwise-after dart d (the angle-edge at the odd flag of d)
    lies on the face walk that contains dart d ^ 1.
    """
    def dart_of(label: int) -> int:
        k = gedge_of(label)
        off = (label - 1) % 4
        return 2 * (k - 1) + (0 if off in (0, 1) else 1)

    walk_darts = {dart_of(x) ^ 1 for x in gface_labels if x % 2 == 1}
    hits = [i for i, f in enumerate(blink.faces()) if walk_darts <= set(f)]
    if len(hits) != 1:
        raise StructureError("could not locate external face")
    return hits[0]


# -- framed-link (BFL) view ---------------------------------------------------

@dataclass(frozen=True)
class BFLDiagram:
    """4-regular plane map with an over/under marking per crossing.

    Crossings are 1..n (one per g-edge); the rotation around crossing k is
    the label cycle (4k-3, 4k-2, 4k-1, 4k); strand arcs are the angle-edges;
    the strand through a crossing joins opposite labels (the diagonals).
    ``over_odd[k]`` is True when the strand through the odd diagonal
    (4k-3, 4k-1) is the overpass.
    """

    n: int
    arcs: tuple[frozenset[int], ...]
    over_odd: tuple[bool, ...]
    components: tuple[tuple[int, ...], ...]
    external_gface: int

    @property
    def num_crossings(self) -> int:
        return self.n


def bfl_view(g: GBlink, external_gface: int = 0) -> BFLDiagram:
    """Blackboard-framed-link view of a g-blink with a chosen external face.

    Components correspond one-to-one to g-zigzags.
    """
    if not 0 <= external_gface < max(1, len(g.gface_orbits())):
        raise StructureError("invalid g-face id")
    arcs = tuple(frozenset((x, g.angle[x])) for x in g.labels if x < g.angle[x])
    from .gblink import zigzag_cycles
    comps = tuple(tuple(c) for c in zigzag_cycles(g))
    over = tuple(_over_is_odd_diagonal(g, k) for k in range(1, g.n + 1))
    return BFLDiagram(g.n, arcs, over, comps, external_gface)


# Convention: at a green crossing the overpass is the strand through the odd
# diagonal; red swaps the roles.  Validated by the crossing-sign oracle in
# the tests (BFL-side signs reproduce the linking matrix).
def _over_is_odd_diagonal(g: GBlink, k: int) -> bool:
    return k not in g.reds
