"""Combinatorial maps for colored plane graphs ("blinks") and their spaces.

A g-blink is stored in labeled form: labels 1..4n are grouped in quadruples
{4k-3, 4k-2, 4k-1, 4k}, one per g-edge k.  Face, vertex and zigzag adjacency
are implicit in the label arithmetic; only the angle involution and the set
of red g-edges carry information.  Odd labels form the parity-1 class V1,
even labels the parity-0 class V0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence


class StructureError(ValueError):
    """Raised when data does not describe a valid g-blink or blink."""


# -- label arithmetic --------------------------------------------------------
#
# Within a quadruple (l1, l2, l3, l4) = (4k-3, 4k-2, 4k-1, 4k):
#   face edges   (l1, l2), (l3, l4)
#   vertex edges (l1, l4), (l2, l3)
#   zigzag edges (l1, l3), (l2, l4)   (diagonals; same parity)

_FACE_STEP = (0, 1, -1, 1, -1)  # indexed by offset 1..4
_VERTEX_STEP = (0, 3, 1, -1, -3)
_ZIGZAG_STEP = (0, 2, 2, -2, -2)


def face_neighbor(label: int) -> int:
    return label + _FACE_STEP[(label - 1) % 4 + 1]


def vertex_neighbor(label: int) -> int:
    return label + _VERTEX_STEP[(label - 1) % 4 + 1]


def zigzag_neighbor(label: int) -> int:
    return label + _ZIGZAG_STEP[(label - 1) % 4 + 1]


def gedge_of(label: int) -> int:
    """Quadruple (g-edge) index of a label, 1-based."""
    return (label + 3) // 4


def _orbits(labels: Iterable[int], *steps: Callable[[int], int]) -> list[tuple[int, ...]]:
    """Connected components of the graph whose edges are the given involutions.

    Each orbit is returned as the cycle starting at its minimum label and
    walking steps[0], steps[1], ... in rotation; orbits sorted by minimum.
    """
    seen: set[int] = set()
    out = []
    for start in sorted(labels):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        i = 0
        cur = start
        while True:
            cur = steps[i % len(steps)](cur)
            i += 1
            if cur == start and i % len(steps) == 0:
                break
            cycle.append(cur)
            seen.add(cur)
        out.append(tuple(cycle))
    return out


@dataclass(frozen=True)
class GBlinkCode:
    """Canonical (packed permutation, red set) pair; equal iff g-blinks equal."""

    packed: tuple[int, ...]
    reds: frozenset[int]
    isolated_vertices: int = 0

    def sort_key(self) -> tuple:
        return (
            len(self.packed),
            self.packed,
            len(self.reds),
            tuple(sorted(self.reds)),
            self.isolated_vertices,
        )

    def __lt__(self, other: "GBlinkCode") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "GBlinkCode") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "GBlinkCode") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "GBlinkCode") -> bool:
        return self.sort_key() >= other.sort_key()


def compare(a: GBlinkCode, b: GBlinkCode) -> int:
    """Total order on codes: by |perm|, then perm, then |reds|, then the
    minimum of the red-set symmetric differences."""
    ka, kb = a.sort_key(), b.sort_key()
    return -1 if ka < kb else (0 if ka == kb else 1)


class GBlink:
    """Immutable g-blink; equality and hashing are by canonical code."""

    __slots__ = ("angle", "reds", "isolated_vertices", "_code")

    def __init__(self, angle: Sequence[int], reds: Iterable[int] = (),
                 isolated_vertices: int = 0, _validate: bool = True):
        angle = tuple(angle)
        if angle and angle[0] != 0:
            angle = (0,) + angle  # accept 1-based payload without sentinel
        if not angle:
            angle = (0,)
        object.__setattr__(self, "angle", angle)
        object.__setattr__(self, "reds", frozenset(reds))
        object.__setattr__(self, "isolated_vertices", int(isolated_vertices))
        object.__setattr__(self, "_code", None)
        if _validate:
            self.validate()

    # dataclass-like conveniences
    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("GBlink is immutable")

    @property
    def n(self) -> int:
        return (len(self.angle) - 1) // 4

    @property
    def labels(self) -> range:
        return range(1, 4 * self.n + 1)

    def __repr__(self) -> str:
        from .textio import format_gblink
        return f"GBlink({format_gblink(self)!r})"

    def validate(self) -> None:
        n4 = len(self.angle) - 1
        if n4 % 4 != 0:
            raise StructureError("label count must be a multiple of 4")
        if self.isolated_vertices < 0:
            raise StructureError("negative isolated vertex count")
        ang = self.angle
        for x in range(1, n4 + 1):
            y = ang[x]
            if not 1 <= y <= n4 or y == x:
                raise StructureError(f"angle image of {x} out of range")
            if ang[y] != x:
                raise StructureError("angle map is not an involution")
            if (x + y) % 2 == 0:
                raise StructureError("angle edges must join V0 to V1")
        if not all(1 <= k <= self.n for k in self.reds):
            raise StructureError("red set mentions unknown g-edge")
        # per-component Euler identity |g-faces| + |g-vertices| = n_comp + 2
        for comp in self.components_labels():
            nc = len(comp) // 4
            f = len(_orbits(comp, vertex_neighbor, self._ang))
            v = len(_orbits(comp, face_neighbor, self._ang))
            if f + v != nc + 2:
                raise StructureError("component fails the planarity count")

    # -- basic structure ----------------------------------------------------

    def _ang(self, label: int) -> int:
        return self.angle[label]

    def components_labels(self) -> list[tuple[int, ...]]:
        """Connected components as sorted label tuples."""
        n4 = 4 * self.n
        seen = [False] * (n4 + 1)
        comps = []
        for s in range(1, n4 + 1):
            if seen[s]:
                continue
            stack = [s]
            comp = []
            while stack:
                x = stack.pop()
                if seen[x]:
                    continue
                seen[x] = True
                comp.append(x)
                stack.extend((face_neighbor(x), vertex_neighbor(x),
                              zigzag_neighbor(x), self.angle[x]))
            comps.append(tuple(sorted(comp)))
        return comps

    def gface_orbits(self) -> list[tuple[int, ...]]:
        """g-faces: polygons alternating vertex-edge and angle-edge."""
        return _orbits(self.labels, vertex_neighbor, self._ang)

    def gvertex_orbits(self) -> list[tuple[int, ...]]:
        """g-vertices: polygons alternating face-edge and angle-edge."""
        return _orbits(self.labels, face_neighbor, self._ang)

    def gzigzag_orbits(self) -> list[tuple[int, ...]]:
        """g-zigzags: polygons alternating zigzag-edge and angle-edge."""
        return _orbits(self.labels, zigzag_neighbor, self._ang)

    def orbit_index(self, orbits: list[tuple[int, ...]]) -> dict[int, int]:
        idx = {}
        for i, orb in enumerate(orbits):
            for x in orb:
                idx[x] = i
        return idx

    def angle_edges(self) -> list[frozenset[int]]:
        return [frozenset((x, self.angle[x])) for x in self.labels if x < self.angle[x]]

    def color(self, gedge: int) -> str:
        return "red" if gedge in self.reds else "green"

    # -- canonical code ------------------------------------------------------

    def precode(self, start: int) -> tuple[tuple[int, ...], frozenset[int], dict[int, int]]:
        """Labeling from a parity-1 start of one component: packed permutation,
        red set and the old->new label map."""
        if start % 2 == 0:
            raise StructureError("labeling must start at a parity-1 label")
        lab = _label_map(start, face_neighbor, vertex_neighbor, self._ang)
        return _pack(self, lab) + (lab,)

    def code(self) -> GBlinkCode:
        code = self._code
        if code is None:
            code = _canonical_code(self)
            object.__setattr__(self, "_code", code)
        return code

    def canonical(self) -> "GBlink":
        """Relabeled copy whose identity labeling realizes its own code."""
        return _canonical_form(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GBlink):
            return NotImplemented
        return self.code() == other.code()

    def __hash__(self) -> int:
        return hash(self.code())


EMPTY_CODE = GBlinkCode((), frozenset(), 0)


def _label_map(start: int, adj_f, adj_v, adj_a) -> dict[int, int]:
    """Stack labeling: quadruples are labeled atomically from a start vertex."""
    lab: dict[int, int] = {}
    i = 1
    stack = [start]
    while stack:
        a = stack.pop()
        if a in lab:
            continue
        b = adj_f(a)
        c = adj_v(b)
        d = adj_v(a)
        lab[a], lab[b], lab[c], lab[d] = i, i + 1, i + 2, i + 3
        stack.append(adj_a(b))
        stack.append(adj_a(d))
        i += 4
    return lab


def _pack(g: GBlink, lab: dict[int, int]) -> tuple[tuple[int, ...], frozenset[int]]:
    """Packed representation of a labeling restricted to one component."""
    inv = {new: old for old, new in lab.items()}
    m = len(lab)
    packed = []
    for new_odd in range(1, m, 2):
        old = inv[new_odd]
        packed.append(lab[g.angle[old]] // 2)
    reds = frozenset(gedge_of(lab[4 * k - 3]) for k in g.reds if 4 * k - 3 in lab)
    return tuple(packed), reds


def _component_code(g: GBlink, comp: Sequence[int]) -> tuple[tuple[tuple[int, ...], frozenset[int]], dict[int, int]]:
    best = None
    best_lab = None
    for start in comp:
        if start % 2 == 0:
            continue
        packed, reds, lab = g.precode(start)
        key = (len(packed), packed, len(reds), tuple(sorted(reds)))
        if best is None or key > best[0]:
            best = (key, (packed, reds))
            best_lab = lab
    assert best is not None
    return best[1], best_lab


def _canonical_code(g: GBlink) -> GBlinkCode:
    if g.n == 0:
        return GBlinkCode((), frozenset(), g.isolated_vertices)
    comps = g.components_labels()
    pieces = [_component_code(g, comp)[0] for comp in comps]
    pieces.sort(key=lambda pr: (len(pr[0]), pr[0], len(pr[1]), tuple(sorted(pr[1]))))
    packed: list[int] = []
    reds: set[int] = set()
    off = 0  # offset in permutation values (half-labels)
    for pperm, preds in pieces:
        packed.extend(x + off for x in pperm)
        reds.update(k + off // 2 for k in preds)
        off += len(pperm)
    return GBlinkCode(tuple(packed), frozenset(reds), g.isolated_vertices)


def _canonical_form(g: GBlink) -> GBlink:
    return from_code(g.code())


def from_code(code: GBlinkCode) -> GBlink:
    """Rebuild the labeled g-blink whose identity labeling packs to `code`."""
    m = len(code.packed)
    angle = [0] * (2 * m + 1)
    for i, half in enumerate(code.packed):
        odd = 2 * i + 1
        even = 2 * half
        angle[odd] = even
        angle[even] = odd
    return GBlink(angle, code.reds, code.isolated_vertices)


# -- transforms ---------------------------------------------------------------

TRANSFORM_KINDS = ("dual", "reflection", "refdual", "swap_colors")


def transform(g: GBlink, kind: str) -> GBlink:
    """Structure involutions: dual (parity+face/vertex swap), reflection
    (parity swap), refdual (face/vertex swap); all three preserve the induced
    oriented space.  swap_colors reverses orientation."""
    if kind == "swap_colors":
        return GBlink(g.angle, frozenset(range(1, g.n + 1)) - g.reds,
                      g.isolated_vertices, _validate=False).canonical()
    if kind not in TRANSFORM_KINDS:
        raise StructureError(f"unknown transform {kind!r}")
    if g.n == 0:
        return g
    swap_fv = kind in ("dual", "refdual")
    flip_parity = kind in ("dual", "reflection")
    swap_cols = kind == "dual" or kind == "refdual"
    adj_f = vertex_neighbor if swap_fv else face_neighbor
    adj_v = face_neighbor if swap_fv else vertex_neighbor
    # valid labeling starts have parity 1 after the transform
    want_odd = not flip_parity
    out: GBlink | None = None
    for comp in g.components_labels():
        start = min(x for x in comp if (x % 2 == 1) == want_odd)
        lab = _label_map(start, adj_f, adj_v, g._ang)
        m = len(lab)
        angle = [0] * (m + 1)
        for old, new in lab.items():
            angle[new] = lab[g.angle[old]]
        inv = {v: k for k, v in lab.items()}
        reds = set()
        for k in range(1, m // 4 + 1):
            is_red = gedge_of(inv[4 * k - 3]) in g.reds
            if is_red != swap_cols:
                reds.add(k)
        piece = GBlink(angle, reds, 0, _validate=False)
        out = piece if out is None else disjoint_union(out, piece)
    assert out is not None
    if g.isolated_vertices:
        out = GBlink(out.angle, out.reds, g.isolated_vertices, _validate=False)
    return out.canonical()


def disjoint_union(a: GBlink, b: GBlink) -> GBlink:
    off = 4 * a.n
    angle = list(a.angle) + [x + off for x in b.angle[1:]]
    reds = set(a.reds) | {k + a.n for k in b.reds}
    return GBlink(angle, reds, a.isolated_vertices + b.isolated_vertices,
                  _validate=False)


# -- merging and breaking ------------------------------------------------------

def merge(a: GBlink, ea: frozenset[int] | tuple[int, int],
          b: GBlink, eb: frozenset[int] | tuple[int, int]) -> GBlink:
    """Merge disjoint g-blinks at a basepair of angle-edges.

    The two angle-edges are replaced by two new edges joining the g-blinks,
    each linking vertices of distinct parity."""
    ea = frozenset(ea)
    eb = frozenset(eb)
    _check_angle_edge(a, ea)
    _check_angle_edge(b, eb)
    off = 4 * a.n
    angle = list(a.angle) + [x + off for x in b.angle[1:]]
    xa_odd = next(x for x in ea if x % 2 == 1)
    xa_even = next(x for x in ea if x % 2 == 0)
    yb_odd = next(x for x in eb if x % 2 == 1) + off
    yb_even = next(x for x in eb if x % 2 == 0) + off
    angle[xa_even] = yb_odd
    angle[yb_odd] = xa_even
    angle[yb_even] = xa_odd
    angle[xa_odd] = yb_even
    reds = set(a.reds) | {k + a.n for k in b.reds}
    out = GBlink(angle, reds, a.isolated_vertices + b.isolated_vertices)
    return out


def _check_angle_edge(g: GBlink, e: frozenset[int]) -> None:
    if len(e) != 2:
        raise StructureError("angle-edge must be a pair of labels")
    x, y = sorted(e)
    if not (1 <= x <= 4 * g.n) or g.angle[x] != y:
        raise StructureError(f"{set(e)} is not an angle-edge")


def find_breakpairs(g: GBlink) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Pairs of distinct angle-edges on the same g-face and same g-vertex."""
    face_idx = g.orbit_index(g.gface_orbits())
    vert_idx = g.orbit_index(g.gvertex_orbits())
    groups: dict[tuple[int, int], list[frozenset[int]]] = {}
    for e in g.angle_edges():
        x = min(e)
        groups.setdefault((face_idx[x], vert_idx[x]), []).append(e)
    pairs = []
    for edges in groups.values():
        edges.sort(key=min)
        for e1, e2 in itertools.combinations(edges, 2):
            pairs.append((e1, e2))
    return pairs


def break_at(g: GBlink, pair: tuple[frozenset[int], frozenset[int]]) -> tuple[GBlink, GBlink]:
    """Split a g-blink at a breakpair into two disconnected g-blinks."""
    e1, e2 = (frozenset(pair[0]), frozenset(pair[1]))
    if (e1, e2) not in find_breakpairs(g) and (e2, e1) not in find_breakpairs(g):
        raise StructureError("not a breakpair")
    angle = list(g.angle)
    x_odd = next(x for x in e1 if x % 2 == 1)
    x_even = next(x for x in e1 if x % 2 == 0)
    y_odd = next(x for x in e2 if x % 2 == 1)
    y_even = next(x for x in e2 if x % 2 == 0)
    angle[x_odd], angle[y_even] = y_even, x_odd
    angle[x_even], angle[y_odd] = y_odd, x_even
    split = GBlink(angle, g.reds, 0, _validate=False)
    comps = split.components_labels()
    if len(comps) != 2:
        raise StructureError("breakpair did not separate the g-blink")
    pieces = [_extract_component(split, comp) for comp in comps]
    pieces.sort(key=lambda p: p.code().sort_key())
    return pieces[0], pieces[1]


def _extract_component(g: GBlink, comp: Sequence[int]) -> GBlink:
    start = min(x for x in comp if x % 2 == 1)
    lab = _label_map(start, face_neighbor, vertex_neighbor, g._ang)
    m = len(lab)
    angle = [0] * (m + 1)
    for old, new in lab.items():
        angle[new] = lab[g.angle[old]]
    inv = {v: k for k, v in lab.items()}
    reds = {k for k in range(1, m // 4 + 1) if gedge_of(inv[4 * k - 3]) in g.reds}
    return GBlink(angle, reds, 0, _validate=False)


def blocks(g: GBlink) -> list[GBlink]:
    """Repeatedly break until no breakpairs remain; block multiset is
    independent of the breaking order."""
    work = [_extract_component(g, c) for c in g.components_labels()] if g.n else []
    out: list[GBlink] = []
    while work:
        p = work.pop()
        bps = find_breakpairs(p)
        if not bps:
            out.append(p)
            continue
        work.extend(break_at(p, bps[0]))
    out.sort(key=lambda p: p.code().sort_key())
    return out


# -- zigzags -------------------------------------------------------------------

def zigzag_cycles(g: GBlink) -> list[tuple[int, ...]]:
    """Oriented g-zigzag polygons (zigzag step first from the minimum label)."""
    return _orbits(g.labels, zigzag_neighbor, g._ang)


def zigzag_gedge_sequence(g: GBlink, cycle: Sequence[int]) -> list[int]:
    """g-edges visited along a zigzag cycle, one per zigzag-edge step."""
    return [gedge_of(cycle[i]) for i in range(0, len(cycle), 2)]


def is_alternating(g: GBlink, cycle: Sequence[int]) -> bool:
    """True iff consecutive g-edges along the zigzag strictly alternate colors."""
    seq = zigzag_gedge_sequence(g, cycle)
    if len(seq) < 2:
        return False
    cols = [e in g.reds for e in seq]
    return all(cols[i] != cols[(i + 1) % len(cols)] for i in range(len(cols)))


def has_alternating_zigzag(g: GBlink) -> bool:
    return any(is_alternating(g, z) for z in zigzag_cycles(g))
