"""Canonical representative of a g-blink.

The g-blink is separated into blocks at breakpairs while zigzag labels are
tracked on angle-edges, the block tree is rooted at its center with blocks
normalized over their four structure involutions, children are ordered by
linearized-tree comparison, and the blocks are remerged at canonical
basepair angle-edges.  The result presents the same space, is deterministic
and idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .gblink import (
    GBlink,
    GBlinkCode,
    StructureError,
    _label_map,
    face_neighbor,
    gedge_of,
    vertex_neighbor,
    disjoint_union,
    find_breakpairs,
    zigzag_cycles,
)


@dataclass
class _Piece:
    g: GBlink
    zlabel: dict[frozenset, int]  # angle-edge -> zigzag label

    def code(self) -> GBlinkCode:
        return self.g.code()


def _relabel_with_map(g: GBlink, angle: list[int], start: int):
    lab = _label_map(start, face_neighbor, vertex_neighbor,
                     lambda x: angle[x])
    m = len(lab)
    new_angle = [0] * (m + 1)
    for old, new in lab.items():
        new_angle[new] = lab[angle[old]]
    inv = {v: k for k, v in lab.items()}
    reds = {k for k in range(1, m // 4 + 1) if gedge_of(inv[4 * k - 3]) in g.reds}
    return GBlink(new_angle, reds, 0, _validate=False), lab


def _split_tracked(piece: _Piece, pair) -> list[_Piece]:
    g = piece.g
    e1, e2 = pair
    label = piece.zlabel[e1]
    assert piece.zlabel[e2] == label
    angle = list(g.angle)
    x_odd = next(x for x in e1 if x % 2 == 1)
    x_even = next(x for x in e1 if x % 2 == 0)
    y_odd = next(x for x in e2 if x % 2 == 1)
    y_even = next(x for x in e2 if x % 2 == 0)
    angle[x_odd], angle[y_even] = y_even, x_odd
    angle[x_even], angle[y_odd] = y_odd, x_even
    # two new edges inherit the broken pair's zigzag label
    new_zlabel = dict(piece.zlabel)
    del new_zlabel[e1]
    del new_zlabel[e2]
    new_zlabel[frozenset((x_odd, y_even))] = label
    new_zlabel[frozenset((x_even, y_odd))] = label
    # split components and relabel each
    seen: set[int] = set()
    pieces = []
    for x in range(1, 4 * g.n + 1):
        if x in seen:
            continue
        sub, lab = _relabel_with_map(g, angle, x if x % 2 else angle[x])
        seen |= set(lab)
        sub_zl = {}
        for e, z in new_zlabel.items():
            a, b = tuple(e)
            if a in lab:
                sub_zl[frozenset((lab[a], lab[b]))] = z
        pieces.append(_Piece(sub, sub_zl))
    if len(pieces) != 2:
        raise StructureError("breakpair did not separate the piece")
    return pieces


def _transform_tracked(piece: _Piece, kind: str) -> _Piece:
    """dual/reflection/refdual with angle-edge tracking (colors follow the
    same composition rules as the plain transforms)."""
    g = piece.g
    swap_fv = kind in ("dual", "refdual")
    flip_parity = kind in ("dual", "reflection")
    swap_cols = kind in ("dual", "refdual")
    adj_f = vertex_neighbor if swap_fv else face_neighbor
    adj_v = face_neighbor if swap_fv else vertex_neighbor
    want_odd = not flip_parity
    start = min(x for x in g.labels if (x % 2 == 1) == want_odd)
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
    out = GBlink(angle, reds, 0, _validate=False)
    zl = {frozenset((lab[a], lab[b])): z
          for e, z in piece.zlabel.items() for a, b in (tuple(e),)}
    return _Piece(out, zl)


def _normalize_block(piece: _Piece) -> _Piece:
    best = piece
    for kind in ("dual", "reflection", "refdual"):
        cand = _transform_tracked(piece, kind)
        if cand.code().sort_key() < best.code().sort_key():
            best = cand
    return best


# -- tree machinery --------------------------------------------------------------

_Z_SENTINEL = ("z",)


def _linearize(node, children, out, level):
    out.append((node, level))
    for ch in children[node]:
        _linearize(ch, children, out, level + 1)


def _compare_trees(r1, r2, children, key_of) -> int:
    s1: list = []
    s2: list = []
    _linearize(r1, children, s1, 0)
    _linearize(r2, children, s2, 0)
    for (u1, l1), (u2, l2) in zip(s1, s2):
        if l1 != l2:
            return -1 if l1 < l2 else 1
        k1, k2 = key_of(u1), key_of(u2)
        if k1 != k2:
            return -1 if k1 < k2 else 1
    if len(s1) != len(s2):
        return -1 if len(s1) < len(s2) else 1
    return 0


def representative(g: GBlink) -> GBlink:
    """Deterministic normal form inducing the same space."""
    if g.n == 0:
        return g
    comps = g.components_labels()
    if len(comps) > 1:
        from .gblink import _extract_component
        parts = [representative(_extract_component(g, c)) for c in comps]
        parts.sort(key=lambda p: p.code().sort_key())
        out = parts[0]
        for p in parts[1:]:
            out = disjoint_union(out, p)
        return GBlink(out.angle, out.reds, g.isolated_vertices,
                      _validate=False) if g.isolated_vertices else out
    base = g.canonical()
    zcycles = zigzag_cycles(base)
    zl = {}
    for zi, cyc in enumerate(zcycles):
        for pos in range(1, len(cyc), 2):
            e = frozenset((cyc[pos], base.angle[cyc[pos]]))
            zl[e] = zi
    # every angle edge gets a label (each lies in exactly one zigzag)
    for e in base.angle_edges():
        if e not in zl:
            x = min(e)
            for zi, cyc in enumerate(zcycles):
                if x in cyc:
                    zl[e] = zi
                    break
    root_piece = _Piece(base, zl)

    # separating phase
    work = [root_piece]
    blocks: list[_Piece] = []
    while work:
        p = work.pop()
        bps = find_breakpairs(p.g)
        if not bps:
            blocks.append(p)
        else:
            work.extend(_split_tracked(p, bps[0]))
    if len(blocks) == 1:
        only = _normalize_block(blocks[0])
        if g.isolated_vertices:
            return GBlink(only.g.canonical().angle, only.g.canonical().reds,
                          g.isolated_vertices)
        return only.g.canonical()

    # intermediate phase: bipartite block tree
    blocks = [_normalize_block(p) for p in blocks]
    zneighbors: dict[int, list[int]] = {}
    for i, p in enumerate(blocks):
        for z in set(p.zlabel.values()):
            zneighbors.setdefault(z, []).append(i)
    zs = [z for z, ps in zneighbors.items() if len(ps) >= 2]
    nodes = [("p", i) for i in range(len(blocks))] + [("z", z) for z in zs]
    adj: dict[tuple, set[tuple]] = {v: set() for v in nodes}
    for z in zs:
        for i in zneighbors[z]:
            adj[("z", z)].add(("p", i))
            adj[("p", i)].add(("z", z))
    # center of the tree
    deg = {v: len(adj[v]) for v in nodes}
    alive = set(nodes)
    while len(alive) > 1:
        leaves = [v for v in alive if deg[v] <= 1]
        if len(leaves) == len(alive):
            break
        for v in leaves:
            alive.discard(v)
            for u in adj[v]:
                if u in alive:
                    deg[u] -= 1
        if len(alive) == 1:
            break
    root = min(alive, key=lambda v: (v[0] != "p", v))
    # orient the tree
    children: dict[tuple, list[tuple]] = {v: [] for v in nodes}
    parent: dict[tuple, tuple | None] = {root: None}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for u in sorted(adj[v]):
            if u not in parent:
                parent[u] = v
                children[v].append(u)
                order.append(u)
                stack.append(u)

    def key_of(v):
        if v[0] == "z":
            return (0,)
        return (1,) + blocks[v[1]].code().sort_key()

    # organize children bottom-up
    for v in reversed(order):
        children[v].sort(key=cmp_to_key(
            lambda a, b: _compare_trees(a, b, children, key_of)))

    # merging phase in a global label space
    offsets = []
    off = 0
    for p in blocks:
        offsets.append(off)
        off += 4 * p.g.n
    angle = [0] * (off + 1)
    reds: set[int] = set()
    for p, o in zip(blocks, offsets):
        for x in p.g.labels:
            angle[x + o] = p.g.angle[x] + o
        reds |= {k + o // 4 for k in p.g.reds}

    def canonical_edge(i: int, z: int) -> frozenset:
        p = blocks[i]
        _, _, lab = p.g.precode(_code_start(p.g))
        cands = [e for e, zz in p.zlabel.items() if zz == z]
        best = min(cands, key=lambda e: min(lab[x] for x in e))
        return frozenset(x + offsets[i] for x in best)

    live_edges: dict[tuple, frozenset] = {}
    for v in order:
        if v[0] != "z":
            continue
        z = v[1]
        nbrs = []
        if parent[v] is not None:
            nbrs.append(parent[v])
        nbrs.extend(children[v])
        for u in nbrs:
            if (u[1], z) not in live_edges:
                live_edges[(u[1], z)] = canonical_edge(u[1], z)
        first = nbrs[0]
        cur = live_edges[(first[1], z)]
        for u in nbrs[1:]:
            other = live_edges[(u[1], z)]
            x_odd = next(x for x in cur if x % 2 == 1)
            x_even = next(x for x in cur if x % 2 == 0)
            y_odd = next(x for x in other if x % 2 == 1)
            y_even = next(x for x in other if x % 2 == 0)
            angle[x_even], angle[y_odd] = y_odd, x_even
            angle[y_even], angle[x_odd] = x_odd, y_even
            # updated canonical edge: the new angle-edge at the odd vertex
            # of the newly attached piece
            cur = frozenset((x_even, y_odd))
    merged = GBlink(angle, reds, g.isolated_vertices)
    return merged.canonical()


def _code_start(g: GBlink) -> int:
    best = None
    best_key = None
    for start in range(1, 4 * g.n + 1, 2):
        packed, rds, _ = g.precode(start)
        key = (len(packed), packed, len(rds), tuple(sorted(rds)))
        if best_key is None or key > best_key:
            best_key = key
            best = start
    return best
