import itertools
import random

import pytest

from blinks.gblink import (
    GBlink,
    GBlinkCode,
    StructureError,
    blocks,
    break_at,
    compare,
    face_neighbor,
    find_breakpairs,
    from_code,
    gedge_of,
    merge,
    transform,
    vertex_neighbor,
    zigzag_cycles,
    zigzag_neighbor,
)
from blinks.textio import format_gblink, parse_gblink

# 6-edge worked example: packed permutation and red set of its known pre-code.
EX6_PACKED = (10, 3, 2, 11, 4, 6, 5, 9, 8, 12, 7, 1)
EX6_REDS = frozenset({1, 2, 3})
EX6_ANGLE = [0, 20, 23, 6, 5, 4, 3, 22, 9, 8, 13, 12, 11,
             10, 21, 18, 17, 16, 15, 24, 1, 14, 7, 2, 19]


def ex6() -> GBlink:
    return from_code(GBlinkCode(EX6_PACKED, EX6_REDS))


def test_label_arithmetic_quadruple():
    # quadruple 2 = labels 5..8
    assert face_neighbor(5) == 6 and face_neighbor(6) == 5
    assert face_neighbor(7) == 8 and face_neighbor(8) == 7
    assert vertex_neighbor(5) == 8 and vertex_neighbor(6) == 7
    assert zigzag_neighbor(5) == 7 and zigzag_neighbor(6) == 8
    assert gedge_of(5) == 2 and gedge_of(8) == 2


def test_unpack_matches_full_angle_list():
    g = ex6()
    assert list(g.angle) == EX6_ANGLE


def test_identity_labeling_reproduces_packed():
    g = ex6()
    packed, reds, lab = g.precode(1)
    assert packed == EX6_PACKED
    assert reds == EX6_REDS
    assert all(lab[x] == x for x in g.labels)


def test_code_is_max_over_all_starts():
    g = ex6()
    pre = []
    for start in range(1, 25, 2):
        packed, reds, _ = g.precode(start)
        pre.append(GBlinkCode(packed, reds))
    best = max(pre, key=lambda c: c.sort_key())
    assert g.code() == best
    assert g.code() >= GBlinkCode(EX6_PACKED, EX6_REDS)


def test_code_invariant_under_relabeling():
    g = ex6()
    # relabel from every start: all produce the same canonical code
    codes = set()
    for start in range(1, 25, 2):
        _, _, lab = g.precode(start)
        angle = [0] * 25
        for old, new in lab.items():
            angle[new] = lab[g.angle[old]]
        inv = {v: k for k, v in lab.items()}
        reds = {k for k in range(1, 7) if gedge_of(inv[4 * k - 3]) in g.reds}
        codes.add(GBlink(angle, reds).code())
    assert len(codes) == 1


def test_euler_identity_per_component():
    g = ex6()
    f = len(g.gface_orbits())
    v = len(g.gvertex_orbits())
    assert f + v == g.n + 2


def test_compare_clauses():
    a = GBlinkCode((1, 2, 3, 4), frozenset())
    b = GBlinkCode((1, 2, 3, 4, 5, 6), frozenset())
    assert compare(a, b) == -1  # shorter permutation first
    c1 = GBlinkCode((2, 1), frozenset({1}))
    c2 = GBlinkCode((2, 1), frozenset({1, 2}))
    assert compare(c1, c2) == -1  # fewer reds first
    d1 = GBlinkCode((2, 1), frozenset({1, 3}))
    d2 = GBlinkCode((2, 1), frozenset({2, 3}))
    assert compare(d1, d2) == -1  # min of symmetric difference
    assert compare(d1, d1) == 0


def test_transforms_are_involutions():
    g = ex6()
    for kind in ("dual", "reflection", "refdual", "swap_colors"):
        assert transform(transform(g, kind), kind) == g


def test_refdual_is_reflection_of_dual():
    g = ex6()
    assert transform(transform(g, "dual"), "reflection") == transform(g, "refdual")
    assert transform(transform(g, "reflection"), "dual") == transform(g, "refdual")


def test_swap_colors_on_monochromatic():
    g = GBlink([0, 2, 1, 4, 3], reds=())  # single green loop or pendant edge
    h = transform(g, "swap_colors")
    assert h.reds == frozenset({1})
    assert h.angle == g.angle


def test_single_edge_gblinks_are_dual_pair():
    a = GBlink([0, 2, 1, 4, 3])
    b = GBlink([0, 4, 3, 2, 1])
    assert a != b
    # dual swaps the face/vertex roles and the edge colors
    assert transform(a, "dual") == transform(b, "swap_colors")
    assert transform(a, "refdual") == transform(transform(a, "dual"), "reflection")


def test_merge_counts_and_roundtrip():
    a = ex6()
    b = GBlink([0, 2, 1, 4, 3])
    ea = a.angle_edges()[0]
    eb = b.angle_edges()[0]
    m = merge(a, ea, b, eb)
    assert m.n == a.n + b.n
    za, zb, zm = len(zigzag_cycles(a)), len(zigzag_cycles(b)), len(zigzag_cycles(m))
    assert zm == za + zb - 1
    # the two created angle-edges form a breakpair; breaking restores the pieces
    created = [e for e in m.angle_edges()
               if (min(e) <= 4 * a.n) != (max(e) <= 4 * a.n)]
    assert len(created) == 2
    p1, p2 = break_at(m, (created[0], created[1]))
    assert {p1, p2} == {a.canonical(), b.canonical()}


def test_block_decomposition_order_independent():
    a = GBlink([0, 2, 1, 4, 3])
    b = GBlink([0, 4, 3, 2, 1], reds={1})
    m = merge(a, a.angle_edges()[0], b, b.angle_edges()[0])
    m2 = merge(m, m.angle_edges()[-1], a, a.angle_edges()[0])
    got = blocks(m2)
    assert len(got) == 3
    rng = random.Random(7)
    for _ in range(5):
        work, out = [m2], []
        while work:
            p = work.pop()
            bps = find_breakpairs(p)
            if not bps:
                out.append(p)
            else:
                work.extend(break_at(p, rng.choice(bps)))
        assert sorted(x.code().sort_key() for x in out) == \
               sorted(x.code().sort_key() for x in got)


def test_text_roundtrip():
    g = ex6()
    line = format_gblink(g)
    assert parse_gblink(line) == g
    assert format_gblink(parse_gblink(line)) == line
    iso = GBlink([0], isolated_vertices=2)
    assert parse_gblink(format_gblink(iso)) == iso


def test_empty_code_is_minimal_sentinel():
    empty = GBlink([0], isolated_vertices=1)
    assert empty.code().packed == ()
    assert empty.code() < ex6().code()


def test_invalid_structures_rejected():
    with pytest.raises(StructureError):
        GBlink([0, 3, 4, 1, 2])  # angle joins same parity
    with pytest.raises(StructureError):
        GBlink([0, 2, 1, 4])  # bad length
    with pytest.raises(StructureError):
        GBlink([0, 2, 1, 4, 3], reds={2})  # red out of range
