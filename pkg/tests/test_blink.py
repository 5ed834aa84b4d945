import pytest

from blinks.blink import BFLDiagram, Blink, bfl_view, blink_to_gblink, gblink_to_blinks
from blinks.gblink import GBlink, StructureError, zigzag_cycles


def green_loop() -> Blink:
    return Blink(((0, 1),))


def path_edge() -> Blink:
    return Blink(((0,), (1,)))


def triangle(reds=()) -> Blink:
    # vertices A, B, C; edges AB=0, BC=1, CA=2
    return Blink(((0, 5), (1, 2), (3, 4)), frozenset(reds))


def double_edge(reds=()) -> Blink:
    return Blink(((0, 2), (3, 1)), frozenset(reds))


def test_loop_gblink_counts():
    g = blink_to_gblink(green_loop())
    assert g.n == 1
    assert len(g.gface_orbits()) + len(g.gvertex_orbits()) == 3
    assert len(g.gvertex_orbits()) == 1  # one blink vertex


def test_path_edge_is_dual_of_loop():
    from blinks.gblink import transform
    a = blink_to_gblink(green_loop())
    b = blink_to_gblink(path_edge())
    assert a != b
    assert transform(transform(a, "dual"), "swap_colors") == b


def test_empty_and_isolated():
    g = blink_to_gblink(Blink((), isolated_vertices=1))
    assert g.n == 0 and g.isolated_vertices == 1
    assert len(gblink_to_blinks(g)) == 1


def test_face_vertex_counts_triangle():
    g = blink_to_gblink(triangle())
    assert g.n == 3
    assert len(g.gvertex_orbits()) == 3
    assert len(g.gface_orbits()) == 2


def test_roundtrip_through_every_face():
    for b in (green_loop(), path_edge(), triangle({1}), double_edge({0})):
        g = blink_to_gblink(b)
        views = gblink_to_blinks(g)
        assert len(views) == len(g.gface_orbits())
        for view in views:
            assert blink_to_gblink(view) == g
        # distinct external faces
        assert len({v.external_face for v in views}) >= 1


def test_gblink_independent_of_external_face():
    b1 = triangle({1})
    g = blink_to_gblink(b1)
    for view in gblink_to_blinks(g):
        assert blink_to_gblink(view) == g


def test_bfl_view_counts():
    g = blink_to_gblink(green_loop())
    d = bfl_view(g, 0)
    assert d.num_crossings == 1
    assert len(d.components) == len(zigzag_cycles(g)) == 1
    g3 = blink_to_gblink(triangle())
    d3 = bfl_view(g3, 1)
    assert d3.num_crossings == 3
    assert len(d3.components) == len(zigzag_cycles(g3))


def test_bfl_view_bad_face():
    g = blink_to_gblink(green_loop())
    with pytest.raises(StructureError):
        bfl_view(g, 17)


def test_nonplanar_rotation_rejected():
    # K5-like gadget is overkill: a one-vertex map with two interleaved loops
    # has genus 1 (rotation a b a b)
    with pytest.raises(StructureError):
        Blink(((0, 2, 1, 3),))
