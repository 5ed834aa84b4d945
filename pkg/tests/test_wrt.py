import itertools

import pytest

from blinks.blink import Blink, blink_to_gblink
from blinks.gblink import GBlink, disjoint_union, merge, transform
from blinks.homology import homology
from blinks.wrt import (
    UnsupportedInput,
    reference_gblink,
    wrt,
    wrt_raw,
    wrt_raw_full,
    wrt_sequence,
)

# published invariants of the +1-framed-trefoil homology sphere
POINCARE_TABLE = {
    3: 0.7071067811 + 0.0j,
    4: -0.5 + 0.0j,
    5: -0.3007504775 - 0.9256147934j,
    6: 0.2886751346 + 0.0j,
    7: -0.8460344491 - 0.0447830425j,
    8: 0.0 - 0.7325378163j,
    9: -0.1761268770 + 0.4020460816j,
    10: -0.7663118960 - 0.5567581822j,
    11: 0.2998611170 - 0.1557368892j,
    12: -0.7886751345 + 0.1830127018j,
    13: -0.1148609711 - 0.7426524382j,
    14: -0.1074423864 + 0.3977522621j,
    15: -0.7770955704 - 0.5344039501j,
    16: 0.3141711649 - 0.1762214752j,
}


def poincare_gblink() -> GBlink:
    """Green triangle with two green pendant edges at distinct vertices."""
    return blink_to_gblink(Blink(((0, 5, 6), (1, 2, 8), (3, 4), (7,), (9,))))


def green_curl():
    return blink_to_gblink(Blink(((0, 1),)))


def red_curl():
    return blink_to_gblink(Blink(((0, 1),), reds={0}))


def quaternionic():
    return blink_to_gblink(Blink(((0, 2, 4, 6), (7, 5, 3, 1))))


def test_theta_and_lambda_trivial_triple():
    from blinks.recoupling import level
    lv = level(5)
    assert lv.theta[0, 0, 0] == pytest.approx(1.0)
    assert lv.lam[0, 0, 0] == pytest.approx(1.0)


def test_reference_is_one_every_level():
    for r in range(3, 9):
        assert wrt(reference_gblink(), r) == pytest.approx(1.0, abs=1e-9)


def test_poincare_small_levels():
    g = poincare_gblink()
    assert homology(g).betti == 0 and homology(g).torsion == ()
    for r in (3, 4, 5, 6):
        assert wrt(g, r) == pytest.approx(POINCARE_TABLE[r], abs=1e-7)


def test_three_sphere_presentations_agree():
    import math
    mu3 = 1 / math.sqrt(2)
    hopf0 = blink_to_gblink(Blink(((0, 2), (3, 1))))  # 0-framed Hopf pair
    for g in (green_curl(), red_curl(), hopf0,
              disjoint_union(green_curl(), red_curl())):
        assert wrt(g, 3) == pytest.approx(mu3, abs=1e-9)


def test_quaternionic_merge_table_rows():
    d4 = quaternionic()
    assert wrt(d4, 3) == pytest.approx(1.4142135624, abs=1e-5)
    assert wrt(d4, 4) == pytest.approx(1.5 - 0.5j, abs=1e-5)
    m = merge(d4, d4.angle_edges()[0], d4, d4.angle_edges()[3])
    assert wrt(m, 3) == pytest.approx(2.0, abs=1e-5)
    assert wrt(m, 4) == pytest.approx(2.0 - 1.0j, abs=1e-5)


def test_detached_curl_invariance():
    g = poincare_gblink()
    gc = disjoint_union(g, green_curl())
    for r in (3, 4, 5):
        assert wrt(gc, r) == pytest.approx(wrt(g, r), abs=1e-9)


def test_transform_invariance_and_conjugation():
    for g in (poincare_gblink(), quaternionic()):
        for kind in ("dual", "reflection", "refdual"):
            for r in (3, 4, 5):
                assert wrt(transform(g, kind), r) == pytest.approx(wrt(g, r), abs=1e-8)
        for r in (3, 4, 5):
            assert wrt(transform(g, "swap_colors"), r) == \
                pytest.approx(wrt(g, r).conjugate(), abs=1e-8)


def test_isolated_vertices_rejected():
    g = GBlink([0], isolated_vertices=1)
    with pytest.raises(UnsupportedInput):
        wrt_raw(g, 3)
    with pytest.raises(ValueError):
        wrt_raw(green_curl(), 2)


def test_contraction_equals_full_enumeration():
    # small corpus; the exhaustive oracle uses an independent scalar path
    corpus = [
        green_curl(), red_curl(), reference_gblink(),
        blink_to_gblink(Blink(((0, 2), (3, 1)), reds={0})),
        blink_to_gblink(Blink(((0, 5), (1, 2), (3, 4)), reds={1})),
        quaternionic(),
    ]
    for g in corpus:
        for r in (3, 4):
            assert wrt_raw(g, r) == pytest.approx(wrt_raw_full(g, r), abs=1e-8)


def test_wrt_sequence_shape():
    seq = wrt_sequence(green_curl(), 6)
    assert len(seq) == 4
