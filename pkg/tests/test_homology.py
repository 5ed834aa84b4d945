import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blinks.blink import Blink, blink_to_gblink
from blinks.gblink import GBlink, transform
from blinks.homology import HomologyGroup, homology, linking_matrix
from blinks.snf import diagonal, int_det, mat_mul, smith_normal_form


def test_snf_basics():
    d, u, v = smith_normal_form([[0]])
    assert diagonal(d) == [0]
    d, u, v = smith_normal_form([[1]])
    assert diagonal(d) == [1]
    d, u, v = smith_normal_form([[2, 0], [0, 3]])
    assert diagonal(d) == [1, 6]


def _check_certificate(m):
    d, u, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u, m), v) == d
    assert abs(int_det(u)) == 1
    assert abs(int_det(v)) == 1
    diag = diagonal(d)
    nz = [x for x in diag if x]
    assert all(x >= 0 for x in diag)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    # zeros come after the nonzero invariant factors
    seen_zero = False
    for x in diag:
        if x == 0:
            seen_zero = True
        else:
            assert not seen_zero


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.data())
def test_snf_certificate_random(nr, nc, data):
    m = [[data.draw(st.integers(-9, 9)) for _ in range(nc)] for _ in range(nr)]
    _check_certificate(m)


def test_snf_determinantal_divisor_oracle():
    # product of the first k invariant factors == gcd of all k x k minors
    import math
    rng = random.Random(3)
    for _ in range(20):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        d, _, _ = smith_normal_form(m)
        diag = diagonal(d)
        for k in range(1, min(nr, nc) + 1):
            minors = []
            for rows in itertools.combinations(range(nr), k):
                for cols in itertools.combinations(range(nc), k):
                    sub = [[m[r][c] for c in cols] for r in rows]
                    minors.append(int_det(sub))
            gk = math.gcd(*minors) if minors else 0
            prod = 1
            for x in diag[:k]:
                prod *= x
            assert abs(prod) == gk


def green_loop():
    return blink_to_gblink(Blink(((0, 1),)))


def mixed_path():
    # two-edge path with one red and one green edge: 0-framed unknot
    return blink_to_gblink(Blink(((0,), (1, 2), (3,)), reds={1}))


def same_path(reds=()):
    return blink_to_gblink(Blink(((0,), (1, 2), (3,)), reds=frozenset(reds)))


def test_isolated_vertex_matrix():
    g = GBlink([0], isolated_vertices=1)
    assert linking_matrix(g) == [[0]]
    assert homology(g) == HomologyGroup(1, ())


def test_green_loop_unimodular():
    m = linking_matrix(green_loop())
    assert m in ([[1]], [[-1]])
    assert homology(green_loop()) == HomologyGroup(0, ())


def test_swap_colors_negates_matrix():
    for g in (green_loop(), mixed_path(), same_path()):
        m = linking_matrix(g)
        g2 = GBlink(g.angle, frozenset(range(1, g.n + 1)) - g.reds,
                    g.isolated_vertices)
        m2 = linking_matrix(g2)
        assert m2 == [[-x for x in row] for row in m]


def test_zero_framed_unknot_homology():
    # the mixed-color path presents the direct product of a sphere and circle
    assert homology(mixed_path()) == HomologyGroup(1, ())


def test_two_curl_same_color_is_order_two():
    assert homology(same_path()) == HomologyGroup(0, (2,))
    assert homology(same_path({0, 1})) == HomologyGroup(0, (2,))


def test_homology_invariant_under_transforms():
    for g in (green_loop(), mixed_path(), same_path()):
        h = homology(g)
        for kind in ("dual", "reflection", "refdual", "swap_colors"):
            assert homology(transform(g, kind)) == h


def test_homology_str():
    assert str(HomologyGroup(0, ())) == "(0)"
    assert str(HomologyGroup(1, (2, 2))) == "(1) 2^2"
    assert str(HomologyGroup(0, (2, 4))) == "2 4"
    assert str(HomologyGroup(3, ())) == "(3)"
