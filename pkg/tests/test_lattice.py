import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hct.eisenstein import ground_state_count, is_attainable
from hct.errors import CoordinateOverflow, NotAttainable, OutOfDomain
from hct.lattice import (
    Sublattice,
    common_parallelogram_index,
    dist_squared,
    embed,
    enumerate_ground_states,
    reflect,
    rotate60,
    six_neighbors,
    sublattice_contains,
    torus_distance_squared,
)

coords = st.integers(-1000, 1000)


def test_dist_squared_examples():
    assert dist_squared((0, 0), (0, 0)) == 0
    assert dist_squared((0, 0), (5, 3)) == 49
    assert dist_squared((0, 0), (4, 3)) == 37


def test_dist_squared_overflow():
    with pytest.raises(CoordinateOverflow):
        dist_squared((2 ** 31, 0), (0, 0))


@settings(max_examples=500, deadline=None)
@given(coords, coords, coords, coords)
def test_metric_matches_embedding(m1, n1, m2, n2):
    x, y = (m1, n1), (m2, n2)
    ex, ey = embed(x), embed(y)
    eu = (ex[0] - ey[0]) ** 2 + (ex[1] - ey[1]) ** 2
    d = dist_squared(x, y)
    assert abs(eu - d) <= 1e-9 * max(1, d)
    assert d == dist_squared(y, x)
    assert (d == 0) == (x == y)
    if x != y:
        assert d >= 1


def test_embed_examples():
    assert embed((0, 0)) == (0.0, 0.0)
    x, y = embed((0, 1))
    assert x == 0.5 and abs(y - math.sqrt(3) / 2) < 1e-12
    x, y = embed((1, 1))
    assert x == 1.5 and abs(y - math.sqrt(3) / 2) < 1e-12


@settings(max_examples=300, deadline=None)
@given(coords, coords, coords, coords)
def test_reflection_and_rotation_are_isometries(m1, n1, m2, n2):
    x, y = (m1, n1), (m2, n2)
    assert dist_squared(reflect(x), reflect(y)) == dist_squared(x, y)
    assert dist_squared(rotate60(x), rotate60(y)) == dist_squared(x, y)


def test_six_neighbors_examples():
    s = Sublattice(7, 0)
    assert six_neighbors(s) == [(7, 0), (0, 7), (-7, 7), (-7, 0), (0, -7), (7, -7)]
    assert (-3, 8) in six_neighbors(Sublattice(5, 3))
    for a, b in [(7, 0), (5, 3), (8, 7), (13, 0), (11, 2), (7, 7)]:
        s = Sublattice(a, b)
        for z in six_neighbors(s):
            assert dist_squared(z, (0, 0)) == s.index
            assert s.contains(z)


def test_sublattice_contains():
    assert sublattice_contains(Sublattice(7, 0), (14, 7))
    assert not sublattice_contains(Sublattice(7, 0), (1, 1))
    assert sublattice_contains(Sublattice(5, 3), (2, 11))


def test_sublattice_membership_closed_under_addition():
    rng = random.Random(11)
    for a, b in [(5, 3), (7, 0), (8, 7)]:
        s = Sublattice(a, b)
        members = []
        while len(members) < 20:
            u, v = rng.randint(-5, 5), rng.randint(-5, 5)
            members.append((u * a - v * b, u * b + v * (a + b)))
        for x in members:
            assert s.contains(x)
            assert s.contains((-x[0], -x[1]))
        for x in members[:10]:
            for y in members[:10]:
                assert s.contains((x[0] + y[0], x[1] + y[1]))


def test_six_neighbors_generate_same_sublattice():
    rng = random.Random(5)
    for a, b in [(5, 3), (11, 2), (8, 7)]:
        s = Sublattice(a, b)
        for g in six_neighbors(s):
            # the sublattice spanned by g and rotate60(g) equals s's member set
            g2 = rotate60(g)
            for _ in range(50):
                u, v = rng.randint(-4, 4), rng.randint(-4, 4)
                x = (u * g[0] + v * g2[0], u * g[1] + v * g2[1])
                assert s.contains(x)


def test_coset_representatives_cover_all_cosets():
    for a, b in [(2, 1), (3, 0), (5, 3), (2, 2)]:
        s = Sublattice(a, b)
        reps = s.coset_representatives
        assert len(reps) == s.index
        assert len({s.coset_key(r) for r in reps}) == s.index


def test_enumerate_ground_states_counts():
    assert len(enumerate_ground_states(49)) == 147
    assert len(enumerate_ground_states(1)) == 1
    gs169 = enumerate_ground_states(169)
    assert len(gs169) == 507
    inclined = [g for g in gs169 if (g.sublattice.a, g.sublattice.b) == (8, 7)]
    assert len(inclined) == 338
    with pytest.raises(NotAttainable):
        enumerate_ground_states(2)


def test_enumerate_ground_states_matches_count_up_to_500():
    for n in range(1, 501):
        if is_attainable(n) and n <= 200:
            assert len(enumerate_ground_states(n)) == ground_state_count(n)


def test_ground_states_are_distinct_site_sets():
    seen = set()
    for g in enumerate_ground_states(49):
        key = frozenset(g.sites_in_rect(0, 49, 0, 49))
        assert len(key) == 49  # one site per coset in a D^2 x D^2 tile
        assert key not in seen
        seen.add(key)


def test_common_parallelogram_index():
    assert common_parallelogram_index((0, 0), 49) == (0, 0)
    assert common_parallelogram_index((49, -1), 49) == (1, -1)
    assert common_parallelogram_index((-1, 48), 49) == (-1, 0)


def test_torus_distance():
    assert torus_distance_squared((3, 4), (3, 4), 1, 49) == 0
    assert torus_distance_squared((-49, 0), (48, 0), 1, 49) == 1
    # far from the seam the torus metric equals the plane metric
    assert torus_distance_squared((0, 0), (5, 3), 1, 49) == 49
    with pytest.raises(OutOfDomain):
        torus_distance_squared((49, 0), (0, 0), 1, 49)


def test_sites_in_rect_agrees_with_contains():
    for a, b in [(5, 3), (7, 0), (3, 3)]:
        s = Sublattice(a, b)
        got = set(s.sites_in_rect(-20, 20, -20, 20))
        want = {
            (m, n)
            for m in range(-20, 20)
            for n in range(-20, 20)
            if s.contains((m, n))
        }
        assert got == want
