from fractions import Fraction

import pytest

from hct.errors import (
    IncompatibleFamily,
    UnknownFamily,
)
from hct.forces import (
    ForceFamily,
    builtin_force_family,
    canonical_less,
    count_minimal_types,
    disk_sites_in_canonical_order,
    distances_in_disk,
    emit_force_family,
    min_delta_nondeletable,
    parse_force_family,
    verify_inserted_lens_types,
    verify_inserted_triangle_types,
    verify_removed_types,
)
from hct.lattice import Sublattice

D7 = builtin_force_family("d7")
D13 = builtin_force_family("d13")
D147 = builtin_force_family("d147")


def test_builtin_examples():
    assert D7[1] == Fraction(44, 56)
    assert D7[48] == Fraction(4, 56)
    assert D13[157] == Fraction(1, 180)
    assert D13[156] == Fraction(1, 270)
    assert D13[163] == 0
    assert D147[49] == Fraction(8, 24)
    assert 3 * D147[49] == 1
    assert D147[100] == 0  # zero beyond r = 97
    with pytest.raises(UnknownFamily):
        builtin_force_family("d5")


def test_builtin_table_sizes():
    assert len(D7.values) == 19
    assert len(D13.values) == 55  # includes the explicit zero at 163
    assert len(D147.values) == 35


def test_distances_in_disk():
    assert distances_in_disk(49) == [
        1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28, 31, 36, 37, 39, 43, 48,
    ]
    assert distances_in_disk(1) == []
    assert distances_in_disk(13) == [1, 3, 4, 7, 9, 12]


def test_family_validation():
    with pytest.raises(ValueError):
        ForceFamily(49, ((2, Fraction(1, 2)),))  # 2 is not attainable
    with pytest.raises(ValueError):
        ForceFamily(49, ((1, Fraction(3, 2)),))  # outside [0, 1]


def test_parse_emit_round_trip():
    text = "d2 49\n1 44/56\n3 40/56\n"
    f = parse_force_family(text)
    assert f.n == 49 and f[1] == Fraction(44, 56)
    f2 = parse_force_family(emit_force_family(f))
    assert f2.values == tuple(sorted(f.values))


LISTING2_COMBOS = [
    (D13, (13, 0)),
    (D13, (8, 7)),
    (D147, (7, 7)),
    (D147, (11, 2)),
    (D7, (7, 0)),
    (D7, (5, 3)),
]


def test_inserted_types_all_proper():
    for fam, (a, b) in LISTING2_COMBOS:
        s = Sublattice(a, b)
        tri_ok, tri = verify_inserted_triangle_types(fam, s)
        lens_ok, lens = verify_inserted_lens_types(fam, s)
        assert tri_ok and lens_ok, (fam.name, a, b)
        assert tri and lens
        assert all(total == 1 for _, total in tri + lens)


def test_incompatible_family_rejected():
    with pytest.raises(IncompatibleFamily):
        verify_inserted_triangle_types(D7, Sublattice(13, 0))
    with pytest.raises(IncompatibleFamily):
        min_delta_nondeletable(D147, Sublattice(7, 0))


def test_perturbed_family_fails_triangle_types():
    # zeroing f_3 breaks the equality f_3 + f_31 + f_31 = 1
    vals = tuple((r, Fraction(0) if r == 3 else v) for r, v in D7.values)
    bad = ForceFamily(49, vals)
    ok, results = verify_inserted_triangle_types(bad, Sublattice(7, 0))
    assert not ok
    assert any(total != 1 for _, total in results)


def test_zero_family_fails_lens_types():
    zero = ForceFamily(49, ())
    ok, _ = verify_inserted_lens_types(zero, Sublattice(7, 0))
    assert not ok


def test_spot_equality_from_published_sums():
    # one of the printed right-hand sides: f_7 + f_25 + f_27 = 47/56
    assert D7[7] + D7[25] + D7[27] == Fraction(47, 56)


def test_canonical_order_is_strict_total_order():
    sites = disk_sites_in_canonical_order(49)
    assert len(sites) == len(set(sites))
    for i, p in enumerate(sites):
        for j, q in enumerate(sites):
            less = canonical_less(p, q)
            if i == j:
                assert not less
            else:
                assert less == (i < j)  # sorted order is the comparator order
                assert less != canonical_less(q, p)  # antisymmetry


def test_min_delta_listing3_outputs():
    expect = [
        (D13, (8, 7), Fraction(149, 540), (21, 148)),
        (D13, (13, 0), Fraction(31, 90), (133, 28)),
        (D147, (11, 2), Fraction(1, 2), (37, 100)),
        (D147, (7, 7), Fraction(1, 4), (127, 21)),
        (D7, (5, 3), Fraction(31, 56), (28, 21)),
        (D7, (7, 0), Fraction(31, 56), (28, 21)),
    ]
    for fam, (a, b), delta, witness in expect:
        got_delta, got_witness = min_delta_nondeletable(fam, Sublattice(a, b))
        assert got_delta == delta, (fam.name, a, b)
        assert got_witness == witness, (fam.name, a, b)


def test_lemma_classes_exceed_one_third():
    for fam, (a, b) in [(D7, (7, 0)), (D7, (5, 3)), (D13, (13, 0)), (D147, (11, 2))]:
        delta, _ = min_delta_nondeletable(fam, Sublattice(a, b))
        assert delta > Fraction(1, 3)


def test_removed_types_d7():
    report = verify_removed_types(D7)
    assert report.proper
    assert report.first_violation is None
    assert report.minimal_types == 36
    assert sum(report.tuple_counts_by_size.values()) > 0


def test_removed_types_d147():
    report = verify_removed_types(D147, count_minimal=True)
    assert report.proper
    assert report.distinct_types == 54400
    assert report.minimal_types == 300


def test_monotone_slack_on_decrease():
    # lowering one force keeps the removed-type check passing
    vals = tuple((r, v / 2 if r == 21 else v) for r, v in D7.values)
    report = verify_removed_types(ForceFamily(49, vals), count_minimal=False)
    assert report.proper


def test_violating_family_reported():
    vals = tuple((r, Fraction(1)) for r in distances_in_disk(49))
    report = verify_removed_types(ForceFamily(49, vals), count_minimal=False)
    assert not report.proper
    assert report.first_violation is not None
    sites, total = report.first_violation
    assert total > 1 and len(sites) >= 2


def test_count_minimal_types_brute_force_agreement():
    import itertools
    import random

    rng = random.Random(2)
    universe = [1, 3, 4, 7, 9]
    for _ in range(30):
        types = set()
        for _ in range(rng.randint(1, 25)):
            size = rng.randint(1, 4)
            types.add(tuple(sorted(rng.choice(universe) for _ in range(size))))
        types = sorted(types)
        brute = sum(
            1
            for t in types
            if not any(
                tp != t and len(tp) >= len(t) and all(x <= y for x, y in zip(tp, t))
                for tp in types
            )
        )
        assert count_minimal_types(types) == brute
