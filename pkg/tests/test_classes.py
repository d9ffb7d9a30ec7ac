import pytest

from covercount.abelian import HomologySignature
from covercount.census import (
    FiberClass,
    Free,
    NonOrientableSurface,
    OrientableSurface,
    covering_fiber,
)
from covercount.classes import (
    CensusRow,
    census_table,
    count_classes,
    count_classes_generic,
)
from covercount.errors import ConsistencyError
from covercount.numtheory import divisors

KINDS = [
    Free(1),
    Free(2),
    Free(3),
    OrientableSurface(1),
    OrientableSurface(2),
    OrientableSurface(3),
    NonOrientableSurface(2),
    NonOrientableSurface(3),
    NonOrientableSurface(4),
]


def test_free_class_counts():
    expected = [1, 3, 7, 26, 97, 624]
    assert [count_classes(Free(2), n) for n in range(1, 7)] == expected
    assert [count_classes(Free(1), n) for n in range(1, 21)] == [1] * 20


def test_torus_class_counts_are_divisor_sums():
    for n in range(1, 21):
        assert count_classes(OrientableSurface(1), n) == sum(divisors(n))


def test_surface_class_counts():
    assert count_classes(OrientableSurface(2), 2) == 15
    assert count_classes(OrientableSurface(2), 3) == 100
    assert count_classes(NonOrientableSurface(2), 2) == 3
    assert [count_classes(NonOrientableSurface(3), n) for n in range(1, 5)] == [1, 7, 14, 89]


def test_count_classes_rejects_zero():
    with pytest.raises(ValueError):
        count_classes(Free(2), 0)
    with pytest.raises(ValueError):
        count_classes_generic(0, lambda m: [])


def test_generic_driver_matches_specialised_route():
    for kind in KINDS:
        provider = lambda m, kind=kind: covering_fiber(kind, m)
        for n in range(1, 11):
            assert count_classes_generic(n, provider) == count_classes(kind, n)


def test_generic_driver_spec_example():
    assert count_classes_generic(2, lambda m: covering_fiber(Free(2), m)) == 3


def test_generic_driver_at_index_one_sums_multiplicities():
    provider = lambda m: [
        FiberClass(HomologySignature(rank=1), 2),
        FiberClass(HomologySignature(torsion=(2,), rank=0), 3),
    ]
    assert count_classes_generic(1, provider) == 5


def test_generic_driver_rejects_inconsistent_provider():
    # A provider built from trivial abelianisations gives a total of 1 at
    # n = 2, which is not divisible by 2.
    provider = lambda m: [FiberClass(HomologySignature(), 1)]
    with pytest.raises(ConsistencyError):
        count_classes_generic(2, provider)


def test_index_two_classes_equal_subgroups():
    # Index-2 subgroups are normal, so conjugation fixes each of them.
    for kind in KINDS:
        table = census_table(kind, 2)
        assert table.rows[1].conjugacy_classes == table.rows[1].subgroups


def test_census_table_free_rank_two():
    table = census_table(Free(2), 6)
    assert [row.subgroups for row in table.rows] == [1, 3, 13, 71, 461, 3447]
    assert [row.conjugacy_classes for row in table.rows] == [1, 3, 7, 26, 97, 624]
    assert all(row.orientable_subgroups is None for row in table.rows)
    assert all(row.nonorientable_subgroups is None for row in table.rows)
    assert [row.n for row in table.rows] == list(range(1, 7))
    assert table.kind == Free(2)


def test_census_table_klein_bottle():
    table = census_table(NonOrientableSurface(2), 2)
    assert table.rows[0] == CensusRow(1, 1, 1, 0, 1)
    assert table.rows[1] == CensusRow(2, 3, 3, 1, 2)


def test_census_table_bounds():
    for kind in KINDS:
        for row in census_table(kind, 8).rows:
            assert row.conjugacy_classes <= row.subgroups
            assert row.subgroups <= row.n * row.conjugacy_classes


def test_census_table_rejects_zero():
    with pytest.raises(ValueError):
        census_table(Free(2), 0)
