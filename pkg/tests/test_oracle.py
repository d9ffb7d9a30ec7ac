from itertools import combinations_with_replacement

import pytest

from covercount import _pykernels
from covercount.abelian import HomologySignature, epi_count
from covercount.census import (
    Free,
    NonOrientableSurface,
    OrientableSurface,
    count_nonorientable_subgroups,
    count_orientable_subgroups,
    count_subgroups,
)
from covercount.classes import count_classes
from covercount.errors import ResourceLimitError
from covercount.oracle import (
    FEASIBILITY_LIMIT,
    check_feasible,
    enumerate_relation_homs,
    kernel_backend,
    oracle_count_classes,
    oracle_count_subgroups,
    oracle_epi_count,
    oracle_orientable_split,
    tuple_space_size,
)

try:
    from covercount import _ckernels
except ImportError:
    _ckernels = None

SMALL_GRID = [
    (Free(1), 6),
    (Free(2), 5),
    (Free(3), 4),
    (OrientableSurface(1), 5),
    (OrientableSurface(2), 4),
    (NonOrientableSurface(2), 5),
    (NonOrientableSurface(3), 4),
]


def test_kernel_backend_reports_a_known_name():
    assert kernel_backend() in ("python", "cython")


def test_tuple_space_size():
    assert tuple_space_size(Free(2), 3) == 36
    assert tuple_space_size(OrientableSurface(1), 3) == 36
    assert tuple_space_size(NonOrientableSurface(3), 2) == 8


def test_enumeration_counts_and_contents():
    homs = list(enumerate_relation_homs(Free(1), 3))
    assert len(homs) == 6
    homs = list(enumerate_relation_homs(OrientableSurface(1), 2))
    assert len(homs) == 4
    # In S_2 every permutation is an involution, so all 2^3 triples work.
    homs = list(enumerate_relation_homs(NonOrientableSurface(3), 2))
    assert len(homs) == 8
    for kind, n in ((Free(2), 3), (OrientableSurface(1), 3), (NonOrientableSurface(2), 3)):
        homs = list(enumerate_relation_homs(kind, n))
        rel = {Free: 0, OrientableSurface: 1, NonOrientableSurface: 2}[type(kind)]
        total, _ = _pykernels.count_relation_tuples(rel, kind.generator_count, n)
        assert len(homs) == total
        assert len(set(h.images for h in homs)) == total
        for hom in homs:
            assert hom.degree == n
            assert len(hom.images) == kind.generator_count
            for p in hom.images:
                assert sorted(p) == list(range(n))
            assert _pykernels.satisfies_relation(rel, hom.images, n)


def test_oracle_subgroup_counts_match_formulas():
    for kind, n_max in SMALL_GRID:
        for n in range(1, n_max + 1):
            assert oracle_count_subgroups(kind, n) == count_subgroups(kind, n), (kind, n)


def test_oracle_class_counts_match_formulas():
    for kind, n_max in SMALL_GRID:
        for n in range(1, n_max + 1):
            assert oracle_count_classes(kind, n) == count_classes(kind, n), (kind, n)


def test_oracle_orientable_split_matches_formulas():
    for p, n_max in ((2, 5), (3, 4)):
        for n in range(1, n_max + 1):
            plus, minus = oracle_orientable_split(p, n)
            assert plus == count_orientable_subgroups(p, n), (p, n)
            assert minus == count_nonorientable_subgroups(p, n), (p, n)


def test_oracle_split_at_index_one():
    # The group itself is its only index-1 subgroup and is non-orientable.
    for p in range(2, 5):
        assert oracle_orientable_split(p, 1) == (0, 1)


def test_oracle_epi_count_examples():
    assert oracle_epi_count(HomologySignature((), 1), 6) == 2
    assert oracle_epi_count(HomologySignature((), 2), 2) == 3
    assert oracle_epi_count(HomologySignature((2,), 1), 2) == 3
    assert oracle_epi_count(HomologySignature(), 1) == 1
    assert oracle_epi_count(HomologySignature(), 5) == 0


def test_oracle_epi_count_matches_formula():
    for size in range(0, 3):
        for torsion in combinations_with_replacement((2, 3, 4), size):
            for rank in range(0, 4 - size):
                sig = HomologySignature(torsion, rank)
                for ell in range(1, 13):
                    assert oracle_epi_count(sig, ell) == epi_count(sig, ell), (sig, ell)


def test_oracle_epi_count_bounds():
    with pytest.raises(ResourceLimitError):
        oracle_epi_count(HomologySignature((), 7), 2)
    with pytest.raises(ResourceLimitError):
        oracle_epi_count(HomologySignature((2,) * 5, 2), 2)
    with pytest.raises(ResourceLimitError):
        oracle_epi_count(HomologySignature((), 1), 25)
    with pytest.raises(ValueError):
        oracle_epi_count(HomologySignature((), 1), 0)


def test_feasibility_gate():
    check_feasible(Free(2), 7)
    with pytest.raises(ResourceLimitError):
        check_feasible(Free(2), 8)
    with pytest.raises(ResourceLimitError):
        oracle_count_subgroups(Free(2), 50)
    with pytest.raises(ResourceLimitError):
        oracle_count_classes(OrientableSurface(2), 8)
    with pytest.raises(ResourceLimitError):
        oracle_orientable_split(2, 13)
    with pytest.raises(ResourceLimitError):
        enumerate_relation_homs(Free(2), 50)
    assert FEASIBILITY_LIMIT == 200_000_000


def test_oracle_rejects_zero_index():
    with pytest.raises(ValueError):
        oracle_count_subgroups(Free(2), 0)


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_count_identically():
    cases = [
        (0, 1, 5),
        (0, 2, 4),
        (0, 3, 3),
        (1, 2, 4),
        (1, 4, 3),
        (2, 2, 5),
        (2, 3, 4),
    ]
    for rel, gens, n in cases:
        assert _pykernels.count_relation_tuples(rel, gens, n) == _ckernels.count_relation_tuples(
            rel, gens, n
        ), (rel, gens, n)
        assert _pykernels.count_transitive_orbits(rel, gens, n) == _ckernels.count_transitive_orbits(
            rel, gens, n
        ), (rel, gens, n)
    for gens, n in ((2, 4), (3, 4), (2, 5)):
        assert _pykernels.count_orientation_split(gens, n) == _ckernels.count_orientation_split(
            gens, n
        ), (gens, n)


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_share_relation_codes():
    for name in ("REL_FREE", "REL_COMMUTATOR", "REL_SQUARES"):
        assert getattr(_pykernels, name) == getattr(_ckernels, name)
