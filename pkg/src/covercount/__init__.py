"""Exact counts of finite-index subgroups and their conjugacy classes in
free groups, orientable surface groups and non-orientable surface groups,
with a brute-force permutation oracle for independent verification."""

from .abelian import HomologySignature, epi_count, hom_count
from .census import (
    FiberClass,
    Free,
    GroupKind,
    NonOrientableSurface,
    OrientableSurface,
    count_nonorientable_subgroups,
    count_orientable_subgroups,
    count_subgroups,
    covering_fiber,
    hall_t,
    r_nu_closed,
    r_nu_recursive,
)
from .characters import Partition, beta, degree, hook_product, partitions
from .classes import CensusRow, CensusTable, census_table, count_classes, count_classes_generic
from .errors import ConsistencyError, ResourceLimitError
from .numtheory import DivisorPair, divisor_pairs, divisors, euler_phi, gcd, mobius
from .oracle import (
    FEASIBILITY_LIMIT,
    PermutationTuple,
    enumerate_relation_homs,
    kernel_backend,
    oracle_count_classes,
    oracle_count_subgroups,
    oracle_epi_count,
    oracle_orientable_split,
    tuple_space_size,
)

__version__ = "0.1.0"

__all__ = [
    "CensusRow",
    "CensusTable",
    "ConsistencyError",
    "DivisorPair",
    "FEASIBILITY_LIMIT",
    "FiberClass",
    "Free",
    "GroupKind",
    "HomologySignature",
    "NonOrientableSurface",
    "OrientableSurface",
    "Partition",
    "PermutationTuple",
    "ResourceLimitError",
    "beta",
    "census_table",
    "count_classes",
    "count_classes_generic",
    "count_nonorientable_subgroups",
    "count_orientable_subgroups",
    "count_subgroups",
    "covering_fiber",
    "degree",
    "divisor_pairs",
    "divisors",
    "enumerate_relation_homs",
    "epi_count",
    "euler_phi",
    "gcd",
    "hall_t",
    "hom_count",
    "hook_product",
    "kernel_backend",
    "mobius",
    "oracle_count_classes",
    "oracle_count_subgroups",
    "oracle_epi_count",
    "oracle_orientable_split",
    "partitions",
    "r_nu_closed",
    "r_nu_recursive",
    "tuple_space_size",
]
