"""Conjugacy classes of finite-index subgroups, and census tables.

The class count N(n) follows from the subgroup counts of the covering
fibers: summing, over all factorisations n = ell * m, the number of
epimorphisms from each index-m subgroup onto the cyclic group of order ell
(weighted by multiplicity) yields exactly n * N(n).  Only the abelianisation
of each subgroup enters, which is what covering_fiber provides.

count_classes_generic runs that driver against an arbitrary fiber provider.
count_classes is the specialised route for the built-in families: it inlines
the Mobius inversion as a gcd-weighted power sum, with exponents read off
the covering_fiber signatures so the two routes cannot drift apart.  Both
routes verify that the accumulator is divisible by n before dividing; a
failure means the fiber data is wrong.
"""

from dataclasses import dataclass

from .abelian import epi_count
from .census import (
    FiberClass,
    GroupKind,
    NonOrientableSurface,
    count_nonorientable_subgroups,
    count_orientable_subgroups,
    count_subgroups,
    covering_fiber,
)
from .errors import ConsistencyError
from .numtheory import divisor_pairs, divisors, gcd, mobius


@dataclass(frozen=True)
class CensusRow:
    """Counts at one index: subgroups, conjugacy classes, and for the
    non-orientable family the orientable/non-orientable split."""

    n: int
    subgroups: int
    conjugacy_classes: int
    orientable_subgroups: int | None = None
    nonorientable_subgroups: int | None = None


@dataclass(frozen=True)
class CensusTable:
    """Census rows for indices 1..n_max of one group."""

    kind: GroupKind
    rows: tuple[CensusRow, ...]


def count_classes_generic(n, fiber_provider) -> int:
    """Conjugacy classes of index-n subgroups, from a fiber provider.

    fiber_provider maps each divisor m of n to the list of FiberClass
    entries for index m.  The accumulated epimorphism total must come out
    divisible by n; if not, the provider is inconsistent and this raises.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    acc = 0
    for ell, m in divisor_pairs(n):
        for fiber in fiber_provider(m):
            acc += fiber.multiplicity * epi_count(fiber.signature, ell)
    count, rem = divmod(acc, n)
    if rem:
        raise ConsistencyError(f"epimorphism total {acc} not divisible by n = {n}")
    return count


def count_classes(kind: GroupKind, n: int) -> int:
    """Conjugacy classes of index-n subgroups of the given group.

    Specialised form of the generic driver: for each factorisation
    n = ell * m and each fiber class, the epimorphism count is expanded as
    sum_{d | ell} mobius(ell/d) * gcd(t_1, d) * ... * d^rank.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    acc = 0
    for ell, m in divisor_pairs(n):
        for fiber in covering_fiber(kind, m):
            signature = fiber.signature
            epi = 0
            for d in divisors(ell):
                term = mobius(ell // d) * d**signature.rank
                for t in signature.torsion:
                    term *= gcd(t, d)
                epi += term
            acc += fiber.multiplicity * epi
    count, rem = divmod(acc, n)
    if rem:
        raise ConsistencyError(f"epimorphism total {acc} not divisible by n = {n}")
    return count


def _check_row(row: CensusRow) -> None:
    ok = row.conjugacy_classes <= row.subgroups <= row.n * row.conjugacy_classes
    if not ok:
        raise ConsistencyError(f"subgroup/class bounds violated in {row}")
    if row.orientable_subgroups is not None:
        if row.orientable_subgroups + row.nonorientable_subgroups != row.subgroups:
            raise ConsistencyError(f"orientability split does not sum in {row}")


def census_table(kind: GroupKind, n_max: int) -> CensusTable:
    """Census rows for n = 1..n_max, with the split for non-orientable groups."""
    if n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max}")
    rows = []
    split = isinstance(kind, NonOrientableSurface)
    for n in range(1, n_max + 1):
        row = CensusRow(
            n=n,
            subgroups=count_subgroups(kind, n),
            conjugacy_classes=count_classes(kind, n),
            orientable_subgroups=count_orientable_subgroups(kind.genus, n) if split else None,
            nonorientable_subgroups=count_nonorientable_subgroups(kind.genus, n) if split else None,
        )
        _check_row(row)
        rows.append(row)
    return CensusTable(kind, tuple(rows))
