"""Subgroup counts for free and surface groups, and their covering fibers.

Three families of groups are supported:

* Free(r), the free group on r >= 1 generators;
* OrientableSurface(g), the fundamental group of the closed orientable
  surface of genus g >= 1, with the single commutator-product relation;
* NonOrientableSurface(p), the fundamental group of the closed
  non-orientable surface of genus p >= 2, with the product-of-squares
  relation.

count_subgroups gives the number M(m) of index-m subgroups.  For the free
group this is the classical transitive-count recursion (hall_t divided by
(m-1)!).  For surface groups it is a sum over symmetric group characters:
with beta(k, nu) the sum of (k!/degree)^nu over partitions of k, and nu the
Euler-characteristic exponent (2g - 2 orientable, p - 2 non-orientable),
M(m) satisfies

    M(m) = m * beta(m, nu) - sum_{j=1}^{m-1} beta(m - j, nu) * M(j).

r_nu_recursive implements that recursion; r_nu_closed implements the
equivalent inclusion-exclusion over compositions with rational coefficients
and is kept as an independent route for cross-checking.

An index-m subgroup is again a free or surface group, with rank or genus
given by the Riemann-Hurwitz relations.  covering_fiber records, for each
index m, the abelianisations of those subgroups together with their
multiplicities; the conjugacy-class counts in the classes module are driven
entirely by these fibers.  Index-m subgroups of a non-orientable surface
group split into orientable ones (which exist only for even m, counted by
count_orientable_subgroups) and non-orientable ones.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .abelian import HomologySignature
from .characters import beta
from .errors import ConsistencyError


class GroupKind:
    """Base class for the supported group families."""

    __slots__ = ()


@dataclass(frozen=True)
class Free(GroupKind):
    """Free group of the given rank."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"free rank must be >= 1, got {self.rank}")

    @property
    def generator_count(self) -> int:
        return self.rank

    def __str__(self):
        return f"free:{self.rank}"


@dataclass(frozen=True)
class OrientableSurface(GroupKind):
    """Fundamental group of the closed orientable surface of genus g >= 1."""

    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"orientable genus must be >= 1, got {self.genus}")

    @property
    def generator_count(self) -> int:
        return 2 * self.genus

    def __str__(self):
        return f"orient:{self.genus}"


@dataclass(frozen=True)
class NonOrientableSurface(GroupKind):
    """Fundamental group of the closed non-orientable surface of genus p >= 2."""

    genus: int

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError(f"non-orientable genus must be >= 2, got {self.genus}")

    @property
    def generator_count(self) -> int:
        return self.genus

    def __str__(self):
        return f"nonorient:{self.genus}"


@dataclass(frozen=True)
class FiberClass:
    """One abelianisation class of index-m subgroups, with its multiplicity."""

    signature: HomologySignature
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 0:
            raise ValueError(f"multiplicity must be nonnegative, got {self.multiplicity}")


@lru_cache(maxsize=None)
def hall_t(m: int, r: int) -> int:
    """Number of transitive r-tuples of permutations of m points.

    t(1) = 1 and

        t(m) = (m!)^r - sum_{j=1}^{m-1} C(m-1, j-1) ((m-j)!)^r t(j),

    subtracting, for each proper orbit of the first point, the tuples whose
    restriction to that orbit is transitive.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if r < 1:
        raise ValueError(f"r must be a positive integer, got {r}")
    if m == 1:
        return 1
    total = factorial(m) ** r
    for j in range(1, m):
        total -= comb(m - 1, j - 1) * factorial(m - j) ** r * hall_t(j, r)
    return total


def _composition_sum(m: int, s: int, nu: int) -> int:
    # Sum of beta(i_1, nu) * ... * beta(i_s, nu) over all ordered ways to
    # write m = i_1 + ... + i_s with every part >= 1.
    if s == 1:
        return beta(m, nu)
    total = 0
    for first in range(1, m - s + 2):
        total += beta(first, nu) * _composition_sum(m - first, s - 1, nu)
    return total


def r_nu_closed(m: int, nu: int) -> int:
    """Closed-form surface subgroup count: inclusion-exclusion over compositions.

        R(m) = m * sum_{s=1}^{m} (-1)^(s+1)/s *
               sum_{i_1+...+i_s=m} beta(i_1, nu) ... beta(i_s, nu)

    Evaluated in exact rational arithmetic; the total provably reduces to an
    integer, and a non-unit denominator raises.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if nu < 0:
        raise ValueError(f"nu must be nonnegative, got {nu}")
    total = Fraction(0)
    for s in range(1, m + 1):
        sign = 1 if s % 2 == 1 else -1
        total += Fraction(sign, s) * _composition_sum(m, s, nu)
    total *= m
    if total.denominator != 1:
        raise ConsistencyError(f"r_nu_closed({m}, {nu}) reduced to non-integer {total}")
    return int(total)


@lru_cache(maxsize=None)
def r_nu_recursive(m: int, nu: int) -> int:
    """Surface subgroup count by the beta recursion (same value as r_nu_closed)."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if nu < 0:
        raise ValueError(f"nu must be nonnegative, got {nu}")
    if m == 1:
        return 1
    total = m * beta(m, nu)
    for j in range(1, m):
        total -= beta(m - j, nu) * r_nu_recursive(j, nu)
    return total


def count_subgroups(kind: GroupKind, m: int) -> int:
    """Number of index-m subgroups of the given group."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if isinstance(kind, Free):
        count, rem = divmod(hall_t(m, kind.rank), factorial(m - 1))
        if rem:
            raise ConsistencyError(f"hall_t({m}, {kind.rank}) not divisible by ({m}-1)!")
        return count
    if isinstance(kind, OrientableSurface):
        return r_nu_recursive(m, 2 * kind.genus - 2)
    if isinstance(kind, NonOrientableSurface):
        return r_nu_recursive(m, kind.genus - 2)
    raise TypeError(f"unsupported group kind {kind!r}")


def count_orientable_subgroups(p: int, m: int) -> int:
    """Number of orientable index-m subgroups of NonOrientableSurface(p).

    Orientable subgroups only occur at even index; an index-2k subgroup that
    is orientable behaves like an index-k subgroup counted with the doubled
    exponent 2(p - 2).
    """
    if p < 2:
        raise ValueError(f"non-orientable genus must be >= 2, got {p}")
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if m % 2 == 1:
        return 0
    return r_nu_recursive(m // 2, 2 * (p - 2))


def count_nonorientable_subgroups(p: int, m: int) -> int:
    """Number of non-orientable index-m subgroups of NonOrientableSurface(p)."""
    count = count_subgroups(NonOrientableSurface(p), m) - count_orientable_subgroups(p, m)
    if count < 0:
        raise ConsistencyError(f"orientable subgroup count exceeds total at p={p}, m={m}")
    return count


def covering_fiber(kind: GroupKind, m: int) -> list[FiberClass]:
    """Abelianisations of the index-m subgroups, grouped with multiplicities.

    Free(r): every index-m subgroup is free of rank (r-1)m + 1.
    OrientableSurface(g): every index-m subgroup is the orientable surface
    group of genus (g-1)m + 1, with abelianisation of rank 2(g-1)m + 2.
    NonOrientableSurface(p): orientable index-m subgroups abelianise to rank
    m(p-2) + 2 with no torsion, non-orientable ones to rank m(p-2) + 1 with
    a single order-2 torsion summand.  Classes with multiplicity zero are
    omitted.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if isinstance(kind, Free):
        signature = HomologySignature(rank=(kind.rank - 1) * m + 1)
        return [FiberClass(signature, count_subgroups(kind, m))]
    if isinstance(kind, OrientableSurface):
        signature = HomologySignature(rank=2 * (kind.genus - 1) * m + 2)
        return [FiberClass(signature, count_subgroups(kind, m))]
    if isinstance(kind, NonOrientableSurface):
        p = kind.genus
        classes = []
        orientable = count_orientable_subgroups(p, m)
        if orientable > 0:
            classes.append(FiberClass(HomologySignature(rank=m * (p - 2) + 2), orientable))
        nonorientable = count_nonorientable_subgroups(p, m)
        if nonorientable > 0:
            classes.append(
                FiberClass(HomologySignature(torsion=(2,), rank=m * (p - 2) + 1), nonorientable)
            )
        return classes
    raise TypeError(f"unsupported group kind {kind!r}")
