"""Brute-force verification oracle over permutation representations.

An index-n subgroup corresponds to a transitive action on n points with a
marked base point: enumerate every tuple of generator images in the
symmetric group, keep the tuples satisfying the defining relation, and the
transitive ones among them number (n-1)! times the subgroup count.  Orbits
under simultaneous conjugation count conjugacy classes instead, and for the
squares relation an orientation parity check splits the transitive tuples
into those with orientable and non-orientable point stabilisers.

Everything here is exponential by design; it exists to confirm the formula
routes on small indices, not to compute.  Requests whose enumeration space
|S_n|^generators exceeds FEASIBILITY_LIMIT raise ResourceLimitError up
front rather than run forever, and nothing is ever silently truncated.

The enumeration loops run in the compiled _ckernels module when it is
available and fall back to the pure-Python _pykernels otherwise; set
COVERCOUNT_PURE_PYTHON=1 to force the fallback.  Both backends count
identically, only the speed differs.
"""

import os
from dataclasses import dataclass
from itertools import product
from math import factorial
from typing import Iterator

from . import _pykernels
from .abelian import HomologySignature
from .census import Free, GroupKind, NonOrientableSurface, OrientableSurface
from .errors import ConsistencyError, ResourceLimitError
from .numtheory import gcd

if os.environ.get("COVERCOUNT_PURE_PYTHON"):
    _ckernels = None
else:
    try:
        from . import _ckernels
    except ImportError:
        _ckernels = None

_kernels = _ckernels if _ckernels is not None else _pykernels

FEASIBILITY_LIMIT = 200_000_000

# Epimorphism brute force stays pure Python; its bounds keep it tiny.
EPI_MAX_GENERATORS = 6
EPI_MAX_ORDER = 24


def kernel_backend() -> str:
    """Which enumeration backend is active, "cython" or "python"."""
    return "python" if _kernels is _pykernels else "cython"


@dataclass(frozen=True)
class PermutationTuple:
    """Generator images in the symmetric group on degree points.

    Permutations are tuples mapping point to image; the tuple lists one
    permutation per generator of the group's standard presentation and
    satisfies its defining relation.
    """

    degree: int
    images: tuple[tuple[int, ...], ...]


def _relation_code(kind: GroupKind) -> int:
    if isinstance(kind, Free):
        return _pykernels.REL_FREE
    if isinstance(kind, OrientableSurface):
        return _pykernels.REL_COMMUTATOR
    if isinstance(kind, NonOrientableSurface):
        return _pykernels.REL_SQUARES
    raise TypeError(f"unsupported group kind {kind!r}")


def tuple_space_size(kind: GroupKind, n: int) -> int:
    """Number of generator-image tuples the oracle would enumerate."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return factorial(n) ** kind.generator_count


def check_feasible(kind: GroupKind, n: int) -> None:
    """Raise ResourceLimitError when the enumeration space is too large."""
    size = tuple_space_size(kind, n)
    if size > FEASIBILITY_LIMIT:
        raise ResourceLimitError(
            f"enumerating {size} tuples for {kind} at index {n} "
            f"exceeds the limit of {FEASIBILITY_LIMIT}"
        )


def enumerate_relation_homs(kind: GroupKind, n: int) -> Iterator[PermutationTuple]:
    """Yield every relation-satisfying generator tuple on n points.

    Transitivity is deliberately not filtered here; callers who need
    transitive tuples only, or counts, use the oracle_* operations.
    Feasibility is checked immediately, not on first iteration.
    """
    check_feasible(kind, n)
    rel = _relation_code(kind)

    def generate():
        for images in _pykernels._iter_tuples(kind.generator_count, n):
            if _pykernels.satisfies_relation(rel, images, n):
                yield PermutationTuple(n, images)

    return generate()


def oracle_count_subgroups(kind: GroupKind, n: int) -> int:
    """Index-n subgroup count by enumeration: transitive tuples / (n-1)!."""
    check_feasible(kind, n)
    _, transitive = _kernels.count_relation_tuples(_relation_code(kind), kind.generator_count, n)
    count, rem = divmod(transitive, factorial(n - 1))
    if rem:
        raise ConsistencyError(f"transitive tuple count {transitive} not divisible by ({n}-1)!")
    return count


def oracle_count_classes(kind: GroupKind, n: int) -> int:
    """Conjugacy classes of index-n subgroups, by orbit counting."""
    check_feasible(kind, n)
    _, orbits = _kernels.count_transitive_orbits(_relation_code(kind), kind.generator_count, n)
    return orbits


def oracle_orientable_split(p: int, n: int) -> tuple[int, int]:
    """(orientable, non-orientable) index-n subgroup counts for
    NonOrientableSurface(p), by the parity check on point stabilisers."""
    kind = NonOrientableSurface(p)
    check_feasible(kind, n)
    orientable, nonorientable = _kernels.count_orientation_split(kind.generator_count, n)
    base = factorial(n - 1)
    if orientable % base or nonorientable % base:
        raise ConsistencyError(f"orientation split {orientable}/{nonorientable} not divisible")
    return orientable // base, nonorientable // base


def oracle_epi_count(signature: HomologySignature, ell: int) -> int:
    """Epimorphism count onto the cyclic group of order ell, by enumeration.

    Try every order-respecting assignment of generator images in Z_ell and
    keep those whose images generate, i.e. whose gcd with ell is 1.
    """
    if ell < 1:
        raise ValueError(f"ell must be a positive integer, got {ell}")
    generators = len(signature.torsion) + signature.rank
    if generators > EPI_MAX_GENERATORS or ell > EPI_MAX_ORDER:
        raise ResourceLimitError(
            f"epimorphism enumeration bounded to {EPI_MAX_GENERATORS} generators "
            f"and target order {EPI_MAX_ORDER}, got {generators} and {ell}"
        )
    choices = []
    for t in signature.torsion:
        step = ell // gcd(t, ell)
        choices.append(range(0, ell, step))
    for _ in range(signature.rank):
        choices.append(range(ell))
    count = 0
    for images in product(*choices):
        acc = ell
        for x in images:
            acc = gcd(acc, x)
        if acc == 1:
            count += 1
    return count
