"""Counting homomorphisms and epimorphisms onto cyclic groups.

A finitely generated abelian group is described by a HomologySignature: a
multiset of finite torsion orders plus a free rank.  Homomorphisms into the
cyclic group of order d factor through each summand independently, giving
the product gcd(m_1, d) * ... * gcd(m_s, d) * d^rank.  Epimorphism counts
follow by Mobius inversion over the divisors of the target order.
"""

from dataclasses import dataclass

from .errors import ConsistencyError
from .numtheory import divisors, gcd, mobius


@dataclass(frozen=True)
class HomologySignature:
    """Torsion orders (each >= 2) and free rank of an abelian group.

    The torsion orders are stored sorted ascending.  They are not required
    to be in invariant-factor form: (2, 3) and (6,) describe isomorphic
    groups and produce identical counts.
    """

    torsion: tuple[int, ...] = ()
    rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion orders must be >= 2, got {t}")
        if self.rank < 0:
            raise ValueError(f"rank must be nonnegative, got {self.rank}")


def hom_count(signature: HomologySignature, d: int) -> int:
    """Number of homomorphisms from the group into the cyclic group of order d."""
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    count = d**signature.rank
    for t in signature.torsion:
        count *= gcd(t, d)
    return count


def epi_count(signature: HomologySignature, ell: int) -> int:
    """Number of epimorphisms onto the cyclic group of order ell.

    Mobius inversion of hom_count over the divisors of ell.  The result is
    a count, so a negative total indicates a bug and raises.
    """
    if ell < 1:
        raise ValueError(f"ell must be a positive integer, got {ell}")
    total = sum(mobius(ell // d) * hom_count(signature, d) for d in divisors(ell))
    if total < 0:
        raise ConsistencyError(f"negative epimorphism count {total} for {signature} onto Z_{ell}")
    return total
