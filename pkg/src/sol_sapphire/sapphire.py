"""Morimoto classification of sapphire Sol manifolds

Two sapphires N_A and N_A' are homeomorphic iff A' is one of
+-A^(+-1), +-B A^(+-1), +-A^(+-1) B, +-B A^(+-1) B with B = diag(1, -1).
"""
import logging
from dataclasses import dataclass
from itertools import product

from .errors import InvariantViolation, NoPositiveRepresentative
from .intlinalg import AbelianGroup, Mat2Z, inv2
from .presentations import SapphireMatrix

logger = logging.getLogger(__name__)

REFLECTION = Mat2Z(1, 0, 0, -1)


@dataclass(frozen=True)
class CanonicalSapphire(SapphireMatrix):
    """Orbit representative with all entries positive, r <= u, lexicographically least"""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_positive:
            raise InvariantViolation(f"canonical form must be all positive, got {self.matrix}")
        if self.r > self.u:
            raise InvariantViolation(f"canonical form needs r <= u, got {self.matrix}")


def morimoto_orbit(sapphire: SapphireMatrix) -> frozenset[Mat2Z]:
    """
    All gluing matrices giving a sapphire homeomorphic to the given one.

    Args:
        sapphire: Gluing matrix

    Returns:
        The set {+-X, +-BX, +-XB, +-BXB : X in {A, A^-1}}, at most 16 matrices
    """
    a = sapphire.matrix
    identity = Mat2Z.identity()
    orbit = set()
    for x, left, right in product((a, inv2(a)), (identity, REFLECTION), (identity, REFLECTION)):
        m = left @ x @ right
        orbit.add(m)
        orbit.add(-m)
    logger.debug("Morimoto orbit of %s has %d members", a, len(orbit))
    return frozenset(orbit)


def in_orbit(a: SapphireMatrix, b: SapphireMatrix) -> bool:
    """Homeomorphism test by direct orbit membership"""
    return b.matrix in morimoto_orbit(a)


def canonical_form(sapphire: SapphireMatrix) -> CanonicalSapphire:
    """
    Canonical representative of the Morimoto orbit.

    Args:
        sapphire: Gluing matrix

    Returns:
        Lexicographic minimum of (r, s, t, u) over orbit members with all
        entries positive and r <= u

    Raises:
        NoPositiveRepresentative: if no orbit member qualifies
    """
    candidates = [
        m
        for m in morimoto_orbit(sapphire)
        if all(x > 0 for x in m.entries) and m.r <= m.u
    ]
    if not candidates:
        raise NoPositiveRepresentative(
            f"orbit of {sapphire.matrix} has no all-positive member with r <= u"
        )
    return CanonicalSapphire(min(candidates, key=lambda m: m.entries))


def homeomorphic(a: SapphireMatrix, b: SapphireMatrix) -> bool:
    return canonical_form(a).matrix == canonical_form(b).matrix


def h1_sapphire(sapphire: SapphireMatrix) -> AbelianGroup:
    """
    First homology from the closed formula.

    Z_4t + Z_4 when s is odd and Z_4t + Z_2 + Z_2 when s is even, read off the
    canonical form.

    Args:
        sapphire: Gluing matrix

    Returns:
        H1 in invariant-factor form
    """
    canonical = canonical_form(sapphire)
    if canonical.s % 2:
        return AbelianGroup.from_cyclic_orders((4 * canonical.t, 4))
    return AbelianGroup.from_cyclic_orders((4 * canonical.t, 2, 2))
