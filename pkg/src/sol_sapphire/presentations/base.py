"""Base class for manifolds glued from a 2x2 integer matrix"""
from abc import ABC, abstractmethod
from typing import ClassVar

from ..errors import InvariantViolation
from ..intlinalg import AbelianGroup, Mat2Z, smith_normal_form
from ..words import Presentation


def h1_of_presentation(p: Presentation) -> AbelianGroup:
    """
    First homology (abelianisation) of a finitely presented group.

    Args:
        p: Presentation

    Returns:
        Cokernel of the relation matrix whose rows are relator exponent sums
    """
    return smith_normal_form(p.relation_matrix())


class GluingMatrix(ABC):
    """Abstract base class for 3-manifolds described by a gluing matrix"""

    matrix: Mat2Z
    entry_names: ClassVar[tuple[str, str, str, str]]

    @abstractmethod
    def presentation(self) -> Presentation:
        """
        Presentation of the fundamental group.

        Returns:
            Presentation on generators a, b, c
        """
        pass

    def h1(self) -> AbelianGroup:
        """First homology computed from the presentation"""
        return h1_of_presentation(self.presentation())

    def _check_unimodular(self) -> None:
        det = self.matrix.det
        if det not in (1, -1):
            raise InvariantViolation(f"determinant is {det}, not ±1: not in GL(2,Z)")

    def entry(self, name: str) -> int:
        return self.matrix.entries[self.entry_names.index(name)]

    def __str__(self) -> str:
        return str(self.matrix)
