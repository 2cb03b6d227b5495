"""Sapphire (torus semi-bundle) gluing matrices and their fundamental groups"""
from dataclasses import dataclass

from ..errors import InvariantViolation
from ..intlinalg import Mat2Z
from ..words import Presentation, Word
from .base import GluingMatrix

A, B, C = 0, 1, 2


@dataclass(frozen=True)
class SapphireMatrix(GluingMatrix):
    """Gluing matrix [[r, s], [t, u]] of a sapphire with Sol geometry"""

    matrix: Mat2Z
    entry_names = ("r", "s", "t", "u")

    def __post_init__(self):
        self._check_unimodular()
        for name, value in zip(self.entry_names, self.matrix.entries):
            if value == 0:
                raise InvariantViolation(f"entry {name} is zero: not a Sol sapphire")

    @classmethod
    def of(cls, r: int, s: int, t: int, u: int) -> "SapphireMatrix":
        return cls(Mat2Z(r, s, t, u))

    @property
    def r(self) -> int:
        return self.matrix.r

    @property
    def s(self) -> int:
        return self.matrix.s

    @property
    def t(self) -> int:
        return self.matrix.t

    @property
    def u(self) -> int:
        return self.matrix.u

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.matrix.entries)

    def presentation(self) -> Presentation:
        return pi1_sapphire(self)


def pi1_sapphire(sapphire: SapphireMatrix) -> Presentation:
    """
    Morimoto's presentation
    < a, b, c | a b a^-1 b, c^2 a^-2r b^-s, c a^2t b^u c^-1 a^2t b^u >.

    Args:
        sapphire: Gluing matrix

    Returns:
        Presentation with the three relators, freely reduced
    """
    r, s, t, u = sapphire.matrix.entries
    a, b, c = Word.generator(A), Word.generator(B), Word.generator(C)
    twist = Word.power(A, 2 * t) * Word.power(B, u)
    relators = (
        a * b * ~a * b,
        Word.power(C, 2) * Word.power(A, -2 * r) * Word.power(B, -s),
        c * twist * ~c * twist,
    )
    return Presentation(("a", "b", "c"), relators)
