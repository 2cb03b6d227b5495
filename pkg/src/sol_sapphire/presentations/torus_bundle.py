"""Torus bundles over the circle and their fundamental groups"""
from dataclasses import dataclass

from ..intlinalg import Mat2Z
from ..words import Presentation, Word
from .base import GluingMatrix

A, B, C = 0, 1, 2


@dataclass(frozen=True)
class TorusBundleMatrix(GluingMatrix):
    """Monodromy [[m, n], [p, q]] of a torus bundle; Anosov when |trace| > 2"""

    matrix: Mat2Z
    entry_names = ("m", "n", "p", "q")

    def __post_init__(self):
        self._check_unimodular()

    @property
    def trace(self) -> int:
        return self.matrix.trace

    @property
    def is_anosov(self) -> bool:
        # Recorded, not enforced.
        return abs(self.trace) > 2

    def presentation(self) -> Presentation:
        return pi1_torus_bundle(self)


def pi1_torus_bundle(bundle: TorusBundleMatrix) -> Presentation:
    """
    Presentation
    < a, b, c | a b a^-1 b^-1, c a c^-1 b^-p a^-m, c b c^-1 b^-q a^-n >.

    Args:
        bundle: Monodromy matrix

    Returns:
        Presentation with the three relators, freely reduced
    """
    m, n, p, q = bundle.matrix.entries
    a, b, c = Word.generator(A), Word.generator(B), Word.generator(C)
    relators = (
        a * b * ~a * ~b,
        c * a * ~c * Word.power(B, -p) * Word.power(A, -m),
        c * b * ~c * Word.power(B, -q) * Word.power(A, -n),
    )
    return Presentation(("a", "b", "c"), relators)
