"""Double coverings of sapphires

Index-2 subgroups of pi1 correspond to nontrivial homomorphisms onto Z/2. For
a sapphire there are at most seven of them, phi1 ... phi7, keyed by the images
of (a, b, c). Each cover is computed twice: by Reidemeister-Schreier rewriting
of the presentation, and by the closed-form table of gluing matrices.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Sequence

import numpy as np

from .errors import CaseRequiresEvenS, InvalidHom, InvariantViolation
from .intlinalg import AbelianGroup, Mat2Z
from .presentations import SapphireMatrix, TorusBundleMatrix, h1_of_presentation
from .sapphire import h1_sapphire
from .words import Presentation, Word, conjugate, format_word

logger = logging.getLogger(__name__)

CASE_LABELS = ("I", "II", "III", "IV", "V", "VI", "VII")


def _hom_order_key(images: Sequence[int]) -> tuple:
    # (1,0,0) < (0,1,0) < (0,0,1) < (1,1,0) < (1,0,1) < (0,1,1) < (1,1,1)
    return (sum(images), tuple(-x for x in images))


@dataclass(frozen=True)
class Z2Hom:
    """Homomorphism onto Z/2 given by the image (0 or 1) of each generator"""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if any(x not in (0, 1) for x in images):
            raise InvalidHom(f"images must be 0 or 1, got {images}")
        if not any(images):
            raise InvalidHom("trivial homomorphism has no index-2 kernel")

    @classmethod
    def phi(cls, index: int) -> "Z2Hom":
        """The hom phi_index (1..7) on generators a, b, c"""
        if not 1 <= index <= 7:
            raise InvalidHom(f"phi index must be in 1..7, got {index}")
        return _ALL_PHIS[index - 1]

    @property
    def phi_index(self) -> int:
        if len(self.images) != 3:
            raise InvalidHom(f"phi numbering needs 3 generators, got {len(self.images)}")
        return _ALL_PHIS.index(self) + 1

    @property
    def case_label(self) -> str:
        return CASE_LABELS[self.phi_index - 1]

    def __call__(self, word: Word) -> int:
        return sum(self.images[gen] for gen, _ in word.letters) % 2

    def kills(self, p: Presentation) -> bool:
        """True when every relator maps to 0"""
        if len(self.images) != p.generator_count:
            return False
        sums = p.relation_matrix() @ np.array(self.images, dtype=object)
        return all(x % 2 == 0 for x in sums)

    def validate(self, p: Presentation) -> None:
        if len(self.images) != p.generator_count:
            raise InvalidHom(
                f"hom has {len(self.images)} images but the group has "
                f"{p.generator_count} generators"
            )
        if not self.kills(p):
            raise InvalidHom(f"hom {self.images} does not kill every relator")


_ALL_PHIS = tuple(
    Z2Hom(images)
    for images in sorted((x for x in product((0, 1), repeat=3) if any(x)), key=_hom_order_key)
)


def enumerate_z2_homs(p: Presentation) -> list[Z2Hom]:
    """
    All nontrivial homomorphisms of a finitely presented group onto Z/2.

    Args:
        p: Presentation

    Returns:
        Homs killing every relator, ordered by weight and then with
        earlier generators first (phi1 ... phi7 for three generators)
    """
    candidates = (
        Z2Hom(images) for images in product((0, 1), repeat=p.generator_count) if any(images)
    )
    homs = sorted((h for h in candidates if h.kills(p)), key=lambda h: _hom_order_key(h.images))
    logger.debug("%d homs onto Z/2 for %s", len(homs), p.format())
    return homs


def reidemeister_schreier(p: Presentation, h: Z2Hom) -> Presentation:
    """
    Presentation of the kernel of h.

    The Schreier transversal is {1, x} with x the first generator sent to 1.
    Kernel generators are t g (coset rep of t g)^-1 for t in the transversal
    and g a generator, dropping the one equal to the identity, so there are
    2n - 1 of them. Relators are the rewritten conjugates t R t^-1.

    Args:
        p: Presentation of the group
        h: Hom onto Z/2 killing every relator of p

    Returns:
        Kernel presentation; generators are named by their defining words

    Raises:
        InvalidHom: if h is not a hom of p
    """
    h.validate(p)
    n = p.generator_count
    x = h.images.index(1)
    transversal = (Word(), Word.generator(x))

    index: dict[tuple[int, int], int] = {}
    names: list[str] = []
    for coset, gen in product((0, 1), range(n)):
        if coset == 0 and gen == x:
            continue
        target = coset ^ h.images[gen]
        word = transversal[coset] * Word.generator(gen) * ~transversal[target]
        index[(coset, gen)] = len(names)
        names.append(format_word(word, p.generator_names))

    def rewrite(word: Word) -> Word:
        coset = 0
        letters = []
        for gen, sign in word.letters:
            if sign == 1:
                if (coset, gen) in index:
                    letters.append((index[(coset, gen)], 1))
                coset ^= h.images[gen]
            else:
                coset ^= h.images[gen]
                if (coset, gen) in index:
                    letters.append((index[(coset, gen)], -1))
        return Word(tuple(letters))

    relators = [rewrite(conjugate(r, t)) for t in transversal for r in p.relators]
    logger.debug("Kernel of %s: %d generators, %d relators", h.images, len(names), len(relators))
    return Presentation(tuple(names), tuple(relators))


class CoverKind(Enum):
    SAPPHIRE = "sapphire"
    TORUS_BUNDLE = "torus-bundle"


@dataclass(frozen=True)
class CoverDescriptor:
    """Closed-form double cover of a sapphire for one hom"""

    hom: Z2Hom
    kind: CoverKind
    matrix: Mat2Z

    def __post_init__(self):
        self.manifold()

    @property
    def case_label(self) -> str:
        return self.hom.case_label

    def manifold(self) -> SapphireMatrix | TorusBundleMatrix:
        if self.kind is CoverKind.SAPPHIRE:
            return SapphireMatrix(self.matrix)
        return TorusBundleMatrix(self.matrix)

    def h1(self) -> AbelianGroup:
        manifold = self.manifold()
        if isinstance(manifold, SapphireMatrix):
            return h1_sapphire(manifold)
        return manifold.h1()

    def to_dict(self) -> dict:
        a, b, c = self.hom.images
        h1 = self.h1()
        return {
            "case": self.case_label,
            "hom": {"a": a, "b": b, "c": c},
            "kind": self.kind.value,
            "matrix": self.matrix.rows(),
            "h1": {"invariant_factors": list(h1.invariant_factors), "free_rank": h1.free_rank},
        }


def double_cover_matrix(sapphire: SapphireMatrix, h: Z2Hom) -> CoverDescriptor:
    """
    Gluing matrix of the double cover belonging to h, from the closed-form table.

    Args:
        sapphire: Gluing matrix with all four entries positive
        h: One of phi1 ... phi7

    Returns:
        Cover descriptor; Case V is a torus bundle whose monodromy has trace
        2(ru + st) times the sign of det, the others are sapphires

    Raises:
        InvariantViolation: if some entry is not positive
        CaseRequiresEvenS: if h sends b to 1 while s is odd
        InvalidHom: if h is not a hom of pi1
    """
    if not sapphire.is_positive:
        raise InvariantViolation(f"cover table needs positive entries, got {sapphire.matrix}")
    r, s, t, u = sapphire.matrix.entries
    if len(h.images) == 3 and h.images[1] == 1 and s % 2:
        raise CaseRequiresEvenS(f"case {h.case_label} needs s even, got s = {s}")
    h.validate(sapphire.presentation())

    label = h.case_label
    diagonal = r * u + s * t
    if label == "I":
        matrix = Mat2Z(diagonal, 2 * r * s, 2 * t * u, diagonal)
        return CoverDescriptor(h, CoverKind.SAPPHIRE, matrix)
    if label == "III":
        matrix = Mat2Z(diagonal, 2 * s * u, 2 * r * t, diagonal)
        return CoverDescriptor(h, CoverKind.SAPPHIRE, matrix)
    if label == "V":
        if r * u - s * t == 1:
            matrix = Mat2Z(diagonal, -2 * r * t, -2 * s * u, diagonal)
        else:
            # det -1: the monodromy changes sign
            matrix = Mat2Z(-diagonal, 2 * r * t, 2 * s * u, -diagonal)
        return CoverDescriptor(h, CoverKind.TORUS_BUNDLE, matrix)
    # II, IV, VI and VII share one matrix
    return CoverDescriptor(h, CoverKind.SAPPHIRE, Mat2Z(r, s // 2, 2 * t, u))


def all_double_covers(sapphire: SapphireMatrix) -> list[CoverDescriptor]:
    """Table covers for every hom, in phi order"""
    return [double_cover_matrix(sapphire, h) for h in enumerate_z2_homs(sapphire.presentation())]


def check_cover_homology(sapphire: SapphireMatrix) -> list[str]:
    """
    Compare kernel homology from Reidemeister-Schreier with the table covers.

    Args:
        sapphire: Gluing matrix with all four entries positive

    Returns:
        One message per disagreeing case; empty when all agree
    """
    p = sapphire.presentation()
    mismatches = []
    for cover in all_double_covers(sapphire):
        kernel = h1_of_presentation(reidemeister_schreier(p, cover.hom))
        table = cover.h1()
        if kernel != table:
            mismatches.append(
                f"{sapphire.matrix} case {cover.case_label}: kernel H1 {kernel}, table H1 {table}"
            )
    return mismatches


class ClassStatus(Enum):
    PROVEN_DISTINCT = "proven-distinct"
    PROVEN_EQUIVALENT = "proven-equivalent"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class HomClass:
    cases: tuple[str, ...]
    status: ClassStatus


@dataclass(frozen=True)
class HomPartition:
    """Partition of the valid homs into classes of equivalent pairs (manifold, hom)"""

    classes: tuple[HomClass, ...]

    def labels(self) -> list[tuple[str, ...]]:
        return [c.cases for c in self.classes]

    def status_of(self, case: str) -> ClassStatus:
        for c in self.classes:
            if case in c.cases:
                return c.status
        raise KeyError(case)


def hom_equivalence_classes(sapphire: SapphireMatrix) -> HomPartition:
    """
    Group the homs whose covers are equivalent.

    phi2, phi4, phi6 and phi7 form one class (only present for s even) and phi5
    is alone. phi1 and phi3 are distinct when |r| != |u|; otherwise their covers
    are homeomorphic and equivalence of the pairs is left open.

    Args:
        sapphire: Gluing matrix

    Returns:
        Classes in the order phi1, phi3, phi5, then the b -> 1 class
    """
    distinct = ClassStatus.PROVEN_DISTINCT
    if abs(sapphire.r) != abs(sapphire.u):
        classes = [HomClass(("I",), distinct), HomClass(("III",), distinct)]
    else:
        classes = [HomClass(("I", "III"), ClassStatus.UNKNOWN)]
    classes.append(HomClass(("V",), distinct))
    if sapphire.s % 2 == 0:
        classes.append(HomClass(("II", "IV", "VI", "VII"), ClassStatus.PROVEN_EQUIVALENT))
    return HomPartition(tuple(classes))
