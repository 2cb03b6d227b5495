"""Test double coverings: homs onto Z/2, Reidemeister-Schreier and the cover table"""
from itertools import product

import pytest

from sol_sapphire.covers import (
    ClassStatus,
    CoverKind,
    Z2Hom,
    all_double_covers,
    check_cover_homology,
    double_cover_matrix,
    enumerate_z2_homs,
    hom_equivalence_classes,
    reidemeister_schreier,
)
from sol_sapphire.errors import CaseRequiresEvenS, InvalidHom, InvariantViolation
from sol_sapphire.intlinalg import AbelianGroup, Mat2Z
from sol_sapphire.presentations import SapphireMatrix, h1_of_presentation, pi1_sapphire
from sol_sapphire.sapphire import homeomorphic
from sol_sapphire.words import Presentation, Word

CANONICAL_UP_TO_6 = [
    SapphireMatrix.of(r, s, t, u)
    for r, s, t, u in product(range(1, 7), repeat=4)
    if r <= u and r * u - s * t in (1, -1)
]

S_ODD = SapphireMatrix.of(1, 1, 1, 2)
S_EVEN = SapphireMatrix.of(1, 2, 1, 3)


def test_phi_numbering():
    """phi1..phi7 follow the images (1,0,0), (0,1,0), (0,0,1), (1,1,0), (1,0,1), (0,1,1), (1,1,1)"""
    assert [Z2Hom.phi(i).images for i in range(1, 8)] == [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 0),
        (1, 0, 1),
        (0, 1, 1),
        (1, 1, 1),
    ]
    assert [Z2Hom.phi(i).case_label for i in range(1, 8)] == [
        "I", "II", "III", "IV", "V", "VI", "VII"
    ]
    assert Z2Hom((1, 0, 1)).phi_index == 5
    with pytest.raises(InvalidHom):
        Z2Hom.phi(8)


def test_z2hom_validation():
    with pytest.raises(InvalidHom, match="trivial"):
        Z2Hom((0, 0, 0))
    with pytest.raises(InvalidHom):
        Z2Hom((2, 0, 0))
    with pytest.raises(InvalidHom):
        Z2Hom((1, 0)).case_label


def test_z2hom_evaluates_words():
    h = Z2Hom.phi(5)
    assert h(Word.generator(0)) == 1
    assert h(Word.generator(1)) == 0
    assert h(Word(((0, 1), (2, -1)))) == 0
    assert h(Word()) == 0


def test_enumerate_homs_s_odd():
    """b must map to 0 when s is odd"""
    homs = enumerate_z2_homs(pi1_sapphire(S_ODD))
    assert [h.phi_index for h in homs] == [1, 3, 5]


def test_enumerate_homs_s_even():
    homs = enumerate_z2_homs(pi1_sapphire(S_EVEN))
    assert [h.phi_index for h in homs] == [1, 2, 3, 4, 5, 6, 7]


def test_enumerate_homs_free_group():
    homs = enumerate_z2_homs(Presentation(("x", "y")))
    assert [h.images for h in homs] == [(1, 0), (0, 1), (1, 1)]


def test_enumerate_homs_matches_parity_of_s():
    for sapphire in CANONICAL_UP_TO_6:
        count = len(enumerate_z2_homs(sapphire.presentation()))
        assert count == (7 if sapphire.s % 2 == 0 else 3)


def test_kills():
    p = pi1_sapphire(S_ODD)
    assert Z2Hom.phi(1).kills(p)
    assert not Z2Hom.phi(2).kills(p)
    assert not Z2Hom((1, 0)).kills(p)


def test_reidemeister_schreier_cyclic():
    """Index-2 subgroup of Z is generated by x^2"""
    kernel = reidemeister_schreier(Presentation(("x",)), Z2Hom((1,)))
    assert kernel.generator_names == ("x^2",)
    assert kernel.relators == ()
    assert h1_of_presentation(kernel) == AbelianGroup((), 1)


def test_reidemeister_schreier_free_group():
    """Index-2 subgroup of a free group of rank 2 is free of rank 3"""
    kernel = reidemeister_schreier(Presentation(("x", "y")), Z2Hom((1, 0)))
    assert kernel.generator_names == ("y", "x^2", "x y x^-1")
    assert h1_of_presentation(kernel) == AbelianGroup((), 3)


def test_reidemeister_schreier_sapphire_phi1():
    """Kernel generated by b, c, a^2, a b a^-1, a c a^-1 with H1 = Z_16 + Z_2 + Z_2"""
    kernel = reidemeister_schreier(pi1_sapphire(S_ODD), Z2Hom.phi(1))
    assert kernel.generator_names == ("b", "c", "a^2", "a b a^-1", "a c a^-1")
    assert len(kernel.relators) == 6
    assert h1_of_presentation(kernel) == AbelianGroup((2, 2, 16))
    assert h1_of_presentation(kernel) == SapphireMatrix.of(3, 2, 4, 3).h1()


def test_reidemeister_schreier_rejects_non_hom():
    with pytest.raises(InvalidHom):
        reidemeister_schreier(pi1_sapphire(S_ODD), Z2Hom.phi(2))
    with pytest.raises(InvalidHom):
        reidemeister_schreier(pi1_sapphire(S_ODD), Z2Hom((1, 0)))


def test_reidemeister_schreier_kernel_shape():
    """2n - 1 generators; sapphire covers are finite, the torus bundle cover has rank 1"""
    for sapphire in CANONICAL_UP_TO_6[:20]:
        p = sapphire.presentation()
        for h in enumerate_z2_homs(p):
            kernel = reidemeister_schreier(p, h)
            assert kernel.generator_count == 5
            group = h1_of_presentation(kernel)
            assert group.free_rank == (1 if h.case_label == "V" else 0)


@pytest.mark.parametrize(
    "entries, phi, kind, expected",
    [
        ((1, 1, 1, 2), 1, CoverKind.SAPPHIRE, (3, 2, 4, 3)),
        ((1, 1, 1, 2), 3, CoverKind.SAPPHIRE, (3, 4, 2, 3)),
        ((1, 1, 1, 2), 5, CoverKind.TORUS_BUNDLE, (3, -2, -4, 3)),
        ((1, 1, 2, 1), 5, CoverKind.TORUS_BUNDLE, (-3, 4, 2, -3)),
        ((1, 2, 1, 3), 2, CoverKind.SAPPHIRE, (1, 1, 2, 3)),
        ((1, 2, 1, 3), 7, CoverKind.SAPPHIRE, (1, 1, 2, 3)),
        ((2, 1, 3, 1), 1, CoverKind.SAPPHIRE, (5, 4, 6, 5)),
    ],
)
def test_double_cover_matrix(entries, phi, kind, expected):
    cover = double_cover_matrix(SapphireMatrix.of(*entries), Z2Hom.phi(phi))
    assert cover.kind is kind
    assert cover.matrix == Mat2Z(*expected)
    assert cover.case_label == Z2Hom.phi(phi).case_label


def test_double_cover_matrix_errors():
    with pytest.raises(CaseRequiresEvenS):
        double_cover_matrix(S_ODD, Z2Hom.phi(2))
    with pytest.raises(InvariantViolation):
        double_cover_matrix(SapphireMatrix.of(-1, -1, -1, -2), Z2Hom.phi(1))


def test_case_v_is_anosov_torus_bundle():
    for sapphire in CANONICAL_UP_TO_6:
        cover = double_cover_matrix(sapphire, Z2Hom.phi(5))
        bundle = cover.manifold()
        assert bundle.matrix.det == 1
        assert bundle.is_anosov
        diagonal = sapphire.r * sapphire.u + sapphire.s * sapphire.t
        assert bundle.trace == 2 * diagonal * sapphire.matrix.det


def test_case_v_det_minus_one_matches_kernel():
    """A det -1 sapphire has a negative-trace monodromy with the kernel's H1"""
    sapphire = SapphireMatrix.of(1, 1, 2, 1)
    cover = double_cover_matrix(sapphire, Z2Hom.phi(5))
    kernel = reidemeister_schreier(sapphire.presentation(), Z2Hom.phi(5))
    assert h1_of_presentation(kernel) == AbelianGroup((2, 4), 1)
    assert cover.h1() == AbelianGroup((2, 4), 1)
    assert check_cover_homology(sapphire) == []


def test_b_cases_share_one_matrix():
    """Cases II, IV, VI and VII give the same gluing matrix"""
    for sapphire in CANONICAL_UP_TO_6:
        if sapphire.s % 2:
            continue
        matrices = {double_cover_matrix(sapphire, Z2Hom.phi(i)).matrix for i in (2, 4, 6, 7)}
        assert matrices == {Mat2Z(sapphire.r, sapphire.s // 2, 2 * sapphire.t, sapphire.u)}


def test_case_i_and_iii_homeomorphic_iff_r_equals_u():
    for sapphire in CANONICAL_UP_TO_6:
        first = double_cover_matrix(sapphire, Z2Hom.phi(1)).manifold()
        third = double_cover_matrix(sapphire, Z2Hom.phi(3)).manifold()
        assert homeomorphic(first, third) == (sapphire.r == sapphire.u), sapphire


def test_kernel_homology_matches_cover_table():
    """Reidemeister-Schreier kernel H1 equals H1 of the table cover, every case"""
    assert len(CANONICAL_UP_TO_6) > 20
    for sapphire in CANONICAL_UP_TO_6:
        assert check_cover_homology(sapphire) == [], sapphire


def test_all_double_covers_order():
    assert [c.case_label for c in all_double_covers(S_ODD)] == ["I", "III", "V"]
    assert [c.case_label for c in all_double_covers(S_EVEN)] == [
        "I", "II", "III", "IV", "V", "VI", "VII"
    ]


def test_cover_to_dict():
    cover = double_cover_matrix(S_ODD, Z2Hom.phi(5))
    assert cover.to_dict() == {
        "case": "V",
        "hom": {"a": 1, "b": 0, "c": 1},
        "kind": "torus-bundle",
        "matrix": [[3, -2], [-4, 3]],
        "h1": {"invariant_factors": [2, 2], "free_rank": 1},
    }


def test_hom_classes_r_not_u_s_odd():
    partition = hom_equivalence_classes(S_ODD)
    assert partition.labels() == [("I",), ("III",), ("V",)]
    assert all(c.status is ClassStatus.PROVEN_DISTINCT for c in partition.classes)


def test_hom_classes_r_not_u_s_even():
    partition = hom_equivalence_classes(S_EVEN)
    assert partition.labels() == [("I",), ("III",), ("V",), ("II", "IV", "VI", "VII")]
    assert partition.status_of("VI") is ClassStatus.PROVEN_EQUIVALENT


def test_hom_classes_r_equals_u():
    """phi1 and phi3 stay undecided when r = u"""
    partition = hom_equivalence_classes(SapphireMatrix.of(3, 2, 4, 3))
    assert partition.labels() == [("I", "III"), ("V",), ("II", "IV", "VI", "VII")]
    assert partition.status_of("I") is ClassStatus.UNKNOWN
    assert partition.status_of("V") is ClassStatus.PROVEN_DISTINCT


def test_hom_classes_partition_valid_homs():
    for sapphire in CANONICAL_UP_TO_6:
        cases = [case for c in hom_equivalence_classes(sapphire).classes for case in c.cases]
        valid = [h.case_label for h in enumerate_z2_homs(sapphire.presentation())]
        assert sorted(cases) == sorted(valid)
