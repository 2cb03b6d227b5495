"""Test the Morimoto orbit, canonical forms and homology of sapphires"""
from itertools import product

import pytest

from sol_sapphire.errors import InvariantViolation
from sol_sapphire.intlinalg import AbelianGroup, Mat2Z
from sol_sapphire.presentations import SapphireMatrix, h1_of_presentation, pi1_sapphire
from sol_sapphire.sapphire import (
    CanonicalSapphire,
    canonical_form,
    h1_sapphire,
    homeomorphic,
    in_orbit,
    morimoto_orbit,
)


def sapphires_in(values) -> list[SapphireMatrix]:
    return [
        SapphireMatrix.of(*entries)
        for entries in product(values, repeat=4)
        if entries[0] * entries[3] - entries[1] * entries[2] in (1, -1)
    ]


SIGNED = sapphires_in([x for x in range(-4, 5) if x])
CANONICAL_UP_TO_6 = [m for m in sapphires_in(range(1, 7)) if m.r <= m.u]


@pytest.mark.parametrize(
    "entries, expected",
    [
        ((-1, -1, -1, -2), (1, 1, 1, 2)),
        ((2, 1, 1, 1), (1, 1, 1, 2)),
        ((1, 1, 1, 2), (1, 1, 1, 2)),
        ((3, -2, -4, 3), (3, 2, 4, 3)),
        ((1, -2, 1, -3), (1, 2, 1, 3)),
        ((-5, 4, 6, -5), (5, 4, 6, 5)),
    ],
)
def test_canonical_form_examples(entries, expected):
    assert canonical_form(SapphireMatrix.of(*entries)).matrix == Mat2Z(*expected)


def test_orbit_of_example():
    """Orbit members are the sixteen sign and inverse variants"""
    orbit = morimoto_orbit(SapphireMatrix.of(1, 1, 1, 2))
    assert Mat2Z(2, 1, 1, 1) in orbit
    assert Mat2Z(-1, -1, -1, -2) in orbit
    assert Mat2Z(2, -1, -1, 1) in orbit
    assert Mat2Z(1, 2, 1, 1) not in orbit
    assert len(orbit) <= 16


def test_homeomorphic_examples():
    assert homeomorphic(SapphireMatrix.of(1, 1, 1, 2), SapphireMatrix.of(2, 1, 1, 1))
    assert not homeomorphic(SapphireMatrix.of(1, 1, 1, 2), SapphireMatrix.of(1, 2, 1, 1))
    assert in_orbit(SapphireMatrix.of(1, 1, 1, 2), SapphireMatrix.of(-2, 1, 1, -1))


def test_canonical_sapphire_invariants():
    """Canonical representatives are positive with r <= u"""
    assert CanonicalSapphire(Mat2Z(1, 1, 1, 2)).r == 1
    with pytest.raises(InvariantViolation):
        CanonicalSapphire(Mat2Z(2, 1, 1, 1))
    with pytest.raises(InvariantViolation):
        CanonicalSapphire(Mat2Z(-1, -1, -1, -2))


def test_orbit_properties_exhaustive():
    """Canonical form is constant on orbits and picks out the least positive member"""
    assert len(SIGNED) > 100
    for sapphire in SIGNED:
        orbit = morimoto_orbit(sapphire)
        assert len(orbit) <= 32
        assert sapphire.matrix in orbit
        canonical = canonical_form(sapphire)
        assert canonical.matrix in orbit
        assert canonical_form(canonical).matrix == canonical.matrix
        positive = [m for m in orbit if all(x > 0 for x in m.entries) and m.r <= m.u]
        assert canonical.matrix.entries == min(m.entries for m in positive)
        for member in orbit:
            other = SapphireMatrix(member)
            assert canonical_form(other).matrix == canonical.matrix
            assert in_orbit(other, sapphire)


def test_orbit_invariants_exhaustive():
    """|b|, |c|, their parities and the test |a| = |d| do not change along orbits"""
    for sapphire in SIGNED:
        r, s, t, u = sapphire.matrix.entries
        for member in morimoto_orbit(sapphire):
            assert member.s % 2 == s % 2
            assert member.t % 2 == t % 2
            assert (abs(member.r) == abs(member.u)) == (abs(r) == abs(u))
            assert (abs(member.s), abs(member.t)) == (abs(s), abs(t))


def test_homeomorphic_is_an_equivalence_relation():
    sample = SIGNED[::15]
    for a in sample:
        assert homeomorphic(a, a)
        for b in sample:
            assert homeomorphic(a, b) == homeomorphic(b, a)
            if homeomorphic(a, b):
                for c in sample:
                    if homeomorphic(b, c):
                        assert homeomorphic(a, c)


@pytest.mark.parametrize(
    "entries, expected",
    [
        ((1, 1, 1, 2), AbelianGroup((4, 4))),
        ((1, 2, 1, 3), AbelianGroup((2, 2, 4))),
        ((3, 2, 4, 3), AbelianGroup((2, 2, 16))),
        ((2, 1, 3, 1), AbelianGroup((4, 12))),
        ((-1, -1, -1, -2), AbelianGroup((4, 4))),
    ],
)
def test_h1_sapphire_examples(entries, expected):
    assert h1_sapphire(SapphireMatrix.of(*entries)) == expected


def test_h1_formula_matches_presentation():
    """Z_4t + Z_4 for s odd, Z_4t + Z_2 + Z_2 for s even, checked by Smith form"""
    assert len(CANONICAL_UP_TO_6) > 20
    for sapphire in CANONICAL_UP_TO_6:
        assert h1_sapphire(sapphire) == h1_of_presentation(pi1_sapphire(sapphire)), sapphire


def test_h1_formula_on_signed_matrices():
    for sapphire in SIGNED:
        assert h1_sapphire(sapphire) == sapphire.h1(), sapphire
