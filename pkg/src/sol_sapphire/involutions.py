"""Free involutions on sapphires and the Borsuk-Ulam property

A free involution is determined by the quotient it produces, a sapphire
double covered by the original one. Quotients covered through phi1 or phi3
are found by factoring the system

    a = ru + ts, b = 2rs, c = 2tu, d = ru + st      (down1)
    a = ru + ts, b = 2su, c = 2rt, d = ru + st      (down3)

over the coprime pair R = (a + 1) / 2, S = (a - 1) / 2.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum

from sympy import divisors

from .errors import DomainError, InvariantViolation, PreconditionViolation
from .intlinalg import Mat2Z, supported_part
from .presentations import SapphireMatrix
from .sapphire import CanonicalSapphire, canonical_form

logger = logging.getLogger(__name__)


def _check_down_hypotheses(a: int, b: int, c: int, d: int) -> None:
    failures = []
    if a != d:
        failures.append(f"a != d ({a} != {d})")
    if a % 2 == 0:
        failures.append(f"a = {a} is even")
    if b % 2:
        failures.append(f"b = {b} is odd")
    if c % 2:
        failures.append(f"c = {c} is odd")
    if 0 in (a, b, c, d):
        failures.append("entries must be nonzero")
    elif min(a, b, c) < 0:
        failures.append("a, b and c must be positive")
    if a * d - b * c != 1:
        failures.append(f"determinant is {a * d - b * c}, not 1")
    if failures:
        raise PreconditionViolation(failures)


def _down_parts(a: int, b: int, c: int) -> tuple[int, int, int, int]:
    big, small = (a + 1) // 2, (a - 1) // 2
    beta, gamma = b // 2, c // 2
    return (
        supported_part(beta, big),
        supported_part(beta, small),
        supported_part(gamma, big),
        supported_part(gamma, small),
    )


def solve_sapphire_down1(a: int, b: int, c: int, d: int) -> tuple[SapphireMatrix, SapphireMatrix]:
    """
    Positive solutions (r, s, t, u) of a = ru + ts, b = 2rs, c = 2tu, d = ru + st.

    Args:
        a, b, c, d: Entries of [[a, b], [c, d]] with a = d odd, b and c even and
            positive, determinant 1

    Returns:
        The two solutions as sapphire gluing matrices

    Raises:
        PreconditionViolation: listing every hypothesis that fails
    """
    _check_down_hypotheses(a, b, c, d)
    beta_r, beta_s, gamma_r, gamma_s = _down_parts(a, b, c)
    solutions = (
        SapphireMatrix.of(beta_s, beta_r, gamma_r, gamma_s),
        SapphireMatrix.of(beta_r, beta_s, gamma_s, gamma_r),
    )
    logger.debug("down1(%d, %d, %d, %d) = %s, %s", a, b, c, d, *solutions)
    return solutions


def solve_sapphire_down3(a: int, b: int, c: int, d: int) -> tuple[SapphireMatrix, SapphireMatrix]:
    """
    Positive solutions (r, s, t, u) of a = ru + ts, b = 2su, c = 2rt, d = ru + st.

    Same hypotheses and errors as solve_sapphire_down1.
    """
    _check_down_hypotheses(a, b, c, d)
    beta_r, beta_s, gamma_r, gamma_s = _down_parts(a, b, c)
    solutions = (
        SapphireMatrix.of(gamma_s, beta_r, gamma_r, beta_s),
        SapphireMatrix.of(gamma_r, beta_s, gamma_s, beta_r),
    )
    logger.debug("down3(%d, %d, %d, %d) = %s, %s", a, b, c, d, *solutions)
    return solutions


def _brute_force(a: int, b: int, c: int, d: int, swap_s_u: bool) -> frozenset[Mat2Z]:
    if b <= 0 or c <= 0 or b % 2 or c % 2:
        return frozenset()
    found = set()
    for first in divisors(b // 2):
        for second in divisors(c // 2):
            if swap_s_u:
                s, r = first, second
                u, t = b // 2 // s, c // 2 // r
            else:
                r, t = first, second
                s, u = b // 2 // r, c // 2 // t
            if r * u + t * s == a and r * u + s * t == d:
                found.add(Mat2Z(r, s, t, u))
    return frozenset(found)


def brute_force_down1(a: int, b: int, c: int, d: int) -> frozenset[Mat2Z]:
    """Positive down1 solutions by search over divisors of b/2 and c/2"""
    return _brute_force(a, b, c, d, swap_s_u=False)


def brute_force_down3(a: int, b: int, c: int, d: int) -> frozenset[Mat2Z]:
    """Positive down3 solutions by search over divisors of b/2 and c/2"""
    return _brute_force(a, b, c, d, swap_s_u=True)


class InvolutionCount(Enum):
    NONE = "none"
    EXACTLY_ONE = "exactly-one"
    EXACTLY_THREE = "exactly-three"
    THREE_TO_FIVE = "three-to-five"


@dataclass(frozen=True)
class InvolutionReport:
    """
    Free involution classes of a sapphire, described by their quotients.

    quotients holds one gluing matrix per homeomorphism class of quotient,
    as written in the classification; canonical_quotients holds their
    canonical forms in the same order.
    """

    count: InvolutionCount
    quotients: tuple[SapphireMatrix, ...] = ()
    notes: tuple[str, ...] = ()
    canonical_quotients: tuple[CanonicalSapphire, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "quotients", tuple(self.quotients))
        object.__setattr__(self, "notes", tuple(self.notes))
        canonical = tuple(canonical_form(q) for q in self.quotients)
        object.__setattr__(self, "canonical_quotients", canonical)
        if len({q.matrix for q in canonical}) != len(canonical):
            raise InvariantViolation("quotients must be pairwise non-homeomorphic")
        expected = {
            InvolutionCount.NONE: lambda k: k == 0,
            InvolutionCount.EXACTLY_ONE: lambda k: k == 1,
            InvolutionCount.EXACTLY_THREE: lambda k: k == 3,
            InvolutionCount.THREE_TO_FIVE: lambda k: 3 <= k <= 5,
        }[self.count]
        if not expected(len(canonical)):
            raise InvariantViolation(f"{self.count.value} report with {len(canonical)} quotients")


def _dedupe(candidates: list[SapphireMatrix]) -> list[SapphireMatrix]:
    seen = set()
    kept = []
    for q in candidates:
        key = canonical_form(q).matrix
        if key not in seen:
            seen.add(key)
            kept.append(q)
    return kept


def classify_involutions(sapphire: SapphireMatrix) -> InvolutionReport:
    """
    Classify the free involutions of a sapphire [[a, b], [c, d]].

    - c odd: none.
    - c even and b odd, or b and c even with |a| != |d|: exactly one, with
      quotient [[a, 2b], [c/2, d]].
    - b and c even with |a| = |d|: the quotient above plus the two down1
      solutions of the canonical form. Exactly three classes when the first
      solution has r != u and s != t, otherwise between three and five.

    Args:
        sapphire: Gluing matrix, not necessarily canonical

    Returns:
        Involution report
    """
    a, b, c, d = sapphire.matrix.entries
    if c % 2:
        return InvolutionReport(InvolutionCount.NONE, (), ("c odd: no free involution",))

    halved = SapphireMatrix.of(a, 2 * b, c // 2, d)
    if b % 2:
        return InvolutionReport(
            InvolutionCount.EXACTLY_ONE, (halved,), ("c even, b odd: one class, covered via phi2",)
        )
    if abs(a) != abs(d):
        return InvolutionReport(
            InvolutionCount.EXACTLY_ONE,
            (halved,),
            ("b, c even, |a| != |d|: one class, covered via phi2",),
        )

    canonical = canonical_form(sapphire)
    first, second = solve_sapphire_down1(*canonical.matrix.entries)
    notes = [f"b, c even, |a| = |d|: down1 of {canonical.matrix} gives {first.matrix}"]
    if first.r != first.u and first.s != first.t:
        notes.append("r != u and s != t: three classes")
        return InvolutionReport(InvolutionCount.EXACTLY_THREE, (halved, first, second), notes)

    notes.append("r = u or s = t: three to five classes")
    candidates = [halved, first, second, *solve_sapphire_down3(*canonical.matrix.entries)]
    return InvolutionReport(InvolutionCount.THREE_TO_FIVE, tuple(_dedupe(candidates)), notes)


class BUOutcome(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    VACUOUS = "vacuous-no-involution"


@dataclass(frozen=True)
class BUVerdict:
    n: int
    outcome: BUOutcome
    rationale: str


def borsuk_ulam(
    sapphire: SapphireMatrix, n: int, report: InvolutionReport | None = None
) -> BUVerdict:
    """
    Borsuk-Ulam property for (N_A, tau; R^n), uniform over the free involutions tau.

    Args:
        sapphire: Gluing matrix
        n: Target dimension, at least 1
        report: Precomputed classify_involutions(sapphire), if available

    Returns:
        Verdict with a short rationale label

    Raises:
        DomainError: if n < 1
    """
    if n < 1:
        raise DomainError(f"dimension n must be at least 1, got {n}")
    if report is None:
        report = classify_involutions(sapphire)
    if report.count is InvolutionCount.NONE:
        return BUVerdict(n, BUOutcome.VACUOUS, "no free involution")
    if n == 1:
        return BUVerdict(n, BUOutcome.HOLDS, "connectedness: intermediate value argument")
    if n == 2:
        return BUVerdict(n, BUOutcome.HOLDS, "H1 finite")
    if n == 3:
        if sapphire.matrix.t % 2 == 0 and sapphire.matrix.s % 2:
            return BUVerdict(n, BUOutcome.HOLDS, "c even and b odd")
        return BUVerdict(n, BUOutcome.FAILS, "b even: some involution admits an equivariant map")
    return BUVerdict(n, BUOutcome.FAILS, "n >= 4 exceeds the dimension: equivariant map exists")


def borsuk_ulam_table(sapphire: SapphireMatrix) -> dict[str, BUVerdict]:
    """Verdicts keyed n1, n2, n3 and n>=4 (computed at n = 4)"""
    report = classify_involutions(sapphire)
    keys = ("n1", "n2", "n3", "n>=4")
    return {key: borsuk_ulam(sapphire, n, report) for key, n in zip(keys, range(1, 5))}
