"""Exact integer linear algebra and elementary number theory"""
import json
import logging
from dataclasses import dataclass
from typing import Iterable, TypeAlias

import numpy as np
from sympy import Matrix, ZZ, factorint, isprime, multiplicity
from sympy.matrices.normalforms import invariant_factors

from .errors import DomainError, MatrixParseError, NotUnimodular

logger = logging.getLogger(__name__)

# Integer matrices are numpy arrays of dtype=object holding Python ints.
IntMatrix: TypeAlias = np.ndarray

# Prime -> multiplicity, primes in increasing order.
FactorMap: TypeAlias = dict[int, int]


@dataclass(frozen=True)
class Mat2Z:
    """2x2 integer matrix [[r, s], [t, u]]"""

    r: int
    s: int
    t: int
    u: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Mat2Z":
        (r, s), (t, u) = rows
        return cls(int(r), int(s), int(t), int(u))

    @classmethod
    def identity(cls) -> "Mat2Z":
        return cls(1, 0, 0, 1)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.r, self.s, self.t, self.u)

    def rows(self) -> list[list[int]]:
        return [[self.r, self.s], [self.t, self.u]]

    @property
    def det(self) -> int:
        return det2(self)

    @property
    def trace(self) -> int:
        return self.r + self.u

    def __matmul__(self, other: "Mat2Z") -> "Mat2Z":
        return mul2(self, other)

    def __neg__(self) -> "Mat2Z":
        return Mat2Z(-self.r, -self.s, -self.t, -self.u)

    def __str__(self) -> str:
        return format_matrix(self)


def det2(m: Mat2Z) -> int:
    return m.r * m.u - m.s * m.t


def mul2(a: Mat2Z, b: Mat2Z) -> Mat2Z:
    return Mat2Z(
        a.r * b.r + a.s * b.t,
        a.r * b.s + a.s * b.u,
        a.t * b.r + a.u * b.t,
        a.t * b.s + a.u * b.u,
    )


def inv2(m: Mat2Z) -> Mat2Z:
    """
    Inverse in GL(2,Z) via the adjugate.

    Args:
        m: Matrix with det = +1 or -1

    Returns:
        The integer inverse

    Raises:
        NotUnimodular: if |det| != 1
    """
    d = det2(m)
    if d not in (1, -1):
        raise NotUnimodular(f"determinant is {d}, not ±1")
    return Mat2Z(d * m.u, -d * m.s, -d * m.t, d * m.r)


def format_matrix(m: Mat2Z) -> str:
    return f"{m.r} {m.s}; {m.t} {m.u}"


def parse_matrix(text: str) -> Mat2Z:
    """
    Parse ``"r s; t u"`` or JSON ``[[r, s], [t, u]]``.

    Args:
        text: Matrix text

    Returns:
        Parsed matrix

    Raises:
        MatrixParseError: if the text is neither form
    """
    stripped = text.strip()
    try:
        if stripped.startswith("["):
            rows = json.loads(stripped)
        else:
            rows = [[int(x) for x in row.split()] for row in stripped.split(";")]
    except ValueError as e:
        raise MatrixParseError(f"cannot parse matrix {text!r}: {e}") from e
    if (
        not isinstance(rows, list)
        or len(rows) != 2
        or any(not isinstance(row, list) or len(row) != 2 for row in rows)
        or any(not isinstance(x, int) or isinstance(x, bool) for row in rows for x in row)
    ):
        raise MatrixParseError(f"expected a 2x2 integer matrix, got {text!r}")
    return Mat2Z.from_rows(rows)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + Z_d1 + ... + Z_dk with d1 | d2 | ..."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if self.free_rank < 0:
            raise DomainError(f"free rank must be non-negative, got {self.free_rank}")
        if any(d < 2 for d in factors):
            raise DomainError(f"invariant factors must be >= 2, got {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise DomainError(f"invariant factors must form a divisibility chain, got {factors}")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int], free_rank: int = 0) -> "AbelianGroup":
        """
        Canonical form of a direct sum of finite cyclic groups.

        Args:
            orders: Nonzero orders of the cyclic summands (signs ignored, 1s allowed)
            free_rank: Number of Z summands

        Returns:
            The same group in invariant-factor form
        """
        prime_powers: dict[int, list[int]] = {}
        for order in orders:
            order = abs(int(order))
            if order == 0:
                raise DomainError("cyclic order must be nonzero; count Z summands in free_rank")
            for p, e in factorize(order).items():
                prime_powers.setdefault(p, []).append(p**e)
        length = max((len(powers) for powers in prime_powers.values()), default=0)
        factors = [1] * length
        for powers in prime_powers.values():
            for i, q in enumerate(sorted(powers, reverse=True)):
                factors[length - 1 - i] *= q
        return cls(tuple(factors), free_rank)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite"""
        if not self.is_finite:
            return None
        order = 1
        for d in self.invariant_factors:
            order *= d
        return order

    def __str__(self) -> str:
        terms = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.invariant_factors]
        return " + ".join(terms) if terms else "0"


def smith_normal_form(m: IntMatrix) -> AbelianGroup:
    """
    Cokernel of an integer matrix acting on Z^cols (rows are relations).

    Args:
        m: 2-D integer array, shape (rows, cols)

    Returns:
        Invariant factors (1s dropped) and free rank cols - rank(m)
    """
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise DomainError(f"expected a 2-D matrix, got shape {m.shape}")
    n_rows, n_cols = m.shape
    if n_rows == 0 or n_cols == 0:
        return AbelianGroup((), n_cols)
    diagonal = invariant_factors(Matrix([[int(x) for x in row] for row in m]), domain=ZZ)
    nonzero = [abs(int(d)) for d in diagonal if d != 0]
    logger.debug("SNF of %dx%d matrix: diagonal %s", n_rows, n_cols, nonzero)
    return AbelianGroup.from_cyclic_orders(nonzero, n_cols - len(nonzero))


def factorize(x: int) -> FactorMap:
    """
    Prime factorization.

    Args:
        x: Positive integer

    Returns:
        {prime: multiplicity} with primes increasing; factorize(1) is empty

    Raises:
        DomainError: if x < 1
    """
    if x < 1:
        raise DomainError(f"factorize needs a positive integer, got {x}")
    return dict(sorted((int(p), int(e)) for p, e in factorint(x).items()))


def valuation(x: int, p: int) -> int:
    """
    |x|_p, the largest e with p^e dividing x (0 if p does not divide x).

    Raises:
        DomainError: if x == 0 or p is not prime
    """
    if x == 0:
        raise DomainError("valuation of 0 is undefined")
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    return int(multiplicity(p, abs(x)))


def supported_part(x: int, modulus: int) -> int:
    """
    Largest divisor of x built only from primes dividing modulus.

    Args:
        x: Nonzero integer
        modulus: Positive integer whose primes are kept

    Returns:
        prod p^|x|_p over the primes p of modulus
    """
    part = 1
    for p in factorize(modulus):
        part *= p ** valuation(x, p)
    return part
