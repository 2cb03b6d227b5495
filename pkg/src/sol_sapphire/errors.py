"""Exception hierarchy shared by every sol_sapphire module"""
from typing import Sequence


class SolSapphireError(Exception):
    """Base class for all errors raised by sol_sapphire"""


class MatrixParseError(SolSapphireError, ValueError):
    """Matrix or word text could not be parsed"""


class DomainError(SolSapphireError, ValueError):
    """Argument outside the domain of an operation"""


class NotUnimodular(DomainError):
    """2x2 matrix with |det| != 1 where an inverse in GL(2,Z) is needed"""


class InvariantViolation(SolSapphireError, ValueError):
    """A domain type was built from data breaking one of its invariants"""


class NoPositiveRepresentative(InvariantViolation):
    """Morimoto orbit without an all-positive, r <= u member"""


class InvalidHom(SolSapphireError, ValueError):
    """Assignment to Z/2 that is trivial or does not kill every relator"""


class CaseRequiresEvenS(InvalidHom):
    """A hom sending b to 1 was used on a sapphire with s odd"""


class PreconditionViolation(SolSapphireError, ValueError):
    """Hypotheses of a Down solver are not met"""

    def __init__(self, failures: Sequence[str]):
        """
        Initialize with the failed hypotheses.

        Args:
            failures: Human readable description of each failed hypothesis
        """
        self.failures = tuple(failures)
        super().__init__("precondition violated: " + "; ".join(self.failures))
