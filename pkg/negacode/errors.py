"""
errors.py
=========

Exception hierarchy for negacode.

Input problems derive from ``ValueError`` (via :class:`InvalidInput`), search
limits and broken internal identities from ``RuntimeError``.
"""


class NegacodeError(Exception):
    """Base class for every error raised by negacode."""


class InvalidInput(NegacodeError, ValueError):
    """A precondition on caller-supplied parameters does not hold."""


class DivisionByZero(NegacodeError, ZeroDivisionError):
    """Inverse or division by the zero element (or zero polynomial)."""


class BudgetExceeded(NegacodeError, RuntimeError):
    """An enumeration or search would exceed its configured budget."""


class InternalInconsistency(NegacodeError, RuntimeError):
    """An identity that holds for every valid input was violated."""


# Fields
class NotPrime(InvalidInput):
    pass


class EvenCharacteristic(InvalidInput):
    pass


class InvalidDegree(InvalidInput):
    pass


class FieldTooLarge(InvalidInput):
    pass


class FieldMismatch(InvalidInput):
    pass


# Polynomials
class ZeroConstantTerm(InvalidInput):
    pass


class NotOddResidue(InvalidInput):
    pass


class NotOddResidues(InvalidInput):
    pass


class GcdViolation(InvalidInput):
    pass


class CoefficientNotInBaseField(InternalInconsistency):
    pass


# Cosets
class NotCoprime(InvalidInput):
    pass


class OutOfRange(InvalidInput):
    pass


class NotALeader(InvalidInput):
    pass


class OutOfLemmaRange(InvalidInput):
    pass


# Codes
class NotADivisor(InvalidInput):
    pass


class NotMonic(InvalidInput):
    pass


class NotClosedUnderQ(InvalidInput):
    pass


class ZeroCode(InvalidInput):
    pass


class FullCode(InvalidInput):
    pass


class InconsistentCriteria(InternalInconsistency):
    pass


# BCH and MDS families
class HypothesisViolated(InvalidInput):
    pass


class EvenStart(InvalidInput):
    pass


class DeltaTooSmall(InvalidInput):
    pass


class NotApplicable(InvalidInput):
    pass


class FormulaMismatch(InternalInconsistency):
    pass
