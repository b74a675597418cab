"""Exception vocabulary shared across the package."""
from __future__ import annotations


class SetCodeError(Exception):
    """Base class for every domain error raised by this package."""


class LengthMismatch(SetCodeError):
    """Two words that must have equal length do not."""


class DimensionMismatch(SetCodeError):
    """Matrix and vector shapes do not line up."""


class CapExceeded(SetCodeError):
    """An enumeration would materialize more than 2**cap words."""


class DivideByZero(SetCodeError):
    """Polynomial division by the zero polynomial."""


class ParityViolation(SetCodeError):
    """A stored word fails the parity check attached to its class."""


class DuplicateLength(SetCodeError):
    """A set code may hold at most one class per word length."""


class MissingParityCheck(SetCodeError):
    """The requested classification needs an explicit parity check."""


class NotStandardForm(SetCodeError):
    """Parity check is not in (A | I) form."""


class NotADivisor(SetCodeError):
    """Generator polynomial does not divide x**n + 1."""


class NoSuchLength(SetCodeError):
    """No class of the requested length exists."""


class NoParityCheck(SetCodeError):
    """Syndrome requested for a class that carries no parity check."""


class TieUnresolvable(SetCodeError):
    """Nearest neighbour tie with no message length to break it."""


class NotLinear(SetCodeError):
    """Operation requires words closed under addition and containing zero."""


class EmptyBasis(SetCodeError):
    """Operation requires at least one basis word."""


class PatternMismatch(SetCodeError):
    """Two n-words disagree in arity or in which parts are present."""


class ArityMismatch(SetCodeError):
    """Operation requires exactly two components with matching class counts."""


class NotACodeword(SetCodeError):
    """Payload word is not a codeword of the target component."""


class KeyOutOfRange(SetCodeError):
    """Carrier indices must be nonempty, strictly increasing and within 1..n."""
