"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`EquicurveError`, so callers (and the CLI) can map failures to exit
codes without catching unrelated bugs.
"""

from __future__ import annotations


class EquicurveError(Exception):
    """Base class for all library errors."""


# algebra
class NotPrime(EquicurveError):
    pass


class BoundExceeded(EquicurveError):
    pass


class ZeroPolynomial(EquicurveError):
    pass


class NoSimpleRoot(EquicurveError):
    pass


class PrecisionExhausted(EquicurveError):
    pass


class FieldMismatch(EquicurveError):
    pass


# curve
class NotSmooth(EquicurveError):
    pass


class GenusTooSmall(EquicurveError):
    pass


class WrongCharacteristic(EquicurveError):
    pass


class ZeroFunction(EquicurveError):
    pass


class NeedsExtension(EquicurveError):
    """The requested object is not rational over the working field."""

    def __init__(self, message: str, degree: int):
        super().__init__(message)
        self.degree = degree


class InvalidAutomorphism(EquicurveError):
    pass


# ramification
class NotAGroup(EquicurveError):
    pass


class NotFaithful(EquicurveError):
    pass


class HurwitzInconsistent(EquicurveError):
    pass


class BadFiltration(EquicurveError):
    pass


class QuotientNotRational(EquicurveError):
    pass


class NotInvariant(EquicurveError):
    pass


# formulas and criteria
class HypothesisError(EquicurveError):
    """A theorem was invoked outside its hypotheses."""


class DegreeTooSmall(HypothesisError):
    pass


class HypothesisViolated(HypothesisError):
    pass


# goppa
class SupportOverlap(EquicurveError):
    pass


class NotStable(EquicurveError):
    pass


class NoCodewords(EquicurveError):
    pass
