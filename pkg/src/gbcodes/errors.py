"""Exception types shared across the package.

Every contract violation gets a named class so callers (and the CLI)
can map failures to machine-readable error objects.  ``Falsification``
is special: it means a verified mathematical invariant failed, which is
reported loudly and turns into exit code 2.
"""

from __future__ import annotations


class GBCodesError(Exception):
    """Base class for all package errors."""


# -- field construction / arithmetic ----------------------------------------

class NotPrime(GBCodesError, ValueError):
    pass


class FieldTooLarge(GBCodesError, ValueError):
    pass


class ReducibleModulus(GBCodesError, ValueError):
    pass


class NoPrimitiveElement(GBCodesError, RuntimeError):
    """Impossible for valid input; indicates an internal bug."""


class DivisionByZero(GBCodesError, ZeroDivisionError):
    pass


class ZeroHasNoLog(GBCodesError, ValueError):
    pass


class MixedFields(GBCodesError, ValueError):
    pass


# -- codes -------------------------------------------------------------------

class DependentRows(GBCodesError, ValueError):
    def __init__(self, message, rank):
        super().__init__(message)
        self.rank = rank


class EmptyCode(GBCodesError, ValueError):
    pass


class TooLarge(GBCodesError, ValueError):
    pass


class BadIndex(GBCodesError, ValueError):
    pass


class ZeroInput(GBCodesError, ValueError):
    pass


class LengthMismatch(GBCodesError, ValueError):
    pass


# -- monomials / orders --------------------------------------------------------

class NotInImage(GBCodesError, ValueError):
    pass


# -- Groebner -----------------------------------------------------------------

class FrontierOverflow(GBCodesError, MemoryError):
    pass


class ShapeViolation(GBCodesError, RuntimeError):
    """A reduced-basis element violated the expected binomial shape."""


class RxElement(GBCodesError, ValueError):
    pass


# -- d2 / test sets -------------------------------------------------------------

class NotMinimalSupport(GBCodesError, ValueError):
    pass


class DimensionTooSmall(GBCodesError, ValueError):
    pass


class HypothesisNotMet(GBCodesError, ValueError):
    """A theorem checker was invoked where its hypothesis fails ("silent")."""


# -- betti ----------------------------------------------------------------------

class TooFewGenerators(GBCodesError, ValueError):
    pass


# -- counterexample construction --------------------------------------------------

class HypothesisFailed(GBCodesError, RuntimeError):
    """A seed code failed invariants it is expected to satisfy."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class OrderNotCompatible(GBCodesError, ValueError):
    pass


class TruncationOutOfRange(GBCodesError, ValueError):
    pass


# -- falsification harness ---------------------------------------------------------

class Falsification(GBCodesError, RuntimeError):
    """A proven statement failed on a concrete instance.

    Carries a serializable witness bundle; the CLI turns this into exit
    code 2 with the bundle attached to the report.
    """

    def __init__(self, claim, witness=None):
        super().__init__(claim)
        self.claim = claim
        self.witness = witness or {}
