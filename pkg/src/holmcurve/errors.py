"""Exception taxonomy shared across the package.

The CLI maps these onto process exit codes: validation problems are exit 1,
contradiction findings exit 2, internal consistency failures exit 3.
"""


class HolmCurveError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(HolmCurveError, ValueError):
    """Input violates a documented precondition (bad parameters, off-curve
    point, out-of-range index)."""


class CapacityError(HolmCurveError, RuntimeError):
    """A bounded algorithm (trial-division factorization) hit its configured
    ceiling.  Raised instead of silently truncating."""


class ContradictionError(HolmCurveError, ArithmeticError):
    """A computation produced an object that the torsion-freeness theorem
    rules out for curves derived from valid Holm parameters, e.g. a rational
    point with y = 0, or a lemma verdict of VIOLATED escalated by a caller."""


class ConsistencyError(HolmCurveError, ArithmeticError):
    """An internal cross-check failed (inexact ring division, mismatched
    dual-route results).  Indicates an implementation bug, not bad input."""


class TorsionDenominatorError(HolmCurveError, ArithmeticError):
    """The division-polynomial denominator vanished at the given point: the
    point is n-torsion and the quotient n(x, y) cannot be formed."""
