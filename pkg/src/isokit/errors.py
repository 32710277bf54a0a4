"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes):
:class:`ValidationError` for malformed input, :class:`MathError` for
well-formed input on which the requested computation has no answer.
"""


class IsokitError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(IsokitError, ValueError):
    pass


class MathError(IsokitError, ArithmeticError):
    pass


# field
class CompositeModulus(ValidationError):
    pass


class ReducibleModulus(ValidationError):
    pass


class DegreeMismatch(ValidationError):
    pass


class SpecMismatch(ValidationError):
    pass


class BadCharacteristic(ValidationError):
    pass


class DivisionByZero(MathError, ZeroDivisionError):
    pass


# poly / series
class NonInvertibleIndex(MathError):
    pass


class NotAPerfectSquare(MathError):
    pass


class ZeroConstantTerm(MathError):
    pass


class ConstantTermNotOne(MathError):
    pass


class NonZeroConstantTerm(MathError):
    pass


class SingularLeadingCoefficient(MathError):
    pass


class ZeroInitialDerivative(MathError):
    pass


class CharacteristicTooSmall(MathError):
    pass


class ZeroLeadingCoefficient(MathError):
    pass


class PrecisionExhausted(MathError):
    pass


# curve
class SingularCurve(ValidationError):
    pass


class CurveMismatch(ValidationError):
    pass


class PointNotOnCurve(ValidationError):
    pass


class NotShortForm(ValidationError):
    pass


class CharacteristicDividesM(MathError):
    pass


class FieldTooLarge(ValidationError):
    pass


# isogeny
class NotASubgroup(ValidationError):
    pass


class SingularCodomain(MathError):
    pass


class UnsupportedKernelShape(ValidationError):
    pass


class InconsistentDegree(ValidationError):
    pass


class InconsistentMaps(MathError):
    pass


class InseparableMaps(ValidationError):
    pass


class ModelMismatch(ValidationError):
    pass


# recover
class DegreeTooLargeForCharacteristic(MathError):
    pass


class NoIsogenyFound(MathError):
    pass


class TorsionNotFound(MathError):
    pass


class NonPrimeEll(ValidationError):
    pass


class NoMatchingAutomorphism(MathError):
    pass


# serialization / cli
class ParseError(ValidationError):
    pass
