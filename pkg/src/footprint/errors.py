"""Exception hierarchy shared by every module of the package."""


class FootprintError(ValueError):
    """Base class for invalid input or unmet preconditions."""


class InvalidFieldSpec(FootprintError):
    pass


class FieldTooLarge(FootprintError):
    pass


class MixedFields(FootprintError):
    pass


class DivisionByZero(FootprintError, ZeroDivisionError):
    pass


class InvalidSubfield(FootprintError):
    pass


class ParseError(FootprintError):
    """Raised on malformed text input; carries the offending position."""

    def __init__(self, message, text="", position=None):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(self.render())

    def render(self):
        if self.position is None or not self.text:
            return self.message
        return f"{self.message} at position {self.position}\n  {self.text}\n  {' ' * self.position}^"


class DimensionMismatch(FootprintError):
    pass


class ContextMismatch(FootprintError):
    pass


class ZeroPolynomial(FootprintError):
    pass


class ZeroDivisor(FootprintError):
    pass


class EmptyList(FootprintError):
    pass


class IndexOutOfRange(FootprintError):
    pass


class GridTooLarge(FootprintError):
    pass


class ExponentTooLarge(FootprintError):
    pass


class NotASubset(FootprintError):
    pass


class EmptyFactor(FootprintError):
    pass


class LeadingDegreeTooLarge(FootprintError):
    pass


class HasLinearFactor(FootprintError):
    pass


class ConstantPolynomial(FootprintError):
    pass


class NotFullGrid(FootprintError):
    pass


class IrreducibilityUnverified(FootprintError):
    pass


class NotSquareGrid(FootprintError):
    pass


class DegreeTooLarge(FootprintError):
    pass


class ZeroConstant(FootprintError):
    pass


class DegenerateCase(FootprintError):
    pass


class SearchInfeasible(FootprintError):
    pass


class UnknownSuite(FootprintError):
    pass


class TheoremViolation(AssertionError):
    """A proven statement failed on concrete data. Always a bug."""
