"""Exception hierarchy. Every error raised by the library derives from ISCError."""


class ISCError(ValueError):
    pass


class NonPositiveParameter(ISCError):
    pass


class ParityViolation(ISCError):
    pass


class OrderViolation(ISCError):
    pass


class InexactDivision(ArithmeticError, ISCError):
    """A closed-form numerator was not divisible by its stated denominator."""


class ZeroDenominator(ZeroDivisionError, ISCError):
    pass


class NotTwoComponents(ISCError):
    """Removing an edge class left a number of components other than two."""


class UnreachableVertex(ISCError):
    pass


class OrderTooSmall(ISCError):
    pass
