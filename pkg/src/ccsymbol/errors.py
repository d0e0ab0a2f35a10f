"""Exception hierarchy shared by every ccsymbol module."""


class CCError(Exception):
    """Base class for all library errors."""


class UnsupportedRing(CCError, ValueError):
    pass


class RingMismatch(CCError, TypeError):
    pass


class NotAUnit(CCError, ArithmeticError):
    pass


class NotQAlgebra(CCError, ArithmeticError):
    pass


class NoCanonicalHom(CCError, ValueError):
    pass


class NotAField(CCError, ValueError):
    pass


class TruncationTooCoarse(CCError, ArithmeticError):
    """A coefficient was requested outside the window where it is known."""


class NotAUnitSeries(CCError, ArithmeticError):
    pass


class ZeroWindingComposition(CCError, ValueError):
    pass


class CoefficientNotNilpotent(CCError, ValueError):
    pass


class NotInGamma0(CCError, ValueError):
    pass


class NotInGammaPlus(CCError, ValueError):
    pass


class NotInGammaMinus(CCError, ValueError):
    pass


class NotOnePlusNilpotent(CCError, ValueError):
    pass


class NonTermination(CCError, RuntimeError):
    """Internal invariant violation: an iteration that must stop did not."""


class ParseError(CCError, ValueError):
    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SymbolNotInRing(CCError, ValueError):
    pass
