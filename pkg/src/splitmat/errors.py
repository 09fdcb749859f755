"""Exception types raised by splitmat."""


class MatroidError(ValueError):
    """Base class for every error raised on bad matroid input."""


class EmptyBasisList(MatroidError):
    pass


class MixedBasisSizes(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    """The basis family fails the exchange axiom.

    ``pair`` holds the offending bases ``(B1, B2)`` as masks and ``element``
    the element of ``B1 - B2`` for which no replacement exists.
    """

    def __init__(self, message, pair=None, element=None, block=None):
        super().__init__(message)
        self.pair = pair
        self.element = element
        self.block = block


class ElementOutOfRange(MatroidError):
    pass


class GroundSetTooLarge(MatroidError):
    pass


class EmptyGroundSet(MatroidError):
    pass


class NotConnected(MatroidError):
    pass


class NotAFlat(MatroidError):
    pass


class UnknownName(MatroidError):
    pass


class ParseError(MatroidError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
