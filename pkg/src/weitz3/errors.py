"""Exception types shared across the library."""


class Weitz3Error(Exception):
    """Base class for every error raised by this package."""


class RingMismatch(Weitz3Error):
    """Arithmetic attempted between polynomials over different rings."""


class ZeroPolynomial(Weitz3Error):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class PolySyntaxError(Weitz3Error):
    """Malformed polynomial text.  ``position`` is the 0-based offset of the
    offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SubscriptOutOfRange(Weitz3Error):
    """A variable subscript lies outside the ring's triple count."""


class WrongRingKind(Weitz3Error):
    """Operation requires a base ring where a polarized one was given, or
    vice versa."""


class NotNilpotent(Weitz3Error):
    """The matrix handed to the Jordan-type oracle is not nilpotent."""


class LengthMismatch(Weitz3Error):
    """A step word and its subscript block have different lengths."""


class BadIndices(Weitz3Error):
    """An index sequence violates the ordering or range required of it."""


class NotAPathMonomial(Weitz3Error):
    """The monomial's step word is not a valid path word."""


class NotHomogeneous(Weitz3Error):
    """Polarization requires a homogeneous input of the stated degree."""


class NotMultilinear(Weitz3Error):
    """Restitution and reduction require a multilinear input."""


class NotAConstant(Weitz3Error):
    """The input is not annihilated by the derivation.  ``witness`` holds a
    nonzero term of its image as a polynomial."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InternalInvariantViolation(Weitz3Error):
    """A state that theory rules out was reached; indicates a bug."""
