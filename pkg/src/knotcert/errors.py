"""Exception hierarchy shared by all modules."""


class KnotCertError(Exception):
    """Base class for every error raised by this package."""


class NotSymmetric(KnotCertError, ValueError):
    pass


class NotSquare(KnotCertError, ValueError):
    pass


class InvalidSeifertMatrix(KnotCertError, ValueError):
    """The matrix cannot be the Seifert matrix of a knot."""


class OddDimension(InvalidSeifertMatrix):
    pass


class NotUnimodularIntersection(InvalidSeifertMatrix):
    """|det(V - V^T)| != 1."""


class BraidError(KnotCertError, ValueError):
    pass


class ParseError(BraidError):
    pass


class EmptyWord(BraidError):
    pass


class IndexOutOfRange(BraidError):
    pass


class MissingGenerator(BraidError):
    pass


class NotAKnot(BraidError):
    """The braid closure has more than one component."""


class BadPeriod(KnotCertError, ValueError):
    pass


class CurveError(KnotCertError, ValueError):
    pass


class CurveMeetsAxis(CurveError):
    pass


class CurvesIntersect(CurveError):
    pass


class NoConvergence(CurveError):
    pass


class RecordError(KnotCertError, ValueError):
    """A batch input record is malformed."""
