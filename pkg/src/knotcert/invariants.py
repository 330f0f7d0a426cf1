"""
Seifert matrices, knot signature and the definiteness decision procedure.

A knot is definite when |sigma(K)| = 2 g(K), equivalently when it has a
Seifert surface whose symmetrized form V + V^T is definite.  Only the
presented surface is visible here, so the verdict is three-valued: a
presented surface that is not definite may still be non-minimal.
"""

from dataclasses import asdict, dataclass
from enum import Enum

from . import exactalg
from .errors import NotUnimodularIntersection, OddDimension
from .exactalg import Definiteness, IntMatrix, as_matrix
from .laurent import LaurentPoly, alexander_raw


@dataclass(frozen=True)
class SeifertMatrix:
    """Validated Seifert matrix of a knot.  Build with :func:`validate`."""

    v: IntMatrix
    name: str = ""

    @property
    def dim(self) -> int:
        return self.v.n


def validate(v, name: str = "") -> SeifertMatrix:
    if isinstance(v, SeifertMatrix):
        return v
    v = as_matrix(v)
    where = f"{name}: " if name else ""
    if v.n % 2:
        raise OddDimension(f"{where}Seifert matrix of a knot has even dimension, got {v.n}")
    d = exactalg.det(v - v.T)
    if abs(d) != 1:
        raise NotUnimodularIntersection(f"{where}det(V - V^T) = {d}, expected +-1")
    return SeifertMatrix(v, name)


def symmetrize(s) -> IntMatrix:
    s = validate(s)
    return s.v + s.v.T


def signature(s) -> int:
    return exactalg.inertia(symmetrize(s)).signature


def surface_genus(s) -> int:
    return validate(s).dim // 2


def alexander(s) -> LaurentPoly:
    return alexander_raw(validate(s).v).normalized()


class Verdict(str, Enum):
    DEFINITE = "Definite"
    NOT_DEFINITE = "NotDefinite"
    UNKNOWN = "Unknown"


class Sign(str, Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    NOT_APPLICABLE = "NotApplicable"


class Reason(str, Enum):
    DEFINITE_FORM = "DefiniteSymmetrizedForm"
    WIDTH_SIGMA_MISMATCH = "WidthSigmaMismatch"
    SIGMA_DEFICIT = "SigmaDeficitOnMinimalSurface"
    POSSIBLY_NON_MINIMAL = "PossiblyNonMinimalSurface"


@dataclass(frozen=True)
class DefinitenessCertificate:
    verdict: Verdict
    sign: Sign
    sigma: int
    width: int
    surface_genus: int
    minimal_genus_established: bool
    reason: Reason

    def to_dict(self) -> dict:
        d = asdict(self)
        for k in ("verdict", "sign", "reason"):
            d[k] = d[k].value
        return d


def certify_definite(s, minimal_genus_asserted: bool = False) -> DefinitenessCertificate:
    """Decide definiteness of the knot presented by ``s`` as far as possible.

    (a) |sigma| = n: the presented form is definite, hence minimal.
    (b) width != |sigma|: a definite knot has width = |sigma|, so not definite.
        With width = n the surface is known to be minimal genus.
    (c) width = |sigma| < n on a surface the caller asserts is minimal:
        every minimal surface of a definite knot is definite, so not definite.
    (d) otherwise undecided.
    """
    s = validate(s)
    n = s.dim
    sigma = signature(s)
    width = alexander(s).width
    genus = n // 2
    if abs(sigma) == n:
        sign = Sign.NOT_APPLICABLE if sigma == 0 else (Sign.POSITIVE if sigma > 0 else Sign.NEGATIVE)
        return DefinitenessCertificate(Verdict.DEFINITE, sign, sigma, width, genus,
                                       True, Reason.DEFINITE_FORM)
    if width != abs(sigma):
        return DefinitenessCertificate(Verdict.NOT_DEFINITE, Sign.NOT_APPLICABLE, sigma, width,
                                       genus, width == n, Reason.WIDTH_SIGMA_MISMATCH)
    if minimal_genus_asserted:
        return DefinitenessCertificate(Verdict.NOT_DEFINITE, Sign.NOT_APPLICABLE, sigma, width,
                                       genus, False, Reason.SIGMA_DEFICIT)
    return DefinitenessCertificate(Verdict.UNKNOWN, Sign.NOT_APPLICABLE, sigma, width, genus,
                                   False, Reason.POSSIBLY_NON_MINIMAL)


def form_is_definite(s) -> bool:
    """True when V + V^T is positive or negative definite."""
    return exactalg.is_definite(symmetrize(s)) in (Definiteness.POSITIVE, Definiteness.NEGATIVE)
