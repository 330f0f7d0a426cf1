"""
Integer Laurent polynomials in one variable t, and the Alexander
polynomial of a Seifert matrix.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

from . import exactalg
from .exactalg import as_matrix


class LaurentPoly:
    """Sparse integer Laurent polynomial; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: Dict[int, int] = {}
        for e, a in items:
            if int(a) != a or int(e) != e:
                raise ValueError(f"non-integer term {a}*t^{e}")
            c[int(e)] = c.get(int(e), 0) + int(a)
        self._c = {e: a for e, a in sorted(c.items()) if a != 0}

    @classmethod
    def constant(cls, a: int) -> "LaurentPoly":
        return cls({0: a})

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> "LaurentPoly":
        return cls({e: a})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], shift: int = 0) -> "LaurentPoly":
        """Build from a dense ascending coefficient list starting at t^shift."""
        return cls({i + shift: a for i, a in enumerate(coeffs)})

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        return next(iter(self._c))

    @property
    def max_exp(self) -> int:
        return next(reversed(self._c))

    @property
    def width(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no width")
        return self.max_exp - self.min_exp

    def leading(self) -> int:
        return self._c[self.max_exp]

    def trailing(self) -> int:
        return self._c[self.min_exp]

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def terms(self) -> List[Tuple[int, int]]:
        return list(self._c.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __add__(self, other):
        other = _lift(other)
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        return poly_mul(self, _lift(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            # units of Z[t, 1/t] are +-t^e
            if len(self._c) != 1 or abs(self.leading()) != 1:
                raise ValueError("negative powers are only defined for units")
            (e, a), = self._c.items()
            return LaurentPoly.monomial(e * k, a if k % 2 else 1)
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def __call__(self, x):
        """Evaluate at a nonzero number (or at 0 when no negative powers)."""
        x = Fraction(x)
        return sum((a * x ** e for e, a in self._c.items()), Fraction(0))

    def reciprocal(self) -> "LaurentPoly":
        """P(t^-1)."""
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def is_symmetric(self) -> bool:
        return self == self.reciprocal()

    def normalized(self) -> "LaurentPoly":
        """Symmetric representative P(t) = P(1/t) with P(1) = +1.

        Raises ValueError when no unit multiple +-t^k has that form.
        """
        if not self._c:
            raise ValueError("cannot normalize the zero polynomial")
        lo, hi = self.min_exp, self.max_exp
        if (lo + hi) % 2:
            raise ValueError(f"{self} has no symmetric unit multiple")
        p = self.shift(-(lo + hi) // 2)
        if not p.is_symmetric():
            raise ValueError(f"{self} has no symmetric unit multiple")
        v = p(1)
        if v == 0:
            raise ValueError(f"{self} vanishes at t = 1")
        return -p if v < 0 else p

    def equal_up_to_unit(self, other: "LaurentPoly") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        k = self.min_exp - other.min_exp
        return self == other.shift(k) or self == -other.shift(k)

    def to_pairs(self) -> List[List[int]]:
        return [[e, a] for e, a in self._c.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls((e, a) for e, a in pairs)

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in self._c.items():
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _lift(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


T = LaurentPoly.monomial(1)


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact convolution product."""
    out: Dict[int, int] = {}
    for e1, c1 in a._c.items():
        for e2, c2 in b._c.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return LaurentPoly(out)


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient num / den in Z[t, 1/t]; ArithmeticError unless it divides."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return num
    rem = num
    quot: Dict[int, int] = {}
    lead_e, lead_c = den.max_exp, den.leading()
    lowest = num.min_exp - den.min_exp
    while not rem.is_zero():
        e = rem.max_exp - lead_e
        q, r = divmod(rem.leading(), lead_c)
        if r or e < lowest:
            raise ArithmeticError(f"{den} does not divide {num}")
        quot[e] = q
        rem = rem - den.shift(e) * q
    return LaurentPoly(quot)


def sample_points(count: int) -> List[int]:
    """0, 1, -1, 2, -2, ... (the first ``count`` of them)."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]


def interpolate(xs: Sequence[int], ys: Sequence) -> List[Fraction]:
    """Ascending coefficients of the unique polynomial of degree < len(xs)
    through the points, by Newton divided differences over Q."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * n
    # Horner on the Newton form, highest node first
    for k in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[k] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[k]
    return coeffs


def polynomial_from_samples(f: Callable[[int], int], degree: int) -> LaurentPoly:
    """Recover an integer polynomial of known degree bound from values at
    integer sample points."""
    xs = sample_points(degree + 1)
    coeffs = interpolate(xs, [f(x) for x in xs])
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError(f"interpolated coefficients not integral: {coeffs}")
    return LaurentPoly.from_coeffs([int(c) for c in coeffs])


def alexander_raw(v) -> LaurentPoly:
    """A(t) = det(V^T - t V) as an ordinary polynomial of degree <= n."""
    v = as_matrix(v)
    vt = v.T

    def at(c: int) -> int:
        return exactalg.det(vt - v.scale(c))

    return polynomial_from_samples(at, v.n)


def alexander_polynomial(v) -> LaurentPoly:
    """Symmetric Alexander polynomial with value +1 at t = 1."""
    from .invariants import validate

    s = validate(v)
    raw = alexander_raw(s.v)
    return raw.normalized()


def alexander_width(v) -> int:
    return alexander_polynomial(v).width
