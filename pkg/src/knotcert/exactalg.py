"""
Exact integer linear algebra.

Everything here works over Python ints and ``fractions.Fraction``; no
floating point is used anywhere.  The inertia of a symmetric matrix is
found by congruence diagonalization, so it is exact and, by Sylvester's
law of inertia, independent of the pivots chosen along the way.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotSquare, NotSymmetric


class IntMatrix:
    """Immutable square matrix with arbitrary-precision integer entries.

    The 0x0 matrix is legal; it presents the unknot.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = ()):
        if isinstance(rows, IntMatrix):
            self._rows = rows._rows
            return
        out = []
        for row in rows:
            r = []
            for x in row:
                if isinstance(x, bool) or int(x) != x:
                    raise TypeError(f"non-integer entry {x!r}")
                r.append(int(x))
            out.append(tuple(r))
        n = len(out)
        if any(len(r) != n for r in out):
            raise NotSquare(f"matrix is not square: {n} rows of lengths {[len(r) for r in out]}")
        self._rows = tuple(out)

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __len__(self):
        return self.n

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})"

    def tolist(self) -> list:
        return [list(r) for r in self._rows]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows)) if self.n else self

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        _check_same(self, other)
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        _check_same(self, other)
        return IntMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self, other)])

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self])

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * a for a in r] for r in self])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        _check_same(self, other)
        cols = list(zip(*other._rows))
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self])

    def is_symmetric(self) -> bool:
        return all(self._rows[i][j] == self._rows[j][i]
                   for i in range(self.n) for j in range(i))


def _check_same(a, b):
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")


def as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix(m)


def det(m) -> int:
    """Determinant by fraction-free Bareiss elimination.

    >>> det([[2, 1], [1, 2]])
    3
    """
    m = as_matrix(m)
    n = m.n
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def det_rational(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a rational matrix by Gaussian elimination over Q."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        akk = a[k][k]
        result *= akk
        for i in range(k + 1, n):
            f = a[i][k] / akk
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return result


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(self.n_plus + other.n_plus,
                       self.n_zero + other.n_zero,
                       self.n_minus + other.n_minus)

    def astuple(self):
        return (self.n_plus, self.n_zero, self.n_minus)


def inertia(s) -> Inertia:
    """Inertia (n+, n0, n-) of a symmetric integer matrix.

    Congruence diagonalization over Q.  Pivot on the first nonzero
    diagonal entry; if the whole remaining diagonal vanishes but some
    off-diagonal a = s[i][j] does not, split off the 2x2 block
    [[0, a], [a, 0]] (eigenvalues +-a) and continue with its Schur
    complement.
    """
    s = as_matrix(s)
    if not s.is_symmetric():
        raise NotSymmetric("inertia needs a symmetric matrix")
    a = [[Fraction(x) for x in r] for r in s]
    plus = zero = minus = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is not None:
            d = a[k][k]
            if d > 0:
                plus += 1
            else:
                minus += 1
            rest = [i for i in range(n) if i != k]
            a = [[a[i][j] - a[i][k] * a[k][j] / d for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            zero += n
            break
        i0, j0 = pair
        plus += 1
        minus += 1
        # inverse of [[0, h], [h, 0]] is [[0, 1/h], [1/h, 0]]
        h = a[i0][j0]
        rest = [i for i in range(n) if i not in pair]
        a = [[a[i][j] - (a[i][i0] * a[j0][j] + a[i][j0] * a[i0][j]) / h for j in rest]
             for i in rest]
    return Inertia(plus, zero, minus)


class Definiteness(str, Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    INDEFINITE = "Indefinite"
    DEGENERATE = "Degenerate"


def is_definite(s) -> Definiteness:
    """Classify a symmetric form.  The empty form counts as Positive."""
    inr = inertia(s)
    n = inr.dim
    if inr.n_plus == n:
        return Definiteness.POSITIVE
    if inr.n_minus == n:
        return Definiteness.NEGATIVE
    if inr.n_zero > 0:
        return Definiteness.DEGENERATE
    return Definiteness.INDEFINITE


classify_form = is_definite


def direct_sum(ms: Iterable) -> IntMatrix:
    """Block-diagonal matrix with the given square summands."""
    blocks = [as_matrix(m) for m in ms]
    n = sum(b.n for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[off + i][off:off + b.n] = row
        off += b.n
    return IntMatrix(out)
