"""
Braid words and the Seifert matrix of their closure, with the reduced Burau
representation as an independent check.

Surface model used for the Seifert matrix (Seifert's algorithm on a
closed braid diagram): the s Seifert circles bound stacked parallel
disks D_1, ..., D_s, all oriented with normal +z.  Letter k of the word
(sigma_i^{+-1}) is a half-twisted band at angle theta_k joining the rim of
D_i to the rim of D_{i+1}; angles increase with word position, which is
also the direction the strands travel.  A band for a positive crossing
twists so that its normal at mid-height points along the direction of
travel.

Generator x_{i,j} climbs the j-th band of index i and follows the straight
chord across D_{i+1} to the (j+1)-th band; it returns down that band and
back across D_i.
Such a loop bounds the vertical "curtain" chord x [i, i+1], so
lk(x, y^+) is the signed count of points where y^+ pierces x's curtain.
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import exactalg
from .errors import (EmptyWord, IndexOutOfRange, MissingGenerator, NotAKnot,
                     ParseError)
from .exactalg import IntMatrix
from .invariants import SeifertMatrix, validate
from .laurent import LaurentPoly, divide_exact, polynomial_from_samples


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...]

    def __str__(self):
        return f"strands={self.strands} " + " ".join(str(x) for x in self.letters)

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def stabilized(self) -> "BraidWord":
        """Positive Markov stabilization onto one extra strand."""
        return BraidWord(self.strands + 1, self.letters + (self.strands,))


def closure_permutation(strands: int, letters: Sequence[int]) -> List[int]:
    perm = list(range(strands))
    for x in letters:
        i = abs(x) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def count_components(strands: int, letters: Sequence[int]) -> int:
    perm = closure_permutation(strands, letters)
    seen = [False] * strands
    cycles = 0
    for start in range(strands):
        if not seen[start]:
            cycles += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
    return cycles


def make_braid(letters: Sequence[int], strands: Optional[int] = None) -> BraidWord:
    """Validate a letter sequence and wrap it as a BraidWord."""
    letters = tuple(int(x) for x in letters)
    if not letters:
        raise EmptyWord("braid word has no letters")
    if any(x == 0 for x in letters):
        raise ParseError("letter 0 is not a generator")
    top = max(abs(x) for x in letters)
    if strands is None:
        strands = top + 1
    if strands < 2:
        raise IndexOutOfRange(f"need at least 2 strands, got {strands}")
    if top > strands - 1:
        raise IndexOutOfRange(f"letter {top} needs more than {strands} strands")
    missing = sorted(set(range(1, strands)) - {abs(x) for x in letters})
    if missing:
        raise MissingGenerator(f"generators {missing} never occur; closure splits or destabilizes")
    comps = count_components(strands, letters)
    if comps != 1:
        raise NotAKnot(f"closure has {comps} components")
    return BraidWord(strands, letters)


_STRANDS = re.compile(r"^\s*strands\s*=\s*(\d+)\s*[:;,]?")


def parse_braid(text: str) -> BraidWord:
    """Parse e.g. ``"1 -2 1 -2"``, ``"1,1,1"`` or ``"strands=4: 1 2 3"``."""
    strands = None
    m = _STRANDS.match(text)
    if m:
        strands = int(m.group(1))
        text = text[m.end():]
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    try:
        letters = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"cannot parse braid word {text!r}") from None
    return make_braid(letters, strands)


@dataclass(frozen=True)
class Loop:
    """Generator x_{i,j}: column i, through bands at word positions a < b."""

    column: int
    a: int
    b: int


@dataclass(frozen=True)
class BandSurface:
    strands: int
    signs: Tuple[int, ...]       # sign of each band, by word position
    columns: Tuple[int, ...]     # index i of each band
    generators: Tuple[Loop, ...]


def band_surface(b: BraidWord) -> BandSurface:
    positions: Dict[int, List[int]] = {i: [] for i in range(1, b.strands)}
    for k, x in enumerate(b.letters):
        positions[abs(x)].append(k)
    gens = []
    for i in range(1, b.strands):
        occ = positions[i]
        gens.extend(Loop(i, p, q) for p, q in zip(occ, occ[1:]))
    return BandSurface(b.strands,
                       tuple(1 if x > 0 else -1 for x in b.letters),
                       tuple(abs(x) for x in b.letters),
                       tuple(gens))


def loop_linking(surface: BandSurface, x: Loop, y: Loop) -> int:
    """lk(x, y^+) for two generator loops of the band surface.

    Only three configurations pierce a curtain:

    * x = y: the loop is the core of an annulus with two half twists; the
      twists cancel for mixed signs and give a full twist otherwise, and
      the core of a positive full-twisted annulus has lk(c, c^+) = -1.
    * same column, sharing band k: going through band k the pushoff of
      one loop sweeps half a turn around the band core, on the side of
      the direction of travel when the band is positive.  Only that side
      contains the curtain of the later loop; so for a positive band the
      earlier loop's pushoff pierces the later curtain (+1), for a
      negative band the later loop's pushoff pierces the earlier curtain
      (-1).
    * adjacent columns whose chords cross on the shared disk D_{i+1}: the
      pushoff of the lower loop's top chord (height i+1+eps) pierces the
      upper loop's curtain once; the upper loop's pushoff stays above the
      lower curtain.  The sign is the crossing sign of the chords.
    """
    if x == y:
        s1, s2 = surface.signs[x.a], surface.signs[x.b]
        return -(s1 + s2) // 2
    if x.column == y.column:
        if x.b == y.a:                     # x earlier, shares band x.b
            return -1 if surface.signs[x.b] < 0 else 0
        if y.b == x.a:                     # y earlier, shares band x.a
            return 1 if surface.signs[x.a] > 0 else 0
        return 0
    if y.column == x.column + 1:
        # y upper: lk(y-curtain, x^+) is nonzero, lk(x-curtain, y^+) is 0
        return 0
    if x.column == y.column + 1:
        lower, upper = y, x
        if lower.a < upper.a < lower.b < upper.b:
            return -1
        if upper.a < lower.a < upper.b < lower.b:
            return 1
        return 0
    return 0


def seifert_matrix_from_braid(b: BraidWord) -> SeifertMatrix:
    """Seifert matrix V[a][c] = lk(x_a, x_c^+) of the braid's band surface."""
    surface = band_surface(b)
    gens = surface.generators
    v = [[loop_linking(surface, x, y) for y in gens] for x in gens]
    return validate(IntMatrix(v), name=str(b))


def _burau_generator(strands: int, letter: int) -> List[List[LaurentPoly]]:
    """Reduced Burau matrix of sigma_i^{+-1}, entries in Z[t, 1/t]."""
    m = strands - 1
    one, zero = LaurentPoly.constant(1), LaurentPoly()
    t, tinv = LaurentPoly.monomial(1), LaurentPoly.monomial(-1)
    mat = [[one if r == c else zero for c in range(m)] for r in range(m)]
    i = abs(letter) - 1                # 0-based generator index, block at rows i-1..i+1
    pos = letter > 0
    if m == 1:
        mat[0][0] = -t if pos else -tinv
        return mat
    if pos:
        mat[i][i] = -t
        if i > 0:
            mat[i - 1][i] = t
        if i < m - 1:
            mat[i + 1][i] = one
    else:
        mat[i][i] = -tinv
        if i > 0:
            mat[i - 1][i] = one
        if i < m - 1:
            mat[i + 1][i] = tinv
    return mat


def _matmul(a, b):
    n = len(a)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = LaurentPoly()
            for k in range(n):
                if not a[r][k].is_zero() and not b[k][c].is_zero():
                    acc = acc + a[r][k] * b[k][c]
            row.append(acc)
        out.append(row)
    return out


def burau_matrix(b: BraidWord) -> List[List[LaurentPoly]]:
    m = b.strands - 1
    acc = [[LaurentPoly.constant(int(r == c)) for c in range(m)] for r in range(m)]
    for x in b.letters:
        acc = _matmul(acc, _burau_generator(b.strands, x))
    return acc


def burau_alexander(b: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure from the reduced Burau matrix:
    det(rho(b) - I) = (1 + t + ... + t^{s-1}) * Delta(t) up to units."""
    rho = burau_matrix(b)
    m = b.strands - 1
    entries = [[rho[r][c] - int(r == c) for c in range(m)] for r in range(m)]
    nonzero = [e for row in entries for e in row if not e.is_zero()]
    lo = min(min(e.min_exp for e in nonzero), 0)
    hi = max(max(e.max_exp for e in nonzero), 0)
    shifted = [[e.shift(-lo) for e in row] for row in entries]

    def at(c: int) -> int:
        return exactalg.det([[int(e(c)) for e in row] for row in shifted])

    d = polynomial_from_samples(at, m * (hi - lo)).shift(lo * m)
    if d.is_zero():
        raise ArithmeticError("Burau determinant vanished for a knot closure")
    cyclo = LaurentPoly.from_coeffs([1] * b.strands)
    try:
        delta = divide_exact(d, cyclo)
    except ArithmeticError as exc:
        raise ArithmeticError(f"internal error: Burau determinant {d} not divisible "
                              f"by 1 + ... + t^{b.strands - 1}") from exc
    return delta.normalized()
