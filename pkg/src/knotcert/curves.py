"""
Closed curves in cylindrical coordinates around the rotation axis, their
preimages in the p-fold cyclic cover branched along the axis, and
certified linking numbers.

A curve is a closed vertex list (r, theta, z) with theta measured in
turns; edges interpolate linearly in (r, theta, z), so one edge may wind
around the axis.  The last vertex repeats the first with theta shifted by
the winding number w.  The cover map is q_p(r, theta, z) = (r, p*theta, z).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, pi
from typing import List, Tuple, Union

import numpy as np
from scipy.spatial import cKDTree

from .errors import BadPeriod, CurveError, CurveMeetsAxis, CurvesIntersect, NoConvergence

Vertex = Tuple[Fraction, Fraction, Fraction]

START_SEGMENTS = 16
MAX_SEGMENTS = 2 ** 14


def _rational(x) -> Fraction:
    if isinstance(x, bool):
        raise CurveError(f"not a rational number: {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise CurveError(f"not a rational number: {x!r}") from None
    if isinstance(x, float):
        return Fraction(repr(x))
    raise CurveError(f"not a rational number: {x!r}")


def _fmt(q: Fraction) -> Union[int, str]:
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class CylindricalCurve:
    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        vs = tuple(tuple(_rational(c) for c in v) for v in self.vertices)
        if len(vs) < 3:
            raise CurveError("a closed curve needs at least two edges")
        if any(len(v) != 3 for v in vs):
            raise CurveError("vertices are (r, theta, z) triples")
        first, last = vs[0], vs[-1]
        shift = last[1] - first[1]
        if first[0] != last[0] or first[2] != last[2] or shift.denominator != 1:
            raise CurveError("last vertex must repeat the first up to whole turns of theta")
        if any(v[0] <= 0 for v in vs):
            raise CurveMeetsAxis("curve touches the rotation axis (r <= 0)")
        object.__setattr__(self, "vertices", vs)

    @classmethod
    def from_json(cls, obj) -> "CylindricalCurve":
        if not isinstance(obj, dict) or "vertices" not in obj:
            raise CurveError('curve JSON must look like {"vertices": [[r, theta, z], ...]}')
        return cls(tuple(tuple(v) for v in obj["vertices"]))

    def to_json(self) -> dict:
        return {"vertices": [[_fmt(c) for c in v] for v in self.vertices]}

    @property
    def winding(self) -> int:
        return int(self.vertices[-1][1] - self.vertices[0][1])

    def rotated(self, turns: Fraction) -> "CylindricalCurve":
        return CylindricalCurve(tuple((r, th + turns, z) for r, th, z in self.vertices))

    def pushed_off(self, offset: Fraction) -> "CylindricalCurve":
        """Radially outward parallel copy."""
        return CylindricalCurve(tuple((r + offset, th, z) for r, th, z in self.vertices))

    def feature_size(self) -> float:
        """Smallest of the vertex radii and the edge lengths in (r, z)-plus-arc measure."""
        sizes = [float(v[0]) for v in self.vertices]
        for (r0, t0, z0), (r1, t1, z1) in zip(self.vertices, self.vertices[1:]):
            arc = 2 * pi * float(min(r0, r1)) * abs(float(t1 - t0))
            length = float(np.hypot(np.hypot(float(r1 - r0), float(z1 - z0)), arc))
            if length > 0:
                sizes.append(length)
        return min(sizes)


def self_pushoff(c: CylindricalCurve) -> CylindricalCurve:
    """Pushoff by 1/1000 of the curve's feature size, framed radially outward."""
    return c.pushed_off(Fraction(c.feature_size() / 1000).limit_denominator(10 ** 12))


def lift_curve(c: CylindricalCurve, p: int) -> Tuple[CylindricalCurve, ...]:
    """Preimage of ``c`` under q_p: gcd(w, p) components, the k-th rotated
    by k/p of a turn, each running p/gcd(w, p) times along the base."""
    if p < 2:
        raise BadPeriod(f"period must be >= 2, got {p}")
    if any(v[0] <= 0 for v in c.vertices):
        raise CurveMeetsAxis("cannot lift a curve that meets the axis")
    w = c.winding
    g = gcd(w, p)
    laps = p // g
    base = c.vertices
    path: List[Vertex] = [base[0]]
    for j in range(laps):
        path.extend((r, th + j * w, z) for r, th, z in base[1:])
    lifted = tuple((r, th / p, z) for r, th, z in path)
    first = CylindricalCurve(lifted)
    return tuple(first.rotated(Fraction(k, p)) for k in range(g))


def push_down(c: CylindricalCurve, p: int) -> CylindricalCurve:
    """Apply q_p to every vertex."""
    return CylindricalCurve(tuple((r, th * p, z) for r, th, z in c.vertices))


@dataclass
class Polygon:
    points: np.ndarray      # (M + 1, 3), closed
    error: float            # max distance from the smooth curve


def polygonalize(c: CylindricalCurve, per_edge: int) -> Polygon:
    pts = []
    err = 0.0
    s = np.arange(per_edge) / per_edge
    for (r0, t0, z0), (r1, t1, z1) in zip(c.vertices, c.vertices[1:]):
        r0, t0, z0, r1, t1, z1 = map(float, (r0, t0, z0, r1, t1, z1))
        r = r0 + (r1 - r0) * s
        th = 2 * pi * (t0 + (t1 - t0) * s)
        z = z0 + (z1 - z0) * s
        pts.append(np.column_stack([r * np.cos(th), r * np.sin(th), z]))
        dth = 2 * pi * abs(t1 - t0)
        curvature = 2 * abs(r1 - r0) * dth + max(r0, r1) * dth ** 2
        err = max(err, curvature / (8 * per_edge ** 2))
    pts.append(pts[0][:1])
    return Polygon(np.vstack(pts), err)


def _segment_distance(p0, p1, q0, q1) -> np.ndarray:
    """Exact minimum distance between paired 3D segments (vectorized)."""
    d1 = p1 - p0
    d2 = q1 - q0
    r = p0 - q0
    a = np.einsum("ij,ij->i", d1, d1)
    e = np.einsum("ij,ij->i", d2, d2)
    f = np.einsum("ij,ij->i", d2, r)
    c = np.einsum("ij,ij->i", d1, r)
    b = np.einsum("ij,ij->i", d1, d2)
    denom = a * e - b * b
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(denom > 1e-300, np.clip((b * f - c * e) / denom, 0, 1), 0.0)
        t = np.where(e > 0, (b * s + f) / e, 0.0)
        s = np.where(t < 0, np.where(a > 0, np.clip(-c / a, 0, 1), 0.0), s)
        s = np.where(t > 1, np.where(a > 0, np.clip((b - c) / a, 0, 1), 0.0), s)
    t = np.clip(t, 0, 1)
    diff = (p0 + d1 * s[:, None]) - (q0 + d2 * t[:, None])
    return np.sqrt(np.einsum("ij,ij->i", diff, diff))


def _close_pairs(ma, mb, radius):
    tree_a, tree_b = cKDTree(ma), cKDTree(mb)
    pairs = tree_a.sparse_distance_matrix(tree_b, radius, output_type="ndarray")
    return pairs["i"], pairs["j"]


def polygon_distance_exceeds(a: np.ndarray, b: np.ndarray, bound: float) -> Tuple[bool, float]:
    """Whether every pair of segments is farther apart than ``bound``.

    Also returns the smallest distance found among nearby pairs (inf if none).
    """
    a0, a1, b0, b1 = a[:-1], a[1:], b[:-1], b[1:]
    la = np.linalg.norm(a1 - a0, axis=1).max()
    lb = np.linalg.norm(b1 - b0, axis=1).max()
    i, j = _close_pairs((a0 + a1) / 2, (b0 + b1) / 2, bound + (la + lb) / 2)
    if len(i) == 0:
        return True, float("inf")
    d = _segment_distance(a0[i], a1[i], b0[j], b1[j])
    dmin = float(d.min())
    return dmin > bound, dmin


def _shear(points: np.ndarray, attempt: int) -> np.ndarray:
    """Projection along z after the shear (x + z/7, y + z/13); retries turn
    the shear direction so a degeneracy is not simply rescaled."""
    p = points.copy()
    p[:, 0] += p[:, 2] * attempt / 7
    p[:, 1] += p[:, 2] * attempt * attempt / 13
    return p


def _cross2(u, v):
    return u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]


class _Degenerate(Exception):
    pass


def _crossing_sums(a: np.ndarray, b: np.ndarray, eps: float = 1e-9) -> Tuple[int, int]:
    """Signed crossings of the projections to the xy-plane: (a over b, b over a)."""
    a0, a1, b0, b1 = a[:-1], a[1:], b[:-1], b[1:]
    la = np.linalg.norm((a1 - a0)[:, :2], axis=1).max()
    lb = np.linalg.norm((b1 - b0)[:, :2], axis=1).max()
    i, j = _close_pairs(((a0 + a1) / 2)[:, :2], ((b0 + b1) / 2)[:, :2], (la + lb) / 2 * (1 + 1e-9))
    if len(i) == 0:
        return 0, 0
    p, r = a0[i], a1[i] - a0[i]
    q, s = b0[j], b1[j] - b0[j]
    denom = _cross2(r, s)
    qp = (q - p)[:, :2]
    scale = np.linalg.norm(r[:, :2], axis=1) * np.linalg.norm(s[:, :2], axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = _cross2(qp, s) / denom
        u = _cross2(qp, r) / denom
    parallel = np.abs(denom) <= eps * scale
    near = (t > -eps) & (t < 1 + eps) & (u > -eps) & (u < 1 + eps)
    if np.any(parallel & (np.abs(_cross2(qp, r)) <= eps * scale + 1e-300)):
        raise _Degenerate("collinear projected segments")
    hit = near & ~parallel
    if not np.any(hit):
        return 0, 0
    t, u, denom = t[hit], u[hit], denom[hit]
    if np.any((np.abs(t) < eps) | (np.abs(t - 1) < eps) | (np.abs(u) < eps) | (np.abs(u - 1) < eps)):
        raise _Degenerate("crossing at a vertex")
    za = p[hit][:, 2] + t * r[hit][:, 2]
    zb = q[hit][:, 2] + u * s[hit][:, 2]
    if np.any(np.abs(za - zb) < eps):
        raise _Degenerate("projected crossing of touching strands")
    sgn = np.sign(denom).astype(int)
    a_over = int(sgn[za > zb].sum())
    b_over = int(-sgn[zb > za].sum())
    return a_over, b_over


def polygon_linking(a: np.ndarray, b: np.ndarray, max_shears: int = 6) -> int:
    """Linking number of two disjoint closed polygons (point arrays with the
    first point repeated at the end), by signed crossings of a generic
    projection."""
    for k in range(1, max_shears + 1):
        try:
            over, under = _crossing_sums(_shear(a, k), _shear(b, k))
        except _Degenerate:
            continue
        if over == under:
            return over
    raise CurveError("no generic projection found")


def _as_components(x) -> Tuple[CylindricalCurve, ...]:
    if isinstance(x, CylindricalCurve):
        return (x,)
    return tuple(x)


@dataclass
class LinkingResult:
    value: int
    segments_per_edge: int
    pairs: List[Tuple[int, int, int]] = field(default_factory=list)


def linking_number_detailed(a, b) -> LinkingResult:
    comps_a, comps_b = _as_components(a), _as_components(b)
    previous = None
    n = START_SEGMENTS
    while n <= MAX_SEGMENTS:
        polys_a = [polygonalize(c, n) for c in comps_a]
        polys_b = [polygonalize(c, n) for c in comps_b]
        certified = True
        pairs = []
        for ia, pa in enumerate(polys_a):
            for ib, pb in enumerate(polys_b):
                ok, dmin = polygon_distance_exceeds(pa.points, pb.points, pa.error + pb.error)
                if dmin < 1e-12:
                    raise CurvesIntersect(f"components {ia} and {ib} meet")
                certified &= ok
                pairs.append((ia, ib, polygon_linking(pa.points, pb.points)))
        total = sum(p[2] for p in pairs)
        if certified and previous == total:
            return LinkingResult(total, n, pairs)
        previous = total if certified else None
        n *= 2
    if previous is None:
        raise CurvesIntersect("could not certify that the curves are disjoint")
    raise NoConvergence(f"linking number unstable up to {MAX_SEGMENTS} segments per edge")


def linking_number(a, b) -> int:
    """Linking number of two disjoint curves or sets of curves (summed over
    component pairs)."""
    return linking_number_detailed(a, b).value


@dataclass(frozen=True)
class ScalingReport:
    period: int
    base: int
    lifted: int
    components_a: int
    components_b: int

    @property
    def expected(self) -> int:
        return self.period * self.base

    @property
    def passed(self) -> bool:
        return self.lifted == self.expected

    def to_dict(self) -> dict:
        return {"period": self.period, "base_linking": self.base,
                "lifted_linking": self.lifted, "expected": self.expected,
                "components_a": self.components_a, "components_b": self.components_b,
                "passed": self.passed}


def check_lk_scaling(a: CylindricalCurve, b: CylindricalCurve, p: int) -> ScalingReport:
    """Compare lk of the lifts with p times lk of the base curves."""
    base = linking_number(a, b)
    la, lb = lift_curve(a, p), lift_curve(b, p)
    return ScalingReport(p, base, linking_number(la, lb), len(la), len(lb))
