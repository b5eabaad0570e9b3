"""Exact convex bodies in dimensions 1-3, plus Euclidean balls in any dimension.

Quermassintegral convention for a body K in R^n with unit ball B:

    vol(K + r*B) = sum_i  C(n, i) * W_i(K) * r**i

so W_0 is the volume, n*W_1 the surface area, 2*W_{n-1}/kappa_n the mean
width and W_n = kappa_n (volume of B).  All quermassintegrals here are
closed form; no quadrature is involved.

Bodies are immutable and every operation is a pure function, so values can
be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.spatial import ConvexHull

TOL = 1e-9
_EPS = 1e-12


def kappa(n: int) -> float:
    """Volume of the unit ball in R^n."""
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


class ConvexityError(ValueError):
    """Raised when a union of bodies fails to be convex."""


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points, tol=_EPS):
    """Monotone-chain hull.  Returns CCW vertices; collinear points dropped.

    Degenerate inputs give 1 (point) or 2 (segment endpoints) vertices.
    """
    P = np.asarray(points, dtype=float).reshape(-1, 2)
    order = np.lexsort((P[:, 1], P[:, 0]))
    P = P[order]
    keep = np.ones(len(P), dtype=bool)
    keep[1:] = np.max(np.abs(np.diff(P, axis=0)), axis=1) > tol
    P = P[keep]
    if len(P) <= 2:
        return P
    lower = []
    for p in P:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= tol:
            lower.pop()
        lower.append(p)
    upper = []
    for p in P[::-1]:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= tol:
            upper.pop()
        upper.append(p)
    hull = np.array(lower[:-1] + upper[:-1])
    if len(hull) == 2 and np.max(np.abs(hull[0] - hull[1])) <= tol:
        hull = hull[:1]
    return hull


class ConvexBody:
    """Base class; see Interval, Polygon, Polytope3, Ball, ParallelBody."""

    dim: int

    def quermass(self) -> np.ndarray:
        raise NotImplementedError

    def volume(self) -> float:
        return float(self.quermass()[0])

    def support(self, u) -> float:
        raise NotImplementedError

    def translate(self, v) -> "ConvexBody":
        raise NotImplementedError

    def scale(self, c: float) -> "ConvexBody":
        raise NotImplementedError

    def contains(self, x, tol=TOL):
        raise NotImplementedError

    def distance(self, x):
        raise NotImplementedError

    def max_norm(self) -> float:
        """Largest Euclidean norm of a point of the body."""
        raise NotImplementedError

    def expand(self, rho: float) -> "ConvexBody":
        """Outer parallel body K + rho*B."""
        if rho < 0:
            raise ValueError("rho must be nonnegative")
        if rho == 0:
            return self
        return ParallelBody(self, rho)

    def project(self, sub: "SubspaceSpec") -> "ConvexBody":
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class Interval(ConvexBody):
    a: float
    b: float

    def __post_init__(self):
        if self.b < self.a:
            raise ValueError(f"need a <= b, got [{self.a}, {self.b}]")

    dim = 1

    def quermass(self):
        return np.array([self.b - self.a, kappa(1)])

    def support(self, u):
        u = float(np.asarray(u).reshape(()))
        return max(u * self.a, u * self.b)

    def translate(self, v):
        v = float(np.asarray(v).reshape(()))
        return Interval(self.a + v, self.b + v)

    def scale(self, c):
        if c < 0:
            raise ValueError("scale factor must be nonnegative")
        return Interval(c * self.a, c * self.b)

    def contains(self, x, tol=TOL):
        x = np.asarray(x, dtype=float)
        return (x >= self.a - tol) & (x <= self.b + tol)

    def distance(self, x):
        x = np.asarray(x, dtype=float)
        return np.maximum(np.maximum(self.a - x, x - self.b), 0.0)

    def max_norm(self):
        return max(abs(self.a), abs(self.b))

    def expand(self, rho):
        if rho < 0:
            raise ValueError("rho must be nonnegative")
        return Interval(self.a - rho, self.b + rho)

    def project(self, sub):
        raise ValueError("no proper subspace of R^1 to project onto")


@dataclass(frozen=True, eq=False)
class Polygon(ConvexBody):
    """Convex polygon stored as CCW hull vertices.

    Degenerate polygons (segment: 2 vertices, point: 1 vertex) are allowed;
    their area is 0 and the perimeter walks the boundary with multiplicity,
    which is exactly what the Steiner expansion of a lower-dimensional body
    requires (a segment of length L has W = [0, L, pi]).
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = convex_hull_2d(self.vertices)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    dim = 2

    @property
    def is_degenerate(self):
        return len(self.vertices) < 3

    @cached_property
    def area(self) -> float:
        v = self.vertices
        if len(v) < 3:
            return 0.0
        x, y = v[:, 0], v[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))

    @cached_property
    def perimeter(self) -> float:
        v = self.vertices
        if len(v) < 2:
            return 0.0
        return float(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1).sum())

    def quermass(self):
        return np.array([self.area, 0.5 * self.perimeter, kappa(2)])

    def support(self, u):
        u = np.asarray(u, dtype=float)
        return float(np.max(self.vertices @ u))

    def support_batch(self, U):
        """Support values for an array of directions, shape (m, 2)."""
        return np.max(self.vertices @ np.asarray(U, dtype=float).T, axis=0)

    def translate(self, v):
        return Polygon(self.vertices + np.asarray(v, dtype=float))

    def scale(self, c):
        if c < 0:
            raise ValueError("scale factor must be nonnegative")
        return Polygon(self.vertices * c)

    def contains(self, x, tol=TOL):
        P = np.atleast_2d(np.asarray(x, dtype=float))
        v = self.vertices
        if len(v) == 1:
            out = np.max(np.abs(P - v[0]), axis=-1) <= tol
        elif len(v) == 2:
            out = self.distance(P) <= tol
        else:
            e = np.roll(v, -1, axis=0) - v
            rel = P[:, None, :] - v[None, :, :]
            crosses = e[None, :, 0] * rel[:, :, 1] - e[None, :, 1] * rel[:, :, 0]
            out = np.all(crosses >= -tol, axis=1)
        return out if np.asarray(x).ndim > 1 else bool(out[0])

    def distance(self, x):
        P = np.atleast_2d(np.asarray(x, dtype=float))
        v = self.vertices
        if len(v) == 1:
            d = np.linalg.norm(P - v[0], axis=-1)
        else:
            a = v
            e = np.roll(v, -1, axis=0) - v
            ee = np.einsum("ij,ij->i", e, e)
            ee = np.where(ee == 0, 1.0, ee)
            rel = P[:, None, :] - a[None, :, :]
            t = np.clip(np.einsum("pij,ij->pi", rel, e) / ee, 0.0, 1.0)
            diff = rel - t[:, :, None] * e[None, :, :]
            d = np.sqrt(np.min(np.einsum("pij,pij->pi", diff, diff), axis=1))
            if len(v) >= 3:
                d = np.where(self.contains(P, tol=0.0), 0.0, d)
        return d if np.asarray(x).ndim > 1 else float(d[0])

    def max_norm(self):
        return float(np.max(np.linalg.norm(self.vertices, axis=1)))

    def project(self, sub):
        _check_subspace(self, sub)
        u = sub.basis[0]
        t = self.vertices @ u
        return Interval(float(t.min()), float(t.max()))


def _bottom_roll(v):
    i0 = np.lexsort((v[:, 0], v[:, 1]))[0]
    return np.roll(v, -i0, axis=0)


def _edge_angles(v):
    # From the bottom-most vertex of a CCW convex polygon, edge directions
    # increase through one full turn; unwrap atan2 against the first edge.
    e = np.roll(v, -1, axis=0) - v
    ang = np.arctan2(e[:, 1], e[:, 0])
    ang = np.where(ang < ang[0] - 1e-9, ang + 2 * math.pi, ang)
    return e, ang


def _minkowski_polygons(P: Polygon, Q: Polygon) -> Polygon:
    """Sorted edge merge, O(m + k).  Falls back to a hull of pairwise sums
    for degenerate operands."""
    if P.is_degenerate or Q.is_degenerate:
        s = (P.vertices[:, None, :] + Q.vertices[None, :, :]).reshape(-1, 2)
        return Polygon(s)
    a = _bottom_roll(P.vertices)
    b = _bottom_roll(Q.vertices)
    ea, anga = _edge_angles(a)
    eb, angb = _edge_angles(b)
    out = [a[0] + b[0]]
    i = j = 0
    while i < len(ea) or j < len(eb):
        if j == len(eb):
            step, i = ea[i], i + 1
        elif i == len(ea):
            step, j = eb[j], j + 1
        elif anga[i] < angb[j] - _EPS:
            step, i = ea[i], i + 1
        elif angb[j] < anga[i] - _EPS:
            step, j = eb[j], j + 1
        else:
            step, i, j = ea[i] + eb[j], i + 1, j + 1
        out.append(out[-1] + step)
    return Polygon(np.array(out[:-1]))


@dataclass(frozen=True, eq=False)
class Polytope3(ConvexBody):
    """3-polytope given by its vertex set (convex hull is taken)."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        hull = ConvexHull(v)
        v = v[hull.vertices]
        object.__setattr__(self, "vertices", v)
        self.vertices.setflags(write=False)

    dim = 3

    @cached_property
    def _hull(self):
        return ConvexHull(self.vertices)

    @cached_property
    def _edge_curvature(self) -> float:
        """M = (1/2) * sum over edges of length(e) * exterior dihedral angle."""
        hull = self._hull
        pts = hull.points
        normals = hull.equations[:, :3]
        edge_faces = {}
        for fi, simplex in enumerate(hull.simplices):
            for k in range(3):
                e = tuple(sorted((simplex[k], simplex[(k + 1) % 3])))
                edge_faces.setdefault(e, []).append(fi)
        total = 0.0
        for (p, q), faces in edge_faces.items():
            if len(faces) != 2:
                continue
            n1, n2 = normals[faces[0]], normals[faces[1]]
            ang = math.acos(min(1.0, max(-1.0, float(np.dot(n1, n2)))))
            total += np.linalg.norm(pts[q] - pts[p]) * ang
        return 0.5 * total

    def quermass(self):
        hull = self._hull
        return np.array(
            [hull.volume, hull.area / 3.0, self._edge_curvature / 3.0, kappa(3)]
        )

    def support(self, u):
        return float(np.max(self.vertices @ np.asarray(u, dtype=float)))

    def support_batch(self, U):
        return np.max(self.vertices @ np.asarray(U, dtype=float).T, axis=0)

    def translate(self, v):
        return Polytope3(self.vertices + np.asarray(v, dtype=float))

    def scale(self, c):
        if c < 0:
            raise ValueError("scale factor must be nonnegative")
        if c == 0:
            return Ball(3, np.zeros(3), 0.0)
        return Polytope3(self.vertices * c)

    def contains(self, x, tol=TOL):
        P = np.atleast_2d(np.asarray(x, dtype=float))
        eq = self._hull.equations
        vals = P @ eq[:, :3].T + eq[:, 3]
        out = np.all(vals <= tol, axis=1)
        return out if np.asarray(x).ndim > 1 else bool(out[0])

    def distance(self, x):
        P = np.atleast_2d(np.asarray(x, dtype=float))
        d = np.full(len(P), np.inf)
        for simplex in self._hull.simplices:
            a, b, c = self._hull.points[simplex]
            d = np.minimum(d, _point_triangle_distance(P, a, b, c))
        d = np.where(self.contains(P, tol=0.0), 0.0, d)
        return d if np.asarray(x).ndim > 1 else float(d[0])

    def max_norm(self):
        return float(np.max(np.linalg.norm(self.vertices, axis=1)))

    def project(self, sub):
        _check_subspace(self, sub)
        coords = self.vertices @ sub.basis.T
        if sub.dim == 1:
            return Interval(float(coords.min()), float(coords.max()))
        return Polygon(coords)


def _point_triangle_distance(P, a, b, c):
    """Vectorized point-to-triangle distance for P of shape (N, 3)."""
    ab, ac = b - a, c - a
    ap = P - a
    d1, d2 = ap @ ab, ap @ ac
    bp = P - b
    d3, d4 = bp @ ab, bp @ ac
    cp = P - c
    d5, d6 = cp @ ab, cp @ ac
    va = d3 * d6 - d5 * d4
    vb = d5 * d2 - d1 * d6
    vc = d1 * d4 - d3 * d2
    denom = va + vb + vc
    denom = np.where(denom == 0, 1.0, denom)
    v = vb / denom
    w = vc / denom
    closest = a + np.outer(v, ab) + np.outer(w, ac)
    # corner / edge regions override the interior projection
    reg_a = (d1 <= 0) & (d2 <= 0)
    reg_b = (d3 >= 0) & (d4 <= d3)
    reg_c = (d6 >= 0) & (d5 <= d6)
    t_ab = np.divide(d1, d1 - d3, out=np.zeros_like(d1), where=(d1 - d3) != 0)
    reg_ab = (vc <= 0) & (d1 >= 0) & (d3 <= 0)
    t_ac = np.divide(d2, d2 - d6, out=np.zeros_like(d2), where=(d2 - d6) != 0)
    reg_ac = (vb <= 0) & (d2 >= 0) & (d6 <= 0)
    t_bc = np.divide(d4 - d3, (d4 - d3) + (d5 - d6),
                     out=np.zeros_like(d4), where=((d4 - d3) + (d5 - d6)) != 0)
    reg_bc = (va <= 0) & (d4 - d3 >= 0) & (d5 - d6 >= 0)
    closest = np.where(reg_bc[:, None], b + np.outer(t_bc, c - b), closest)
    closest = np.where(reg_ac[:, None], a + np.outer(t_ac, ac), closest)
    closest = np.where(reg_ab[:, None], a + np.outer(t_ab, ab), closest)
    closest = np.where(reg_c[:, None], c, closest)
    closest = np.where(reg_b[:, None], b, closest)
    closest = np.where(reg_a[:, None], a, closest)
    return np.linalg.norm(P - closest, axis=1)


@dataclass(frozen=True, eq=False)
class Ball(ConvexBody):
    n: int
    center: np.ndarray
    radius: float

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")
        c = np.asarray(self.center, dtype=float).reshape(self.n)
        object.__setattr__(self, "center", c)
        self.center.setflags(write=False)

    @property
    def dim(self):
        return self.n

    def quermass(self):
        kn = kappa(self.n)
        return np.array([kn * self.radius ** (self.n - i) for i in range(self.n + 1)])

    def support(self, u):
        u = np.asarray(u, dtype=float)
        return float(u @ self.center) + self.radius * float(np.linalg.norm(u))

    def support_batch(self, U):
        U = np.asarray(U, dtype=float)
        return U @ self.center + self.radius * np.linalg.norm(U, axis=-1)

    def translate(self, v):
        return Ball(self.n, self.center + np.asarray(v, dtype=float), self.radius)

    def scale(self, c):
        if c < 0:
            raise ValueError("scale factor must be nonnegative")
        return Ball(self.n, c * self.center, c * self.radius)

    def _dist_center(self, x):
        P = np.asarray(x, dtype=float)
        if self.n == 1:
            scalar = P.ndim == 0
            d = np.abs(P.reshape(-1) - self.center[0])
        else:
            scalar = P.ndim == 1
            d = np.linalg.norm(np.atleast_2d(P) - self.center, axis=-1)
        return d, scalar

    def contains(self, x, tol=TOL):
        d, scalar = self._dist_center(x)
        out = d <= self.radius + tol
        return bool(out[0]) if scalar else out

    def distance(self, x):
        d, scalar = self._dist_center(x)
        out = np.maximum(d - self.radius, 0.0)
        return float(out[0]) if scalar else out

    def max_norm(self):
        return float(np.linalg.norm(self.center)) + self.radius

    def expand(self, rho):
        if rho < 0:
            raise ValueError("rho must be nonnegative")
        return Ball(self.n, self.center, self.radius + rho)

    def project(self, sub):
        _check_subspace(self, sub)
        c = sub.basis @ self.center
        if sub.dim == 1:
            return Interval(float(c[0]) - self.radius, float(c[0]) + self.radius)
        return Ball(sub.dim, c, self.radius)


@dataclass(frozen=True, eq=False)
class ParallelBody(ConvexBody):
    """Outer parallel body base + rho*B, kept symbolic so that its
    quermassintegrals stay closed form (the sum is not polytopal)."""

    base: ConvexBody
    rho: float

    def __post_init__(self):
        if self.rho < 0:
            raise ValueError("rho must be nonnegative")
        if isinstance(self.base, ParallelBody):
            inner = self.base
            object.__setattr__(self, "base", inner.base)
            object.__setattr__(self, "rho", self.rho + inner.rho)

    @property
    def dim(self):
        return self.base.dim

    def quermass(self):
        return parallel_quermass(self.base, self.rho)

    def support(self, u):
        u = np.asarray(u, dtype=float)
        return self.base.support(u) + self.rho * float(np.linalg.norm(u))

    def support_batch(self, U):
        U = np.asarray(U, dtype=float)
        return self.base.support_batch(U) + self.rho * np.linalg.norm(U, axis=-1)

    def translate(self, v):
        return ParallelBody(self.base.translate(v), self.rho)

    def scale(self, c):
        return ParallelBody(self.base.scale(c), c * self.rho)

    def contains(self, x, tol=TOL):
        d = self.base.distance(x)
        if isinstance(d, np.ndarray):
            return d <= self.rho + tol
        return bool(d <= self.rho + tol)

    def distance(self, x):
        d = self.base.distance(x)
        if isinstance(d, np.ndarray):
            return np.maximum(d - self.rho, 0.0)
        return max(d - self.rho, 0.0)

    def max_norm(self):
        return self.base.max_norm() + self.rho

    def expand(self, rho):
        if rho < 0:
            raise ValueError("rho must be nonnegative")
        return ParallelBody(self.base, self.rho + rho)

    def project(self, sub):
        # (K + r*B_n) | L  =  K|L + r*B_k, exactly
        return ParallelBody(self.base.project(sub), self.rho)


@dataclass(frozen=True, eq=False)
class SubspaceSpec:
    ambient_dim: int
    dim: int
    basis: np.ndarray  # shape (dim, ambient_dim), orthonormal rows

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=float).reshape(self.dim, self.ambient_dim)
        gram = b @ b.T
        if np.max(np.abs(gram - np.eye(self.dim))) > 1e-12:
            raise ValueError("basis is not orthonormal to 1e-12")
        object.__setattr__(self, "basis", b)
        self.basis.setflags(write=False)


def _check_subspace(K, sub):
    if sub.ambient_dim != K.dim:
        raise ValueError(f"subspace ambient dim {sub.ambient_dim} != body dim {K.dim}")
    if sub.dim not in (1, 2) or sub.dim >= K.dim:
        raise ValueError(f"unsupported projection dimension {sub.dim}")


def random_subspace(n: int, k: int, seed) -> SubspaceSpec:
    """Haar-distributed k-dimensional subspace of R^n (Gram-Schmidt of
    independent standard normal vectors).  Deterministic per seed."""
    if not (1 <= k < n <= 3):
        raise ValueError("need 1 <= k < n <= 3")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, k))
    q, r = np.linalg.qr(g)
    q = q * np.sign(np.diag(r))
    return SubspaceSpec(n, k, q.T)


def quermassintegrals(K: ConvexBody) -> np.ndarray:
    return K.quermass()


def parallel_quermass(K: ConvexBody, rho: float) -> np.ndarray:
    """Quermassintegrals of the outer parallel body K + rho*B via

        W_i(K + r*B) = sum_j C(n-i, j) * W_{i+j}(K) * r**j
    """
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    if isinstance(K, ParallelBody):
        return parallel_quermass(K.base, K.rho + rho)
    w = K.quermass()
    n = K.dim
    out = np.empty(n + 1)
    for i in range(n + 1):
        out[i] = sum(math.comb(n - i, j) * w[i + j] * rho ** j for j in range(n - i + 1))
    return out


def minkowski_sum(K: ConvexBody, L: ConvexBody) -> ConvexBody:
    if K.dim != L.dim:
        raise ValueError("dimension mismatch")
    if isinstance(K, ParallelBody) or isinstance(L, ParallelBody):
        kb, kr = (K.base, K.rho) if isinstance(K, ParallelBody) else (K, 0.0)
        lb, lr = (L.base, L.rho) if isinstance(L, ParallelBody) else (L, 0.0)
        if isinstance(kb, Ball) or isinstance(lb, Ball):
            return minkowski_sum(kb, lb).expand(kr + lr)
        return ParallelBody(minkowski_sum(kb, lb), kr + lr)
    if isinstance(K, Interval) and isinstance(L, Interval):
        return Interval(K.a + L.a, K.b + L.b)
    if isinstance(K, Polygon) and isinstance(L, Polygon):
        return _minkowski_polygons(K, L)
    if isinstance(K, Ball) and isinstance(L, Ball):
        return Ball(K.n, K.center + L.center, K.radius + L.radius)
    if isinstance(K, Polytope3) and isinstance(L, Polytope3):
        s = (K.vertices[:, None, :] + L.vertices[None, :, :]).reshape(-1, 3)
        return Polytope3(s)
    if isinstance(K, Ball) and K.radius >= 0 and not isinstance(L, Ball):
        return minkowski_sum(L, K)
    if isinstance(L, Ball):
        # body + ball is an outer parallel body of a translate
        return ParallelBody(K.translate(L.center), L.radius)
    raise ValueError(f"unsupported Minkowski sum of {type(K).__name__} and {type(L).__name__}")


def _clip_halfplane_pts(pts, a, d, tol=_EPS):
    """Clip CCW polygon points by the halfplane left of the line a + t*d."""
    out = []
    n = len(pts)
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        sp = d[0] * (p[1] - a[1]) - d[1] * (p[0] - a[0])
        sq = d[0] * (q[1] - a[1]) - d[1] * (q[0] - a[0])
        if sp >= -tol:
            out.append(p)
        if (sp > tol and sq < -tol) or (sp < -tol and sq > tol):
            t = sp / (sp - sq)
            out.append(p + t * (q - p))
    return out


def clip_halfplane(K: Polygon, normal, offset: float):
    """K intersected with {x : normal . x <= offset}.  Returns None if empty."""
    nrm = np.asarray(normal, dtype=float)
    a = nrm * offset / float(nrm @ nrm)
    d = np.array([-nrm[1], nrm[0]])  # halfplane lies left of a + t*d
    pts = _clip_halfplane_pts(list(K.vertices), a, d)
    if not pts:
        return None
    return Polygon(np.array(pts))


def _segment_clip(seg: Polygon, poly: Polygon):
    a, b = seg.vertices[0], seg.vertices[-1]
    lo, hi = 0.0, 1.0
    v = poly.vertices
    for i in range(len(v)):
        p, q = v[i], v[(i + 1) % len(v)]
        e = q - p
        sa = e[0] * (a[1] - p[1]) - e[1] * (a[0] - p[0])
        sb = e[0] * (b[1] - p[1]) - e[1] * (b[0] - p[0])
        if sa < -_EPS and sb < -_EPS:
            return None
        if abs(sb - sa) > _EPS:
            t = sa / (sa - sb)
            if sa < sb:
                lo = max(lo, t)
            else:
                hi = min(hi, t)
    if lo > hi + _EPS:
        return None
    return Polygon(np.array([a + lo * (b - a), a + hi * (b - a)]))


def intersect(K: ConvexBody, L: ConvexBody):
    """Convex intersection.  Returns None when empty."""
    if K.dim != L.dim:
        raise ValueError("dimension mismatch")
    if isinstance(K, Interval) and isinstance(L, Interval):
        a, b = max(K.a, L.a), min(K.b, L.b)
        return Interval(a, b) if a <= b + _EPS else None
    if isinstance(K, Polygon) and isinstance(L, Polygon):
        if L.is_degenerate and not K.is_degenerate:
            return _segment_clip(L, K) if len(L.vertices) == 2 else (
                L if K.contains(L.vertices[0]) else None)
        if K.is_degenerate and not L.is_degenerate:
            return intersect(L, K)
        if K.is_degenerate and L.is_degenerate:
            raise ValueError("intersection of two degenerate polygons is unsupported")
        pts = list(K.vertices)
        v = L.vertices
        for i in range(len(v)):
            pts = _clip_halfplane_pts(pts, v[i], v[(i + 1) % len(v)] - v[i])
            if not pts:
                return None
        return Polygon(np.array(pts))
    raise ValueError("intersection supported for intervals and polygons only")


def union_if_convex(K: ConvexBody, L: ConvexBody) -> ConvexBody:
    """Hull of K and L when that hull is actually the union; otherwise raises
    ConvexityError.  Convexity is decided by the inclusion-exclusion volume
    test, which is robust to collinear vertices."""
    if K.dim != L.dim:
        raise ValueError("dimension mismatch")
    if isinstance(K, Interval) and isinstance(L, Interval):
        if max(K.a, L.a) > min(K.b, L.b) + _EPS:
            raise ConvexityError("disjoint intervals")
        return Interval(min(K.a, L.a), max(K.b, L.b))
    if isinstance(K, Polygon) and isinstance(L, Polygon):
        hull = Polygon(np.vstack([K.vertices, L.vertices]))
        inter = intersect(K, L)
        v_inter = inter.volume() if inter is not None else 0.0
        expected = K.volume() + L.volume() - v_inter
        if abs(hull.volume() - expected) > 1e-9 * max(1.0, hull.volume()):
            raise ConvexityError("union is not convex")
        return hull
    raise ValueError("union supported for intervals and polygons only")


def support(K: ConvexBody, u) -> float:
    return K.support(u)


def mean_width(K: ConvexBody) -> float:
    w = K.quermass()
    n = K.dim
    return 2.0 * w[n - 1] / kappa(n)
