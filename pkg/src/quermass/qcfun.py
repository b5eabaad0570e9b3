"""Quasi-concave functions on R^n and their algebra.

A function is quasi-concave iff every superlevel set {f >= t} is convex; we
work with upper semicontinuous representatives vanishing at infinity, so
superlevel sets are convex bodies.  Four representations are supported:

  LayeredFn        piecewise-constant: levels t_1 < ... < t_m with nested
                   bodies K_1 >= ... >= K_m.  The exact workhorse: every
                   layer-cake integral is a finite sum.
  RadialFn         f(x) = F(|x|) for a non-increasing profile F.
  CharFn           c * chi_K, a scaled characteristic function.
  ExpNegSupportFn  f = exp(-h_K) for a body K with the origin interior.
  SampledFn        values on a regular grid in dimension 1 or 2.

The sup-convolution s.f (+) t.g is

    h(z) = sup { M_alpha^{(s,t)}(f(x), g(y)) : z = s x + t y },

restricted to decompositions with f(x) g(y) > 0 when alpha > 0.  At
alpha = -inf it acts on superlevel sets as Minkowski combination,
{h > r} = s{f > r} + t{g > r}, which makes the layered path exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import geometry as geo
from .geometry import (Ball, ConvexBody, Interval, ParallelBody, Polygon,
                       SubspaceSpec, intersect, kappa, minkowski_sum,
                       union_if_convex)
from .means import INF, m_alpha

_FAN = {n: None for n in (1, 2, 3)}


def _direction_fan(n, m=256):
    if _FAN[n] is None:
        if n == 1:
            U = np.array([[1.0], [-1.0]])
        elif n == 2:
            th = np.linspace(0, 2 * math.pi, m, endpoint=False)
            U = np.column_stack([np.cos(th), np.sin(th)])
        else:
            rng = np.random.default_rng(12345)
            U = rng.standard_normal((4 * m, 3))
            U /= np.linalg.norm(U, axis=1, keepdims=True)
        _FAN[n] = U
    return _FAN[n]


def _body_subset(inner: ConvexBody, outer: ConvexBody, tol=1e-9) -> bool:
    if hasattr(inner, "vertices") and not isinstance(outer, ParallelBody):
        return bool(np.all(outer.contains(inner.vertices, tol=tol)))
    if isinstance(inner, Interval) and isinstance(outer, Interval):
        return inner.a >= outer.a - tol and inner.b <= outer.b + tol
    U = _direction_fan(inner.dim)
    hi = np.array([inner.support(u) for u in U])
    ho = np.array([outer.support(u) for u in U])
    return bool(np.all(hi <= ho + tol))


# ---------------------------------------------------------------------------
# radial profiles


class Profile:
    """Non-increasing, left-continuous profile F on [0, inf)."""

    def value(self, r):
        raise NotImplementedError

    @property
    def max_value(self) -> float:
        raise NotImplementedError

    @property
    def support_radius(self) -> float:
        raise NotImplementedError

    def level_radius(self, t):
        """sup{r : F(r) >= t}, or None when t exceeds the maximum."""
        raise NotImplementedError

    def moment(self, m: int) -> float:
        """m-th moment integral r^m dF of the jump measure -dF."""
        raise NotImplementedError

    def shift(self, rho: float) -> "Profile":
        """Profile of the rounded function: r -> F(max(r - rho, 0))."""
        if rho == 0:
            return self
        return ShiftedProfile(self, rho)

    def scaled(self, c: float) -> "Profile":
        raise NotImplementedError

    def power(self, p: float) -> "Profile":
        raise NotImplementedError

    is_log_concave = False


@dataclass(frozen=True)
class StepsProfile(Profile):
    """F(r) = F_j on (r_{j-1}, r_j], zero beyond r_m."""

    rs: tuple
    fs: tuple

    def __post_init__(self):
        rs = tuple(float(r) for r in self.rs)
        fs = tuple(float(v) for v in self.fs)
        if len(rs) != len(fs) or not rs:
            raise ValueError("need matching nonempty radius/value lists")
        if any(r2 <= r1 for r1, r2 in zip(rs, rs[1:])) or rs[0] <= 0:
            raise ValueError("radii must be positive and increasing")
        if any(f2 >= f1 for f1, f2 in zip(fs, fs[1:])) or fs[-1] <= 0:
            raise ValueError("values must be positive and strictly decreasing")
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "fs", fs)

    def value(self, r):
        r = np.asarray(r, dtype=float)
        idx = np.searchsorted(self.rs, r, side="left")
        fs = np.append(self.fs, 0.0)
        out = fs[np.minimum(idx, len(self.rs))]
        return float(out) if r.ndim == 0 else out

    @property
    def max_value(self):
        return self.fs[0]

    @property
    def support_radius(self):
        return self.rs[-1]

    def level_radius(self, t):
        if t > self.fs[0]:
            return None
        fs = -np.asarray(self.fs)
        j = int(np.searchsorted(fs, -t, side="right")) - 1
        return self.rs[j]

    def moment(self, m):
        fs = list(self.fs) + [0.0]
        return sum(r ** m * (fs[j] - fs[j + 1]) for j, r in enumerate(self.rs))

    def shift(self, rho):
        if rho == 0:
            return self
        return StepsProfile(tuple(r + rho for r in self.rs), self.fs)

    def scaled(self, c):
        return StepsProfile(self.rs, tuple(c * f for f in self.fs))

    def power(self, p):
        return StepsProfile(self.rs, tuple(f ** p for f in self.fs))

    @property
    def is_log_concave(self):
        return len(self.rs) == 1


@dataclass(frozen=True)
class ExpProfile(Profile):
    """F(r) = scale * exp(-rate * r)."""

    rate: float
    scale: float = 1.0

    def __post_init__(self):
        if self.rate <= 0 or self.scale <= 0:
            raise ValueError("rate and scale must be positive")

    def value(self, r):
        return self.scale * np.exp(-self.rate * np.asarray(r, dtype=float))

    @property
    def max_value(self):
        return self.scale

    support_radius = INF

    def level_radius(self, t):
        if t > self.scale:
            return None
        return -math.log(t / self.scale) / self.rate

    def moment(self, m):
        return self.scale * math.factorial(m) / self.rate ** m

    def scaled(self, c):
        return ExpProfile(self.rate, c * self.scale)

    def power(self, p):
        return ExpProfile(p * self.rate, self.scale ** p)

    def derivative(self, r):
        return -self.rate * self.scale * np.exp(-self.rate * np.asarray(r, float))

    is_log_concave = True


@dataclass(frozen=True)
class GaussProfile(Profile):
    """F(r) = scale * exp(-r^2 / (2 width^2))."""

    scale: float = 1.0
    width: float = 1.0

    def __post_init__(self):
        if self.scale <= 0 or self.width <= 0:
            raise ValueError("scale and width must be positive")

    def value(self, r):
        r = np.asarray(r, dtype=float)
        return self.scale * np.exp(-r * r / (2 * self.width ** 2))

    @property
    def max_value(self):
        return self.scale

    support_radius = INF

    def level_radius(self, t):
        if t > self.scale:
            return None
        return self.width * math.sqrt(2 * math.log(self.scale / t))

    def moment(self, m):
        return self.scale * 2 ** (m / 2) * self.width ** m * math.gamma(m / 2 + 1)

    def scaled(self, c):
        return GaussProfile(c * self.scale, self.width)

    def power(self, p):
        return GaussProfile(self.scale ** p, self.width / math.sqrt(p))

    def derivative(self, r):
        r = np.asarray(r, dtype=float)
        w2 = self.width ** 2
        return -self.scale * r / w2 * np.exp(-r * r / (2 * w2))

    is_log_concave = True


@dataclass(frozen=True)
class PowerCutProfile(Profile):
    """F(r) = scale * (1 - r/radius)^exponent on [0, radius], zero beyond.

    The canonical compactly supported alpha-concave bump: with exponent 1/a
    the radial function is a-concave.
    """

    scale: float
    radius: float
    exponent: float

    def __post_init__(self):
        if min(self.scale, self.radius, self.exponent) <= 0:
            raise ValueError("scale, radius, exponent must be positive")

    def value(self, r):
        r = np.asarray(r, dtype=float)
        base = np.clip(1.0 - r / self.radius, 0.0, None)
        return self.scale * base ** self.exponent

    @property
    def max_value(self):
        return self.scale

    @property
    def support_radius(self):
        return self.radius

    def level_radius(self, t):
        if t > self.scale:
            return None
        return self.radius * (1.0 - (t / self.scale) ** (1.0 / self.exponent))

    def moment(self, m):
        p = self.exponent
        return (self.scale * self.radius ** m * math.gamma(m + 1) * math.gamma(p + 1)
                / math.gamma(m + 1 + p))

    def scaled(self, c):
        return PowerCutProfile(c * self.scale, self.radius, self.exponent)

    def power(self, q):
        return PowerCutProfile(self.scale ** q, self.radius, q * self.exponent)

    is_log_concave = True


@dataclass(frozen=True)
class ShiftedProfile(Profile):
    """F_rho(r) = F(max(r - rho, 0)); level sets gain an outer parallel shell."""

    base: Profile
    rho: float

    def __post_init__(self):
        if self.rho < 0:
            raise ValueError("rho must be nonnegative")
        if isinstance(self.base, ShiftedProfile):
            inner = self.base
            object.__setattr__(self, "base", inner.base)
            object.__setattr__(self, "rho", self.rho + inner.rho)

    def value(self, r):
        r = np.asarray(r, dtype=float)
        return self.base.value(np.maximum(r - self.rho, 0.0))

    @property
    def max_value(self):
        return self.base.max_value

    @property
    def support_radius(self):
        return self.base.support_radius + self.rho

    def level_radius(self, t):
        r = self.base.level_radius(t)
        return None if r is None else r + self.rho

    def moment(self, m):
        # push-forward of the jump measure under r -> r + rho
        return sum(math.comb(m, j) * self.rho ** (m - j) * self.base.moment(j)
                   for j in range(m + 1))

    def shift(self, rho):
        return ShiftedProfile(self.base, self.rho + rho) if rho else self

    def scaled(self, c):
        return ShiftedProfile(self.base.scaled(c), self.rho)

    def power(self, p):
        return ShiftedProfile(self.base.power(p), self.rho)

    @property
    def is_log_concave(self):
        # sup over a ball preserves log-concavity (it is a sup-convolution
        # with a characteristic function)
        return self.base.is_log_concave


# ---------------------------------------------------------------------------
# function representations


class QCFunction:
    dim: int

    def __call__(self, x):
        raise NotImplementedError

    def superlevel(self, t):
        """The body {f >= t}, or None when t exceeds the maximum."""
        raise NotImplementedError

    @property
    def max_value(self) -> float:
        raise NotImplementedError

    @property
    def support_body(self):
        raise NotImplementedError

    def round(self, rho: float) -> "QCFunction":
        """f_rho(x) = sup of f over the closed rho-ball at x."""
        raise NotImplementedError

    def project(self, sub: SubspaceSpec) -> "QCFunction":
        raise NotImplementedError

    def scale_values(self, c: float) -> "QCFunction":
        raise NotImplementedError

    def power(self, p: float) -> "QCFunction":
        raise NotImplementedError

    def as_layered(self) -> "LayeredFn":
        raise ValueError(f"{type(self).__name__} has no exact layered form")

    is_log_concave = False


@dataclass(frozen=True, eq=False)
class LayeredFn(QCFunction):
    levels: tuple
    bodies: tuple
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        levels = tuple(float(t) for t in self.levels)
        bodies = tuple(self.bodies)
        if not levels or len(levels) != len(bodies):
            raise ValueError("need matching nonempty level/body lists")
        if levels[0] <= 0 or any(b <= a for a, b in zip(levels, levels[1:])):
            raise ValueError("levels must be positive and strictly increasing")
        if len({b.dim for b in bodies}) != 1:
            raise ValueError("bodies must share one ambient dimension")
        if self.validate:
            for inner, outer in zip(bodies[1:], bodies):
                if not _body_subset(inner, outer):
                    raise ValueError("level bodies are not nested")
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "bodies", bodies)

    @property
    def dim(self):
        return self.bodies[0].dim

    def __call__(self, x):
        out = None
        for t, body in zip(self.levels, self.bodies):
            inside = body.contains(x)
            if out is None:
                out = np.where(inside, t, 0.0)
            else:
                out = np.where(inside, t, out)
        if np.ndim(out) == 0:
            return float(out)
        return out

    def superlevel(self, t):
        if t > self.levels[-1]:
            return None
        k = int(np.searchsorted(self.levels, t, side="left"))
        return self.bodies[k]

    @property
    def max_value(self):
        return self.levels[-1]

    @property
    def support_body(self):
        return self.bodies[0]

    def round(self, rho):
        if rho == 0:
            return self
        return LayeredFn(self.levels, tuple(b.expand(rho) for b in self.bodies),
                         validate=False)

    def project(self, sub):
        return LayeredFn(self.levels, tuple(b.project(sub) for b in self.bodies),
                         validate=False)

    def scale_values(self, c):
        if c <= 0:
            raise ValueError("value scale must be positive")
        return LayeredFn(tuple(c * t for t in self.levels), self.bodies,
                         validate=False)

    def power(self, p):
        if p <= 0:
            raise ValueError("power must be positive")
        return LayeredFn(tuple(t ** p for t in self.levels), self.bodies,
                         validate=False)

    def as_layered(self):
        return self

    @property
    def is_log_concave(self):
        return len(self.levels) == 1


@dataclass(frozen=True, eq=False)
class RadialFn(QCFunction):
    """f(x) = F(|x|).  unbounded_max marks profiles that stand in for a
    function with F(0) = +inf (stored capped); W_n then reports +inf."""

    n: int
    profile: Profile
    unbounded_max: bool = False

    @property
    def dim(self):
        return self.n

    def _norms(self, x):
        x = np.asarray(x, dtype=float)
        if self.n == 1:
            return np.abs(x)
        return np.linalg.norm(np.atleast_2d(x), axis=-1) if x.ndim > 1 \
            else float(np.linalg.norm(x))

    def __call__(self, x):
        return self.profile.value(self._norms(x))

    def superlevel(self, t):
        r = self.profile.level_radius(t)
        if r is None:
            return None
        return Ball(self.n, np.zeros(self.n), r)

    @property
    def max_value(self):
        return INF if self.unbounded_max else self.profile.max_value

    @property
    def support_body(self):
        r = self.profile.support_radius
        if math.isinf(r):
            return None
        return Ball(self.n, np.zeros(self.n), r)

    def round(self, rho):
        if rho == 0:
            return self
        return RadialFn(self.n, self.profile.shift(rho), self.unbounded_max)

    def project(self, sub):
        if sub.ambient_dim != self.n:
            raise ValueError("ambient dimension mismatch")
        return RadialFn(sub.dim, self.profile, self.unbounded_max)

    def scale_values(self, c):
        return RadialFn(self.n, self.profile.scaled(c), self.unbounded_max)

    def power(self, p):
        return RadialFn(self.n, self.profile.power(p), self.unbounded_max)

    def as_layered(self):
        if not isinstance(self.profile, StepsProfile):
            raise ValueError("only step profiles have an exact layered form")
        rs, fs = self.profile.rs, self.profile.fs
        levels = tuple(reversed(fs))
        bodies = tuple(Ball(self.n, np.zeros(self.n), r) for r in reversed(rs))
        return LayeredFn(levels, bodies, validate=False)

    @property
    def is_log_concave(self):
        return self.profile.is_log_concave


@dataclass(frozen=True, eq=False)
class CharFn(QCFunction):
    """c * chi_K."""

    height: float
    body: ConvexBody

    def __post_init__(self):
        if self.height <= 0:
            raise ValueError("height must be positive")

    @property
    def dim(self):
        return self.body.dim

    def __call__(self, x):
        inside = self.body.contains(x)
        if isinstance(inside, np.ndarray):
            return np.where(inside, self.height, 0.0)
        return self.height if inside else 0.0

    def superlevel(self, t):
        return self.body if t <= self.height else None

    @property
    def max_value(self):
        return self.height

    @property
    def support_body(self):
        return self.body

    def round(self, rho):
        return CharFn(self.height, self.body.expand(rho)) if rho else self

    def project(self, sub):
        return CharFn(self.height, self.body.project(sub))

    def scale_values(self, c):
        return CharFn(c * self.height, self.body)

    def power(self, p):
        return CharFn(self.height ** p, self.body)

    def as_layered(self):
        return LayeredFn((self.height,), (self.body,), validate=False)

    is_log_concave = True


@dataclass(frozen=True, eq=False)
class ExpNegSupportFn(QCFunction):
    """f = exp(-h_K) for a body K with the origin in its interior."""

    body: ConvexBody

    def __post_init__(self):
        origin = np.zeros(self.body.dim)
        if not self.body.contains(origin, tol=-1e-9):
            raise ValueError("origin must be interior to the body")

    @property
    def dim(self):
        return self.body.dim

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if x.ndim <= 1:
            return math.exp(-self.body.support(x))
        return np.exp(-self.body.support_batch(x))

    @property
    def max_value(self):
        return 1.0

    @property
    def support_body(self):
        return None  # support is all of R^n

    def scale_values(self, c):
        raise ValueError("exp(-h_K) functions do not stay in the family under scaling")

    is_log_concave = True


@dataclass(frozen=True, eq=False)
class SampledFn(QCFunction):
    """Grid samples in dimension 1 or 2; zero outside the grid."""

    origin: np.ndarray
    step: float
    values: np.ndarray
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim not in (1, 2):
            raise ValueError("sampled functions support dimension 1 or 2 only")
        if np.any(vals < 0) or not np.any(vals > 0):
            raise ValueError("values must be nonnegative and not all zero")
        origin = np.asarray(self.origin, dtype=float).reshape(vals.ndim)
        vals.setflags(write=False)
        origin.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "origin", origin)
        if self.validate and not self._superlevels_convex():
            raise ValueError("superlevel index sets are not convex")

    @property
    def dim(self):
        return self.values.ndim

    def _grid_points(self):
        if self.dim == 1:
            return self.origin[0] + self.step * np.arange(len(self.values))
        ii, jj = np.meshgrid(np.arange(self.values.shape[0]),
                             np.arange(self.values.shape[1]), indexing="ij")
        return self.origin + self.step * np.column_stack([ii.ravel(), jj.ravel()])

    def _superlevels_convex(self, n_checks=5, tol=1e-9):
        pos = self.values[self.values > 0]
        thresholds = np.quantile(pos, np.linspace(0.05, 0.95, n_checks))
        pts = self._grid_points()
        flat = self.values.ravel()
        for t in thresholds:
            sel = flat >= t - tol
            if self.dim == 1:
                idx = np.flatnonzero(sel)
                if len(idx) and (idx[-1] - idx[0] + 1 != len(idx)):
                    return False
            else:
                chosen = pts[sel]
                if len(chosen) < 3:
                    continue
                hull = Polygon(chosen)
                inside = hull.contains(pts, tol=1e-9)
                if np.count_nonzero(inside & ~sel & (flat < t - 1e-7)) > 0:
                    # a strictly lower sample sits inside the hull
                    return False
        return True

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0 if self.dim == 1 else x.ndim == 1
        pts = np.atleast_1d(x) if self.dim == 1 else np.atleast_2d(x)
        rel = (pts - (self.origin[0] if self.dim == 1 else self.origin)) / self.step
        idx = np.rint(rel).astype(int)
        near = np.max(np.abs(rel - idx), axis=-1) if self.dim == 2 else np.abs(rel - idx)
        out = np.zeros(len(np.atleast_1d(near)))
        if self.dim == 1:
            ok = (near <= 0.5 + 1e-9) & (idx >= 0) & (idx < len(self.values))
            out[ok] = self.values[idx[ok]]
        else:
            ok = ((near <= 0.5 + 1e-9)
                  & np.all(idx >= 0, axis=-1)
                  & (idx[:, 0] < self.values.shape[0])
                  & (idx[:, 1] < self.values.shape[1]))
            out[ok] = self.values[idx[ok, 0], idx[ok, 1]]
        return float(out[0]) if scalar else out

    def superlevel(self, t):
        if self.dim == 1:
            sel = self.values >= t
            if not np.any(sel):
                return None
            idx = np.flatnonzero(sel)
            return Interval(self.origin[0] + self.step * idx[0],
                            self.origin[0] + self.step * idx[-1])
        sel = self.values >= t
        rows = np.flatnonzero(np.any(sel, axis=1))
        if len(rows) == 0:
            return None
        # hull input reduced to the per-row extreme grid points
        jmin = np.argmax(sel[rows], axis=1)
        jmax = sel.shape[1] - 1 - np.argmax(sel[rows][:, ::-1], axis=1)
        ii = np.concatenate([rows, rows])
        jj = np.concatenate([jmin, jmax])
        pts = self.origin + self.step * np.column_stack([ii, jj])
        return Polygon(pts)

    @property
    def max_value(self):
        return float(self.values.max())

    @property
    def support_body(self):
        return self.superlevel(np.min(self.values[self.values > 0]))

    def integral(self):
        return float(self.values.sum()) * self.step ** self.dim

    def distinct_levels(self):
        vals = np.unique(self.values)
        return vals[vals > 0]

    def scale_values(self, c):
        return SampledFn(self.origin, self.step, c * self.values, validate=False)

    def power(self, p):
        return SampledFn(self.origin, self.step, self.values ** p, validate=False)

    def round(self, rho):
        if rho == 0:
            return self
        k = int(math.ceil(rho / self.step + 1e-9))
        offsets = np.arange(-k, k + 1)
        if self.dim == 1:
            n = len(self.values)
            out = np.zeros(n + 2 * k)
            for o in offsets:
                if abs(o) * self.step <= rho + 1e-12:
                    out[k + o: k + o + n] = np.maximum(out[k + o: k + o + n],
                                                       self.values)
            return SampledFn(self.origin - k * self.step, self.step, out,
                             validate=False)
        n1, n2 = self.values.shape
        out = np.zeros((n1 + 2 * k, n2 + 2 * k))
        for o1 in offsets:
            for o2 in offsets:
                if math.hypot(o1, o2) * self.step <= rho + 1e-12:
                    sl = out[k + o1: k + o1 + n1, k + o2: k + o2 + n2]
                    np.maximum(sl, self.values, out=sl)
        return SampledFn(self.origin - k * self.step, self.step, out,
                         validate=False)


# ---------------------------------------------------------------------------
# sup-convolution


def _rationalize(s, t, max_den=64):
    fs = Fraction(s).limit_denominator(max_den)
    ft = Fraction(t).limit_denominator(max_den)
    if abs(float(fs) - s) > 1e-9 or abs(float(ft) - t) > 1e-9:
        raise ValueError("sampled sup-convolution needs weights that are small "
                         "rational numbers so decompositions land on the grid")
    q = np.lcm(fs.denominator, ft.denominator)
    return int(fs.numerator * (q // fs.denominator)), \
        int(ft.numerator * (q // ft.denominator)), int(q)


def supconv(alpha, s, f: QCFunction, t, g: QCFunction) -> QCFunction:
    """s.f (+) t.g at concavity parameter alpha.

    Exact paths: any alpha for scaled characteristic functions (Minkowski
    rule), alpha = -inf for layered functions (level-set Minkowski sums),
    alpha = 0 for exp(-h_K) pairs with s + t = 1 (support-set intersection).
    Sampled pairs run a discrete search over grid decompositions.
    """
    if s <= 0 or t <= 0:
        raise ValueError("weights must be positive")
    if f.dim != g.dim:
        raise ValueError("dimension mismatch")

    if isinstance(f, CharFn) and isinstance(g, CharFn):
        height = m_alpha(alpha, f.height, g.height, s, t)
        return CharFn(height, minkowski_sum(f.body.scale(s), g.body.scale(t)))

    if alpha == -INF:
        try:
            fl, gl = f.as_layered(), g.as_layered()
        except ValueError:
            pass
        else:
            merged = sorted(set(fl.levels) | set(gl.levels))
            top = min(fl.max_value, gl.max_value)
            merged = [r for r in merged if r <= top]
            bodies = tuple(
                minkowski_sum(fl.superlevel(r).scale(s), gl.superlevel(r).scale(t))
                for r in merged)
            return LayeredFn(tuple(merged), bodies, validate=False)

    if isinstance(f, ExpNegSupportFn) and isinstance(g, ExpNegSupportFn):
        if alpha != 0:
            raise ValueError("exp(-h_K) pairs combine in closed form at alpha = 0 only")
        if abs(s + t - 1.0) > 1e-12:
            raise ValueError("exp(-h_K) pairs need normalized weights s + t = 1")
        inter = intersect(f.body, g.body)
        if inter is None:
            raise ValueError("support sets do not intersect")
        return ExpNegSupportFn(inter)

    if isinstance(f, SampledFn) and isinstance(g, SampledFn):
        return _supconv_sampled(alpha, s, f, t, g)

    raise ValueError(
        f"unsupported sup-convolution: ({type(f).__name__}, {type(g).__name__}) "
        f"at alpha={alpha}")


def _mean_with_scalar(alpha, fi, gv, gprep, s, t):
    """M_alpha(fi, g) for a positive scalar fi against a prepared g array;
    zero cells of g come out as 0 for alpha <= 0 and are masked above."""
    if alpha == INF:
        return np.maximum(fi, gv)
    if alpha == -INF:
        return np.minimum(fi, gv)
    if alpha == 0:
        with np.errstate(divide="ignore"):
            return np.exp(s * math.log(fi) + t * gprep)  # gprep = log g
    with np.errstate(over="ignore"):
        return (s * fi ** alpha + t * gprep) ** (1.0 / alpha)  # gprep = g^alpha


def _supconv_sampled(alpha, s, f: SampledFn, t, g: SampledFn) -> SampledFn:
    if abs(f.step - g.step) > 1e-12:
        raise ValueError("sampled operands must share the grid step")
    S, T, Q = _rationalize(s, t)
    step_out = f.step / Q
    gv = g.values
    gzero = gv == 0
    with np.errstate(divide="ignore"):
        if alpha == 0:
            gprep = np.log(gv)
        elif math.isfinite(alpha) and alpha != 0:
            gprep = gv ** alpha
            if alpha < 0:
                gprep = np.where(gzero, np.inf, gprep)  # forces the 0 branch
        else:
            gprep = gv

    def combine(fi):
        vals = _mean_with_scalar(alpha, fi, gv, gprep, s, t)
        if alpha > 0:
            vals = np.where(gzero, 0.0, vals)
        return vals

    if f.dim == 1:
        nf, ng = len(f.values), len(gv)
        out = np.zeros(S * (nf - 1) + T * (ng - 1) + 1)
        for i in range(nf):
            fi = f.values[i]
            if fi == 0:
                continue  # contributes nothing: the mean is 0 or masked
            sl = out[S * i: S * i + T * (ng - 1) + 1: T]
            np.maximum(sl, combine(fi), out=sl)
        origin = np.array([s * f.origin[0] + t * g.origin[0]])
        return SampledFn(origin, step_out, out, validate=False)

    nf1, nf2 = f.values.shape
    ng1, ng2 = gv.shape
    out = np.zeros((S * (nf1 - 1) + T * (ng1 - 1) + 1,
                    S * (nf2 - 1) + T * (ng2 - 1) + 1))
    for i1, i2 in zip(*np.nonzero(f.values)):
        sl = out[S * i1: S * i1 + T * (ng1 - 1) + 1: T,
                 S * i2: S * i2 + T * (ng2 - 1) + 1: T]
        np.maximum(sl, combine(f.values[i1, i2]), out=sl)
    origin = s * f.origin + t * g.origin
    return SampledFn(origin, step_out, out, validate=False)


def supconv_radial_profiles(alpha, lam, fprof: Profile, gprof: Profile,
                            r_max: float, m: int = 1024):
    """Radial section of (1-lam).f (+) lam.g for origin-centered radial f, g.

    For radial non-increasing operands the optimal decomposition of an axis
    point stays on the axis (projecting both decomposition points onto the
    axis only increases the operand values), so a one-dimensional search is
    exact up to the grid.  Returns (r_grid, h_values).
    """
    r = np.linspace(0.0, r_max, m)
    x = np.linspace(-r_max, r_max, 2 * m - 1)
    fx = fprof.value(np.abs(x))
    y = (r[:, None] - (1.0 - lam) * x[None, :]) / lam
    gy = gprof.value(np.abs(y))
    vals = m_alpha(alpha, fx[None, :], gy, 1.0 - lam, lam)
    if alpha > 0:
        vals = np.where((fx[None, :] == 0) | (gy == 0), 0.0, vals)
    return r, vals.max(axis=1)


# ---------------------------------------------------------------------------
# lattice operations, powers, rearrangement, envelope


def lattice_min(f: QCFunction, g: QCFunction) -> LayeredFn:
    """Pointwise minimum; always quasi-concave, but may be empty."""
    fl, gl = f.as_layered(), g.as_layered()
    merged = sorted(set(fl.levels) | set(gl.levels))
    levels, bodies = [], []
    for r in merged:
        A, B = fl.superlevel(r), gl.superlevel(r)
        if A is None or B is None:
            break
        body = intersect(A, B)
        if body is None:
            break
        levels.append(r)
        bodies.append(body)
    if not levels:
        raise ValueError("pointwise minimum is identically zero")
    return LayeredFn(tuple(levels), tuple(bodies), validate=False)


def lattice_max(f: QCFunction, g: QCFunction) -> LayeredFn:
    """Pointwise maximum; requires every per-level union to be convex."""
    fl, gl = f.as_layered(), g.as_layered()
    merged = sorted(set(fl.levels) | set(gl.levels))
    levels, bodies = [], []
    for r in merged:
        A, B = fl.superlevel(r), gl.superlevel(r)
        if A is None and B is None:
            break
        if A is None:
            body = B
        elif B is None:
            body = A
        else:
            body = union_if_convex(A, B)  # raises ConvexityError if not convex
        levels.append(r)
        bodies.append(body)
    return LayeredFn(tuple(levels), tuple(bodies), validate=False)


def power(f: QCFunction, p: float) -> QCFunction:
    """f^p; superlevel sets satisfy {f^p >= t} = {f >= t^(1/p)}."""
    return f.power(p)


def rearrange(f: QCFunction) -> QCFunction:
    """Replace every level body by the origin-centered ball of equal mean
    width (equal W_{n-1})."""
    if isinstance(f, RadialFn):
        return f
    fl = f.as_layered()
    n = fl.dim
    bodies = tuple(Ball(n, np.zeros(n), geo.mean_width(b) / 2.0) for b in fl.bodies)
    return LayeredFn(fl.levels, bodies, validate=False)


def mu_envelope(f: QCFunction, r: float) -> float:
    """mu_f(r) = max of f over {|x| >= r}."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if isinstance(f, RadialFn):
        return float(f.profile.value(r))
    fl = f.as_layered()
    out = 0.0
    for t, body in zip(fl.levels, fl.bodies):
        if body.max_norm() >= r:
            out = t
    return out
