"""Seeded random test corpora: convex polygons, nested layer stacks,
radial profiles.  Everything is driven by numpy Generators so suites are
reproducible and parallel workers can use disjoint substreams."""

from __future__ import annotations

import math

import numpy as np

from .geometry import Ball, Interval, Polygon, Polytope3, clip_halfplane
from .qcfun import (CharFn, ExpProfile, GaussProfile, LayeredFn,
                    PowerCutProfile, RadialFn, SampledFn, StepsProfile)


def valtr_polygon(rng, m: int, scale: float = 1.0) -> Polygon:
    """Random convex polygon with m vertices (Valtr's construction:
    split sorted coordinates into two chains, pair the increments at
    random, sort the vectors by angle and chain them up)."""

    def increments(k):
        x = np.sort(rng.random(k))
        lo, hi = x[0], x[-1]
        mid = x[1:-1]
        side = rng.random(k - 2) < 0.5
        upper = np.concatenate([[lo], mid[side], [hi]])
        lower = np.concatenate([[lo], mid[~side], [hi]])
        return np.concatenate([np.diff(upper), -np.diff(lower)])

    dx = increments(m)
    dy = increments(m)
    rng.shuffle(dy)
    vec = np.column_stack([dx, dy])
    ang = np.arctan2(vec[:, 1], vec[:, 0])
    vec = vec[np.argsort(ang)]
    pts = np.cumsum(vec, axis=0)
    pts -= pts.mean(axis=0)
    return Polygon(pts * scale)


def random_polygon(rng, m_range=(4, 8), scale_range=(0.5, 2.0),
                   center_range=0.0) -> Polygon:
    m = int(rng.integers(m_range[0], m_range[1] + 1))
    poly = valtr_polygon(rng, m, scale=float(rng.uniform(*scale_range)))
    if center_range:
        poly = poly.translate(rng.uniform(-center_range, center_range, 2))
    return poly


def polygon_with_origin_interior(rng, m_range=(4, 8), margin=0.2) -> Polygon:
    """Random polygon whose interior contains a margin-ball at the origin."""
    while True:
        poly = random_polygon(rng, m_range, scale_range=(1.0, 2.5))
        poly = poly.translate(-poly.vertices.mean(axis=0))
        if _origin_inradius(poly) > margin:
            return poly


def _origin_inradius(poly: Polygon) -> float:
    v = poly.vertices
    e = np.roll(v, -1, axis=0) - v
    lens = np.linalg.norm(e, axis=1)
    # signed distance from origin to each edge line (positive inside, CCW)
    d = (e[:, 0] * (-v[:, 1]) - e[:, 1] * (-v[:, 0])) / lens
    return float(d.min())


def nested_stack(rng, n_levels_range=(3, 6), m_range=(4, 8),
                 clip_prob=0.5) -> LayeredFn:
    """Random layered function in the plane: a random polygon shrunk toward
    its centroid level by level, occasionally clipped by a chord for shape
    variety (both operations preserve nesting)."""
    k = int(rng.integers(n_levels_range[0], n_levels_range[1] + 1))
    outer = random_polygon(rng, m_range, scale_range=(0.8, 2.0),
                           center_range=0.5)
    levels = np.sort(rng.uniform(0.2, 3.0, k))
    bodies = [outer]
    body = outer
    for _ in range(k - 1):
        centroid = body.vertices.mean(axis=0)
        lam = float(rng.uniform(0.55, 0.9))
        shrunk = Polygon(centroid + lam * (body.vertices - centroid))
        if rng.random() < clip_prob and len(shrunk.vertices) >= 4:
            centroid = shrunk.vertices.mean(axis=0)
            normal = rng.standard_normal(2)
            normal /= np.linalg.norm(normal)
            offset = float(normal @ centroid) + float(rng.uniform(0.05, 0.3))
            clipped = clip_halfplane(shrunk, normal, offset)
            if clipped is not None and not clipped.is_degenerate:
                shrunk = clipped
        bodies.append(shrunk)
        body = shrunk
    return LayeredFn(tuple(levels), tuple(bodies), validate=False)


def nested_interval_stack(rng, n_levels_range=(2, 5)) -> LayeredFn:
    k = int(rng.integers(n_levels_range[0], n_levels_range[1] + 1))
    a = np.sort(rng.uniform(-3, 0, k))[::-1]
    b = np.sort(rng.uniform(0.2, 3, k))[::-1]
    levels = np.sort(rng.uniform(0.2, 3.0, k))
    bodies = tuple(Interval(float(ai), float(bi)) for ai, bi in zip(a, b))
    return LayeredFn(tuple(levels), bodies, validate=False)


def random_char(rng, n=2) -> CharFn:
    height = float(rng.uniform(0.3, 3.0))
    if n == 1:
        lo = float(rng.uniform(-2, 0))
        return CharFn(height, Interval(lo, lo + float(rng.uniform(0.3, 3.0))))
    if n == 2:
        return CharFn(height, random_polygon(rng, center_range=0.5))
    return CharFn(height, random_polytope3(rng))


def random_polytope3(rng, m_range=(6, 12)) -> Polytope3:
    m = int(rng.integers(m_range[0], m_range[1] + 1))
    pts = rng.standard_normal((m, 3)) * rng.uniform(0.5, 1.5)
    return Polytope3(pts)


def random_exp_profile(rng) -> ExpProfile:
    """Log-affine radial profile c * exp(-a r)."""
    return ExpProfile(rate=float(rng.uniform(0.5, 3.0)),
                      scale=float(rng.uniform(0.3, 3.0)))


def random_gauss_profile(rng) -> GaussProfile:
    return GaussProfile(scale=float(rng.uniform(0.3, 3.0)),
                        width=float(rng.uniform(0.5, 2.0)))


def random_steps_profile(rng, k_range=(2, 5)) -> StepsProfile:
    k = int(rng.integers(k_range[0], k_range[1] + 1))
    rs = np.sort(rng.uniform(0.2, 3.0, k))
    fs = np.sort(rng.uniform(0.2, 3.0, k))[::-1]
    return StepsProfile(tuple(rs), tuple(fs))


def _quantize_up(values, n_levels):
    """Round positive values up to multiples of max/n_levels.  Superlevel
    sets at the quantized thresholds equal those of the original function,
    so quasi-concavity is preserved while the value set stays small (which
    keeps layer-cake sweeps over sup-convolution outputs cheap)."""
    vmax = float(values.max())
    q = vmax / n_levels
    return np.where(values > 0, np.ceil(values / q - 1e-12) * q, 0.0)


def concave_power_sample(rng, dim=1, m=None, step=None, alpha=1.0,
                         n_levels=12) -> SampledFn:
    """Sampled alpha-concave bump: scale * (1 - |x - x0| / R)_+^(1/alpha)
    (for alpha > 0; a quasi-concave cap profile otherwise), with values
    quantized to n_levels distinct heights."""
    expo = 1.0 / alpha if alpha > 0 else float(rng.uniform(0.5, 2.0))
    scale = float(rng.uniform(0.5, 2.0))
    R = float(rng.uniform(0.6, 1.4))
    if dim == 1:
        m = m or 241
        step = step or 0.025
        x0 = float(rng.uniform(-0.5, 0.5))
        xs = -3.0 + step * np.arange(m)
        base = np.clip(1.0 - np.abs(xs - x0) / R, 0.0, None)
        vals = _quantize_up(scale * base ** expo, n_levels)
        return SampledFn(np.array([-3.0]), step, vals, validate=False)
    m = m or 61
    step = step or 0.1
    x0 = rng.uniform(-0.4, 0.4, 2)
    xs = -3.0 + step * np.arange(m)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    rad = np.hypot(X - x0[0], Y - x0[1])
    base = np.clip(1.0 - rad / R, 0.0, None)
    vals = _quantize_up(scale * base ** expo, n_levels)
    return SampledFn(np.array([-3.0, -3.0]), step, vals, validate=False)


def valuation_pair(rng, overlap=True):
    """Layered pair (f, g) whose per-level unions are convex: each level of
    a common stack is split by two parallel half-planes that overlap, so
    union = full level and intersection = a slab."""
    stack = nested_stack(rng, clip_prob=0.0)
    normal = rng.standard_normal(2)
    normal /= np.linalg.norm(normal)
    inner = stack.bodies[-1]
    centroid = inner.vertices.mean(axis=0)
    c = float(normal @ centroid)
    spread = float(rng.uniform(0.02, 0.1))
    hi_cut = c + spread  # f keeps normal.x <= hi_cut
    lo_cut = c - spread  # g keeps normal.x >= lo_cut
    f_bodies, g_bodies = [], []
    for body in stack.bodies:
        fb = clip_halfplane(body, normal, hi_cut)
        gb = clip_halfplane(body, -normal, -lo_cut)
        if fb is None or gb is None:
            return valuation_pair(rng, overlap)
        f_bodies.append(fb)
        g_bodies.append(gb)
    f = LayeredFn(stack.levels, tuple(f_bodies), validate=False)
    g = LayeredFn(stack.levels, tuple(g_bodies), validate=False)
    return f, g


def disjoint_char_pair(rng):
    """Inadmissible pair: far-apart squares, union is never convex."""
    a = random_polygon(rng, (4, 4), scale_range=(0.4, 0.8))
    b = random_polygon(rng, (4, 4), scale_range=(0.4, 0.8)).translate([10.0, 0.0])
    return CharFn(1.0, a), CharFn(1.0, b)
