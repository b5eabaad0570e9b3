"""Layer-cake functionals of quasi-concave functions.

The i-th quermassintegral of f is

    W_i(f) = int_0^inf  W_i({f >= t}) dt ,

a finite sum for layered functions and a profile moment for radial ones
(kappa_n times the (n-i)-th moment of the jump measure of the profile).
Derived quantities follow the convex-body normalizations:

    Per(f) = n W_1(f),   M(f) = 2 W_{n-1}(f) / kappa_n,
    chi(f) = W_n(f) / kappa_n = max f,   I(f) = W_0(f).

Rounding f_rho (sup over rho-balls) obeys the Steiner-type expansion
I(f_rho) = sum_i C(n,i) W_i(f) rho^i, and the dual expansion Psi(rho)
below replaces the roles of f and the unit ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .geometry import Ball, Interval, ParallelBody, kappa, mean_width
from .qcfun import CharFn, ExpNegSupportFn, LayeredFn, QCFunction, RadialFn, SampledFn
from .means import INF
from .report import Report


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for every non-exact evaluation path."""

    t_nodes: int = 400
    t_placement: str = "log"
    angular_nodes: int = 720
    mc_samples: int = 1_000_000
    seed: int = 0
    tol: float = 1e-9
    grid_step: float = 1e-2

    def __post_init__(self):
        if self.t_nodes < 1 or self.angular_nodes < 1 or self.mc_samples < 1:
            raise ValueError("node counts must be at least 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


DEFAULT_QUAD = QuadratureSpec()


def _layered_sum(f: LayeredFn, i: int) -> float:
    total, prev = 0.0, 0.0
    for t, body in zip(f.levels, f.bodies):
        total += (t - prev) * body.quermass()[i]
        prev = t
    return total


def W(f: QCFunction, i: int, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """i-th quermassintegral of f; +inf when the layer-cake diverges."""
    n = f.dim
    if not 0 <= i <= n:
        raise ValueError(f"index {i} outside 0..{n}")
    if isinstance(f, (LayeredFn, CharFn)):
        return _layered_sum(f.as_layered(), i)
    if isinstance(f, RadialFn):
        if f.unbounded_max and i == n:
            return INF
        return kappa(n) * f.profile.moment(n - i)
    if isinstance(f, SampledFn):
        total, prev = 0.0, 0.0
        for t in f.distinct_levels():
            body = f.superlevel(t)
            total += (t - prev) * body.quermass()[i]
            prev = t
        return total
    raise ValueError(f"no quermassintegral route for {type(f).__name__}")


def all_W(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> np.ndarray:
    return np.array([W(f, i, q) for i in range(f.dim + 1)])


def integral(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    return W(f, 0, q)


def perimeter(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    return f.dim * W(f, 1, q)


def mean_width_f(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    n = f.dim
    return 2.0 * W(f, n - 1, q) / kappa(n)


def euler(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    return W(f, f.dim, q) / kappa(f.dim)


# ---------------------------------------------------------------------------
# Steiner expansion of I(f_rho)


@dataclass(frozen=True)
class SteinerPoly:
    """I(f_rho) = sum_i coeffs[i] * rho^i with coeffs[i] = C(n,i) W_i(f)."""

    dim: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if len(c) != self.dim + 1:
            raise ValueError("need n + 1 coefficients")
        if np.any(c < -1e-12):
            raise ValueError("coefficients must be nonnegative")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __call__(self, rho):
        rho = np.asarray(rho, dtype=float)
        out = sum(c * rho ** i for i, c in enumerate(self.coeffs))
        return float(out) if rho.ndim == 0 else out


def steiner_poly(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> SteinerPoly:
    n = f.dim
    w = all_W(f, q)
    if not np.all(np.isfinite(w)):
        raise ValueError("infinite quermassintegral: no Steiner polynomial")
    return SteinerPoly(n, np.array([math.comb(n, i) * w[i] for i in range(n + 1)]))


def bounding_box(body):
    """Axis-aligned bounds of a body, as (lo, hi) arrays."""
    if isinstance(body, ParallelBody):
        lo, hi = bounding_box(body.base)
        return lo - body.rho, hi + body.rho
    if isinstance(body, Interval):
        return np.array([body.a]), np.array([body.b])
    if isinstance(body, Ball):
        return body.center - body.radius, body.center + body.radius
    v = body.vertices
    return v.min(axis=0), v.max(axis=0)


def mc_integral_rounded(f: QCFunction, rho: float,
                        q: QuadratureSpec = DEFAULT_QUAD,
                        block: int = 250_000):
    """Monte-Carlo estimate of I(f_rho) by direct sup-over-ball evaluation.

    Sampling runs in fixed-size blocks with per-block seed substreams, so
    the result is independent of the block size and reproducible.
    Returns (estimate, sigma).
    """
    support = f.support_body
    if support is None:
        raise ValueError("Monte-Carlo route needs a compactly supported function")
    lo, hi = bounding_box(support)
    lo, hi = lo - rho, hi + rho
    vol_box = float(np.prod(hi - lo))
    fr = f.round(rho)
    n = f.dim
    total = total_sq = 0.0
    count = 0
    b = 0
    while count < q.mc_samples:
        m = min(block, q.mc_samples - count)
        rng = np.random.default_rng([q.seed, b])
        pts = lo + (hi - lo) * rng.random((m, n))
        vals = fr(pts[:, 0] if n == 1 else pts)
        total += float(np.sum(vals))
        total_sq += float(np.sum(vals * vals))
        count += m
        b += 1
    mean = total / count
    var = max(total_sq / count - mean * mean, 0.0)
    est = vol_box * mean
    sigma = vol_box * math.sqrt(var / count)
    return est, sigma


def steiner_check(f: QCFunction, rho_list, q: QuadratureSpec = DEFAULT_QUAD,
                  mc_rho: float | None = None):
    """Two independent evaluations of I(f_rho) against the polynomial.

    Route (a): exact summation through parallel-body quermassintegrals.
    Route (b): Monte-Carlo sup-over-ball sampling at one rho (optional).
    Returns a list of Reports, one per rho plus one for the MC route.
    """
    poly = steiner_poly(f, q)
    reports = []
    for rho in rho_list:
        lhs = integral(f.round(rho), q)
        rhs = poly(rho)
        reports.append(Report(
            check="steiner_exact", lhs=lhs, rhs=rhs, mode="eq",
            tol=1e-10 * max(1.0, abs(rhs)), route="exact",
            params={"n": f.dim, "alpha": rho}))
    if mc_rho is not None:
        est, sigma = mc_integral_rounded(f, mc_rho, q)
        reports.append(Report(
            check="steiner_mc", lhs=est, rhs=poly(mc_rho), mode="band",
            tol=1e-12, route="mc",
            params={"n": f.dim, "alpha": mc_rho, "seed": q.seed},
            extra={"sigma": sigma, "nsigma": 5.0}))
    return reports


def richardson(values, ratio=2.0):
    """Richardson extrapolation for g(h_j) = L + c1 h_j + c2 h_j^2 + ...
    sampled on a geometric ladder h_j = h_0 / ratio^j (j increasing)."""
    T = [list(map(float, values))]
    m = 1
    while len(T[-1]) > 1:
        prev = T[-1]
        fac = ratio ** m
        T.append([(fac * prev[j + 1] - prev[j]) / (fac - 1.0)
                  for j in range(len(prev) - 1)])
        m += 1
    return T[-1][0]


def per_limit_check(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD,
                    rho0: float = 1e-2, nodes: int = 6) -> Report:
    """Slope of I(f_rho) at 0 recovers Per(f)."""
    base = integral(f, q)
    rhos = [rho0 / 2 ** j for j in range(nodes)]
    slopes = [(integral(f.round(r), q) - base) / r for r in rhos]
    lhs = richardson(slopes)
    rhs = perimeter(f, q)
    return Report(check="per_limit", lhs=lhs, rhs=rhs, mode="eq",
                  tol=1e-6 * max(1.0, abs(rhs)), route="exact",
                  params={"n": f.dim}, extra={"raw_slopes": slopes})


def mwidth_limit_check(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD,
                       rho0: float = 1e3, nodes: int = 4) -> Report:
    """Large-rho limit of (I(f_rho) - kappa_n max(f) rho^n) / rho^(n-1)
    recovers n kappa_n M(f) / 2; extrapolation runs in 1/rho."""
    n = f.dim
    top = kappa(n) * f.max_value
    rhos = [rho0 * 2 ** j for j in range(nodes)]
    vals = [(integral(f.round(r), q) - top * r ** n) / r ** (n - 1) for r in rhos]
    lhs = 2.0 / (n * kappa(n)) * richardson(vals)
    rhs = mean_width_f(f, q)
    return Report(check="mwidth_limit", lhs=lhs, rhs=rhs, mode="eq",
                  tol=1e-6 * max(1.0, abs(rhs)), route="exact",
                  params={"n": f.dim}, extra={"raw_value_at_rho0": vals[0]})


# ---------------------------------------------------------------------------
# dual expansion


def dual_psi(f: QCFunction, rho: float, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Psi(rho) = sum_j C(n,j) rho^(j+1) int_0^m W_{n-j}(cl{f>t}) t^(rho-1) dt.

    For layered functions the t-integral is exact: on (r_{i-1}, r_i) the
    strict superlevel is the body at level r_i, and the t^(rho-1) weight
    integrates to (r_i^rho - r_{i-1}^rho)/rho (the substitution u = t^rho,
    which also removes the rho -> 0 singularity).
    """
    if rho <= 0:
        raise ValueError("rho must be positive")
    fl = f.as_layered()
    n = fl.dim
    levels = np.array(fl.levels)
    powers = levels ** rho
    prev = np.concatenate([[0.0], powers[:-1]])
    seg = powers - prev  # (r_i^rho - r_{i-1}^rho)
    wmat = np.array([b.quermass() for b in fl.bodies])  # shape (m, n+1)
    total = 0.0
    for j in range(n + 1):
        moment = float(np.dot(seg, wmat[:, n - j]))  # = rho * int W_{n-j} t^(rho-1)
        total += math.comb(n, j) * rho ** j * moment
    return total


def dual_mwidth(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Psi'(0+): kappa_n log(max f) + n W_{n-1}(support) for log-concave f
    with compact support, +inf otherwise."""
    if not f.is_log_concave:
        raise ValueError("closed form requires a log-concave function")
    support = f.support_body
    if support is None:
        return INF
    n = f.dim
    return kappa(n) * math.log(f.max_value) + n * support.quermass()[n - 1]


def dual_mwidth_check(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD,
                      rho0: float = 1e-4, nodes: int = 3) -> Report:
    """Finite differences (Psi(rho) - Psi(0))/rho with Psi(0) = kappa_n,
    Richardson-extrapolated down a geometric ladder ending at rho0."""
    n = f.dim
    rhos = [rho0 * 2 ** j for j in range(nodes)][::-1]  # descending to rho0
    slopes = [(dual_psi(f, r, q) - kappa(n)) / r for r in rhos]
    lhs = richardson(slopes)
    rhs = dual_mwidth(f, q)
    raw = slopes[-1]
    return Report(check="dual_mwidth", lhs=lhs, rhs=rhs, mode="eq",
                  tol=1e-4 * max(1.0, abs(rhs)), route="exact",
                  params={"n": n}, extra={"raw_slope_at_rho0": raw})


def psi_table(f: QCFunction, rho_list, q: QuadratureSpec = DEFAULT_QUAD):
    return [(rho, dual_psi(f, rho, q)) for rho in rho_list]


# ---------------------------------------------------------------------------
# bounds, norms, entropy


def moment_bound(f: QCFunction, i: int, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """kappa_n int r^(n-i) d mu_f(r), an upper bound for W_i(f) with
    equality for radial functions."""
    n = f.dim
    if isinstance(f, RadialFn):
        return kappa(n) * f.profile.moment(n - i)
    fl = f.as_layered()
    radii = [b.max_norm() for b in fl.bodies]
    total, prev = 0.0, 0.0
    for t, r in zip(fl.levels, radii):
        total += r ** (n - i) * (t - prev)
        prev = t
    return kappa(n) * total


def lp_norm(f: QCFunction, p: float, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    if p <= 0:
        raise ValueError("p must be positive")
    return integral(f.power(p), q) ** (1.0 / p)


def entropy(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Ent(f) = int f log f - I(f) log I(f)."""
    I = integral(f, q)
    if not math.isfinite(I) or I <= 0:
        raise ValueError("entropy needs a finite positive integral")
    if isinstance(f, (LayeredFn, CharFn)):
        fl = f.as_layered()
        vols = [b.volume() for b in fl.bodies] + [0.0]
        flogf = sum((vols[k] - vols[k + 1]) * t * math.log(t)
                    for k, t in enumerate(fl.levels))
    elif isinstance(f, RadialFn):
        n, prof = f.dim, f.profile
        sphere = n * kappa(n)

        def integrand(r):
            val = float(prof.value(r))
            return 0.0 if val <= 0 else val * math.log(val) * sphere * r ** (n - 1)

        upper = prof.support_radius
        if math.isinf(upper):
            upper = max(prof.level_radius(prof.max_value * 1e-14), 1.0)
        flogf = integrate.quad(integrand, 0, upper, limit=200)[0]
    else:
        raise ValueError(f"no entropy route for {type(f).__name__}")
    return flogf - I * math.log(I)
