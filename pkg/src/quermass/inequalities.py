"""Verification harness for the concavity, integral-geometric, valuation
and isoperimetric properties of layer-cake functionals.

Every check returns a Report (lhs, rhs, margin, route).  Routes:

  exact   polygon/interval arithmetic, finite sums; tolerance 1e-9 scale
  grid    discretized functions or quadrature; tolerance stated per check
  mc      Monte-Carlo with 3-sigma (or stated) confidence bands

The discrete sup-convolution of sampled functions keeps all theorem margins
honest: grid decompositions land exactly on the output grid, so superlevel
index hulls satisfy the same Minkowski inclusion the continuum proof uses,
and the one-dimensional reduction applies verbatim to the resulting step
functions.  Only the gradient checks (central differences) carry genuine
discretization error, reflected in their stated tolerance.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from . import corpus
from .functionals import (DEFAULT_QUAD, QuadratureSpec, W, entropy, integral,
                          lp_norm, mean_width_f, perimeter)
from .geometry import Ball, kappa, random_subspace
from .means import INF, beta_hyp, beta_pl, m_alpha, m_lambda
from .qcfun import (CharFn, LayeredFn, QCFunction, RadialFn, lattice_max,
                    lattice_min, rearrange, supconv, supconv_radial_profiles)
from .report import Report


def run_cases(thunks):
    """Evaluate a list of zero-argument case thunks, optionally fanning out
    across QK_THREADS workers; results keep input order either way."""
    workers = int(os.environ.get("QK_THREADS", "1"))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(lambda fn: fn(), thunks))
    return [fn() for fn in thunks]


# ---------------------------------------------------------------------------
# functional identifiers


@dataclass(frozen=True)
class FunctionalId:
    """A monotone homogeneous functional: W_i, integral, perimeter or mean
    width.  Homogeneity order rho fixes the concavity exponent gamma = 1/rho."""

    kind: str
    n: int
    i: int | None = None

    def __post_init__(self):
        if self.kind not in ("wi", "integral", "perimeter", "mean_width"):
            raise ValueError(f"unknown functional kind {self.kind!r}")
        if self.kind == "wi":
            if self.i is None or not 0 <= self.i <= self.n - 1:
                raise ValueError("wi needs 0 <= i <= n-1 (W_n is constant)")
        if self.kind == "perimeter" and self.n < 2:
            raise ValueError("perimeter functional needs n >= 2")

    @property
    def rho(self) -> float:
        return {"wi": self.n - (self.i or 0), "integral": self.n,
                "perimeter": self.n - 1, "mean_width": 1}[self.kind]

    @property
    def gamma(self) -> float:
        return 1.0 / self.rho

    def value(self, f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD) -> float:
        if self.kind == "wi":
            return W(f, self.i, q)
        if self.kind == "integral":
            return integral(f, q)
        if self.kind == "perimeter":
            return perimeter(f, q)
        return mean_width_f(f, q)

    def label(self) -> str:
        return f"W_{self.i}" if self.kind == "wi" else self.kind


# ---------------------------------------------------------------------------
# one-dimensional concavity check


def check_pl_1d(gamma, alpha, lam, f, g, h=None,
                grid=(0.005, 14.0, 560), integrals=None,
                tol=1e-6, h_scale=1.0, check_hypothesis=True) -> Report:
    """One-dimensional concavity check on (0, inf).

    Hypothesis: h(M_gamma^{(lam)}(x, y)) >= M_alpha^{(lam)}(f(x), g(y)) for
    all x, y > 0 with f(x) g(y) > 0.  Conclusion: int h >= M_beta(int f,
    int g) with beta = alpha*gamma/(alpha+gamma).

    f, g are vectorized callables.  When h is omitted, the minimal
    admissible h is built by taking grid suprema of the right-hand side
    over decompositions (the sharpest test the theorem allows); a supplied
    h is first verified against the hypothesis on all grid pairs and the
    check fails with an exception, distinct from a conclusion violation,
    when the hypothesis itself is broken.
    """
    beta = beta_pl(alpha, gamma)
    lo, hi, m = grid
    xs = np.linspace(lo, hi, m)
    fx, gx = np.asarray(f(xs), float), np.asarray(g(xs), float)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    Z = m_lambda(gamma, X, Y, lam)
    V = m_lambda(alpha, fx[:, None], gx[None, :], lam)
    pos = (fx[:, None] > 0) & (gx[None, :] > 0)
    V = np.where(pos, V, 0.0)

    if h is not None:
        hz = np.asarray(h(Z.ravel()), float).reshape(Z.shape)
        if check_hypothesis:
            worst = float(np.min(np.where(pos, hz - V, np.inf)))
            if worst < -1e-9 * max(1.0, float(np.max(V))):
                raise ValueError(f"supplied h fails the hypothesis by {worst}")
        if integrals is not None:
            If, Ig, Ih = integrals
        else:
            If, Ig = np.trapz(fx, xs), np.trapz(gx, xs)
            Ih = np.trapz(np.asarray(h(xs), float), xs)
    else:
        zv = Z[pos]
        vv = V[pos]
        nb = 2 * m
        edges = np.linspace(float(zv.min()), float(zv.max()) * (1 + 1e-12), nb + 1)
        idx = np.clip(np.searchsorted(edges, zv, side="right") - 1, 0, nb - 1)
        H = np.zeros(nb)
        np.maximum.at(H, idx, vv)
        Ih = float(np.sum(H * np.diff(edges)))
        if integrals is not None:
            If, Ig, Ih = integrals[0], integrals[1], Ih
        else:
            If, Ig = np.trapz(fx, xs), np.trapz(gx, xs)
    Ih = Ih * h_scale
    rhs = m_lambda(beta, float(If), float(Ig), lam)
    return Report(check="pl_1d", lhs=float(Ih), rhs=float(rhs),
                  tol=tol * max(1.0, abs(rhs)), route="grid",
                  params={"n": 1, "alpha": alpha, "gamma": gamma,
                          "beta": beta, "lambda_or_s_t": lam})


# ---------------------------------------------------------------------------
# sup-convolution based checks


def _route_for(f, g):
    exact = (CharFn, LayeredFn)
    return "exact" if isinstance(f, exact) and isinstance(g, exact) else "grid"


def check_generalized_pl(phi: FunctionalId, alpha, lam, f: QCFunction,
                         g: QCFunction, q: QuadratureSpec = DEFAULT_QUAD,
                         h_scale=1.0, tol=None) -> Report:
    """Concavity of a monotone (gamma, lam)-concave functional under the
    sup-convolution h = (1-lam).f (+) lam.g, with beta = beta_pl(alpha, gamma)."""
    gamma = phi.gamma
    beta = beta_pl(alpha, gamma)  # validates alpha in [-gamma, +inf]
    h = supconv(alpha, 1.0 - lam, f, lam, g)
    lhs = phi.value(h, q) * h_scale
    rhs = m_lambda(beta, phi.value(f, q), phi.value(g, q), lam)
    route = _route_for(f, g)
    if tol is None:
        tol = 1e-9 if route == "exact" else 1e-6
    return Report(check=f"generalized_pl[{phi.label()}]", lhs=lhs, rhs=rhs,
                  tol=tol * max(1.0, abs(rhs)), route=route,
                  params={"n": phi.n, "i": phi.i, "alpha": alpha,
                          "gamma": gamma, "beta": beta, "lambda_or_s_t": lam})


def check_hyperbolic(phi: FunctionalId, alpha, s, t, f: QCFunction,
                     g: QCFunction, q: QuadratureSpec = DEFAULT_QUAD,
                     h_scale=1.0, tol=None) -> Report:
    """Hyperbolic-functional concavity with free weights:
    Phi(s.f (+) t.g) >= M_beta^{(s,t)}(Phi f, Phi g), beta = alpha/(1+alpha*rho)."""
    rho = phi.rho
    if alpha == 0 and abs(s + t - 1.0) > 1e-12:
        raise ValueError("alpha = 0 requires normalized weights s + t = 1")
    beta = beta_hyp(alpha, rho)
    h = supconv(alpha, s, f, t, g)
    lhs = phi.value(h, q) * h_scale
    rhs = m_alpha(beta, phi.value(f, q), phi.value(g, q), s, t)
    route = _route_for(f, g)
    if tol is None:
        tol = 1e-9 if route == "exact" else 1e-6
    return Report(check=f"hyperbolic[{phi.label()}]", lhs=lhs, rhs=rhs,
                  tol=tol * max(1.0, abs(rhs)), route=route,
                  params={"n": phi.n, "i": phi.i, "alpha": alpha,
                          "gamma": 1.0 / rho, "beta": beta,
                          "lambda_or_s_t": f"{s}:{t}"})


def check_quermass_pl(i, alpha, s, t, f, g, q=DEFAULT_QUAD,
                      h_scale=1.0, tol=None) -> Report:
    rep = check_hyperbolic(FunctionalId("wi", f.dim, i), alpha, s, t, f, g,
                           q, h_scale, tol)
    rep.check = "quermass_pl"
    return rep


def _radial_grad_integral(r, vals):
    dv = np.gradient(vals, r)
    return 2 * math.pi * float(np.trapz(np.abs(dv) * r, r))


def check_gradient_pl(alpha, lam, f: RadialFn, g: RadialFn,
                      r_max=10.0, m=1200, h_scale=1.0, tol=2e-3) -> Report:
    """Gradient-integral concavity for smooth radial functions in the plane:
    int |grad h| >= M_beta(int |grad f|, int |grad g|), beta = alpha/(1+alpha).

    h is the grid sup-convolution (its radial section: for origin-centered
    radial operands the optimal decomposition stays on the axis); all three
    gradient integrals use central differences plus the trapezoid rule.
    """
    if f.dim != 2 or g.dim != 2:
        raise ValueError("gradient check is set up for the plane")
    beta = beta_hyp(alpha, 1)
    r, hv = supconv_radial_profiles(alpha, lam, f.profile, g.profile, r_max, m)
    lhs = _radial_grad_integral(r, hv) * h_scale
    pf = _radial_grad_integral(r, np.asarray(f.profile.value(r), float))
    pg = _radial_grad_integral(r, np.asarray(g.profile.value(r), float))
    rhs = m_lambda(beta, pf, pg, lam)
    return Report(check="gradient_pl", lhs=lhs, rhs=rhs,
                  tol=tol * max(1.0, abs(rhs)), route="grid",
                  params={"n": 2, "alpha": alpha, "beta": beta,
                          "lambda_or_s_t": lam})


# ---------------------------------------------------------------------------
# valuation


def check_valuation(f: QCFunction, g: QCFunction, i: int,
                    q: QuadratureSpec = DEFAULT_QUAD) -> Report:
    """W_i(f ^ g) + W_i(f v g) = W_i(f) + W_i(g); the max path requires
    convex per-level unions and raises otherwise."""
    fmax = lattice_max(f, g)
    fmin = lattice_min(f, g)
    lhs = W(fmin, i, q) + W(fmax, i, q)
    rhs = W(f, i, q) + W(g, i, q)
    return Report(check="valuation", lhs=lhs, rhs=rhs, mode="eq", tol=1e-12,
                  route="exact", params={"n": f.dim, "i": i})


# ---------------------------------------------------------------------------
# Cauchy-Kubota


_KUBOTA_TRIPLES = {(2, 1), (3, 1), (3, 2)}


def calibrate_c(i: int, k: int, n: int) -> float:
    """Kubota constant calibrated on the unit ball: both sides of the
    formula are computed for B^n, whose projections are unit balls of the
    subspace, so c = W_i(B^n) / W_{i'}(B^k) with the matched intrinsic
    index i' = i + k - n."""
    if (n, k) not in _KUBOTA_TRIPLES:
        raise ValueError(f"unsupported (n, k) = {(n, k)}")
    ip = i + k - n
    if ip < 0 or i > n - 1:
        raise ValueError(f"index i={i} not calibratable for (n,k)={(n, k)}")
    num = Ball(n, np.zeros(n), 1.0).quermass()[i]
    den = Ball(k, np.zeros(k), 1.0).quermass()[ip]
    return float(num / den)


def check_cauchy_kubota(f: QCFunction, i: int, k: int, m: int, seed,
                        q: QuadratureSpec = DEFAULT_QUAD,
                        c_scale=1.0) -> Report:
    """Monte-Carlo Kubota recovery: W_i(f) versus the invariant average of
    W_{i+k-n}(f|L) over Haar-random k-subspaces, times c(i, k, n)."""
    n = f.dim
    c = calibrate_c(i, k, n) * c_scale
    ip = i + k - n
    fl = f
    vals = np.empty(m)
    if k == 1 and isinstance(f, (LayeredFn, CharFn)):
        # projection onto a line has length h(u) + h(-u); exact per sample
        fl = f.as_layered()
        U = np.empty((m, n))
        for j in range(m):
            U[j] = random_subspace(n, 1, [seed, j]).basis[0]
        vals[:] = 0.0
        prev = 0.0
        for t, body in zip(fl.levels, fl.bodies):
            lengths = body.support_batch(U) + body.support_batch(-U)
            if ip == 0:
                vals += (t - prev) * lengths
            else:
                vals += (t - prev) * kappa(1)
            prev = t
    else:
        for j in range(m):
            L = random_subspace(n, k, [seed, j])
            vals[j] = W(f.project(L), ip, q)
    est = c * float(vals.mean())
    sigma = c * float(vals.std(ddof=1)) / math.sqrt(m) if m > 1 else 0.0
    lhs = W(f, i, q)
    return Report(check="cauchy_kubota", lhs=lhs, rhs=est, mode="band",
                  tol=1e-12, route="mc",
                  params={"n": n, "i": i, "k": k, "seed": seed},
                  extra={"sigma": sigma, "nsigma": 3.0, "c": c, "samples": m})


# ---------------------------------------------------------------------------
# isoperimetric-type inequalities


def check_isoperimetric(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD,
                        lhs_scale=1.0) -> Report:
    """Per(f) >= n kappa_n^(1/n) ||f||_{n/(n-1)}; equality for balls."""
    n = f.dim
    if n < 2:
        raise ValueError("isoperimetric check needs n >= 2")
    lhs = perimeter(f, q) * lhs_scale
    rhs = n * kappa(n) ** (1.0 / n) * lp_norm(f, n / (n - 1), q)
    return Report(check="isoperimetric", lhs=lhs, rhs=rhs, tol=1e-9 * max(1.0, rhs),
                  route="exact", params={"n": n})


def check_entropy(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD,
                  lhs_scale=1.0) -> Report:
    """Per(f) >= n I(f) + Ent(f) + I(f) log(kappa_n) for log-concave f.

    The volume-of-the-ball term makes the inequality exact on unit-radius
    characteristic functions of balls, matching the first-variation bound
    it is derived from (perturbation by the ball indicator of mass kappa_n).
    """
    if not f.is_log_concave:
        raise ValueError("entropy bound needs a log-concave function")
    n = f.dim
    I = integral(f, q)
    lhs = perimeter(f, q) * lhs_scale
    rhs = n * I + entropy(f, q) + I * math.log(kappa(n))
    return Report(check="entropy_bound", lhs=lhs, rhs=rhs,
                  tol=1e-9 * max(1.0, abs(rhs)), route="exact",
                  params={"n": n})


def check_wk_wi(f: QCFunction, i: int, k: int,
                q: QuadratureSpec = DEFAULT_QUAD, lhs_scale=1.0) -> Report:
    """W_k(f) >= kappa_n^(1-1/p) W_i(f^p)^(1/p) with p = (n-i)/(n-k)."""
    n = f.dim
    if not 0 <= i <= k <= n - 1:
        raise ValueError("need 0 <= i <= k <= n-1")
    p = (n - i) / (n - k)
    lhs = W(f, k, q) * lhs_scale
    rhs = kappa(n) ** (1.0 - 1.0 / p) * W(f.power(p), i, q) ** (1.0 / p)
    return Report(check="wk_wi", lhs=lhs, rhs=rhs, tol=1e-9 * max(1.0, rhs),
                  route="exact", params={"n": n, "i": i, "k": k})


def check_urysohn(f: QCFunction, q: QuadratureSpec = DEFAULT_QUAD,
                  lhs_scale=1.0) -> Report:
    """M(f) >= 2 kappa_n^(-1/n) ||f||_n; equality for balls."""
    n = f.dim
    lhs = mean_width_f(f, q) * lhs_scale
    rhs = 2.0 * kappa(n) ** (-1.0 / n) * lp_norm(f, n, q)
    return Report(check="urysohn", lhs=lhs, rhs=rhs, tol=1e-9 * max(1.0, rhs),
                  route="exact", params={"n": n})


def check_rearrangement(f: QCFunction, k: int,
                        q: QuadratureSpec = DEFAULT_QUAD) -> Report:
    """W_k(f) versus the mean-width rearrangement W_k(f*).

    At k = n-1 the two sides agree exactly (the rearrangement preserves
    W_{n-1} level by level); this is the only index where dominance of f
    over f* holds in general, since for k < n-1 the Urysohn-type chain
    W_k(K) <= W_k(K*) runs the other way.
    """
    lhs = W(f, k, q)
    rhs = W(rearrange(f), k, q)
    return Report(check="rearrangement", lhs=lhs, rhs=rhs,
                  tol=1e-9 * max(1.0, abs(rhs)), route="exact",
                  params={"n": f.dim, "k": k})


# ---------------------------------------------------------------------------
# seeded suites


_PL1D_GAMMAS = (-INF, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0)
_LAMBDAS = (0.25, 0.5, 0.75)


def _pl1d_profile(rng):
    kind = rng.integers(0, 2)
    if kind == 0:
        a, b = float(rng.uniform(0.3, 3.0)), float(rng.uniform(0.4, 3.0))
        return (lambda x, a=a, b=b: a * np.exp(-b * np.asarray(x, float))), a / b
    c = float(rng.uniform(0.5, 2.0))
    r0 = float(rng.uniform(1.0, 6.0))
    p = float(rng.uniform(0.8, 2.5))

    def bump(x, c=c, r0=r0, p=p):
        x = np.asarray(x, float)
        return c * np.clip(1.0 - x / r0, 0.0, None) ** p

    return bump, c * r0 / (p + 1.0)


def suite_pl_1d(cases=504, seed=0, grid=(0.005, 14.0, 480)):
    """Random one-dimensional concavity checks over the admissible
    (gamma, alpha, lambda) grid, minimal h built by grid supremum."""
    thunks = []
    idx = 0
    while len(thunks) < cases:
        rng = np.random.default_rng([seed, idx])
        gamma = _PL1D_GAMMAS[idx % len(_PL1D_GAMMAS)]
        if gamma == -INF:
            alphas = [INF]
        else:
            alphas = [a for a in (-gamma, -0.25, 0.0, 1.0, INF) if a >= -gamma]
            if gamma < 0:
                alphas = [a for a in alphas if a > 0 or a == -gamma]
        alpha = alphas[int(rng.integers(0, len(alphas)))]
        if gamma < 0 and alpha == 0.0:
            alpha = 1.0
        lam = _LAMBDAS[idx % len(_LAMBDAS)]
        f, _ = _pl1d_profile(rng)
        g, _ = _pl1d_profile(rng)

        def thunk(gamma=gamma, alpha=alpha, lam=lam, f=f, g=g, case=idx):
            rep = check_pl_1d(gamma, alpha, lam, f, g, grid=grid)
            rep.params["seed"] = f"{seed}:{case}"
            return rep

        thunks.append(thunk)
        idx += 1
    return run_cases(thunks)


def _phi_grid():
    out = []
    for n in (1, 2):
        for i in range(n):
            out.append(FunctionalId("wi", n, i))
        out.append(FunctionalId("integral", n))
    out.append(FunctionalId("mean_width", 2))
    out.append(FunctionalId("perimeter", 2))
    return out


def _pair_for(rng, n, alpha, sampled_ok=True):
    """A function pair admitting supconv at this alpha."""
    if alpha not in (0.0,) and rng.random() < 0.5 or not sampled_ok or n > 2:
        return corpus.random_char(rng, n), corpus.random_char(rng, n)
    if math.isinf(alpha):
        return corpus.random_char(rng, n), corpus.random_char(rng, n)
    a = max(alpha, 0.25) if alpha > 0 else 1.0
    f = corpus.concave_power_sample(rng, dim=n, alpha=a)
    g = corpus.concave_power_sample(rng, dim=n, alpha=a)
    return f, g


def suite_generalized_pl(cases=512, seed=0):
    """Monotone gamma-concave functionals under normalized sup-convolution."""
    phis = _phi_grid()
    thunks = []
    idx = 0
    while len(thunks) < cases:
        rng = np.random.default_rng([seed, 10_000 + idx])
        phi = phis[idx % len(phis)]
        gamma = phi.gamma
        alphas = [a for a in (-gamma, -0.5, 0.0, 1.0, INF) if a >= -gamma]
        alpha = alphas[int(rng.integers(0, len(alphas)))]
        lam = _LAMBDAS[idx % len(_LAMBDAS)]
        sampled_ok = phi.n <= 2
        f, g = _pair_for(rng, phi.n, alpha, sampled_ok)

        def thunk(phi=phi, alpha=alpha, lam=lam, f=f, g=g, case=idx):
            rep = check_generalized_pl(phi, alpha, lam, f, g)
            rep.params["seed"] = f"{seed}:{case}"
            return rep

        thunks.append(thunk)
        idx += 1
    return run_cases(thunks)


_WEIGHTS = ((1.0, 1.0), (0.5, 0.5), (2.0, 1.0), (0.25, 0.75), (1.5, 1.5))


def suite_hyperbolic(cases=512, seed=0):
    """Quermassintegral concavity with free weights (Henstock-Macbeath form)."""
    combos = [(1, 0), (2, 0), (2, 1), (3, 0), (3, 2)]
    thunks = []
    idx = 0
    while len(thunks) < cases:
        rng = np.random.default_rng([seed, 20_000 + idx])
        n, i = combos[idx % len(combos)]
        rho = n - i
        s, t = _WEIGHTS[idx % len(_WEIGHTS)]
        alphas = [-1.0 / rho, -0.5, 0.0, 1.0, INF]
        alphas = [a for a in alphas if a >= -1.0 / rho]
        if abs(s + t - 1.0) > 1e-12:
            alphas = [a for a in alphas if a != 0.0]
        alpha = alphas[int(rng.integers(0, len(alphas)))]
        f, g = _pair_for(rng, n, alpha, sampled_ok=(n <= 2 and abs(s * 4 - round(s * 4)) < 1e-12
                                                    and abs(t * 4 - round(t * 4)) < 1e-12))

        def thunk(n=n, i=i, alpha=alpha, s=s, t=t, f=f, g=g, case=idx):
            rep = check_quermass_pl(i, alpha, s, t, f, g)
            rep.params["seed"] = f"{seed}:{case}"
            return rep

        thunks.append(thunk)
        idx += 1
    return run_cases(thunks)


def suite_gradient_pl(cases=500, seed=0, m=900):
    """Smooth radial gradient-integral checks in the plane."""
    thunks = []
    for idx in range(cases):
        rng = np.random.default_rng([seed, 30_000 + idx])
        alpha = (-1.0, -0.5, 0.0, 1.0)[idx % 4]
        lam = _LAMBDAS[idx % len(_LAMBDAS)]
        f = RadialFn(2, corpus.random_gauss_profile(rng))
        g = RadialFn(2, corpus.random_gauss_profile(rng))

        def thunk(alpha=alpha, lam=lam, f=f, g=g, case=idx):
            rep = check_gradient_pl(alpha, lam, f, g, m=m)
            rep.params["seed"] = f"{seed}:{case}"
            return rep

        thunks.append(thunk)
    return run_cases(thunks)


def exponential_equality_case(a=2.0, b=3.0, lam=0.5) -> Report:
    """The sharpness regression in dimension one: f = a e^{-x}, g = b e^{-x}
    on (0, inf) with h = M_0(a, b) e^{-x} turn the conclusion into equality.
    Exact integrals are supplied so the margin is zero to rounding."""
    m0 = m_lambda(0.0, a, b, lam)
    f = lambda x: a * np.exp(-np.asarray(x, float))
    g = lambda x: b * np.exp(-np.asarray(x, float))
    h = lambda x: m0 * np.exp(-np.asarray(x, float))
    rep = check_pl_1d(1.0, 0.0, lam, f, g, h=h, integrals=(a, b, m0), tol=1e-9)
    rep.check = "pl_1d_equality"
    return rep


def negative_controls(seed=0):
    """Equality-tight fixtures with h (or the lhs) corrupted by 0.9; every
    resulting report must be a violation."""
    rng = np.random.default_rng([seed, 77])
    out = []
    f1, _ = _pl1d_profile(rng)
    out.append(check_pl_1d(0.5, 1.0, 0.5, f1, f1, h_scale=0.9))
    c = corpus.random_char(rng, 2)
    out.append(check_generalized_pl(FunctionalId("wi", 2, 0), 1.0, 0.5, c, c,
                                    h_scale=0.9))
    out.append(check_quermass_pl(1, INF, 0.5, 0.5, c, c, h_scale=0.9))
    gf = RadialFn(2, corpus.random_gauss_profile(rng))
    out.append(check_gradient_pl(0.0, 0.5, gf, gf, h_scale=0.9))
    ball = CharFn(1.0, Ball(2, np.zeros(2), 1.0))
    for chk in (check_isoperimetric, check_entropy, check_urysohn):
        out.append(chk(ball, lhs_scale=0.9))
    out.append(check_wk_wi(ball, 0, 1, lhs_scale=0.9))
    out.append(check_cauchy_kubota(ball, 1, 1, 200, seed, c_scale=0.9))
    for rep in out:
        rep.check = "negative_control[" + rep.check + "]"
    return out


SUITES = {
    "pl1d": suite_pl_1d,
    "generalized": suite_generalized_pl,
    "hyperbolic": suite_hyperbolic,
    "gradient": suite_gradient_pl,
}
