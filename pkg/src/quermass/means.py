"""Weighted power means on the extended half-line [0, +inf].

M_alpha^{(s,t)}(u, v) = (s*u^alpha + t*v^alpha)^(1/alpha) for finite
nonzero alpha, u^s * v^t for alpha = 0, and min / max at alpha = -inf /
+inf.  Zero and infinite arguments follow the conventions that keep the
mean monotone in each argument:

  * alpha <= 0 and u*v == 0        ->  0
  * alpha <= 0 and {u, v} = {0, inf} -> 0
  * alpha  > 0 and inf in {u, v}   ->  +inf

These edge cases drive the correctness of the inequality harness, so each
is an explicit branch rather than an accident of float arithmetic.

The module also hosts the exponent maps sending a hypothesis mean alpha to
the conclusion mean beta in the concavity theorems.  They return inf / -inf
symbolically (math.inf), never saturated finite floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .report import Report

INF = math.inf


@dataclass(frozen=True)
class Weights:
    s: float
    t: float

    def __post_init__(self):
        if self.s <= 0 or self.t <= 0:
            raise ValueError("weights must be positive")

    @property
    def normalized(self) -> bool:
        return abs(self.s + self.t - 1.0) < 1e-12

    @classmethod
    def from_lambda(cls, lam: float) -> "Weights":
        return cls(1.0 - lam, lam)


def m_alpha(alpha, u, v, s, t):
    """M_alpha^{(s,t)}(u, v), vectorized over u and v."""
    if s <= 0 or t <= 0:
        raise ValueError("weights must be positive")
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if np.any(u < 0) or np.any(v < 0):
        raise ValueError("arguments must be nonnegative")
    scalar = u.ndim == 0 and v.ndim == 0
    u, v = np.broadcast_arrays(u, v)

    if alpha == INF:
        out = np.maximum(u, v)
    elif alpha == -INF:
        out = np.minimum(u, v)
    elif alpha == 0:
        zero = (u == 0) | (v == 0)
        infty = ((u == INF) | (v == INF)) & ~zero
        with np.errstate(divide="ignore", invalid="ignore"):
            out = np.exp(s * np.log(u) + t * np.log(v))
        out = np.where(zero, 0.0, out)
        out = np.where(infty, INF, out)
    else:
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            a = alpha * np.log(u) + math.log(s)
            b = alpha * np.log(v) + math.log(t)
            m = np.maximum(a, b)
            lse = m + np.log(np.exp(a - m) + np.exp(b - m))
            out = np.exp(lse / alpha)
        if alpha > 0:
            out = np.where((u == 0) & (v == 0), 0.0, out)
            out = np.where((u == INF) | (v == INF), INF, out)
        else:
            out = np.where((u == 0) | (v == 0), 0.0, out)
            out = np.where((u == INF) & (v == INF), INF, out)
    return float(out) if scalar else out


def m_lambda(alpha, u, v, lam):
    """M_alpha with weights (1-lam, lam)."""
    if not 0 < lam < 1:
        raise ValueError("lambda must lie in (0, 1)")
    return m_alpha(alpha, u, v, 1.0 - lam, lam)


def beta_pl(alpha, gamma):
    """Conclusion exponent alpha*gamma/(alpha+gamma) of the one-dimensional
    concavity theorem, with the extreme conventions

        alpha = -gamma  -> -inf,   alpha = +inf -> gamma,
        gamma = -inf    -> -inf.
    """
    if not -INF <= gamma <= 1:
        raise ValueError(f"gamma={gamma} outside [-inf, 1]")
    if gamma == -INF:
        if alpha != INF:
            raise ValueError("gamma = -inf admits only alpha = +inf")
        return -INF
    if alpha < -gamma or alpha > INF:
        raise ValueError(f"alpha={alpha} outside [{-gamma}, +inf]")
    if alpha == INF:
        return float(gamma)
    if gamma == 0 or alpha == 0:
        return 0.0
    if alpha == -gamma:
        return -INF
    return alpha * gamma / (alpha + gamma)


def beta_hyp(alpha, rho):
    """Exponent alpha/(1 + alpha*rho) for hyperbolic functionals homogeneous
    of order rho; extremes alpha = -1/rho -> -inf and alpha = +inf -> 1/rho."""
    if rho == 0:
        raise ValueError("homogeneity order must be nonzero")
    lo = -1.0 / rho
    if alpha < lo:
        raise ValueError(f"alpha={alpha} below -1/rho={lo}")
    if alpha == INF:
        return 1.0 / rho
    if alpha == lo:
        return -INF
    return alpha / (1.0 + alpha * rho)


def beta_bl(alpha, n):
    """Dimensional exponent alpha/(1 + alpha*n) (volume functional in R^n)."""
    return beta_hyp(alpha, n)


def _inv(a):
    if a == INF:
        return 0.0
    if a == -INF:
        return -0.0
    return 1.0 / a


def holder_admissible(alpha0, alpha1, alpha2, tol=1e-12):
    """Admissible exponent triples of the two-term Holder-type inequality
    M_{a1}(u1,v1) * M_{a2}(u2,v2) >= M_{a0}(u1*u2, v1*v2)."""
    if alpha0 == alpha1 == 0 and 0 <= alpha2 <= INF:
        return True
    if alpha0 == alpha2 == 0 and 0 <= alpha1 <= INF:
        return True
    if alpha0 == -INF:
        if (alpha1 == INF and alpha2 == -INF) or (alpha1 == -INF and alpha2 == INF):
            return True
        if alpha1 == -INF or alpha2 == -INF:
            return False
        return alpha1 + alpha2 >= 0
    if alpha1 == 0 or alpha2 == 0 or alpha0 == 0:
        return False
    if alpha1 == -INF or alpha2 == -INF:
        return False
    if not (alpha1 + alpha2 > 0 or alpha1 == INF or alpha2 == INF):
        return False
    return abs(_inv(alpha0) - (_inv(alpha1) + _inv(alpha2))) <= tol


def holder_product_check(alpha0, alpha1, alpha2, w: Weights,
                         u1, u2, v1, v2, tol=1e-9) -> Report:
    """Check the Holder-type product inequality on one concrete input."""
    if not holder_admissible(alpha0, alpha1, alpha2):
        raise ValueError(f"inadmissible exponent triple ({alpha0}, {alpha1}, {alpha2})")
    lhs = m_alpha(alpha1, u1, v1, w.s, w.t) * m_alpha(alpha2, u2, v2, w.s, w.t)
    rhs = m_alpha(alpha0, u1 * u2, v1 * v2, w.s, w.t)
    return Report(
        check="holder_product",
        lhs=float(lhs),
        rhs=float(rhs),
        tol=tol,
        route="exact",
        params={"alpha": alpha1, "gamma": alpha2, "beta": alpha0,
                "lambda_or_s_t": f"{w.s}:{w.t}"},
    )
