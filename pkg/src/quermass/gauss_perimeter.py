"""The q-Gaussian perimeter functional and its failure of monotonicity.

Replacing the ball indicator by a smooth Gaussian-type unit ball in the
first-variation definition of perimeter leads (for log-concave functions
e^{-h_K}) to the functional

    F_p(K) = int |grad h_K(x)|^p e^{-h_K(x)} dx
           = (n-1)! int_S  N_K(theta)^p / H_K(theta)^n  phi(theta) dtheta,

in spherical coordinates, where H_K is the support function restricted to
the sphere, N_K the (0-homogeneous) gradient norm of h_K, and
phi(theta) = sin^{n-2}(theta_1) ... sin(theta_{n-2}) the angular density.

If this perimeter were hyperbolic, F_p would have to be monotone
decreasing under set inclusion.  The cap body conv(B u l e_1) breaks this
for every p > 1: F_p of the cap diverges as the opening angle approaches
pi/2 while F_p of the ball stays fixed, so bisection produces an explicit
inclusion-violating pair.  For p > n plain homotheties already violate
monotonicity because F_p is homogeneous of degree p - n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .geometry import Polygon, kappa
from .report import Report


@dataclass(frozen=True)
class CapBody:
    """conv(B u l*e_1) in R^n: the unit ball with an apex at distance l >= 1.

    The opening half-angle phi of the tangency cone satisfies l = 1/cos(phi).
    """

    n: int
    l: float

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("cap bodies live in dimension >= 2")
        if self.l < 1:
            raise ValueError("apex distance must be >= 1")

    @property
    def phi(self) -> float:
        return math.acos(1.0 / self.l)

    @classmethod
    def from_phi(cls, n: int, phi: float) -> "CapBody":
        if not 0 <= phi < math.pi / 2:
            raise ValueError("phi must lie in [0, pi/2)")
        return cls(n, 1.0 / math.cos(phi))


@dataclass(frozen=True)
class SupportOracle:
    """Axially symmetric support data on theta_1 in [0, pi].

    H(theta_1) is the support function on the sphere (positive), N(theta_1)
    the gradient norm |grad h|(theta_1); N >= H pointwise since the gradient
    of a support function is the supporting point, whose norm dominates its
    radial component H.  seams lists interior kink angles for quadrature
    splits.
    """

    n: int
    H: object
    N: object
    seams: tuple = ()

    def scaled(self, a: float) -> "SupportOracle":
        """Homothety K -> a K: both H and N scale linearly."""
        if a <= 0:
            raise ValueError("homothety factor must be positive")
        return SupportOracle(self.n,
                             lambda th, H=self.H: a * np.asarray(H(th), float),
                             lambda th, N=self.N: a * np.asarray(N(th), float),
                             self.seams)


def ball_oracle(n: int, r: float = 1.0) -> SupportOracle:
    return SupportOracle(n, lambda th: np.full_like(np.asarray(th, float), r),
                         lambda th: np.full_like(np.asarray(th, float), r))


def cap_profiles(cap: CapBody) -> SupportOracle:
    """Support data of the cap body.

    On the cone region theta_1 <= phi the supporting point is the apex, so
    H(theta_1) = l cos(theta_1) = cos(theta_1)/cos(phi) and N = l; beyond
    the tangency angle the sphere supports itself and H = N = 1.  Both
    branches glue continuously at theta_1 = phi, and H >= 1 everywhere,
    which is the inclusion B inside the cap at the level of support
    functions.
    """
    phi, l = cap.phi, cap.l

    def H(th):
        th = np.asarray(th, float)
        return np.where(th <= phi, np.cos(th) * l, 1.0)

    def N(th):
        th = np.asarray(th, float)
        return np.where(th <= phi, l, 1.0)

    return SupportOracle(cap.n, H, N, seams=(phi,) if phi > 0 else ())


def _wallis_product(n: int) -> float:
    """C(n) = prod_{i=1..n-3} int_0^pi sin^i t dt (empty product for n <= 3)."""
    total = 1.0
    for i in range(1, n - 2):
        total *= integrate.quad(lambda t, i=i: math.sin(t) ** i, 0, math.pi)[0]
    return total


def _split_points(oracle: SupportOracle, lo: float, hi: float):
    pts = [lo] + [s for s in oracle.seams if lo < s < hi] + [hi]
    return pts


def F_p(oracle: SupportOracle, p: float, tol=1e-11) -> float:
    """F_p by quadrature.

    For n >= 3 the axial symmetry reduces the angular integral to
    2 pi (n-1)! C(n) int_0^pi N^p / H^n sin^(n-2); for n = 2 the full
    circle is integrated directly (the angular density is trivial there
    and the usual symmetry reduction argument changes shape).  In both
    cases the domain splits at the seam angles, where the integrand is
    only piecewise smooth.
    """
    if p <= 0:
        raise ValueError("p must be positive")
    n = oracle.n

    def ratio(th):
        th = min(th, 2 * math.pi - th) if n == 2 else th
        return float(np.asarray(oracle.N(th), float) ** p
                     / np.asarray(oracle.H(th), float) ** n)

    total = 0.0
    if n == 2:
        seams = sorted({s for s in oracle.seams} | {2 * math.pi - s for s in oracle.seams}
                       | {math.pi})
        pts = [0.0] + [s for s in seams if 0 < s < 2 * math.pi] + [2 * math.pi]
        for a, b in zip(pts[:-1], pts[1:]):
            total += integrate.quad(ratio, a, b, epsabs=tol, epsrel=tol,
                                    limit=400)[0]
        return total
    pref = 2 * math.pi * math.factorial(n - 1) * _wallis_product(n)

    def integrand(th):
        return ratio(th) * math.sin(th) ** (n - 2)

    pts = _split_points(oracle, 0.0, math.pi)
    for a, b in zip(pts[:-1], pts[1:]):
        total += integrate.quad(integrand, a, b, epsabs=tol, epsrel=tol,
                                limit=400)[0]
    return pref * total


def F_p_brute(oracle: SupportOracle, p: float) -> float:
    """Independent route: adaptive quadrature over the full angular domain
    without seam knowledge (and over both angles for n = 3)."""
    n = oracle.n

    def ratio(th):
        th = min(th, 2 * math.pi - th) if n == 2 else th
        return float(np.asarray(oracle.N(th), float) ** p
                     / np.asarray(oracle.H(th), float) ** n)

    if n == 2:
        return integrate.quad(lambda th: ratio(th), 0, 2 * math.pi,
                              limit=800, epsabs=1e-12, epsrel=1e-12)[0]
    if n == 3:
        val, _ = integrate.dblquad(
            lambda th2, th1: ratio(th1) * math.sin(th1),
            0, math.pi, 0, 2 * math.pi, epsabs=1e-10, epsrel=1e-10)
        return val
    raise ValueError("brute route implemented for n in {2, 3}")


def fp_ball_value(n: int) -> float:
    """F_p(B) = (n-1)! n kappa_n, independent of p (the integrand is 1)."""
    return math.factorial(n - 1) * n * kappa(n)


def phi_sweep(n: int, p: float, phis) -> list:
    """Rows (phi, l, F_p(cap), F_p(ball), ratio) for plotting the divergence."""
    base = F_p(ball_oracle(n), p)
    rows = []
    for phi in phis:
        cap = CapBody.from_phi(n, phi)
        fp = F_p(cap_profiles(cap), p)
        rows.append((phi, cap.l, fp, base, fp / base))
    return rows


@dataclass(frozen=True)
class Violation:
    n: int
    p: float
    phi: float
    l: float
    fp_cap: float
    fp_ball: float


def find_violation(n: int, p: float, iters: int = 48,
                   rel_margin: float = 1e-3) -> Violation:
    """Smallest tested opening angle whose cap beats the ball by more than
    rel_margin (relative), so the violation clears quadrature noise.

    F_p(cap) grows monotonically in phi and diverges as phi -> pi/2 for
    p > 1, so the crossing is found by expanding a bracket and bisecting.
    """
    if p <= 1:
        raise ValueError("divergence (and hence a violation) needs p > 1")
    base = F_p(ball_oracle(n), p)

    def exceeds(phi):
        return F_p(cap_profiles(CapBody.from_phi(n, phi)), p) > base * (1 + rel_margin)

    lo = 0.0
    hi = 1.0
    while not exceeds(hi):
        lo = hi
        hi = (hi + math.pi / 2) / 2
        if math.pi / 2 - hi < 1e-9:
            raise RuntimeError("no violation found approaching pi/2")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if exceeds(mid):
            hi = mid
        else:
            lo = mid
    cap = CapBody.from_phi(n, hi)
    return Violation(n, p, hi, cap.l, F_p(cap_profiles(cap), p), base)


def product_inequality_violation(n: int, p: float, t: float = 0.5) -> Report:
    """With K0 = B inside the violating cap K1, the pair f_i = e^{-h_{K_i}}
    has f_t = e^{-h_{K0 n K1}} = f_0, so the multiplicative concavity of the
    gradient energy I_p fails:  I_p(f_t) < I_p(f_0)^(1-t) I_p(f_1)^t."""
    vio = find_violation(n, p)
    fp0 = vio.fp_ball  # I_p(f_0) = I_p(f_t), intersection is the ball
    fp1 = vio.fp_cap
    lhs = fp0 ** (1 - t) * fp1 ** t
    return Report(check="product_violation", lhs=lhs, rhs=fp0, mode="ge",
                  tol=1e-12, route="quad",
                  params={"n": n, "alpha": p, "lambda_or_s_t": t},
                  extra={"phi": vio.phi, "l": vio.l})


# ---------------------------------------------------------------------------
# grid check of the support-set intersection identity


def _support_values(poly: Polygon, pts: np.ndarray) -> np.ndarray:
    return np.max(pts @ poly.vertices.T, axis=-1)


def _outward_normals(poly: Polygon) -> np.ndarray:
    v = poly.vertices
    e = np.roll(v, -1, axis=0) - v
    n = np.column_stack([e[:, 1], -e[:, 0]])
    return n / np.linalg.norm(n, axis=1, keepdims=True)


def _infconv_values(K0: Polygon, K1: Polygon, Z: np.ndarray) -> np.ndarray:
    """min over decompositions a + b = z of h_{K0}(a) + h_{K1}(b).

    The objective is convex and piecewise linear in a; its regions are cut
    out by the normal-fan rays of K0 (apex 0) and of K1 (apex z), so the
    minimum is attained at an arrangement vertex: one of the two apexes or
    an intersection of a ray from each fan.  Enumerating those finitely
    many candidates evaluates the infimal convolution exactly, with no
    recourse to the clipped intersection polygon."""
    n0 = _outward_normals(K0)
    n1 = _outward_normals(K1)
    best = np.minimum(_support_values(K1, Z),              # a = 0
                      _support_values(K0, Z))              # a = z
    for ni in n0:
        # candidates t*ni = z - s*mj  for every fan ray of K1
        for mj in n1:
            den = ni[0] * mj[1] - ni[1] * mj[0]
            if abs(den) < 1e-14:
                continue
            t = (Z[:, 0] * mj[1] - Z[:, 1] * mj[0]) / den
            s = (ni[0] * Z[:, 1] - ni[1] * Z[:, 0]) / den
            ok = (t >= 0) & (s >= 0)
            if not np.any(ok):
                continue
            A = t[ok, None] * ni
            vals = _support_values(K0, A) + _support_values(K1, Z[ok] - A)
            np.minimum.at(best, np.flatnonzero(ok), vals)
    return best


def check_supconv_support(K0: Polygon, K1: Polygon, t: float,
                          grid_step: float = 1e-2,
                          z_extent: float = 1.25) -> Report:
    """Sup-convolution of e^{-h_{K0}}, e^{-h_{K1}} at alpha = 0 with weights
    (1-t, t) against the closed form e^{-h_{K0 n K1}}, compared pointwise
    on a z-grid of the stated step.

    In log coordinates the alpha = 0 combination is the infimal convolution
    of the two support functions (the weights cancel against the positive
    homogeneity, so t only labels the decomposition); it is evaluated by
    exact enumeration over the normal-fan arrangement, while the reference
    support function comes from polygon clipping.  Reports the largest
    pointwise deviation.
    """
    if not 0 < t < 1:
        raise ValueError("t must lie in (0, 1)")
    from .geometry import intersect

    inter = intersect(K0, K1)
    if inter is None or not inter.contains(np.zeros(2), tol=-1e-9):
        raise ValueError("origin must be interior to the intersection")
    ax = np.arange(-z_extent, z_extent + grid_step / 2, grid_step)
    Z = np.column_stack([g.ravel() for g in np.meshgrid(ax, ax, indexing="ij")])
    approx = np.exp(-_infconv_values(K0, K1, Z))
    exact = np.exp(-_support_values(inter, Z))
    dev = float(np.max(np.abs(approx - exact)))
    return Report(check="supconv_support", lhs=dev, rhs=0.0, mode="eq",
                  tol=1e-4, route="grid",
                  params={"n": 2, "lambda_or_s_t": t},
                  extra={"z_points": len(Z), "grid_step": grid_step})
