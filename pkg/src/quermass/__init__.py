"""Quermassintegrals of quasi-concave functions.

Exact convex-body kernel (dimensions 1-3 plus balls), the alpha-mean
sup-convolution algebra, layer-cake quermassintegrals with Steiner-type
expansions, a verification harness for generalized Prekopa-Leindler /
Brascamp-Lieb inequalities, Cauchy-Kubota projection formulas, the
valuation property, isoperimetric-type inequalities, and the cap-body
counterexample showing the Gaussian-style perimeter is not hyperbolic.
"""

from .geometry import (Ball, ConvexBody, ConvexityError, Interval,
                       ParallelBody, Polygon, Polytope3, SubspaceSpec,
                       intersect, kappa, mean_width, minkowski_sum,
                       parallel_quermass, quermassintegrals, random_subspace,
                       support, union_if_convex)
from .means import (Weights, beta_bl, beta_hyp, beta_pl, holder_product_check,
                    m_alpha, m_lambda)
from .qcfun import (CharFn, ExpNegSupportFn, ExpProfile, GaussProfile,
                    LayeredFn, PowerCutProfile, QCFunction, RadialFn,
                    SampledFn, StepsProfile, lattice_max, lattice_min,
                    mu_envelope, power, rearrange, supconv)
from .functionals import (QuadratureSpec, SteinerPoly, W, all_W, dual_mwidth,
                          dual_psi, entropy, euler, integral, lp_norm,
                          mean_width_f, moment_bound, perimeter, steiner_check,
                          steiner_poly)
from .inequalities import (FunctionalId, calibrate_c, check_cauchy_kubota,
                           check_entropy, check_generalized_pl,
                           check_gradient_pl, check_hyperbolic,
                           check_isoperimetric, check_pl_1d, check_quermass_pl,
                           check_rearrangement, check_urysohn, check_valuation,
                           check_wk_wi)
from .gauss_perimeter import (CapBody, F_p, F_p_brute, SupportOracle,
                              ball_oracle, cap_profiles, check_supconv_support,
                              find_violation, fp_ball_value, phi_sweep)
from .report import Report

__version__ = "0.1.0"
