#pragma once

#include "falpha/divergences.hpp"
#include "falpha/probability.hpp"

namespace falpha {

/// Extremal likelihood-ratio bounds of a pair (or family) of distributions:
/// gamma_min <= 1 <= gamma_max, with gamma_max possibly +infinity and
/// gamma_min possibly 0. The hockey-stick divergence of a dominated pair
/// vanishes outside (gamma_min, gamma_max).
struct GammaBounds {
  double gamma_max = 1.0;
  double gamma_min = 1.0;

  bool is_finite() const;
};

/// Ratio bounds of a single pair: max and min over x of p(x)/q(x), skipping
/// symbols where both vanish; +infinity / 0 when only one side vanishes.
GammaBounds pair_gamma(const Distribution& p, const Distribution& q);

/// Coefficient (u^a - 1)/(u - 1) - (1 - v^a)/(1 - v) of the reverse Pinsker
/// bound, with the analytic limit a at u = 1 and v = 1. Non-negative;
/// +infinity at u = infinity and on double overflow.
double r_alpha(double u, double v, const Alpha& alpha);

/// Reverse Pinsker bound tv(p,q) * r_alpha(gamma_max, gamma_min): an upper
/// bound on f_alpha_divergence(p, q) whenever `gammas` dominate the pair's
/// own ratio bounds (GammaViolation otherwise).
double reverse_pinsker_bound(const Distribution& p, const Distribution& q,
                             const Alpha& alpha, const GammaBounds& gammas);

/// log(scale * r_alpha(gammas) + 1), evaluated in the log domain when
/// gamma_max^alpha overflows a double. Building block for the Renyi-domain
/// bounds, which stay representable long after r_alpha itself does not.
double log1p_scaled_r_alpha(double scale, const GammaBounds& gammas,
                            const Alpha& alpha);

/// Renyi-domain reverse Pinsker bound log(tv * r_alpha + 1)/(alpha - 1);
/// tends to log(gamma_max) as alpha grows. Safe for very large alpha.
double reverse_pinsker_renyi_bound(double tv_value, const GammaBounds& gammas,
                                   const Alpha& alpha);

/// Pinsker-type lower bound on f_alpha_divergence as a function of total
/// variation t, for alpha > 1:
///   exp(2(a-1)t^2) - 1        t < 1/a, a < 2
///   (4t^2 + 1)^(a-1) - 1      t < 1/a, a >= 2
///   (1-t)^(1-a) - 1           otherwise
double g_alpha(double t, const Alpha& alpha);

/// Piecewise inverse of g_alpha, an upper bound on total variation given an
/// f_alpha-divergence value s >= 0. Result in [0, 1].
double g_alpha_inverse(double s, const Alpha& alpha);

/// Binary f_alpha-divergence between (p, 1-p) and (p+t, 1-p-t):
///   p^a/(p+t)^(a-1) + (1-p)^a/(1-p-t)^(a-1) - 1,
/// with 0^a/0^(a-1) = 0 and +infinity at p = 1-t when t > 0.
double psi_alpha(double p, double t, const Alpha& alpha);

/// One point of the (total variation, f_alpha-divergence) joint range:
/// the exact lower envelope at t, the g_alpha bound, and the minimizer.
struct JointRangePoint {
  double t = 0.0;
  double envelope = 0.0;
  double bound = 0.0;
  double p_star = 0.0;
};

/// Minimizes psi_alpha(., t) over [0, 1-t] (convex in p) by golden-section
/// search, p located within solver_tol.
JointRangePoint joint_range_envelope(double t, const Alpha& alpha,
                                     double solver_tol = 1e-10);

}  // namespace falpha
