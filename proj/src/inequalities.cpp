#include "falpha/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace falpha {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double require_alpha_above_one(const Alpha& alpha) {
  if (alpha.is_infinite() || alpha.value() <= 1.0) {
    throw UnsupportedAlpha("requires finite alpha > 1, got " +
                           std::to_string(alpha.value()));
  }
  return alpha.value();
}

// (w^a - 1)/(w - 1) with the limit a at w = 1. Increasing in w on [0, inf);
// equals 1 at w = 0. Overflows to +infinity for huge w^a.
double power_difference_quotient(double w, double a) {
  if (w == 1.0) return a;
  if (std::isinf(w)) return kInf;
  return std::expm1(a * std::log(w)) / (w - 1.0);
}

}  // namespace

bool GammaBounds::is_finite() const { return !std::isinf(gamma_max); }

GammaBounds pair_gamma(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("distributions have sizes " +
                            std::to_string(p.size()) + " and " +
                            std::to_string(q.size()));
  }
  double lo = kInf;
  double hi = -kInf;
  for (int x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0 && q[x] == 0.0) continue;
    const double ratio = q[x] == 0.0 ? kInf : p[x] / q[x];
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return GammaBounds{hi, lo};
}

double r_alpha(double u, double v, const Alpha& alpha) {
  const double a = require_alpha_above_one(alpha);
  if (!(u >= 1.0)) {
    throw OutOfRange("r_alpha: u must be >= 1, got " + std::to_string(u));
  }
  if (!(v >= 0.0 && v <= 1.0)) {
    throw OutOfRange("r_alpha: v must be in [0, 1], got " + std::to_string(v));
  }
  const double upper = power_difference_quotient(u, a);
  if (std::isinf(upper)) return kInf;
  return std::max(0.0, upper - power_difference_quotient(v, a));
}

double reverse_pinsker_bound(const Distribution& p, const Distribution& q,
                             const Alpha& alpha, const GammaBounds& gammas) {
  const GammaBounds own = pair_gamma(p, q);
  const double slack = 1e-12;
  if (gammas.gamma_max < own.gamma_max * (1.0 - slack) ||
      gammas.gamma_min > own.gamma_min * (1.0 + slack) + slack) {
    throw GammaViolation("supplied gamma bounds do not dominate the pair");
  }
  const double tv = total_variation(p, q).value;
  if (tv == 0.0) return 0.0;
  return tv * r_alpha(gammas.gamma_max, gammas.gamma_min, alpha);
}

double log1p_scaled_r_alpha(double scale, const GammaBounds& gammas,
                            const Alpha& alpha) {
  const double a = require_alpha_above_one(alpha);
  const double u = gammas.gamma_max;
  const double v = gammas.gamma_min;
  if (!(scale >= 0.0)) {
    throw OutOfRange("scale must be non-negative");
  }
  if (scale == 0.0) return 0.0;
  if (std::isinf(u)) return kInf;
  if (u == 1.0) {
    return std::log1p(scale * std::max(0.0, a - power_difference_quotient(v, a)));
  }

  const double log_u_term = a * std::log(u);
  if (log_u_term <= 700.0) {
    const double r = r_alpha(u, v, alpha);
    if (!std::isinf(r)) return std::log1p(scale * r);
  }

  // u^a does not fit in a double: work with log(scale * u^a / (u-1)); the
  // dropped -1 and the subtracted v-term are below rounding at this scale.
  const double lower = power_difference_quotient(v, a);  // in [1, a]
  const double log_main = std::log(scale) + log_u_term - std::log(u - 1.0);
  if (log_main <= 700.0) {
    return std::log1p(std::exp(log_main) - scale * lower);
  }
  return log_main + std::log1p((1.0 - scale * lower) * std::exp(-log_main));
}

double reverse_pinsker_renyi_bound(double tv_value, const GammaBounds& gammas,
                                   const Alpha& alpha) {
  const double a = require_alpha_above_one(alpha);
  if (!(tv_value >= 0.0 && tv_value <= 1.0)) {
    throw OutOfRange("tv must be in [0, 1], got " + std::to_string(tv_value));
  }
  return log1p_scaled_r_alpha(tv_value, gammas, alpha) / (a - 1.0);
}

double g_alpha(double t, const Alpha& alpha) {
  const double a = require_alpha_above_one(alpha);
  if (!(t >= 0.0 && t < 1.0)) {
    throw OutOfRangeT("t must be in [0, 1), got " + std::to_string(t));
  }
  if (t < 1.0 / a) {
    if (a < 2.0) return std::expm1(2.0 * (a - 1.0) * t * t);
    return std::expm1((a - 1.0) * std::log1p(4.0 * t * t));
  }
  return std::expm1((1.0 - a) * std::log1p(-t));
}

double g_alpha_inverse(double s, const Alpha& alpha) {
  const double a = require_alpha_above_one(alpha);
  if (!(s >= 0.0)) {
    throw NegativeS("s must be non-negative, got " + std::to_string(s));
  }
  if (a < 2.0) {
    const double h1 = 2.0 - 2.0 / a;
    if (s < h1) return std::sqrt(std::log1p(s) / (2.0 * (a - 1.0)));
  } else {
    const double h2 = std::expm1((a - 1.0) * std::log1p(4.0 / (a * a)));
    if (s < h2) return 0.5 * std::sqrt(std::expm1(std::log1p(s) / (a - 1.0)));
  }
  return std::max(-std::expm1(std::log1p(s) / (1.0 - a)), 1.0 / a);
}

double psi_alpha(double p, double t, const Alpha& alpha) {
  const double a = require_alpha_above_one(alpha);
  if (!(t >= 0.0 && t < 1.0) || !(p >= 0.0 && p <= 1.0 - t)) {
    throw OutOfRange("psi_alpha requires 0 <= t < 1 and 0 <= p <= 1 - t");
  }
  if (t == 0.0) return 0.0;  // identical binary distributions

  // num^a / den^(a-1) with 0^a/0^(a-1) = 0.
  const auto term = [a](double num, double den) -> double {
    if (num == 0.0) return 0.0;
    if (den == 0.0) return kInf;
    return std::exp(a * std::log(num) - (a - 1.0) * std::log(den));
  };
  return term(p, p + t) + term(1.0 - p, 1.0 - p - t) - 1.0;
}

JointRangePoint joint_range_envelope(double t, const Alpha& alpha,
                                     double solver_tol) {
  require_alpha_above_one(alpha);
  if (!(t >= 0.0 && t < 1.0)) {
    throw OutOfRangeT("t must be in [0, 1), got " + std::to_string(t));
  }
  if (!(solver_tol > 0.0)) {
    throw SolverFailure("solver tolerance must be positive");
  }
  JointRangePoint point;
  point.t = t;
  point.bound = g_alpha(t, alpha);
  if (t == 0.0) return point;  // psi_alpha(., 0) is identically zero

  // Golden-section over [0, 1-t]; psi_alpha is convex in p.
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0;
  double hi = 1.0 - t;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = psi_alpha(c, t, alpha);
  double fd = psi_alpha(d, t, alpha);
  int iterations = 0;
  while (hi - lo > solver_tol) {
    if (++iterations > 400) {
      throw SolverFailure("golden-section search did not reach tolerance " +
                          std::to_string(solver_tol));
    }
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = psi_alpha(c, t, alpha);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = psi_alpha(d, t, alpha);
    }
  }
  point.p_star = 0.5 * (lo + hi);
  point.envelope = psi_alpha(point.p_star, t, alpha);

  // The minimum sits at the p = 0 boundary for all t >= 1/a; evaluating it
  // directly removes the solver's O(tol) bias there.
  const double at_zero = psi_alpha(0.0, t, alpha);
  if (at_zero <= point.envelope) {
    point.p_star = 0.0;
    point.envelope = at_zero;
  }
  return point;
}

}  // namespace falpha
