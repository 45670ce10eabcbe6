#include "falpha/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace falpha {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Above this order the per-term power is evaluated fully in the log domain;
// q * (p/q)^alpha can overflow in intermediate steps long before the term
// itself leaves double range.
constexpr double kLogDomainAlpha = 60.0;

void require_same_size(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("distributions have sizes " +
                            std::to_string(p.size()) + " and " +
                            std::to_string(q.size()));
  }
}

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (std::isnan(value) || value <= 0.0) {
    throw UnsupportedAlpha("alpha must be positive, got " +
                           std::to_string(value));
  }
}

bool Alpha::is_infinite() const { return std::isinf(value_); }

DivergenceValue DivergenceValue::finite(double v) {
  if (std::isinf(v)) return infinite();
  // Divergences are non-negative; tiny negatives are floating-point residue.
  return DivergenceValue{std::max(0.0, v), false};
}

DivergenceValue DivergenceValue::infinite() {
  return DivergenceValue{kInf, true};
}

DivergenceValue total_variation(const Distribution& p, const Distribution& q) {
  require_same_size(p, q);
  double sum = 0.0;
  for (int x = 0; x < p.size(); ++x) sum += std::abs(p[x] - q[x]);
  return DivergenceValue::finite(0.5 * sum);
}

DivergenceValue hockey_stick(const Distribution& p, const Distribution& q,
                             double gamma) {
  require_same_size(p, q);
  if (!(gamma > 0.0)) {
    throw NonPositiveGamma("gamma must be positive, got " +
                           std::to_string(gamma));
  }
  double sum = 0.0;
  for (int x = 0; x < p.size(); ++x) sum += std::abs(p[x] - gamma * q[x]);
  return DivergenceValue::finite(0.5 * sum - 0.5 * std::abs(1.0 - gamma));
}

DivergenceValue kl_divergence(const Distribution& p, const Distribution& q) {
  require_same_size(p, q);
  double sum = 0.0;
  for (int x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    if (q[x] == 0.0) return DivergenceValue::infinite();
    sum += p[x] * std::log(p[x] / q[x]);
  }
  return DivergenceValue::finite(sum);
}

DivergenceValue f_alpha_divergence(const Distribution& p,
                                   const Distribution& q, const Alpha& alpha) {
  require_same_size(p, q);
  if (alpha.is_infinite()) {
    throw UnsupportedAlpha("f_alpha_divergence requires finite alpha");
  }
  if (alpha.is_one()) return kl_divergence(p, q);
  const double a = alpha.value();

  if (a > 1.0) {
    double sum = 0.0;
    for (int x = 0; x < p.size(); ++x) {
      if (q[x] == 0.0) {
        if (p[x] > 0.0) return DivergenceValue::infinite();
        continue;  // 0^alpha / 0^(alpha-1) convention
      }
      if (p[x] == 0.0) {
        sum -= q[x];
      } else if (a <= kLogDomainAlpha) {
        sum += q[x] * std::expm1(a * std::log(p[x] / q[x]));
      } else {
        sum += std::exp(a * std::log(p[x]) - (a - 1.0) * std::log(q[x])) - q[x];
      }
    }
    return DivergenceValue::finite(sum);
  }

  // alpha < 1: generator 1 - x^alpha; terms with q = 0 vanish in the limit.
  double sum = 0.0;
  for (int x = 0; x < p.size(); ++x) {
    if (q[x] == 0.0) continue;
    if (p[x] == 0.0) {
      sum += q[x];
    } else {
      sum -= q[x] * std::expm1(a * std::log(p[x] / q[x]));
    }
  }
  return DivergenceValue::finite(sum);
}

DivergenceValue max_divergence(const Distribution& p, const Distribution& q) {
  require_same_size(p, q);
  double best = 0.0;
  bool first = true;
  for (int x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    if (q[x] == 0.0) return DivergenceValue::infinite();
    const double ratio = std::log(p[x] / q[x]);
    best = first ? ratio : std::max(best, ratio);
    first = false;
  }
  return DivergenceValue::finite(best);
}

DivergenceValue renyi_divergence(const Distribution& p, const Distribution& q,
                                 const Alpha& alpha) {
  require_same_size(p, q);
  if (alpha.is_infinite()) return max_divergence(p, q);
  if (alpha.is_one()) return kl_divergence(p, q);
  const double a = alpha.value();
  const DivergenceValue f = f_alpha_divergence(p, q, alpha);
  if (a > 1.0) {
    if (f.is_infinite) return DivergenceValue::infinite();
    return DivergenceValue::finite(std::log1p(f.value) / (a - 1.0));
  }
  // alpha < 1: sum p^a q^(1-a) = 1 - f, so D_a = log(1 - f)/(a - 1).
  if (f.value >= 1.0) return DivergenceValue::infinite();
  return DivergenceValue::finite(std::log1p(-f.value) / (a - 1.0));
}

namespace {

// Adaptive Simpson on [a, b]; f must be finite on the interval.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb,
                        double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double split = left + right;
  if (depth <= 0 || std::abs(split - whole) <= 15.0 * eps) {
    return split + (split - whole) / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double eps) {
  if (!(b > a)) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, eps, 48);
}

}  // namespace

DivergenceValue f_alpha_via_hockey_stick(const Distribution& p,
                                         const Distribution& q,
                                         const Alpha& alpha,
                                         double quadrature_tol) {
  require_same_size(p, q);
  if (alpha.is_infinite() || alpha.value() <= 1.0) {
    throw UnsupportedAlpha("integral route requires finite alpha > 1");
  }
  const double a = alpha.value();

  // Likelihood ratios bound the region where E_gamma is non-zero; they are
  // also its kink locations, so integrating piecewise between them leaves
  // the quadrature a smooth integrand on every piece.
  std::vector<double> ratios;
  for (int x = 0; x < p.size(); ++x) {
    if (q[x] == 0.0) {
      if (p[x] > 0.0) {
        throw SupportViolation("p puts mass at symbol " + std::to_string(x) +
                               " outside the support of q");
      }
      continue;
    }
    ratios.push_back(p[x] / q[x]);
  }
  ratios.push_back(1.0);
  std::sort(ratios.begin(), ratios.end());
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
  const double lo = ratios.front();
  const double hi = ratios.back();
  if (lo == hi) return DivergenceValue::finite(0.0);  // p == q

  const auto integrand = [&](double gamma) -> double {
    if (gamma <= 0.0) return 0.0;  // E_gamma vanishes faster than gamma^(a-2)
    return hockey_stick(p, q, gamma).value * std::pow(gamma, a - 2.0);
  };

  // Rough scale for the absolute tolerance budget, spread over the pieces.
  double scale = 0.0;
  for (size_t i = 0; i + 1 < ratios.size(); ++i) {
    const double mid = 0.5 * (ratios[i] + ratios[i + 1]);
    scale += (ratios[i + 1] - ratios[i]) * integrand(mid);
  }
  const double eps =
      quadrature_tol * std::max(scale, 1e-300) / std::max<size_t>(ratios.size(), 1);

  double total = 0.0;
  for (size_t i = 0; i + 1 < ratios.size(); ++i) {
    total += integrate(integrand, ratios[i], ratios[i + 1], eps);
  }
  return DivergenceValue::finite(a * (a - 1.0) * total);
}

}  // namespace falpha
