#pragma once

#include <limits>

#include "falpha/probability.hpp"

namespace falpha {

/// Divergence order parameter. Strictly positive; 1 is legal and routed to
/// the KL limit by the divergence functions; +infinity selects the
/// max-divergence limit where supported.
class Alpha {
 public:
  explicit Alpha(double value);

  static Alpha infinity() {
    return Alpha(std::numeric_limits<double>::infinity());
  }

  double value() const { return value_; }
  bool is_one() const { return value_ == 1.0; }
  bool is_infinite() const;

 private:
  double value_;
};

/// Non-negative extended-real divergence result.
struct DivergenceValue {
  double value = 0.0;  // +infinity when is_infinite
  bool is_infinite = false;

  static DivergenceValue finite(double v);
  static DivergenceValue infinite();

  double as_double() const {
    return is_infinite ? std::numeric_limits<double>::infinity() : value;
  }
};

/// Total variation distance, (1/2) sum |p - q|, in [0, 1].
DivergenceValue total_variation(const Distribution& p, const Distribution& q);

/// Hockey-stick divergence E_gamma = (1/2) sum |p - gamma q| - (1/2)|1 - gamma|.
DivergenceValue hockey_stick(const Distribution& p, const Distribution& q,
                             double gamma);

/// f-divergence generated by x^alpha - 1 (alpha > 1), 1 - x^alpha (alpha < 1)
/// or x log x (alpha = 1, the KL case). Infinite exactly when alpha > 1 and
/// p puts mass outside the support of q.
DivergenceValue f_alpha_divergence(const Distribution& p,
                                   const Distribution& q, const Alpha& alpha);

/// Renyi divergence of order alpha, in nats. Monotone transform of
/// f_alpha_divergence; alpha = 1 is KL, alpha = infinity the max-divergence.
DivergenceValue renyi_divergence(const Distribution& p, const Distribution& q,
                                 const Alpha& alpha);

/// Order-infinity Renyi limit: max over supp(p) of log(p/q).
DivergenceValue max_divergence(const Distribution& p, const Distribution& q);

/// Relative entropy in nats, with 0 log 0 = 0.
DivergenceValue kl_divergence(const Distribution& p, const Distribution& q);

/// Recovers the f_alpha-divergence (alpha > 1) from the integral of the
/// hockey-stick divergence against alpha(alpha-1) gamma^(alpha-2) over the
/// interval of likelihood ratios of the pair. Cross-check for
/// f_alpha_divergence; requires supp(p) within supp(q).
DivergenceValue f_alpha_via_hockey_stick(const Distribution& p,
                                         const Distribution& q,
                                         const Alpha& alpha,
                                         double quadrature_tol = 1e-6);

}  // namespace falpha
