#include "falpha/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace falpha {
namespace {

void require_alpha_above_one(const Alpha& alpha) {
  if (alpha.is_infinite() || alpha.value() <= 1.0) {
    throw UnsupportedAlpha("requires finite alpha > 1, got " +
                           std::to_string(alpha.value()));
  }
}

}  // namespace

Channel randomized_response(int n, double epsilon) {
  if (n < 2) throw BadParams("randomized response needs n >= 2");
  if (!(epsilon > 0.0)) {
    throw BadParams("randomized response needs epsilon > 0, got " +
                    std::to_string(epsilon));
  }
  const double e_eps = std::exp(epsilon);
  const double denom = n + e_eps - 1.0;
  std::vector<std::vector<double>> rows(
      static_cast<size_t>(n),
      std::vector<double>(static_cast<size_t>(n), 1.0 / denom));
  for (int i = 0; i < n; ++i) {
    rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = e_eps / denom;
  }
  return Channel::from_rows(std::move(rows));
}

Channel block_uniform_channel(int m, int k) {
  if (m < 1 || k < 1) throw BadParams("block uniform channel needs m, k >= 1");
  const int n = m * k;
  std::vector<std::vector<double>> rows(
      static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int x = 0; x < n; ++x) {
    const int block = x / k;
    for (int y = block * k; y < (block + 1) * k; ++y) {
      rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = 1.0 / k;
    }
  }
  return Channel::from_rows(std::move(rows));
}

PrivacyGuarantee rldp_guarantee(const Channel& mechanism, const Alpha& alpha) {
  if (!alpha.is_infinite() && alpha.value() <= 1.0) {
    throw UnsupportedAlpha("RLDP order must be > 1 or infinite");
  }
  double worst = 0.0;
  for (int w = 0; w < mechanism.input_size(); ++w) {
    for (int v = 0; v < mechanism.input_size(); ++v) {
      if (w == v) continue;
      worst = std::max(
          worst,
          renyi_divergence(mechanism.row(w), mechanism.row(v), alpha)
              .as_double());
    }
  }
  return PrivacyGuarantee{
      worst, alpha,
      alpha.is_infinite() ? GuaranteeKind::ldp_pure : GuaranteeKind::rldp};
}

double epsilon_to_f_alpha(double epsilon, const Alpha& alpha) {
  require_alpha_above_one(alpha);
  if (!(epsilon >= 0.0)) {
    throw BadParams("epsilon must be non-negative, got " +
                    std::to_string(epsilon));
  }
  return std::expm1((alpha.value() - 1.0) * epsilon);
}

double phi_bound(double epsilon_f, const Alpha& alpha, double eta_tv_value,
                 const GammaBounds& gammas) {
  require_alpha_above_one(alpha);
  if (!(epsilon_f >= 0.0)) {
    throw BadParams("epsilon_f must be non-negative");
  }
  if (!(eta_tv_value >= 0.0 && eta_tv_value <= 1.0)) {
    throw OutOfRange("eta_tv must be in [0, 1], got " +
                     std::to_string(eta_tv_value));
  }
  const double shrink = g_alpha_inverse(epsilon_f, alpha);
  const double scale = eta_tv_value * shrink;
  return log1p_scaled_r_alpha(scale, gammas, alpha) / (alpha.value() - 1.0);
}

AmplificationReport amplification_report(const Channel& mechanism,
                                         const Channel& post,
                                         const Alpha& alpha, EtaMode mode) {
  require_alpha_above_one(alpha);
  if (mechanism.output_size() != post.input_size()) {
    throw DimensionMismatch(
        "mechanism emits " + std::to_string(mechanism.output_size()) +
        " symbols, post-processing channel expects " +
        std::to_string(post.input_size()));
  }

  AmplificationReport report;
  report.alpha = alpha.value();
  report.mechanism_rldp = rldp_guarantee(mechanism, alpha).epsilon;
  report.composed_rldp_true =
      rldp_guarantee(compose(mechanism, post), alpha).epsilon;

  const InputSet rows = InputSet::finite_list(mechanism.rows());
  report.gammas = cross_channel_gamma(post, rows);

  switch (mode) {
    case EtaMode::assume_one:
      report.eta_tv_used = 1.0;
      break;
    case EtaMode::dobrushin:
      report.eta_tv_used = eta_tv(post, InputSet::full_simplex()).value;
      break;
    case EtaMode::finite_exact:
      try {
        report.eta_tv_used = eta_tv(post, rows).value;
      } catch (const DegenerateSet&) {
        report.eta_tv_used = 0.0;  // identical rows: nothing to contract
      }
      break;
  }

  const double epsilon_f = epsilon_to_f_alpha(report.mechanism_rldp, alpha);
  report.phi_bound =
      phi_bound(epsilon_f, alpha, report.eta_tv_used, report.gammas);
  return report;
}

std::vector<double> default_alpha_grid() {
  constexpr int kPoints = 50;
  constexpr double kLo = 1.1;
  constexpr double kHi = 100.0;
  std::vector<double> grid;
  grid.reserve(kPoints);
  const double step = (std::log(kHi) - std::log(kLo)) / (kPoints - 1);
  for (int i = 0; i < kPoints; ++i) {
    grid.push_back(std::exp(std::log(kLo) + step * i));
  }
  return grid;
}

std::vector<AmplificationReport> asymptotic_sweep(
    double epsilon, int m, const std::vector<int>& n_values,
    const Alpha& alpha) {
  require_alpha_above_one(alpha);
  if (m < 1) throw BadParams("m must be >= 1");
  if (!(epsilon > 0.0)) throw BadParams("epsilon must be positive");
  if (n_values.empty()) throw BadParams("need at least one alphabet size");

  std::vector<AmplificationReport> reports;
  reports.reserve(n_values.size());
  for (const int n : n_values) {
    if (n < 2 || n % m != 0) {
      throw BadParams("alphabet size " + std::to_string(n) +
                      " is not a multiple of m = " + std::to_string(m));
    }
    const int k = n / m;
    reports.push_back(amplification_report(randomized_response(n, epsilon),
                                           block_uniform_channel(m, k), alpha,
                                           EtaMode::assume_one));
  }
  return reports;
}

}  // namespace falpha
