#pragma once

#include <vector>

#include "falpha/contraction.hpp"
#include "falpha/divergences.hpp"
#include "falpha/inequalities.hpp"
#include "falpha/probability.hpp"

namespace falpha {

enum class GuaranteeKind { rldp, ldp_pure };

/// Worst-case pairwise Renyi divergence of a mechanism's rows; ldp_pure marks
/// the order-infinity (pure LDP) reading of epsilon.
struct PrivacyGuarantee {
  double epsilon = 0.0;  // nats; +infinity when unbounded
  Alpha alpha;
  GuaranteeKind kind = GuaranteeKind::rldp;
};

/// N x N randomized response: e^eps/(N + e^eps - 1) on the diagonal,
/// 1/(N + e^eps - 1) off it. Satisfies eps-LDP by construction.
Channel randomized_response(int n, double epsilon);

/// (mk x mk) block-diagonal channel of m uniform k x k blocks. k-singular;
/// for m >= 2 its rows split into groups with disjoint supports.
Channel block_uniform_channel(int m, int k);

/// RLDP guarantee of a mechanism at order alpha (alpha > 1, or infinite for
/// pure LDP): the maximum Renyi divergence over ordered row pairs.
PrivacyGuarantee rldp_guarantee(const Channel& mechanism, const Alpha& alpha);

/// f_alpha-divergence value corresponding to a Renyi divergence of epsilon:
/// exp((alpha-1) epsilon) - 1.
double epsilon_to_f_alpha(double epsilon, const Alpha& alpha);

/// Renyi-domain amplification bound
///   log(eta_tv * r_alpha(gammas) * g_alpha_inverse(epsilon_f) + 1)/(alpha-1).
double phi_bound(double epsilon_f, const Alpha& alpha, double eta_tv_value,
                 const GammaBounds& gammas);

/// How the total-variation contraction factor entering phi_bound is chosen:
/// the conservative constant 1, the exact simplex-wide coefficient, or the
/// exact coefficient restricted to the mechanism's rows.
enum class EtaMode { assume_one, dobrushin, finite_exact };

/// Per-alpha amplification summary for a mechanism post-processed by a
/// channel: the mechanism's own guarantee, the composed system's true
/// guarantee, and the phi upper bound with its ingredients.
struct AmplificationReport {
  double alpha = 0.0;
  double mechanism_rldp = 0.0;
  double composed_rldp_true = 0.0;
  double phi_bound = 0.0;
  double eta_tv_used = 1.0;
  GammaBounds gammas;
};

AmplificationReport amplification_report(const Channel& mechanism,
                                         const Channel& post,
                                         const Alpha& alpha,
                                         EtaMode mode = EtaMode::assume_one);

/// Default alpha grid for reports: log-spaced over [1.1, 100], 50 points.
std::vector<double> default_alpha_grid();

/// Reports for randomized response of size N post-processed by the
/// block-uniform channel with N/m blocks, one per N. The ratio of non-zero
/// channel entries stays fixed at 1/m, so both the true composed guarantee
/// and the bound decay toward perfect privacy as N grows.
std::vector<AmplificationReport> asymptotic_sweep(
    double epsilon, int m, const std::vector<int>& n_values,
    const Alpha& alpha);

}  // namespace falpha
