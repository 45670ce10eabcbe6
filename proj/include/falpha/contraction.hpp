#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "falpha/divergences.hpp"
#include "falpha/inequalities.hpp"
#include "falpha/probability.hpp"

namespace falpha {

/// Undirected graph on the channel's input symbols with an edge wherever two
/// inputs can produce a common output.
struct ConfusionGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographically sorted

  bool is_complete() const;
};

ConfusionGraph confusion_graph(const Channel& channel);

/// True iff some two rows of the channel have disjoint supports, i.e. the
/// confusion graph is incomplete. Such a channel does not contract the Renyi
/// divergence over the full simplex: the supremum ratio equals 1.
bool no_contraction(const Channel& channel);

/// Order k when the square channel has every entry in {0, 1/k} and exactly k
/// positive entries per row; nullopt otherwise.
std::optional<int> k_singular_order(const Channel& channel);

/// Near-extremal input pair for two channel rows i, j with disjoint supports:
/// a perturbed point mass at i against a perturbed equal mix of i and j. As
/// gamma -> 0 the output/input divergence ratio of the pair tends to 1.
std::pair<Distribution, Distribution> extremal_input_pair(
    const Channel& channel, int i, int j, double gamma);

/// Input restriction for the contraction quantities: either the whole
/// probability simplex or an explicit finite list of distributions.
class InputSet {
 public:
  enum class Kind { full_simplex, finite_list };

  static InputSet full_simplex();
  static InputSet finite_list(std::vector<Distribution> members);

  Kind kind() const { return kind_; }
  const std::vector<Distribution>& members() const { return members_; }

 private:
  InputSet(Kind kind, std::vector<Distribution> members)
      : kind_(kind), members_(std::move(members)) {}

  Kind kind_;
  std::vector<Distribution> members_;
};

/// Extremal output likelihood ratios across the channel: extremes over
/// ordered member pairs (P, Q) and outputs y of Q_Y(y) / P_Y(y). Requires a
/// finite input list; over the full simplex the extremes are degenerate.
GammaBounds cross_channel_gamma(const Channel& channel, const InputSet& inputs);

/// Contraction value with the input pair achieving it. `is_lower_bound` marks
/// values obtained by search rather than exact enumeration.
struct ContractionEstimate {
  double value = 0.0;
  std::optional<std::pair<Distribution, Distribution>> witness;
  bool is_lower_bound = false;
};

/// Total-variation contraction coefficient. Full simplex: the exact value,
/// the maximum pairwise total variation between channel rows. Finite list:
/// exact maximum of tv(outputs)/tv(inputs) over member pairs.
ContractionEstimate eta_tv(const Channel& channel, const InputSet& inputs);

/// Seeded lower-bound search for the Renyi contraction coefficient: the
/// supremum of D_alpha(outputs)/D_alpha(inputs). Samples the simplex, seeds
/// with extremal_input_pair for every disjoint-support row pair, and refines
/// the best pair coordinate-wise. Deterministic for fixed seed and budget.
ContractionEstimate eta_alpha_search(const Channel& channel,
                                     const Alpha& alpha, const InputSet& inputs,
                                     int budget, std::uint64_t seed);

/// Upper bound on the output f_alpha-divergence for member pairs whose input
/// f_alpha-divergence is at most input_falpha:
///   eta_tv * r_alpha(cross-channel gammas) * g_alpha_inverse(input_falpha).
double sdpi_bound(const Channel& channel, const Alpha& alpha,
                  const InputSet& inputs, double input_falpha);

}  // namespace falpha
