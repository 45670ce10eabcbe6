#include "falpha/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace falpha {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDpiSlack = 1e-6;

void require_alpha_above_one(const Alpha& alpha) {
  if (alpha.is_infinite() || alpha.value() <= 1.0) {
    throw UnsupportedAlpha("requires finite alpha > 1, got " +
                           std::to_string(alpha.value()));
  }
}

std::vector<std::pair<int, int>> disjoint_row_pairs(const Channel& channel) {
  std::vector<SupportSet> supports;
  supports.reserve(static_cast<size_t>(channel.input_size()));
  for (int x = 0; x < channel.input_size(); ++x) {
    supports.push_back(support(channel.row(x)));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < channel.input_size(); ++i) {
    for (int j = i + 1; j < channel.input_size(); ++j) {
      if (supports[static_cast<size_t>(i)].disjoint_from(
              supports[static_cast<size_t>(j)])) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return pairs;
}

}  // namespace

bool ConfusionGraph::is_complete() const {
  const auto n = static_cast<size_t>(vertex_count);
  return edges.size() == n * (n - 1) / 2;
}

ConfusionGraph confusion_graph(const Channel& channel) {
  ConfusionGraph graph;
  graph.vertex_count = channel.input_size();
  for (int i = 0; i < channel.input_size(); ++i) {
    for (int j = i + 1; j < channel.input_size(); ++j) {
      for (int y = 0; y < channel.output_size(); ++y) {
        if (channel.at(i, y) > 0.0 && channel.at(j, y) > 0.0) {
          graph.edges.emplace_back(i, j);
          break;
        }
      }
    }
  }
  return graph;
}

bool no_contraction(const Channel& channel) {
  return !confusion_graph(channel).is_complete();
}

std::optional<int> k_singular_order(const Channel& channel) {
  if (channel.input_size() != channel.output_size()) return std::nullopt;
  int k = 0;
  for (int y = 0; y < channel.output_size(); ++y) {
    if (channel.at(0, y) > 0.0) ++k;
  }
  if (k == 0) return std::nullopt;
  const double level = 1.0 / k;
  for (int x = 0; x < channel.input_size(); ++x) {
    int positives = 0;
    for (int y = 0; y < channel.output_size(); ++y) {
      const double e = channel.at(x, y);
      if (e == 0.0) continue;
      if (std::abs(e - level) > 1e-12) return std::nullopt;
      ++positives;
    }
    if (positives != k) return std::nullopt;
  }
  return k;
}

std::pair<Distribution, Distribution> extremal_input_pair(
    const Channel& channel, int i, int j, double gamma) {
  const int n = channel.input_size();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw BadParams("row indices must be distinct and in range");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw BadGamma("gamma must be in (0, 1), got " + std::to_string(gamma));
  }
  if (!support(channel.row(i)).disjoint_from(support(channel.row(j)))) {
    throw SupportsOverlap("rows " + std::to_string(i) + " and " +
                          std::to_string(j) + " share an output symbol");
  }

  std::vector<double> p(static_cast<size_t>(n), gamma / (n - 1));
  p[static_cast<size_t>(i)] = 1.0 - gamma;

  std::vector<double> q;
  if (n == 2) {
    // No symbols left for the uniform remainder.
    q.assign(2, 0.5);
  } else {
    q.assign(static_cast<size_t>(n), gamma / (n - 2));
    q[static_cast<size_t>(i)] = 0.5 * (1.0 - gamma);
    q[static_cast<size_t>(j)] = 0.5 * (1.0 - gamma);
  }
  return {Distribution::from_raw(std::move(p)),
          Distribution::from_raw(std::move(q))};
}

InputSet InputSet::full_simplex() { return InputSet(Kind::full_simplex, {}); }

InputSet InputSet::finite_list(std::vector<Distribution> members) {
  if (members.empty()) {
    throw BadParams("finite input set must have at least one member");
  }
  for (const auto& m : members) {
    if (m.size() != members.front().size()) {
      throw DimensionMismatch("input set members have mixed alphabet sizes");
    }
  }
  return InputSet(Kind::finite_list, std::move(members));
}

GammaBounds cross_channel_gamma(const Channel& channel,
                                const InputSet& inputs) {
  if (inputs.kind() != InputSet::Kind::finite_list) {
    throw UnsupportedInputSet(
        "cross-channel gamma bounds need a finite input list; over the full "
        "simplex they degenerate to (0, infinity) for any channel with "
        "disconnectable outputs");
  }
  std::vector<Distribution> outputs;
  outputs.reserve(inputs.members().size());
  for (const auto& m : inputs.members()) {
    outputs.push_back(push_forward(channel, m));
  }

  double hi = 1.0;  // the identical pair is always admissible
  double lo = 1.0;
  const int count = static_cast<int>(outputs.size());
  for (int p = 0; p < count; ++p) {
    for (int q = 0; q < count; ++q) {
      if (p == q) continue;
      const auto& out_p = outputs[static_cast<size_t>(p)];
      const auto& out_q = outputs[static_cast<size_t>(q)];
      for (int y = 0; y < out_p.size(); ++y) {
        if (out_p[y] == 0.0 && out_q[y] == 0.0) continue;
        const double ratio = out_p[y] == 0.0 ? kInf : out_q[y] / out_p[y];
        hi = std::max(hi, ratio);
        lo = std::min(lo, ratio);
      }
    }
  }
  return GammaBounds{hi, lo};
}

ContractionEstimate eta_tv(const Channel& channel, const InputSet& inputs) {
  ContractionEstimate estimate;
  estimate.is_lower_bound = false;

  if (inputs.kind() == InputSet::Kind::full_simplex) {
    // Exact over the simplex: the maximum pairwise row distance.
    double best = 0.0;
    std::pair<int, int> best_pair{0, 0};
    for (int i = 0; i < channel.input_size(); ++i) {
      for (int j = i + 1; j < channel.input_size(); ++j) {
        const double d = total_variation(channel.row(i), channel.row(j)).value;
        if (d > best) {
          best = d;
          best_pair = {i, j};
        }
      }
    }
    estimate.value = best;
    if (channel.input_size() > 1) {
      const int n = channel.input_size();
      estimate.witness = {Distribution::point_mass(n, best_pair.first),
                          Distribution::point_mass(n, best_pair.second)};
    }
    return estimate;
  }

  const auto& members = inputs.members();
  std::vector<Distribution> outputs;
  outputs.reserve(members.size());
  for (const auto& m : members) outputs.push_back(push_forward(channel, m));

  bool any_pair = false;
  double best = 0.0;
  std::pair<size_t, size_t> best_pair{0, 0};
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      const double d_in = total_variation(members[i], members[j]).value;
      if (d_in == 0.0) continue;
      any_pair = true;
      const double ratio = total_variation(outputs[i], outputs[j]).value / d_in;
      if (ratio > best) {
        best = ratio;
        best_pair = {i, j};
      }
    }
  }
  if (!any_pair) {
    throw DegenerateSet("all members of the input set are identical");
  }
  estimate.value = std::min(1.0, best);
  estimate.witness = {members[best_pair.first], members[best_pair.second]};
  return estimate;
}

namespace {

// Divergence ratio of one candidate pair; nullopt when the pair carries no
// information (infinite input divergence, or one so small that the ratio
// would only amplify rounding residue).
std::optional<double> contraction_ratio(const Channel& channel,
                                        const Alpha& alpha,
                                        const Distribution& p,
                                        const Distribution& q) {
  constexpr double kNoiseFloor = 1e-9;
  const DivergenceValue d_in = renyi_divergence(p, q, alpha);
  if (d_in.is_infinite || d_in.value < kNoiseFloor) return std::nullopt;
  const DivergenceValue d_out =
      renyi_divergence(push_forward(channel, p), push_forward(channel, q), alpha);
  const double ratio = d_out.as_double() / d_in.value;
  if (ratio > 1.0 + kDpiSlack) {
    throw DpiViolation("output/input divergence ratio " +
                       std::to_string(ratio) +
                       " exceeds 1; this indicates a numerical bug");
  }
  return ratio;
}

std::vector<double> sample_simplex(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& x : v) {
    x = -std::log1p(-unit(rng));  // Exp(1)
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

}  // namespace

ContractionEstimate eta_alpha_search(const Channel& channel,
                                     const Alpha& alpha, const InputSet& inputs,
                                     int budget, std::uint64_t seed) {
  require_alpha_above_one(alpha);
  if (budget < 0) throw BadParams("budget must be non-negative");

  ContractionEstimate estimate;
  estimate.is_lower_bound = true;

  double best = 0.0;
  std::optional<std::pair<Distribution, Distribution>> witness;
  const auto consider = [&](const Distribution& p, const Distribution& q) {
    const auto ratio = contraction_ratio(channel, alpha, p, q);
    if (ratio && (*ratio > best || !witness)) {
      best = std::max(best, *ratio);
      witness = {p, q};
    }
  };

  if (inputs.kind() == InputSet::Kind::finite_list) {
    // Finite restriction: the supremum is an exact maximum over pairs.
    const auto& members = inputs.members();
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = 0; j < members.size(); ++j) {
        if (i != j) consider(members[i], members[j]);
      }
    }
    estimate.value = std::clamp(best, 0.0, 1.0);
    estimate.witness = witness;
    return estimate;
  }

  // Deterministic seeds: the near-extremal pairs of disjoint-support rows.
  const auto disjoint = disjoint_row_pairs(channel);
  size_t seeded = 0;
  for (const auto& [i, j] : disjoint) {
    if (seeded++ >= 64) break;
    const auto pair = extremal_input_pair(channel, i, j, 1e-6);
    consider(pair.first, pair.second);
  }

  std::mt19937_64 rng(seed);
  const int n = channel.input_size();
  for (int iter = 0; iter < budget; ++iter) {
    const Distribution p = Distribution::from_raw(sample_simplex(rng, n));
    const Distribution q = Distribution::from_raw(sample_simplex(rng, n));
    consider(p, q);
  }

  // Coordinate-wise multiplicative refinement around the best pair found.
  if (witness) {
    int evals = std::min(budget, 500);
    double step = 0.5;
    while (step > 1e-4 && evals > 0) {
      bool improved = false;
      for (int side = 0; side < 2 && evals > 0; ++side) {
        for (int coord = 0; coord < n && evals > 0; ++coord) {
          for (const double factor : {1.0 + step, 1.0 / (1.0 + step)}) {
            if (evals-- <= 0) break;
            auto p_raw = witness->first.probs();
            auto q_raw = witness->second.probs();
            auto& target = side == 0 ? p_raw : q_raw;
            target[static_cast<size_t>(coord)] *= factor;
            double sum = 0.0;
            for (double v : target) sum += v;
            for (double& v : target) v /= sum;
            const Distribution p = Distribution::from_raw(std::move(p_raw));
            const Distribution q = Distribution::from_raw(std::move(q_raw));
            const auto ratio = contraction_ratio(channel, alpha, p, q);
            if (ratio && *ratio > best) {
              best = *ratio;
              witness = {p, q};
              improved = true;
            }
          }
        }
      }
      if (!improved) step *= 0.5;
    }
  }

  estimate.value = std::clamp(best, 0.0, 1.0);
  estimate.witness = witness;
  return estimate;
}

double sdpi_bound(const Channel& channel, const Alpha& alpha,
                  const InputSet& inputs, double input_falpha) {
  require_alpha_above_one(alpha);
  if (!(input_falpha >= 0.0)) {
    throw OutOfRange("input_falpha must be non-negative");
  }
  const GammaBounds gammas = cross_channel_gamma(channel, inputs);
  const double shrink = g_alpha_inverse(input_falpha, alpha);
  if (shrink == 0.0) return 0.0;
  const double r = r_alpha(gammas.gamma_max, gammas.gamma_min, alpha);
  if (r == 0.0) return 0.0;
  const double eta = eta_tv(channel, inputs).value;
  if (eta == 0.0) return 0.0;
  return eta * r * shrink;
}

}  // namespace falpha
