#pragma once

#include <vector>

#include "falpha/probability.hpp"

// Brute-force verifiers for the test suite. Deliberately naive and written
// against raw vectors: they share no computation paths with the library so a
// disagreement localizes a bug to one side.
namespace falpha::oracle {

struct GridSpec {
  int resolution = 10;  // >= 10 simplex steps
  int dimension = 2;    // alphabet size <= 4
};

/// All points of the simplex grid {c / resolution : c a composition of
/// resolution into `dimension` parts}, enumerated in a fixed order.
std::vector<std::vector<double>> simplex_grid(const GridSpec& spec);

/// Straight per-term f_alpha-divergence, no log-domain evaluation.
double naive_f_alpha(const std::vector<double>& p,
                     const std::vector<double>& q, double alpha);

/// Renyi divergence obtained from naive_f_alpha (alpha > 1).
double naive_renyi(const std::vector<double>& p, const std::vector<double>& q,
                   double alpha);

/// Grid minimum of the binary joint-range function at total variation t.
double envelope_grid(double alpha, double t, int resolution);

/// Grid lower bound on the Renyi contraction coefficient for alphabets <= 3.
double eta_grid(const Channel& channel, double alpha, int resolution);

}  // namespace falpha::oracle
