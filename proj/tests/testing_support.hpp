#pragma once

#include <random>
#include <utility>
#include <vector>

#include "falpha/probability.hpp"

namespace falpha::testing {

inline std::vector<double> random_simplex(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> v(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& x : v) {
    x = -std::log1p(-unit(rng));
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

inline Distribution random_distribution(std::mt19937_64& rng, int n) {
  return Distribution::from_raw(random_simplex(rng, n));
}

inline std::pair<Distribution, Distribution> random_pair(std::mt19937_64& rng,
                                                         int n) {
  return {random_distribution(rng, n), random_distribution(rng, n)};
}

inline Channel random_channel(std::mt19937_64& rng, int in, int out) {
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(in));
  for (int x = 0; x < in; ++x) rows.push_back(random_simplex(rng, out));
  return Channel::from_rows(std::move(rows));
}

// Random channel with entries zeroed out with probability 1 - keep_prob;
// every row keeps at least one positive entry.
inline Channel random_sparse_channel(std::mt19937_64& rng, int in, int out,
                                     double keep_prob) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> column(0, out - 1);
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(in));
  for (int x = 0; x < in; ++x) {
    std::vector<double> row(static_cast<size_t>(out), 0.0);
    const int forced = column(rng);
    double sum = 0.0;
    for (int y = 0; y < out; ++y) {
      if (y == forced || unit(rng) < keep_prob) {
        row[static_cast<size_t>(y)] = -std::log1p(-unit(rng));
        sum += row[static_cast<size_t>(y)];
      }
    }
    for (double& v : row) v /= sum;
    rows.push_back(std::move(row));
  }
  return Channel::from_rows(std::move(rows));
}

// The two 4x4 fixture channels used throughout the tests: a 3-singular
// matrix whose rows pairwise overlap, and the 2-singular two-block matrix.
inline Channel three_singular_fixture() {
  const double t = 1.0 / 3.0;
  return Channel::from_rows({{t, t, t, 0.0},
                             {t, t, 0.0, t},
                             {t, 0.0, t, t},
                             {0.0, t, t, t}});
}

inline Channel two_block_fixture() {
  return Channel::from_rows({{0.5, 0.5, 0.0, 0.0},
                             {0.5, 0.5, 0.0, 0.0},
                             {0.0, 0.0, 0.5, 0.5},
                             {0.0, 0.0, 0.5, 0.5}});
}

}  // namespace falpha::testing
