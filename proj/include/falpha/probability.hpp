#pragma once

#include <vector>

#include "falpha/errors.hpp"

namespace falpha {

/// Tolerance used when checking that probability mass sums to one. Input
/// within this distance of 1 is renormalized; anything further is rejected.
inline constexpr double kProbTolerance = 1e-9;

/// Probability vector on a finite alphabet. Entries are non-negative and sum
/// to one; zeros are preserved exactly so that support structure survives
/// validation.
class Distribution {
 public:
  /// Validates and renormalizes a raw mass vector.
  /// Throws NegativeMass, NotNormalized or BadParams (empty input).
  static Distribution from_raw(std::vector<double> raw,
                               double tolerance = kProbTolerance);

  /// Point mass at `index` on an alphabet of `size` symbols.
  static Distribution point_mass(int size, int index);

  /// Uniform distribution on `size` symbols.
  static Distribution uniform(int size);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<size_t>(i)]; }
  const std::vector<double>& probs() const { return probs_; }

  bool operator==(const Distribution& other) const = default;

 private:
  explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

/// Sorted indices of the symbols carrying strictly positive mass.
struct SupportSet {
  std::vector<int> indices;

  bool contains(int i) const;
  bool disjoint_from(const SupportSet& other) const;
};

/// Row-stochastic matrix: one Distribution over outputs per input symbol.
class Channel {
 public:
  /// Validates a dense row-major matrix. Throws DimensionMismatch when rows
  /// have unequal lengths, plus anything Distribution::from_raw throws.
  static Channel from_rows(std::vector<std::vector<double>> rows,
                           double tolerance = kProbTolerance);

  static Channel identity(int n);

  int input_size() const { return static_cast<int>(rows_.size()); }
  int output_size() const { return rows_.front().size(); }
  const Distribution& row(int x) const { return rows_[static_cast<size_t>(x)]; }
  double at(int x, int y) const { return rows_[static_cast<size_t>(x)][y]; }
  const std::vector<Distribution>& rows() const { return rows_; }

 private:
  explicit Channel(std::vector<Distribution> rows) : rows_(std::move(rows)) {}

  std::vector<Distribution> rows_;
};

SupportSet support(const Distribution& dist);

/// Marginalizes `input` through `channel`: out[y] = sum_x channel[x][y] in[x].
Distribution push_forward(const Channel& channel, const Distribution& input);

/// Channel composition: row w of the result is row w of `first` pushed
/// through `second`.
Channel compose(const Channel& first, const Channel& second);

}  // namespace falpha
