#include "falpha/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace falpha {

Distribution Distribution::from_raw(std::vector<double> raw, double tolerance) {
  if (raw.empty()) {
    throw BadParams("distribution must have at least one entry");
  }
  double sum = 0.0;
  for (size_t i = 0; i < raw.size(); ++i) {
    const double v = raw[i];
    if (!(v >= 0.0)) {  // also rejects NaN
      throw NegativeMass("probs[" + std::to_string(i) +
                         "] = " + std::to_string(v) + " is negative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw NotNormalized("probs sum to " + std::to_string(sum) +
                        ", expected 1 within tolerance " +
                        std::to_string(tolerance));
  }
  // Renormalize; exact zeros stay exact under division.
  for (double& v : raw) v /= sum;
  return Distribution(std::move(raw));
}

Distribution Distribution::point_mass(int size, int index) {
  if (size < 1 || index < 0 || index >= size) {
    throw BadParams("point_mass: index out of range");
  }
  std::vector<double> p(static_cast<size_t>(size), 0.0);
  p[static_cast<size_t>(index)] = 1.0;
  return Distribution(std::move(p));
}

Distribution Distribution::uniform(int size) {
  if (size < 1) throw BadParams("uniform: size must be positive");
  return Distribution(
      std::vector<double>(static_cast<size_t>(size), 1.0 / size));
}

bool SupportSet::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool SupportSet::disjoint_from(const SupportSet& other) const {
  auto a = indices.begin();
  auto b = other.indices.begin();
  while (a != indices.end() && b != other.indices.end()) {
    if (*a == *b) return false;
    (*a < *b) ? ++a : ++b;
  }
  return true;
}

Channel Channel::from_rows(std::vector<std::vector<double>> rows,
                           double tolerance) {
  if (rows.empty()) throw BadParams("channel must have at least one row");
  const size_t width = rows.front().size();
  std::vector<Distribution> validated;
  validated.reserve(rows.size());
  for (size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != width) {
      throw DimensionMismatch("row " + std::to_string(x) + " has " +
                              std::to_string(rows[x].size()) +
                              " entries, expected " + std::to_string(width));
    }
    try {
      validated.push_back(Distribution::from_raw(std::move(rows[x]), tolerance));
    } catch (const NegativeMass& e) {
      throw NegativeMass("row " + std::to_string(x) + ": " + e.what());
    } catch (const NotNormalized& e) {
      throw NotNormalized("row " + std::to_string(x) + ": " + e.what());
    } catch (const BadParams& e) {
      throw BadParams("row " + std::to_string(x) + ": " + e.what());
    }
  }
  return Channel(std::move(validated));
}

Channel Channel::identity(int n) {
  if (n < 1) throw BadParams("identity: size must be positive");
  std::vector<Distribution> rows;
  rows.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rows.push_back(Distribution::point_mass(n, i));
  return Channel(std::move(rows));
}

SupportSet support(const Distribution& dist) {
  SupportSet s;
  for (int i = 0; i < dist.size(); ++i) {
    if (dist[i] > 0.0) s.indices.push_back(i);
  }
  return s;
}

Distribution push_forward(const Channel& channel, const Distribution& input) {
  if (input.size() != channel.input_size()) {
    throw DimensionMismatch("input has " + std::to_string(input.size()) +
                            " symbols, channel expects " +
                            std::to_string(channel.input_size()));
  }
  std::vector<double> out(static_cast<size_t>(channel.output_size()), 0.0);
  for (int x = 0; x < channel.input_size(); ++x) {
    const double mass = input[x];
    if (mass == 0.0) continue;  // keeps unreachable outputs exactly zero
    for (int y = 0; y < channel.output_size(); ++y) {
      out[static_cast<size_t>(y)] += channel.at(x, y) * mass;
    }
  }
  return Distribution::from_raw(std::move(out));
}

Channel compose(const Channel& first, const Channel& second) {
  if (first.output_size() != second.input_size()) {
    throw DimensionMismatch(
        "first channel emits " + std::to_string(first.output_size()) +
        " symbols, second expects " + std::to_string(second.input_size()));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(first.input_size()));
  for (int w = 0; w < first.input_size(); ++w) {
    rows.push_back(push_forward(second, first.row(w)).probs());
  }
  return Channel::from_rows(std::move(rows));
}

}  // namespace falpha
