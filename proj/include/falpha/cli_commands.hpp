#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "falpha/privacy.hpp"

namespace falpha::cli {

enum class Format { csv, json };

Format parse_format(const std::string& name);

/// Divergence table for two distribution files: one row per alpha with
/// columns alpha, tv, e_gamma (at gamma = 1), f_alpha, renyi.
struct DivCommand {
  std::string p_path;
  std::string q_path;
  std::vector<double> alphas;
  Format format = Format::csv;
};
void run_div(const DivCommand& cmd, std::ostream& out);

/// Joint-range table on a uniform t-grid: columns t, envelope, g_alpha,
/// p_star.
struct JointRangeCommand {
  double alpha = 0.0;
  int points = 200;
  double t_max = 0.99;
  double solver_tol = 1e-10;
  Format format = Format::csv;
};
void run_joint_range(const JointRangeCommand& cmd, std::ostream& out);

/// Structural channel report (always JSON): dimensions, k-singularity,
/// confusion-graph summary, no-contraction verdict, Dobrushin coefficient.
struct AnalyzeCommand {
  std::string channel_path;
};
void run_analyze(const AnalyzeCommand& cmd, std::ostream& out);

/// Amplification table for randomized response of size n post-processed by
/// the block-uniform channel with blocks of size k (k must divide n):
/// columns alpha, rldp_mechanism, rldp_composed_true, phi_bound, gamma_max.
struct AmplifyCommand {
  int n = 0;
  double epsilon = 0.0;
  int k = 0;
  std::vector<double> alphas;  // empty selects the default 50-point grid
  EtaMode eta_mode = EtaMode::assume_one;
  Format format = Format::csv;
};
void run_amplify(const AmplifyCommand& cmd, std::ostream& out);

/// Alphabet-growth sweep at fixed alpha and block ratio m: columns n,
/// gamma_max, rldp_composed_true, phi_bound.
struct SweepNCommand {
  double epsilon = 0.0;
  int m = 0;
  std::vector<int> n_values;
  double alpha = 0.0;
  Format format = Format::csv;
};
void run_sweep_n(const SweepNCommand& cmd, std::ostream& out);

/// 12-significant-digit, locale-independent number rendering used for all
/// emitted values.
std::string format_value(double value);

}  // namespace falpha::cli
