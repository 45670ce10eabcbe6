#include "falpha/cli_commands.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "falpha/contraction.hpp"
#include "falpha/divergences.hpp"
#include "falpha/inequalities.hpp"
#include "falpha/io.hpp"

namespace falpha::cli {
namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void emit(Format format, std::ostream& out) const {
    if (format == Format::csv) {
      for (size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
      }
      out << "\n";
      for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
          out << (c ? "," : "") << format_value(row[c]);
        }
        out << "\n";
      }
      return;
    }
    // JSON: array of flat objects; non-finite values become strings.
    out << "[\n";
    for (size_t r = 0; r < rows.size(); ++r) {
      out << "  {";
      for (size_t c = 0; c < rows[r].size(); ++c) {
        const double v = rows[r][c];
        out << (c ? ", " : "") << "\"" << columns[c] << "\": ";
        if (std::isfinite(v)) {
          out << format_value(v);
        } else {
          out << "\"" << format_value(v) << "\"";
        }
      }
      out << (r + 1 < rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
  }
};

}  // namespace

std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw BadParams("unknown format '" + name + "', expected csv or json");
}

void run_div(const DivCommand& cmd, std::ostream& out) {
  if (cmd.alphas.empty()) throw BadParams("need at least one alpha");
  const Distribution p = load_distribution(cmd.p_path);
  const Distribution q = load_distribution(cmd.q_path);

  Table table;
  table.columns = {"alpha", "tv", "e_gamma", "f_alpha", "renyi"};
  for (const double a : cmd.alphas) {
    const Alpha alpha(a);
    table.rows.push_back({a, total_variation(p, q).value,
                          hockey_stick(p, q, 1.0).value,
                          f_alpha_divergence(p, q, alpha).as_double(),
                          renyi_divergence(p, q, alpha).as_double()});
  }
  table.emit(cmd.format, out);
}

void run_joint_range(const JointRangeCommand& cmd, std::ostream& out) {
  if (cmd.points < 1) throw BadParams("need at least one grid point");
  if (!(cmd.t_max >= 0.0 && cmd.t_max < 1.0)) {
    throw OutOfRangeT("t_max must be in [0, 1)");
  }
  const Alpha alpha(cmd.alpha);

  Table table;
  table.columns = {"t", "envelope", "g_alpha", "p_star"};
  for (int i = 0; i < cmd.points; ++i) {
    const double t =
        cmd.points == 1 ? 0.0 : cmd.t_max * i / (cmd.points - 1);
    const JointRangePoint point =
        joint_range_envelope(t, alpha, cmd.solver_tol);
    table.rows.push_back({point.t, point.envelope, point.bound, point.p_star});
  }
  table.emit(cmd.format, out);
}

void run_analyze(const AnalyzeCommand& cmd, std::ostream& out) {
  const Channel channel = load_channel(cmd.channel_path);
  const ConfusionGraph graph = confusion_graph(channel);
  const auto k = k_singular_order(channel);

  nlohmann::json report;
  report["input_size"] = channel.input_size();
  report["output_size"] = channel.output_size();
  report["k_singular"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
  report["confusion_edge_count"] = graph.edges.size();
  report["complete"] = graph.is_complete();
  report["no_contraction"] = no_contraction(channel);
  report["eta_tv_dobrushin"] =
      eta_tv(channel, InputSet::full_simplex()).value;
  out << report.dump(2) << "\n";
}

void run_amplify(const AmplifyCommand& cmd, std::ostream& out) {
  if (!(cmd.epsilon > 0.0)) throw BadParams("epsilon must be positive");
  if (cmd.n < 2 || cmd.k < 1 || cmd.n % cmd.k != 0) {
    throw BadParams("block size k = " + std::to_string(cmd.k) +
                    " must divide the alphabet size n = " +
                    std::to_string(cmd.n));
  }
  const std::vector<double> alphas =
      cmd.alphas.empty() ? default_alpha_grid() : cmd.alphas;
  const Channel mechanism = randomized_response(cmd.n, cmd.epsilon);
  const Channel post = block_uniform_channel(cmd.n / cmd.k, cmd.k);

  Table table;
  table.columns = {"alpha", "rldp_mechanism", "rldp_composed_true",
                   "phi_bound", "gamma_max"};
  for (const double a : alphas) {
    const AmplificationReport report =
        amplification_report(mechanism, post, Alpha(a), cmd.eta_mode);
    table.rows.push_back({report.alpha, report.mechanism_rldp,
                          report.composed_rldp_true, report.phi_bound,
                          report.gammas.gamma_max});
  }
  table.emit(cmd.format, out);
}

void run_sweep_n(const SweepNCommand& cmd, std::ostream& out) {
  const auto reports =
      asymptotic_sweep(cmd.epsilon, cmd.m, cmd.n_values, Alpha(cmd.alpha));

  Table table;
  table.columns = {"n", "gamma_max", "rldp_composed_true", "phi_bound"};
  for (size_t i = 0; i < reports.size(); ++i) {
    table.rows.push_back({static_cast<double>(cmd.n_values[i]),
                          reports[i].gammas.gamma_max,
                          reports[i].composed_rldp_true,
                          reports[i].phi_bound});
  }
  table.emit(cmd.format, out);
}

}  // namespace falpha::cli
