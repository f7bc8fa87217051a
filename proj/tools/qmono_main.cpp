// qmono: constructors, entanglement measures, convex-roof estimation and
// monogamy verification campaigns for tripartite qudit states.
//
// Exit codes: 0 success, 1 numerical contract violation (bad state data,
// non-PSD operator), 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmono/measures.hpp"
#include "qmono/monogamy.hpp"
#include "qmono/roof.hpp"
#include "qmono/state_io.hpp"
#include "qmono/state_zoo.hpp"
#include "qmono/tensor_core.hpp"

namespace {

using nlohmann::json;

struct Options {
  int dim = 3;
  std::uint64_t seed = 0;
  int count = 100;
  int pivot = 1;
  int restarts = 32;
  int iters = 2000;
  double tol = 1e-9;
  std::string input;
  std::string out;
  std::string format = "json";
  std::string zoo;
  bool dim_given = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

qmono::RoofConfig roof_config(const Options& o) {
  qmono::RoofConfig cfg;
  cfg.restarts = o.restarts;
  cfg.max_iters = o.iters;
  cfg.tol = o.tol;
  cfg.seed = o.seed;
  return cfg;
}

void validate_paths(const Options& o, bool input_expected) {
  if (input_expected && !o.input.empty() && !std::filesystem::exists(o.input))
    throw UsageError("input file does not exist: " + o.input);
  if (!o.out.empty()) {
    const auto parent = std::filesystem::path(o.out).parent_path();
    if (!parent.empty() && !std::filesystem::is_directory(parent))
      throw UsageError("output directory does not exist: " + parent.string());
  }
}

qmono::PureTripartiteState resolve_state(const Options& o) {
  if (o.zoo.empty() == o.input.empty())
    throw UsageError("exactly one of --zoo and --input is required");
  if (!o.input.empty()) return qmono::read_tripartite_file(o.input);
  if (o.zoo == "ghz") return qmono::ghz(o.dim);
  if (o.dim_given && o.dim != 3)
    throw UsageError("--zoo " + o.zoo + " is defined for --dim 3 only");
  if (o.zoo == "chi") return qmono::antisymmetric_chi();
  return qmono::w_class(qmono::WClassCoefficients::uniform());
}

void emit_json(const json& j, const Options& o) {
  if (o.out.empty()) {
    qmono::require_finite(j);
    std::cout << j.dump(2) << "\n";
  } else {
    qmono::write_json_atomic(j, o.out);
  }
}

void emit_text(const std::string& text, const Options& o) {
  if (o.out.empty())
    std::cout << text;
  else
    qmono::write_text_atomic(text, o.out);
}

qmono::CampaignRow report_to_row(const qmono::MonogamyReport& r) {
  qmono::CampaignRow row;
  row.sample_index = 0;
  row.dim = r.dim;
  row.pivot = r.pivot;
  row.lhs_pow_d = r.lhs_pow_d;
  row.rhs12_pow_d = r.rhs12_pow_d;
  row.rhs13_pow_d = r.rhs13_pow_d;
  row.residual = r.residual;
  row.converged12 = r.converged12;
  row.converged13 = r.converged13;
  return row;
}

int cmd_check(const Options& o) {
  validate_paths(o, true);
  const qmono::PureTripartiteState state = resolve_state(o);
  const qmono::MonogamyReport report =
      qmono::monogamy_residual(state, o.pivot, roof_config(o));

  if (o.format == "csv") {
    emit_text(qmono::campaign_csv_header() + "\n" +
                  qmono::campaign_row_csv(report_to_row(report)) + "\n",
              o);
    return 0;
  }
  json j{{"command", "check"},
         {"dim", report.dim},
         {"pivot", report.pivot},
         {"seed", report.seed},
         {"lhs_pow_d", report.lhs_pow_d},
         {"rhs12_pow_d", report.rhs12_pow_d},
         {"rhs13_pow_d", report.rhs13_pow_d},
         {"residual", report.residual},
         {"lhs_g", report.lhs_g},
         {"rhs12_g", report.rhs12_g},
         {"rhs13_g", report.rhs13_g},
         {"converged12", report.converged12},
         {"converged13", report.converged13}};
  if (!o.zoo.empty()) j["zoo"] = o.zoo;
  emit_json(j, o);
  return 0;
}

int cmd_roof(const Options& o) {
  if (o.format != "json") throw UsageError("roof supports --format json only");
  validate_paths(o, true);
  const qmono::PureTripartiteState state = resolve_state(o);

  // Roof of the pair marginal left after tracing out the --pivot party.
  std::vector<int> keep;
  for (int p = 1; p <= 3; ++p)
    if (p != o.pivot) keep.push_back(p);
  const qmono::DensityMatrix rho = qmono::partial_trace(state, keep);
  const int d = state.dim();
  const qmono::RoofResult result = qmono::roof_upper_bound(rho, {d, d}, roof_config(o));

  emit_json(json{{"command", "roof"},
                 {"dim", d},
                 {"traced_party", o.pivot},
                 {"pair", keep},
                 {"seed", o.seed},
                 {"upper_bound_g", result.upper_bound.g},
                 {"upper_bound_g_pow_d", result.upper_bound.g_pow_d},
                 {"restarts_used", result.restarts_used},
                 {"converged", result.converged},
                 {"zero_g_member_count", result.zero_g_member_count},
                 {"reconstruction_error", qmono::reconstruction_error(
                                              result.best_decomposition, rho)},
                 {"decomposition",
                  qmono::decomposition_to_json(result.best_decomposition)}},
            o);
  return 0;
}

int cmd_sample(const Options& o) {
  validate_paths(o, false);

  if (o.format == "csv") {
    // Rows stream to the (temporary) output as they are produced.
    std::ofstream file;
    std::filesystem::path tmp;
    std::ostream* sink = &std::cout;
    if (!o.out.empty()) {
      tmp = o.out + ".tmp";
      file.open(tmp, std::ios::trunc);
      if (!file) throw std::runtime_error("cannot write " + tmp.string());
      sink = &file;
    }
    *sink << qmono::campaign_csv_header() << "\n";
    qmono::verify_campaign(o.dim, o.count, o.seed, roof_config(o), 1e-7,
                           [&](const qmono::CampaignRow& row) {
                             *sink << qmono::campaign_row_csv(row) << "\n";
                           });
    if (!o.out.empty()) {
      file.close();
      std::filesystem::rename(tmp, o.out);
    }
    return 0;
  }

  const qmono::CampaignSummary summary =
      qmono::verify_campaign(o.dim, o.count, o.seed, roof_config(o));
  json rows = json::array();
  for (const auto& row : summary.rows)
    rows.push_back(json{{"sample_index", row.sample_index},
                        {"pivot", row.pivot},
                        {"lhs_pow_d", row.lhs_pow_d},
                        {"rhs12_pow_d", row.rhs12_pow_d},
                        {"rhs13_pow_d", row.rhs13_pow_d},
                        {"residual", row.residual},
                        {"converged12", row.converged12},
                        {"converged13", row.converged13}});
  emit_json(json{{"command", "sample"},
                 {"dim", summary.dim},
                 {"samples", summary.samples},
                 {"seed", summary.seed},
                 {"violation_tol", summary.violation_tol},
                 {"min_residual", summary.min_residual},
                 {"mean_residual", summary.mean_residual},
                 {"below_tol_count", summary.below_tol_count},
                 {"nonconverged_sample_count", summary.nonconverged_sample_count},
                 {"rows", rows}},
            o);
  return 0;
}

int cmd_zoo(const Options& o) {
  if (o.format != "json") throw UsageError("zoo supports --format json only");
  if (o.zoo.empty()) throw UsageError("zoo requires --zoo <ghz|chi|w>");
  validate_paths(o, false);
  Options resolved = o;
  resolved.input.clear();
  emit_json(qmono::tripartite_to_json(resolve_state(resolved)), o);
  return 0;
}

int cmd_monotones(const Options& o) {
  if (o.format != "json") throw UsageError("monotones supports --format json only");
  if (o.input.empty()) throw UsageError("monotones requires --input <bipartite.json>");
  validate_paths(o, true);
  const qmono::BipartitePureState state = qmono::read_bipartite_file(o.input);
  const qmono::MonotoneVector monotones = qmono::concurrence_monotones(state);
  const qmono::GValue g = qmono::g_concurrence_pure(state);

  json raw = json::array(), normalized = json::array();
  for (int k = 0; k < monotones.dim; ++k) {
    raw.push_back(monotones.raw[k]);
    normalized.push_back(monotones.normalized[k]);
  }
  emit_json(json{{"command", "monotones"},
                 {"dims", {state.dims().first, state.dims().second}},
                 {"raw", raw},
                 {"normalized", normalized},
                 {"g", g.g},
                 {"g_pow_d", g.g_pow_d}},
            o);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrence monotones, G-concurrence and monogamy residuals "
               "for tripartite qudit states"};
  app.require_subcommand(1);

  Options o;
  const auto add_common = [&](CLI::App* cmd, bool with_state, bool with_roof) {
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    if (with_state) {
      cmd->add_option("--dim", o.dim, "qudit dimension d")
          ->check(CLI::Range(2, 64))
          ->each([&](const std::string&) { o.dim_given = true; });
      cmd->add_option("--zoo", o.zoo, "named state family")
          ->check(CLI::IsMember({"ghz", "chi", "w"}));
    }
    if (with_roof) {
      cmd->add_option("--restarts", o.restarts, "roof optimizer restarts")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--iters", o.iters, "roof optimizer iterations per restart")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--tol", o.tol, "roof convergence tolerance")
          ->check(CLI::PositiveNumber);
    }
  };

  CLI::App* check = app.add_subcommand("check", "monogamy residual of one state");
  add_common(check, true, true);
  check->add_option("--pivot", o.pivot, "pivot party")->check(CLI::Range(1, 3));
  check->add_option("--input", o.input, "state JSON file");

  CLI::App* roof = app.add_subcommand(
      "roof", "convex-roof G upper bound of a pair marginal");
  add_common(roof, true, true);
  roof->add_option("--pivot", o.pivot, "party to trace out")->check(CLI::Range(1, 3));
  roof->add_option("--input", o.input, "state JSON file");

  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo monogamy campaign on Haar-random states");
  add_common(sample, false, true);
  sample->add_option("--dim", o.dim, "qudit dimension d")->check(CLI::Range(2, 64));
  sample->add_option("--count", o.count, "number of samples")
      ->check(CLI::PositiveNumber);

  CLI::App* zoo = app.add_subcommand("zoo", "emit a named state as JSON");
  add_common(zoo, true, false);

  CLI::App* monotones = app.add_subcommand(
      "monotones", "concurrence monotones of a bipartite pure state");
  add_common(monotones, false, false);
  monotones->add_option("--input", o.input, "bipartite state JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (roof->parsed()) return cmd_roof(o);
    if (sample->parsed()) return cmd_sample(o);
    if (zoo->parsed()) return cmd_zoo(o);
    return cmd_monotones(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
