// Copyright 2026 The apk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "apk/baseline.h"
#include "apk/errors.h"
#include "apk/evaluation.h"
#include "apk/exact_oracle.h"
#include "apk/stochastic.h"
#include "report_io.h"
#include "scenarios.h"

namespace apk::tools {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::vector<std::size_t> wor;
  std::optional<double> wr;
  std::size_t k = 0;
  std::string norm;
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  std::string out_path;
  bool check = false;
  std::string format = "text";
  std::size_t bins = 40;
  unsigned workers = 0;
  std::string config;
  std::string run_path;
  std::string qrels_path;
  std::optional<std::size_t> auto_wor;
  bool auto_wr = false;
};

bool structured(const Flags& f) { return f.format == "structured"; }

ModelSpec model_from(const Flags& f) {
  if (!f.wor.empty() && f.wr) {
    throw UsageError("--wor and --wr are mutually exclusive");
  }
  if (!f.wor.empty()) return make_wor(f.wor[0], f.wor[1]);
  if (f.wr) return make_wr(*f.wr);
  throw UsageError("one of --wor N M or --wr P is required");
}

NormalizationMode norm_from(const Flags& f, const ModelSpec& model) {
  return f.norm.empty() ? native_normalization(model)
                        : parse_normalization(f.norm);
}

// Writes `body` to --out when given, else to `out`.
template <typename Body>
void emit(const Flags& f, std::ostream& out, Body body) {
  if (f.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(f.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + f.out_path);
  body(file);
  file.flush();
  if (!file) throw std::runtime_error("error writing " + f.out_path);
}

void print_rows(std::ostream& out,
                const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, unused] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << key << value
        << '\n';
  }
}

void add_model_flags(CLI::App* cmd, Flags& f) {
  auto* wor = cmd->add_option("--wor", f.wor, "Offline model: N M")
                  ->expected(2)
                  ->type_name("N M");
  auto* wr = cmd->add_option("--wr", f.wr, "Online model: relevance probability");
  wor->excludes(wr);
}

void add_format_flag(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "text or structured (JSON)")
      ->check(CLI::IsMember({"text", "structured"}));
}

void add_norm_flag(CLI::App* cmd, Flags& f) {
  cmd->add_option("--norm", f.norm,
                  "byk or bymin (default: the model's own normalization)")
      ->check(CLI::IsMember({"byk", "bymin"}));
}

int cmd_baseline(const Flags& f, std::ostream& out) {
  const ModelSpec model = model_from(f);
  const BaselineMoments m = baseline(model, f.k);
  const auto norm = native_normalization(model);
  if (structured(f)) {
    nlohmann::json j{{"model", describe(model)},
                     {"k", f.k},
                     {"norm", std::string(to_string(norm))},
                     {"mean", m.mean},
                     {"variance", m.variance}};
    emit(f, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    return kExitOk;
  }
  emit(f, out, [&](std::ostream& o) {
    print_rows(o, {{"model", describe(model)},
                   {"k", std::to_string(f.k)},
                   {"norm", std::string(to_string(norm))},
                   {"mean", format_screen(m.mean)},
                   {"variance", format_screen(m.variance)}});
  });
  return kExitOk;
}

int cmd_scenarios(const Flags& f, std::ostream& out) {
  std::vector<ScenarioConfig> grid;
  if (f.config.empty()) {
    grid = default_scenarios();
  } else {
    std::ifstream in(f.config);
    if (!in) throw UsageError("cannot read config " + f.config);
    grid = parse_scenarios(in, f.config);
  }
  if (f.check) {
    for (const auto& s : grid) {
      if (!s.expected) {
        throw UsageError("--check needs expected values for scenario " +
                         s.label);
      }
    }
  }

  struct Deviation {
    std::string label;
    std::string column;
    double computed;
    double expected;
  };
  std::vector<ScenarioValues> computed;
  std::vector<Deviation> deviations;
  std::size_t checked = 0;
  for (const auto& s : grid) {
    computed.push_back(compute_scenario(s));
    if (!f.check) continue;
    for (std::size_t c = 0; c < 4; ++c) {
      ++checked;
      const double got = computed.back()[c];
      const double want = (*s.expected)[c];
      if (!(std::abs(got - want) <= kScenarioCheckTolerance)) {
        deviations.push_back({s.label, kScenarioColumns[c], got, want});
      }
    }
  }

  if (structured(f)) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      nlohmann::json row{{"label", grid[i].label}, {"N", grid[i].total},
                         {"m", grid[i].relevant},  {"p", grid[i].p},
                         {"k", grid[i].k}};
      for (std::size_t c = 0; c < 4; ++c) {
        row[kScenarioColumns[c]] = computed[i][c];
      }
      rows.push_back(row);
    }
    nlohmann::json j{{"scenarios", rows}};
    if (f.check) {
      nlohmann::json devs = nlohmann::json::array();
      for (const auto& d : deviations) {
        devs.push_back({{"label", d.label},
                        {"column", d.column},
                        {"computed", d.computed},
                        {"expected", d.expected}});
      }
      j["check"] = {{"tolerance", kScenarioCheckTolerance},
                    {"checked", checked},
                    {"deviations", devs}};
    }
    emit(f, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  } else {
    emit(f, out, [&](std::ostream& o) {
      o << std::left << std::setw(10) << "scenario" << std::setw(6) << "N"
        << std::setw(6) << "m" << std::setw(8) << "p" << std::setw(6) << "k"
        << std::setw(12) << "E_WOR" << std::setw(12) << "E_WR"
        << std::setw(12) << "Var_WOR" << "Var_WR\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& s = grid[i];
        o << std::setw(10) << s.label << std::setw(6) << s.total
          << std::setw(6) << s.relevant << std::setw(8) << format_screen(s.p)
          << std::setw(6) << s.k;
        for (std::size_t c = 0; c < 4; ++c) {
          o << std::setw(c < 3 ? 12 : 0) << format_screen(computed[i][c]);
        }
        o << '\n';
      }
      if (f.check) {
        for (const auto& d : deviations) {
          o << "MISMATCH " << d.label << ' ' << d.column << ": computed "
            << format_screen(d.computed) << ", expected "
            << format_exact(d.expected) << ", |diff| "
            << format_screen(std::abs(d.computed - d.expected)) << '\n';
        }
        o << "check: " << checked - deviations.size() << '/' << checked
          << " values within " << format_exact(kScenarioCheckTolerance)
          << '\n';
      }
    });
  }
  return deviations.empty() ? kExitOk : kExitFailure;
}

int cmd_simulate(const Flags& f, std::ostream& out) {
  const ModelSpec model = model_from(f);
  const NormalizationMode norm = norm_from(f, model);
  const SampleMoments s = monte_carlo(model, f.k, norm, f.samples, f.seed,
                                      SimulationOptions{f.workers});
  std::optional<BaselineMoments> analytic;
  if (norm == native_normalization(model)) analytic = baseline(model, f.k);

  if (structured(f)) {
    nlohmann::json j{{"model", describe(model)},
                     {"k", f.k},
                     {"norm", std::string(to_string(norm))},
                     {"samples", s.n},
                     {"seed", f.seed},
                     {"mean", s.mean},
                     {"variance", s.variance},
                     {"std_error", s.std_error}};
    j["analytic_mean"] = analytic ? nlohmann::json(analytic->mean) : nullptr;
    j["analytic_variance"] =
        analytic ? nlohmann::json(analytic->variance) : nullptr;
    emit(f, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"model", describe(model)},
      {"k", std::to_string(f.k)},
      {"norm", std::string(to_string(norm))},
      {"samples", std::to_string(s.n)},
      {"seed", std::to_string(f.seed)},
      {"mean", format_screen(s.mean)},
      {"variance", format_screen(s.variance)},
      {"std_error", format_screen(s.std_error)}};
  if (analytic) {
    rows.emplace_back("analytic_mean", format_screen(analytic->mean));
    rows.emplace_back("analytic_variance", format_screen(analytic->variance));
    if (s.std_error > 0) {
      rows.emplace_back("mean_z",
                        format_screen((s.mean - analytic->mean) / s.std_error));
    }
  } else {
    rows.emplace_back("analytic_mean", "n/a (no closed form for this norm)");
  }
  emit(f, out, [&](std::ostream& o) { print_rows(o, rows); });
  return kExitOk;
}

int cmd_enumerate(const Flags& f, std::ostream& out) {
  const ModelSpec model = model_from(f);
  const NormalizationMode norm = norm_from(f, model);
  ExactDistribution dist;
  if (const auto* wor = std::get_if<WorModel>(&model)) {
    dist = exact_wor(wor->total, wor->relevant, f.k, norm);
  } else {
    dist = exact_wr(std::get<WrModel>(model).p, f.k, norm);
  }
  emit(f, out, [&](std::ostream& o) { write_distribution_csv(o, dist); });
  return kExitOk;
}

int cmd_hist(const Flags& f, std::ostream& out) {
  if (f.out_path.empty()) throw UsageError("hist requires --out PATH");
  const ModelSpec model = model_from(f);
  const NormalizationMode norm = norm_from(f, model);
  const HistogramData h = histogram(model, f.k, norm, f.samples, f.seed,
                                    f.bins, SimulationOptions{f.workers});
  emit(f, out, [&](std::ostream& o) { write_histogram_csv(o, h); });
  out << "wrote " << h.counts.size() << " bins (" << h.n << " samples, "
      << h.model_label << ") to " << f.out_path << '\n';
  return kExitOk;
}

int cmd_evaluate(const Flags& f, std::ostream& out, std::ostream& err) {
  BaselineChoice choice;
  const int picked = (f.auto_wor ? 1 : 0) + (f.auto_wr ? 1 : 0) +
                     (f.wor.empty() ? 0 : 1) + (f.wr ? 1 : 0);
  if (picked != 1) {
    throw UsageError(
        "choose exactly one baseline: --auto-wor N, --auto-wr, --wor N M or "
        "--wr P");
  }
  if (f.auto_wor) {
    choice = AutoWor{*f.auto_wor};
  } else if (f.auto_wr) {
    choice = AutoWr{};
  } else {
    choice = model_from(f);
  }
  const RankedRun run = parse_run(std::filesystem::path(f.run_path));
  const JudgmentSet qrels = parse_qrels(std::filesystem::path(f.qrels_path));
  const NormalizationMode norm =
      f.norm.empty() ? NormalizationMode::kByMinMK
                     : parse_normalization(f.norm);
  const EvaluationReport r = evaluate(run, qrels, f.k, norm, choice);
  for (const auto& w : r.warnings) err << "apk: warning: " << w << '\n';

  const nlohmann::json j = to_json(r);
  if (structured(f)) {
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [qid, ap] : r.per_user_ap) {
      rows.emplace_back("AP@k[" + qid + "]", format_screen(ap));
    }
    rows.emplace_back("users", std::to_string(r.user_count));
    rows.emplace_back("k", std::to_string(r.k));
    rows.emplace_back("norm", std::string(to_string(r.norm)));
    rows.emplace_back("MAP@k", format_screen(r.map_at_k));
    rows.emplace_back("baseline_model", r.model_used);
    if (r.pooled_p) rows.emplace_back("pooled_p", format_screen(*r.pooled_p));
    rows.emplace_back("baseline_mean", format_screen(r.baseline_mean));
    rows.emplace_back("baseline_variance_of_map",
                      format_screen(r.baseline_variance_of_map));
    rows.emplace_back("z_score",
                      r.z_score ? format_screen(*r.z_score) : "undefined");
    print_rows(out, rows);
  }
  if (!f.out_path.empty()) {
    std::ofstream file(f.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + f.out_path);
    file << j.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Average precision at k: metrics and random-ranking baselines",
               "apk"};
  app.require_subcommand(1);
  Flags f;

  auto* baseline_cmd =
      app.add_subcommand("baseline", "Exact mean and variance of AP@k");
  add_model_flags(baseline_cmd, f);
  baseline_cmd->add_option("--k", f.k, "Rank cutoff")->required();
  add_format_flag(baseline_cmd, f);
  baseline_cmd->add_option("--out", f.out_path, "Write output to PATH");

  auto* scenarios_cmd =
      app.add_subcommand("scenarios", "WOR vs WR moments over a scenario grid");
  scenarios_cmd->add_option("--config", f.config,
                            "Scenario file (default: built-in grid)");
  scenarios_cmd->add_flag("--check", f.check,
                          "Compare with expected values, fail on deviation");
  add_format_flag(scenarios_cmd, f);
  scenarios_cmd->add_option("--out", f.out_path, "Write output to PATH");

  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo moments of AP@k");
  add_model_flags(simulate_cmd, f);
  simulate_cmd->add_option("--k", f.k, "Rank cutoff")->required();
  add_norm_flag(simulate_cmd, f);
  simulate_cmd->add_option("-n,--samples", f.samples, "Number of rankings");
  simulate_cmd->add_option("--seed", f.seed, "Generator seed");
  simulate_cmd->add_option("--workers", f.workers, "Threads (0 = all cores)");
  add_format_flag(simulate_cmd, f);
  simulate_cmd->add_option("--out", f.out_path, "Write output to PATH");

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "Exact AP@k distribution as CSV (k <= 24)");
  add_model_flags(enumerate_cmd, f);
  enumerate_cmd->add_option("--k", f.k, "Rank cutoff")->required();
  add_norm_flag(enumerate_cmd, f);
  enumerate_cmd->add_option("--out", f.out_path, "Write CSV to PATH");

  auto* hist_cmd = app.add_subcommand("hist", "Histogram of simulated AP@k");
  add_model_flags(hist_cmd, f);
  hist_cmd->add_option("--k", f.k, "Rank cutoff")->required();
  add_norm_flag(hist_cmd, f);
  hist_cmd->add_option("-n,--samples", f.samples, "Number of rankings");
  hist_cmd->add_option("--seed", f.seed, "Generator seed");
  hist_cmd->add_option("--bins", f.bins, "Equal-width bins over [0, 1]");
  hist_cmd->add_option("--workers", f.workers, "Threads (0 = all cores)");
  hist_cmd->add_option("--out", f.out_path, "CSV output path")->required();

  auto* evaluate_cmd = app.add_subcommand(
      "evaluate", "Score a run against qrels and the chance baseline");
  evaluate_cmd->add_option("--run", f.run_path, "Run file")->required();
  evaluate_cmd->add_option("--qrels", f.qrels_path, "Qrels file")->required();
  evaluate_cmd->add_option("--k", f.k, "Rank cutoff")->required();
  add_norm_flag(evaluate_cmd, f);
  evaluate_cmd->add_option("--auto-wor", f.auto_wor,
                           "WOR baseline with per-query m and this N");
  evaluate_cmd->add_flag("--auto-wr", f.auto_wr,
                         "WR baseline with pooled top-k prevalence");
  add_model_flags(evaluate_cmd, f);
  add_format_flag(evaluate_cmd, f);
  evaluate_cmd->add_option("--out", f.out_path, "Write JSON report to PATH");

  std::vector<std::string> argv_store{"apk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*baseline_cmd) return cmd_baseline(f, out);
    if (*scenarios_cmd) return cmd_scenarios(f, out);
    if (*simulate_cmd) return cmd_simulate(f, out);
    if (*enumerate_cmd) return cmd_enumerate(f, out);
    if (*hist_cmd) return cmd_hist(f, out);
    if (*evaluate_cmd) return cmd_evaluate(f, out, err);
  } catch (const UsageError& e) {
    err << "apk: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "apk: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "apk: error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace apk::tools
