/*
 * Copyright 2026 The gossip_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gossiplab/cli/commands.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gossiplab/autotune.hpp"
#include "gossiplab/cli/formats.hpp"
#include "gossiplab/cli/render.hpp"
#include "gossiplab/engine.hpp"
#include "gossiplab/error.hpp"
#include "gossiplab/fsa.hpp"
#include "gossiplab/metrics.hpp"
#include "gossiplab/parallel.hpp"

namespace gossiplab::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kTieBreak = "lowest-sender-id";
constexpr std::string_view kCapOrder = "ascending-receiver-id";

// Bad command-line values; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational arg_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const GossipError&) {
    throw UsageError(flag + ": not a number: '" + text + "'");
  }
}

Rational arg_fraction(const std::string& flag, const std::string& text) {
  Rational h = arg_rational(flag, text);
  if (h < Rational(0) || h > Rational(1)) throw UsageError(flag + " must lie in [0, 1]");
  return h;
}

template <typename Fn>
auto as_usage(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const GossipError& e) {
    throw UsageError(e.what());
  }
}

Json rational_json(const Rational& r) {
  return Json{{"num", r.num()}, {"den", r.den()}, {"value", r.to_double()}};
}

enum class Format { kText, kCsv, kJson };

Format parse_format(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw UsageError("--format must be text, csv or json");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

// ---------------------------------------------------------------- run

struct RunArgs {
  int n = 0;
  std::string family = "identity";
  std::string h = "0.5";
  std::string strategy = "prefix";
  std::string perm_file;
  std::optional<int> cap;
  std::string schedule;
  std::string trace;
  std::string format = "text";
  bool unicode = false;
  std::int64_t max_steps = 0;
};

ChannelProfile build_profile(SystemSize n, const std::optional<int>& cap, const std::string& schedule,
                             const std::string& trace) {
  int given = (cap ? 1 : 0) + (schedule.empty() ? 0 : 1) + (trace.empty() ? 0 : 1);
  if (given > 1) throw UsageError("use at most one of --cap, --schedule, --trace");
  if (cap) return as_usage([&] { return ChannelProfile::constant(*cap); });
  if (!schedule.empty()) {
    return as_usage([&] { return ChannelProfile::schedule(parse_schedule(schedule)); });
  }
  if (!trace.empty()) {
    return as_usage([&] { return SenseProvider::trace_file(trace).to_channel_profile(); });
  }
  return ChannelProfile::unconstrained(n);
}

int cmd_run(const RunArgs& args, std::ostream& out) {
  const SystemSize n = as_usage([&] { return SystemSize(args.n); });
  const Format format = parse_format(args.format);
  const ChannelProfile profile = build_profile(n, args.cap, args.schedule, args.trace);

  std::vector<PermutationSpec> assignment;
  std::string family_note = "family=" + args.family;
  if (args.family == "identity") {
    assignment = identity_assignment(n);
  } else if (args.family == "pipelined") {
    assignment = pipelined_assignment(n);
  } else if (args.family == "hybrid") {
    Rational h = arg_fraction("--h", args.h);
    as_usage([&] { return assignment_strategy(args.strategy); });
    assignment = hybrid_assignment({n, h, args.strategy});
    family_note += " h=" + h.to_shortest_decimal() + " strategy=" + args.strategy +
                   " pipelined=" + std::to_string(pipelined_process_count(n, h));
  } else if (args.family == "custom") {
    if (args.perm_file.empty()) throw UsageError("--family custom needs --perm-file");
    std::ifstream in = open_input(args.perm_file);
    assignment = read_permutation_file(in, n);
    family_note += " perm-file=" + args.perm_file;
  } else {
    throw UsageError("--family must be identity, pipelined, hybrid or custom");
  }

  const std::int64_t max_steps = args.max_steps > 0 ? args.max_steps : default_step_cap(n);
  const RunTable table = simulate(assignment, profile, max_steps);
  const Metrics metrics = compute_metrics(table);

  switch (format) {
    case Format::kText:
      out << "# n=" << n.n() << ' ' << family_note << " profile=" << profile.description()
          << " tie-break=" << kTieBreak << " cap-order=" << kCapOrder << '\n';
      out << render_run_table_text(table, RenderOptions{args.unicode});
      out << metrics_footer(metrics) << '\n';
      break;
    case Format::kCsv:
      out << render_run_table_csv(table) << '\n';
      out << "lambda," << metrics.lambda << '\n';
      out << "mu," << metrics.mu.to_decimal(6) << '\n';
      out << "efficiency," << metrics.efficiency.to_decimal(6) << '\n';
      break;
    case Format::kJson: {
      Json j;
      j["n"] = n.n();
      j["family"] = args.family;
      if (args.family == "hybrid") {
        j["h"] = rational_json(arg_fraction("--h", args.h));
        j["strategy"] = args.strategy;
      }
      j["profile"] = profile.description();
      j["tie_break"] = kTieBreak;
      j["cap_order"] = kCapOrder;
      j["lambda"] = metrics.lambda;
      j["mu"] = rational_json(metrics.mu);
      j["efficiency"] = rational_json(metrics.efficiency);
      j["nu"] = table.nu().values;
      Json rows = Json::array();
      for (int p = 0; p <= n.n(); ++p) {
        Json row = Json::array();
        for (const Action& a : table.row(ProcessId{p})) row.push_back(cell_text(a));
        rows.push_back(std::move(row));
      }
      j["table"] = std::move(rows);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------- sweep

struct SweepArgs {
  int n = 0;
  std::string grid;
  std::string from;
  std::string to;
  std::string step;
  std::string strategy = "prefix";
  std::string format = "csv";
  unsigned threads = 0;
};

std::vector<Rational> resolve_grid(const std::string& grid, const std::string& from,
                                   const std::string& to, const std::string& step,
                                   std::vector<Rational> fallback) {
  bool range = !from.empty() || !to.empty() || !step.empty();
  if (!grid.empty() && range) throw UsageError("use either --grid or --from/--to/--step");
  std::vector<Rational> values;
  if (!grid.empty()) {
    values = as_usage([&] { return parse_grid(grid); });
  } else if (range) {
    if (from.empty() || to.empty() || step.empty()) {
      throw UsageError("--from, --to and --step go together");
    }
    values = as_usage([&] {
      return make_grid(arg_rational("--from", from), arg_rational("--to", to), arg_rational("--step", step));
    });
  } else {
    values = std::move(fallback);
  }
  for (const Rational& h : values) {
    if (h < Rational(0) || h > Rational(1)) throw UsageError("grid values must lie in [0, 1]");
  }
  if (values.empty()) throw GossipError(ErrorCode::kEmptyGrid, "grid is empty");
  return values;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  const SystemSize n = as_usage([&] { return SystemSize(args.n); });
  const Format format = parse_format(args.format);
  as_usage([&] { return assignment_strategy(args.strategy); });
  std::vector<Rational> grid = resolve_grid(args.grid, args.from, args.to, args.step, default_lookup_grid());

  std::vector<Metrics> results(grid.size());
  parallel_for_index(grid.size(), args.threads, [&](std::size_t k) {
    auto assignment = hybrid_assignment({n, grid[k], args.strategy});
    results[k] = compute_metrics(n, simulate_utilization(assignment, ChannelProfile::unconstrained(n)));
  });

  switch (format) {
    case Format::kCsv:
      out << "h,mu,lambda\n";
      for (std::size_t k = 0; k < grid.size(); ++k) {
        out << grid[k].to_shortest_decimal() << ',' << results[k].mu.to_decimal(6) << ','
            << results[k].lambda << '\n';
      }
      break;
    case Format::kText:
      out << "# n=" << n.n() << " strategy=" << args.strategy << '\n';
      out << std::left << std::setw(14) << "h" << std::setw(12) << "mu" << "lambda\n";
      for (std::size_t k = 0; k < grid.size(); ++k) {
        out << std::left << std::setw(14) << grid[k].to_shortest_decimal() << std::setw(12)
            << results[k].mu.to_decimal(4) << results[k].lambda << '\n';
      }
      break;
    case Format::kJson: {
      Json rows = Json::array();
      for (std::size_t k = 0; k < grid.size(); ++k) {
        rows.push_back(Json{{"h", grid[k].to_shortest_decimal()},
                            {"h_exact", rational_json(grid[k])},
                            {"lambda", results[k].lambda},
                            {"mu", rational_json(results[k].mu)}});
      }
      Json j{{"n", n.n()}, {"strategy", args.strategy}, {"rows", std::move(rows)}};
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------- autotune

struct AutotuneArgs {
  int n = 0;
  std::optional<int> constant;
  std::string schedule;
  std::string trace;
  std::string trace_policy = "hold";
  std::string planner = "adaptive";
  std::string mode = "hbisection";
  int iterations = 12;
  std::string grid;
  std::string from;
  std::string to;
  std::string step;
  std::string table;
  std::string save_table;
  std::string band = "0.1";
  std::string initial_h = "0";
  std::string strategy = "prefix";
  bool keep_going = false;
  std::string format = "text";
  unsigned threads = 0;
};

SenseProvider build_provider(const AutotuneArgs& args) {
  int given = (args.constant ? 1 : 0) + (args.schedule.empty() ? 0 : 1) + (args.trace.empty() ? 0 : 1);
  if (given != 1) throw UsageError("give exactly one of --constant, --schedule, --trace");
  if (args.constant) return as_usage([&] { return SenseProvider::constant(*args.constant); });
  if (!args.schedule.empty()) {
    return as_usage([&] { return SenseProvider::step_schedule(parse_schedule(args.schedule)); });
  }
  TraceExhaustion policy;
  if (args.trace_policy == "hold") {
    policy = TraceExhaustion::kHoldLast;
  } else if (args.trace_policy == "error") {
    policy = TraceExhaustion::kError;
  } else {
    throw UsageError("--trace-policy must be hold or error");
  }
  return as_usage([&] { return SenseProvider::trace_file(args.trace, policy); });
}

std::string opt_decimal(const std::optional<Rational>& r, int digits) {
  return r ? r->to_decimal(digits) : std::string("-");
}

int cmd_autotune(const AutotuneArgs& args, std::ostream& out) {
  const SystemSize n = as_usage([&] { return SystemSize(args.n); });
  const Format format = parse_format(args.format);
  SenseProvider provider = build_provider(args);
  as_usage([&] { return assignment_strategy(args.strategy); });
  if (args.iterations < 1) throw UsageError("--iterations must be >= 1");

  MapeConfig config;
  if (args.planner == "lookup") {
    config.planner = Planner::kLookup;
  } else if (args.planner == "adaptive") {
    config.planner = Planner::kAdaptive;
  } else {
    throw UsageError("--planner must be lookup or adaptive");
  }
  if (args.mode == "hbisection") {
    config.mode = AdaptiveMode::kHBisection;
  } else if (args.mode == "literal") {
    config.mode = AdaptiveMode::kLiteralMuGap;
  } else {
    throw UsageError("--mode must be hbisection or literal");
  }
  config.band = arg_rational("--band", args.band);
  if (config.band < Rational(0)) throw UsageError("--band must be non-negative");
  const Rational initial_h = arg_fraction("--initial-h", args.initial_h);

  MuEvaluator evaluator = make_mu_evaluator(n, args.strategy);
  ParallelismMap map(n);
  if (!args.table.empty()) {
    std::ifstream in = open_input(args.table);
    map = load_lookup_csv(n, in);
  } else {
    // The lookup planner samples the whole range; the adaptive planner
    // starts from the two homogeneous endpoints.
    std::vector<Rational> fallback = config.planner == Planner::kLookup
                                         ? default_lookup_grid()
                                         : std::vector<Rational>{Rational(0), Rational(1)};
    auto grid = resolve_grid(args.grid, args.from, args.to, args.step, std::move(fallback));
    map = build_lookup_table(n, grid, evaluator, args.threads);
  }

  MapeController controller(std::move(map), provider, config, initial_h, evaluator);
  std::vector<MapeDecision> log = run_autotune(controller, args.iterations, !args.keep_going);

  const int last_cp = log.back().cp;
  LookupResult best = tune_lookup(last_cp, controller.map());
  int refinements = 0;
  for (const MapeDecision& d : log) {
    for (const AdaptiveResult& r : d.iteration_log) {
      if (r.outcome == AdaptiveOutcome::kRefined) ++refinements;
    }
  }

  if (!args.save_table.empty()) {
    std::ofstream save(args.save_table);
    if (!save) throw UsageError("cannot write '" + args.save_table + "'");
    save_lookup_csv(controller.map(), save);
  }

  auto probe_of = [](const MapeDecision& d) -> const AdaptiveResult* {
    return d.iteration_log.empty() ? nullptr : &d.iteration_log.back();
  };

  switch (format) {
    case Format::kText: {
      out << "# n=" << n.n() << " provider=" << provider.describe() << " planner=" << args.planner
          << " mode=" << to_string(config.mode) << " band=" << config.band.to_shortest_decimal()
          << " strategy=" << args.strategy << '\n';
      out << std::left << std::setw(6) << "iter" << std::setw(8) << "step" << std::setw(6) << "cp"
          << std::setw(12) << "status" << std::setw(12) << "probe_h" << std::setw(11) << "probe_mu"
          << std::setw(6) << "map" << std::setw(12) << "h" << "mu\n";
      for (const MapeDecision& d : log) {
        const AdaptiveResult* r = probe_of(d);
        out << std::left << std::setw(6) << d.iteration << std::setw(8) << d.step << std::setw(6) << d.cp
            << std::setw(12) << to_string(d.status) << std::setw(12)
            << (r ? opt_decimal(r->probe, 6) : "-") << std::setw(11)
            << (r ? opt_decimal(r->probe_mu, 4) : "-") << std::setw(6) << d.map_size << std::setw(12)
            << d.chosen_h.to_decimal(6) << d.chosen_mu.to_decimal(4) << '\n';
      }
      out << "best h=" << best.h.to_shortest_decimal() << " mu=" << best.mu.to_decimal(4)
          << " map=" << controller.map().size() << " refinements=" << refinements
          << " iterations=" << log.size() << " saturated=" << (best.saturated ? "yes" : "no") << '\n';
      break;
    }
    case Format::kCsv:
      out << "iteration,step,cp,status,probe_h,probe_mu,map_size,h,mu\n";
      for (const MapeDecision& d : log) {
        const AdaptiveResult* r = probe_of(d);
        out << d.iteration << ',' << d.step << ',' << d.cp << ',' << to_string(d.status) << ','
            << (r && r->probe ? r->probe->to_shortest_decimal() : "") << ','
            << (r && r->probe_mu ? r->probe_mu->to_decimal(6) : "") << ',' << d.map_size << ','
            << d.chosen_h.to_shortest_decimal() << ',' << d.chosen_mu.to_decimal(6) << '\n';
      }
      break;
    case Format::kJson: {
      Json iterations = Json::array();
      for (const MapeDecision& d : log) {
        Json probes = Json::array();
        for (const AdaptiveResult& r : d.iteration_log) {
          Json p{{"outcome", to_string(r.outcome)}};
          p["h0"] = r.h0 ? rational_json(*r.h0) : Json();
          p["sb"] = r.sb ? rational_json(*r.sb) : Json();
          p["probe"] = r.probe ? rational_json(*r.probe) : Json();
          p["probe_mu"] = r.probe_mu ? rational_json(*r.probe_mu) : Json();
          probes.push_back(std::move(p));
        }
        iterations.push_back(Json{{"iteration", d.iteration},
                                  {"step", d.step},
                                  {"cp", d.cp},
                                  {"status", to_string(d.status)},
                                  {"previous_h", rational_json(d.previous_h)},
                                  {"previous_mu", rational_json(d.previous_mu)},
                                  {"h", rational_json(d.chosen_h)},
                                  {"mu", rational_json(d.chosen_mu)},
                                  {"map_size", d.map_size},
                                  {"converged", d.converged},
                                  {"probes", std::move(probes)}});
      }
      Json j{{"n", n.n()},
             {"provider", provider.describe()},
             {"planner", args.planner},
             {"mode", to_string(config.mode)},
             {"band", rational_json(config.band)},
             {"strategy", args.strategy},
             {"iterations", std::move(iterations)},
             {"best", Json{{"h", rational_json(best.h)}, {"mu", rational_json(best.mu)}, {"saturated", best.saturated}}},
             {"map_size", controller.map().size()},
             {"refinements", refinements}};
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------- validate

struct ValidateArgs {
  std::string range = "2..50";
  unsigned threads = 0;
};

struct Check {
  bool ok = true;
  std::vector<std::string> lines;
};

Check validate_size(SystemSize n) {
  Check c;
  const std::int64_t used = 2LL * n.n() * n.process_count();
  auto note = [&](bool ok, const std::string& text) {
    c.ok = c.ok && ok;
    c.lines.push_back((ok ? "ok   " : "FAIL ") + text);
  };
  const std::string tag = "N=" + std::to_string(n.n());

  Metrics id = compute_metrics(n, simulate_utilization(identity_assignment(n), ChannelProfile::unconstrained(n)));
  std::int64_t id_expected = closed_form_length_identity(n);
  note(id.lambda == id_expected, tag + " identity lambda expected=" + std::to_string(id_expected) +
                                     " actual=" + std::to_string(id.lambda));
  note(id.mu * Rational(id.lambda) == Rational(used),
       tag + " identity mu*lambda expected=" + std::to_string(used) + " actual=" +
           (id.mu * Rational(id.lambda)).to_string());

  Metrics pipe = compute_metrics(n, simulate_utilization(pipelined_assignment(n), ChannelProfile::unconstrained(n)));
  if (n.n() < 2) {
    c.lines.push_back("skip " + tag + " pipelined closed forms: outside formula domain (simulated lambda=" +
                      std::to_string(pipe.lambda) + " mu=" + pipe.mu.to_decimal(4) + ")");
  } else {
    std::int64_t expected = closed_form_length_pipelined(n);
    note(pipe.lambda == expected, tag + " pipelined lambda expected=" + std::to_string(expected) +
                                      " actual=" + std::to_string(pipe.lambda));
    Rational mu_expected = closed_form_mu_pipelined(n);
    note(pipe.mu == mu_expected, tag + " pipelined mu expected=" + mu_expected.to_string() +
                                     " actual=" + pipe.mu.to_string());
  }
  note(pipe.mu * Rational(pipe.lambda) == Rational(used),
       tag + " pipelined mu*lambda expected=" + std::to_string(used) + " actual=" +
           (pipe.mu * Rational(pipe.lambda)).to_string());
  return c;
}

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
  auto [lo, hi] = as_usage([&] { return parse_int_range(args.range); });
  if (lo < 1) throw UsageError("--n range must start at 1 or above");
  std::vector<Check> checks(static_cast<std::size_t>(hi - lo + 1));
  parallel_for_index(checks.size(), args.threads,
                     [&](std::size_t k) { checks[k] = validate_size(SystemSize(lo + static_cast<int>(k))); });
  int failures = 0;
  std::size_t total = 0;
  for (const Check& c : checks) {
    for (const std::string& line : c.lines) {
      out << line << '\n';
      if (line.starts_with("FAIL")) ++failures;
      if (!line.starts_with("skip")) ++total;
    }
  }
  out << "validated N=" << lo << ".." << hi << ": " << total << " checks, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitValidation;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDeadlockDetected:
    case ErrorCode::kStepLimitExceeded:
    case ErrorCode::kInvalidCapacity:
      return kExitEngine;
    default:
      return kExitValidation;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate and tune permutation-driven all-to-all gossiping", "gossip_lab"};
  // "--h" is a run option, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 validation failure, 2 argument error, 3 engine error.\n"
      "GOSSIP_LAB_SEED is accepted for randomized drivers; the engine itself is deterministic.");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Simulate one run and print its run-table and metrics");
  run_cmd->add_option("--n", run.n, "System size N (N+1 processes)")->required();
  run_cmd->add_option("--family", run.family, "identity | pipelined | hybrid | custom");
  run_cmd->add_option("--h", run.h, "Pipelined fraction for --family hybrid");
  run_cmd->add_option("--strategy", run.strategy, "Hybrid assignment strategy (prefix | spread)");
  run_cmd->add_option("--perm-file", run.perm_file, "Permutation file for --family custom");
  run_cmd->add_option("--cap", run.cap, "Constant channel capacity per step");
  run_cmd->add_option("--schedule", run.schedule, "Piecewise capacity, e.g. 1:4,100:16");
  run_cmd->add_option("--trace", run.trace, "Capacity trace file, one value per line");
  run_cmd->add_option("--format", run.format, "text | csv | json");
  run_cmd->add_flag("--unicode", run.unicode, "Print blocked states as arrows");
  run_cmd->add_option("--max-steps", run.max_steps, "Step cap (default 10N^2+10)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate mu and lambda over hybrid fractions");
  sweep_cmd->add_option("--n", sweep.n, "System size N")->required();
  sweep_cmd->add_option("--grid", sweep.grid, "Comma-separated fractions, e.g. 0,0.5,1");
  sweep_cmd->add_option("--from", sweep.from, "Range start");
  sweep_cmd->add_option("--to", sweep.to, "Range end (inclusive)");
  sweep_cmd->add_option("--step", sweep.step, "Range step");
  sweep_cmd->add_option("--strategy", sweep.strategy, "Hybrid assignment strategy");
  sweep_cmd->add_option("--format", sweep.format, "csv | json | text");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");

  AutotuneArgs tune;
  auto* tune_cmd = app.add_subcommand("autotune", "Run the MAPE loop against a capacity source");
  tune_cmd->add_option("--n", tune.n, "System size N")->required();
  tune_cmd->add_option("--constant", tune.constant, "Constant sensed capacity");
  tune_cmd->add_option("--schedule", tune.schedule, "Sensed capacity schedule, e.g. 1:4,100:16");
  tune_cmd->add_option("--trace", tune.trace, "Sensed capacity trace file");
  tune_cmd->add_option("--trace-policy", tune.trace_policy, "hold | error once the trace runs out");
  tune_cmd->add_option("--planner", tune.planner, "lookup | adaptive");
  tune_cmd->add_option("--mode", tune.mode, "hbisection | literal (adaptive planner)");
  tune_cmd->add_option("--iterations", tune.iterations, "Maximum loop iterations");
  tune_cmd->add_option("--grid", tune.grid, "Initial map keys");
  tune_cmd->add_option("--from", tune.from, "Initial map range start");
  tune_cmd->add_option("--to", tune.to, "Initial map range end");
  tune_cmd->add_option("--step", tune.step, "Initial map range step");
  tune_cmd->add_option("--table", tune.table, "Load the initial map from an h,mu CSV");
  tune_cmd->add_option("--save-table", tune.save_table, "Write the final map as h,mu CSV");
  tune_cmd->add_option("--band", tune.band, "Accepted overshoot fraction above cp");
  tune_cmd->add_option("--initial-h", tune.initial_h, "Starting pipelined fraction");
  tune_cmd->add_option("--strategy", tune.strategy, "Hybrid assignment strategy");
  tune_cmd->add_flag("--keep-going", tune.keep_going, "Do not stop once the incumbent settles");
  tune_cmd->add_option("--format", tune.format, "text | csv | json");
  tune_cmd->add_option("--threads", tune.threads, "Worker threads for building the map");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check simulations against the closed forms");
  validate_cmd->add_option("--n", validate.range, "Range of N, e.g. 2..50");
  validate_cmd->add_option("--threads", validate.threads, "Worker threads (0 = all cores)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*tune_cmd) return cmd_autotune(tune, out);
    if (*validate_cmd) return cmd_validate(validate, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GossipError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace gossiplab::cli
