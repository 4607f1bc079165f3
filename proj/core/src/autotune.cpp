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

#include "gossiplab/autotune.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <type_traits>

#include "gossiplab/engine.hpp"
#include "gossiplab/error.hpp"
#include "gossiplab/fsa.hpp"
#include "gossiplab/metrics.hpp"
#include "gossiplab/parallel.hpp"

namespace gossiplab {
namespace {

void require_fraction(const Rational& h) {
  if (h < Rational(0) || h > Rational(1)) {
    throw GossipError(ErrorCode::kInvalidArgument, "h=" + h.to_string() + " outside [0, 1]");
  }
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

Rational compute_mu(SystemSize n, const Rational& h, const std::string& strategy) {
  auto assignment = hybrid_assignment({n, h, strategy});
  auto nu = simulate_utilization(assignment, ChannelProfile::unconstrained(n));
  return mean_slot_utilization(nu);
}

MuEvaluator make_mu_evaluator(SystemSize n, std::string strategy) {
  assignment_strategy(strategy);  // fail early on unknown names
  return [n, strategy = std::move(strategy)](const Rational& h) {
    return compute_mu(n, h, strategy);
  };
}

const Rational& ParallelismMap::at(const Rational& h) const {
  auto it = entries_.find(h);
  if (it == entries_.end()) {
    throw GossipError(ErrorCode::kOutOfRange, "h=" + h.to_string() + " is not in the map");
  }
  return it->second;
}

void ParallelismMap::insert(const Rational& h, const Rational& mu) {
  require_fraction(h);
  if (!entries_.emplace(h, mu).second) {
    throw GossipError(ErrorCode::kConvergedDuplicate, "h=" + h.to_string() + " already mapped");
  }
}

std::optional<Rational> ParallelismMap::min_key_reaching(const Rational& threshold) const {
  for (const auto& [h, mu] : entries_) {
    if (mu >= threshold) return h;
  }
  return std::nullopt;
}

std::optional<Rational> ParallelismMap::max_key_below(const Rational& threshold) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->second < threshold) return it->first;
  }
  return std::nullopt;
}

const Rational& ParallelismMap::largest_key() const {
  if (entries_.empty()) throw GossipError(ErrorCode::kEmptyGrid, "parallelism map is empty");
  return entries_.rbegin()->first;
}

std::vector<Rational> make_grid(const Rational& from, const Rational& to, const Rational& step) {
  if (step <= Rational(0)) {
    throw GossipError(ErrorCode::kInvalidArgument, "grid step must be positive");
  }
  if (from > to) throw GossipError(ErrorCode::kEmptyGrid, "grid start exceeds its end");
  std::vector<Rational> grid;
  for (Rational h = from; h <= to; h += step) grid.push_back(h);
  return grid;
}

std::vector<Rational> default_lookup_grid() {
  return make_grid(Rational(1, 200), Rational(1), Rational(1, 200));
}

ParallelismMap build_lookup_table(SystemSize n, const std::vector<Rational>& grid,
                                  const MuEvaluator& evaluator, unsigned threads) {
  if (grid.empty()) throw GossipError(ErrorCode::kEmptyGrid, "lookup grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid[k] < Rational(0) || grid[k] > Rational(1)) {
      throw GossipError(ErrorCode::kInvalidArgument,
                        "grid value " + grid[k].to_string() + " outside [0, 1]", k);
    }
    if (k > 0 && !(grid[k - 1] < grid[k])) {
      throw GossipError(ErrorCode::kInvalidArgument, "grid must be strictly increasing", k);
    }
  }

  std::vector<std::optional<Rational>> mus(grid.size());
  parallel_for_index(grid.size(), threads, [&](std::size_t k) { mus[k] = evaluator(grid[k]); });

  ParallelismMap map(n);
  for (std::size_t k = 0; k < grid.size(); ++k) map.insert(grid[k], *mus[k]);
  return map;
}

ParallelismMap build_lookup_table(SystemSize n, const std::vector<Rational>& grid,
                                  unsigned threads) {
  return build_lookup_table(n, grid, make_mu_evaluator(n), threads);
}

void save_lookup_csv(const ParallelismMap& map, std::ostream& out) {
  out << "h,mu\n";
  for (const auto& [h, mu] : map.entries()) {
    out << h.to_shortest_decimal() << ',' << mu.to_decimal(12) << '\n';
  }
}

ParallelismMap load_lookup_csv(SystemSize n, std::istream& in) {
  const std::int64_t used = 2LL * n.n() * n.process_count();
  ParallelismMap map(n);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (line == "h,mu") continue;
      throw GossipError(ErrorCode::kParseError, "expected header 'h,mu'", line_no);
    }
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw GossipError(ErrorCode::kParseError, "expected 'h,mu' on line " + std::to_string(line_no),
                        line_no);
    }
    Rational h = Rational::parse(line.substr(0, comma));
    Rational mu_text = Rational::parse(line.substr(comma + 1));
    if (mu_text <= Rational(0)) {
      throw GossipError(ErrorCode::kParseError, "mu must be positive", line_no);
    }
    // mu = used / lambda for an integer lambda; recover lambda exactly.
    std::int64_t lambda = (Rational(used) / mu_text).round_half_up();
    if (lambda < 1) throw GossipError(ErrorCode::kParseError, "mu too large", line_no);
    Rational mu(used, lambda);
    Rational error = mu - mu_text;
    if (error < Rational(0)) error = -error;
    if (error > Rational(1, 1'000'000'000)) {
      throw GossipError(ErrorCode::kParseError,
                        "mu on line " + std::to_string(line_no) +
                            " is not 2N(N+1)/lambda for any integer lambda",
                        line_no);
    }
    map.insert(h, mu);
  }
  return map;
}

LookupResult tune_lookup(int cp, const ParallelismMap& map) {
  if (map.empty()) throw GossipError(ErrorCode::kEmptyGrid, "lookup table is empty");
  if (auto h = map.min_key_reaching(Rational(cp))) return {*h, map.at(*h), false};
  const Rational& last = map.largest_key();
  return {last, map.at(last), true};
}

std::string_view to_string(AdaptiveOutcome outcome) {
  switch (outcome) {
    case AdaptiveOutcome::kExactMatch: return "exact";
    case AdaptiveOutcome::kRefined: return "refined";
    case AdaptiveOutcome::kSaturated: return "saturated";
    case AdaptiveOutcome::kConvergedDuplicate: return "converged";
  }
  return "?";
}

std::string_view to_string(AdaptiveMode mode) {
  switch (mode) {
    case AdaptiveMode::kHBisection: return "hbisection";
    case AdaptiveMode::kLiteralMuGap: return "literal-mu-gap";
  }
  return "?";
}

AdaptiveResult tune_adaptive(int cp, ParallelismMap& map, AdaptiveMode mode,
                             const MuEvaluator& evaluator) {
  if (map.empty()) throw GossipError(ErrorCode::kEmptyGrid, "parallelism map is empty");
  AdaptiveResult result;
  const Rational target(cp);

  auto h0 = map.min_key_reaching(target);
  if (!h0) {
    result.outcome = AdaptiveOutcome::kSaturated;
    result.h = map.largest_key();
    result.mu = map.at(result.h);
    return result;
  }
  const Rational mu0 = map.at(*h0);
  result.h0 = *h0;
  result.h = *h0;
  result.mu = mu0;
  if (mu0 == target) {
    result.outcome = AdaptiveOutcome::kExactMatch;
    return result;
  }

  auto sb = map.max_key_below(mu0);
  if (!sb) {
    // h0 already has the smallest known mu; there is nothing to bracket.
    result.outcome = AdaptiveOutcome::kConvergedDuplicate;
    return result;
  }
  result.sb = *sb;

  Rational probe;
  if (mode == AdaptiveMode::kHBisection) {
    probe = (*h0 + *sb) / Rational(2);
  } else {
    probe = (mu0 - map.at(*sb)) / Rational(200);
    const Rational lo = std::min(*h0, *sb);
    const Rational hi = std::max(*h0, *sb);
    probe = std::clamp(probe, lo, hi);
  }
  result.probe = probe;

  if (map.contains(probe)) {
    result.outcome = AdaptiveOutcome::kConvergedDuplicate;
    return result;
  }
  Rational mu = evaluator(probe);
  map.insert(probe, mu);
  result.outcome = AdaptiveOutcome::kRefined;
  result.probe_mu = mu;
  result.h = probe;
  result.mu = mu;
  return result;
}

SenseProvider SenseProvider::constant(int value) {
  if (value < 1) {
    throw GossipError(ErrorCode::kInvalidCapacity, "sensed capacity must be >= 1");
  }
  return SenseProvider(Constant{value});
}

SenseProvider SenseProvider::step_schedule(std::vector<std::pair<std::int64_t, int>> entries) {
  // Reuse the profile's validation.
  (void)ChannelProfile::schedule(entries);
  return SenseProvider(StepSchedule{std::move(entries)});
}

SenseProvider SenseProvider::trace(std::vector<int> values, TraceExhaustion policy) {
  if (values.empty()) throw GossipError(ErrorCode::kTraceExhausted, "trace is empty");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 1) {
      throw GossipError(ErrorCode::kInvalidCapacity,
                        "trace value on line " + std::to_string(k + 1) + " must be >= 1", k + 1);
    }
  }
  return SenseProvider(Trace{{}, std::move(values), policy});
}

SenseProvider SenseProvider::trace_file(const std::filesystem::path& path, TraceExhaustion policy) {
  std::ifstream in(path);
  if (!in) {
    throw GossipError(ErrorCode::kInvalidArgument, "cannot open trace file " + path.string());
  }
  std::vector<int> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) {
      // Only trailing blank lines are tolerated.
      std::string rest;
      while (std::getline(in, rest)) {
        if (!trim(rest).empty()) {
          throw GossipError(ErrorCode::kParseError,
                            "blank line " + std::to_string(line_no) + " inside trace", line_no);
        }
      }
      break;
    }
    Rational v;
    try {
      v = Rational::parse(line);
    } catch (const GossipError&) {
      throw GossipError(ErrorCode::kParseError,
                        "line " + std::to_string(line_no) + " is not a number: '" + line + "'",
                        line_no);
    }
    if (!v.is_integer()) {
      throw GossipError(ErrorCode::kParseError,
                        "line " + std::to_string(line_no) + " is not an integer", line_no);
    }
    values.push_back(static_cast<int>(v.num()));
  }
  SenseProvider provider = trace(std::move(values), policy);
  std::get<Trace>(provider.kind_).path = path;
  return provider;
}

int SenseProvider::sense(std::int64_t step) const {
  if (step < 1) throw GossipError(ErrorCode::kInvalidArgument, "steps start at 1");
  return std::visit(
      [step](const auto& k) -> int {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Constant>) {
          return k.value;
        } else if constexpr (std::is_same_v<K, StepSchedule>) {
          int value = k.entries.front().second;
          for (const auto& [from, v] : k.entries) {
            if (from <= step) value = v;
          }
          return value;
        } else {
          auto index = static_cast<std::size_t>(step - 1);
          if (index < k.values.size()) return k.values[index];
          if (k.policy == TraceExhaustion::kError) {
            throw GossipError(ErrorCode::kTraceExhausted,
                              "trace has " + std::to_string(k.values.size()) +
                                  " values, step " + std::to_string(step) + " requested");
          }
          return k.values.back();
        }
      },
      kind_);
}

std::string SenseProvider::describe() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<K, Constant>) {
          os << "constant(" << k.value << ")";
        } else if constexpr (std::is_same_v<K, StepSchedule>) {
          os << "schedule(";
          for (std::size_t i = 0; i < k.entries.size(); ++i) {
            os << (i ? "," : "") << k.entries[i].first << ":" << k.entries[i].second;
          }
          os << ")";
        } else {
          os << "trace(" << (k.path.empty() ? std::string("<memory>") : k.path.string()) << ", "
             << k.values.size() << " values)";
        }
        return os.str();
      },
      kind_);
}

ChannelProfile SenseProvider::to_channel_profile() const {
  SenseProvider copy = *this;
  return ChannelProfile([copy](std::int64_t step) { return copy.sense(step); }, describe());
}

std::string_view to_string(Planner planner) {
  return planner == Planner::kLookup ? "lookup" : "adaptive";
}

std::string_view to_string(MapeStatus status) {
  switch (status) {
    case MapeStatus::kNoChange: return "no-change";
    case MapeStatus::kUndershoot: return "undershoot";
    case MapeStatus::kOvershoot: return "overshoot";
    case MapeStatus::kSaturated: return "saturated";
  }
  return "?";
}

MapeController::MapeController(ParallelismMap map, SenseProvider provider, MapeConfig config,
                               Rational initial_h, MuEvaluator evaluator)
    : map_(std::move(map)),
      provider_(std::move(provider)),
      config_(config),
      evaluator_(evaluator ? std::move(evaluator) : make_mu_evaluator(map_.size_of_system())),
      incumbent_h_(initial_h) {
  require_fraction(initial_h);
  if (config_.band < Rational(0)) {
    throw GossipError(ErrorCode::kInvalidArgument, "tolerance band must be non-negative");
  }
  if (config_.steps_per_iteration < 1) {
    throw GossipError(ErrorCode::kInvalidArgument, "steps per iteration must be >= 1");
  }
  if (map_.empty()) throw GossipError(ErrorCode::kEmptyGrid, "parallelism map is empty");
  incumbent_mu_ = mu_of(incumbent_h_);
}

Rational MapeController::mu_of(const Rational& h) {
  if (map_.contains(h)) return map_.at(h);
  return evaluator_(h);
}

MapeDecision MapeController::iterate() {
  MapeDecision d;
  d.iteration = ++iterations_;
  d.step = step_;
  d.previous_h = incumbent_h_;
  d.previous_mu = incumbent_mu_;

  // Monitor
  d.cp = provider_.sense(step_);
  step_ += config_.steps_per_iteration;
  const Rational cp(d.cp);
  const Rational ceiling = cp * (Rational(1) + config_.band);

  // Analyze
  bool plan = true;
  if (incumbent_mu_ >= cp && incumbent_mu_ <= ceiling) {
    d.status = MapeStatus::kNoChange;
    plan = false;
  } else if (incumbent_mu_ < cp) {
    d.status = MapeStatus::kUndershoot;
  } else {
    auto smaller = map_.min_key_reaching(cp);
    bool smaller_known = smaller && *smaller < incumbent_h_;
    if (smaller_known || config_.planner == Planner::kAdaptive) {
      d.status = MapeStatus::kOvershoot;
    } else {
      // Over the band, but the table holds nothing cheaper.
      d.status = MapeStatus::kNoChange;
      plan = false;
    }
  }

  d.chosen_h = incumbent_h_;
  d.chosen_mu = incumbent_mu_;
  if (plan) {
    if (config_.planner == Planner::kLookup) {
      LookupResult r = tune_lookup(d.cp, map_);
      if (r.saturated) d.status = MapeStatus::kSaturated;
      d.chosen_h = r.h;
      d.chosen_mu = r.mu;
    } else {
      AdaptiveResult r = tune_adaptive(d.cp, map_, config_.mode, evaluator_);
      d.iteration_log.push_back(r);
      if (r.outcome == AdaptiveOutcome::kSaturated) d.status = MapeStatus::kSaturated;
      if (r.outcome == AdaptiveOutcome::kConvergedDuplicate) d.converged = true;
      d.chosen_h = r.h;
      d.chosen_mu = r.mu;
    }
    if (d.chosen_h == incumbent_h_ && d.status != MapeStatus::kSaturated) {
      d.status = MapeStatus::kNoChange;
    }
  }

  // Execute
  incumbent_h_ = d.chosen_h;
  incumbent_mu_ = d.chosen_mu;
  d.map_size = map_.size();
  return d;
}

std::vector<MapeDecision> run_autotune(MapeController& controller, int max_iterations,
                                       bool stop_when_stable) {
  std::vector<MapeDecision> log;
  for (int i = 0; i < max_iterations; ++i) {
    log.push_back(controller.iterate());
    const MapeDecision& d = log.back();
    if (stop_when_stable && d.chosen_h == d.previous_h) break;
  }
  return log;
}

}  // namespace gossiplab
