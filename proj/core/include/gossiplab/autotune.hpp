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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gossiplab/rational.hpp"
#include "gossiplab/types.hpp"

namespace gossiplab {

/// Maps a hybrid fraction h to the mean slot utilization it produces.
using MuEvaluator = std::function<Rational(const Rational& h)>;

/// Simulates hybrid_assignment(n, h, strategy) under an unconstrained
/// channel and returns its mean slot utilization.
Rational compute_mu(SystemSize n, const Rational& h, const std::string& strategy = "prefix");

MuEvaluator make_mu_evaluator(SystemSize n, std::string strategy = "prefix");

/// Known h -> mu associations for one system size, ordered by h.
class ParallelismMap {
 public:
  explicit ParallelismMap(SystemSize n) : n_(n) {}

  SystemSize size_of_system() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Rational, Rational>& entries() const { return entries_; }

  bool contains(const Rational& h) const { return entries_.count(h) != 0; }
  /// Throws OutOfRange if `h` is not a key.
  const Rational& at(const Rational& h) const;

  /// Throws InvalidArgument for h outside [0, 1] and ConvergedDuplicate if
  /// `h` is already a key.
  void insert(const Rational& h, const Rational& mu);

  /// min{h : mu(h) >= threshold}
  std::optional<Rational> min_key_reaching(const Rational& threshold) const;
  /// max{h : mu(h) < threshold}
  std::optional<Rational> max_key_below(const Rational& threshold) const;
  const Rational& largest_key() const;

 private:
  SystemSize n_;
  std::map<Rational, Rational> entries_;
};

/// from, from+step, ..., up to and including `to` when it lies on the grid.
std::vector<Rational> make_grid(const Rational& from, const Rational& to, const Rational& step);

/// 0.005, 0.010, ..., 1.000 (200 samples).
std::vector<Rational> default_lookup_grid();

/// One compute_mu per grid point, evaluated on up to `threads` workers.
/// Throws EmptyGrid, or InvalidArgument for unsorted / out-of-range grids.
ParallelismMap build_lookup_table(SystemSize n, const std::vector<Rational>& grid,
                                  const MuEvaluator& evaluator, unsigned threads = 0);
ParallelismMap build_lookup_table(SystemSize n, const std::vector<Rational>& grid,
                                  unsigned threads = 0);

/// CSV "h,mu" with a header row. mu is written with 12 fractional digits;
/// on load it is snapped back to the exact 2N(N+1)/lambda it came from.
void save_lookup_csv(const ParallelismMap& map, std::ostream& out);
ParallelismMap load_lookup_csv(SystemSize n, std::istream& in);

struct LookupResult {
  Rational h;
  Rational mu;
  bool saturated = false;  // no key reaches cp; h is the largest key
};

/// Smallest key whose mu reaches cp. Throws EmptyGrid for an empty map.
LookupResult tune_lookup(int cp, const ParallelismMap& map);

enum class AdaptiveMode {
  kHBisection,    // next probe (h0 + sb) / 2
  kLiteralMuGap,  // next probe (mu(h0) - mu(sb)) / 2 read as a percentage
};

enum class AdaptiveOutcome {
  kExactMatch,         // mu(h0) == cp, map unchanged
  kRefined,            // one new association inserted
  kSaturated,          // cp above every known mu; h is the largest key
  kConvergedDuplicate  // the probe is already a key; h is h0
};

std::string_view to_string(AdaptiveOutcome outcome);
std::string_view to_string(AdaptiveMode mode);

struct AdaptiveResult {
  AdaptiveOutcome outcome = AdaptiveOutcome::kRefined;
  Rational h;   // returned best
  Rational mu;  // map(h)
  std::optional<Rational> h0;  // min{h : mu(h) >= cp} before refining
  std::optional<Rational> sb;  // max{h : mu(h) < mu(h0)}
  std::optional<Rational> probe;
  std::optional<Rational> probe_mu;
};

/// One refinement step of the associative-map planner. Inserts at most one
/// association into `map`, evaluated with `evaluator`.
AdaptiveResult tune_adaptive(int cp, ParallelismMap& map, AdaptiveMode mode,
                             const MuEvaluator& evaluator);

enum class TraceExhaustion { kHoldLast, kError };

/// Source of contextual parallelism estimates.
class SenseProvider {
 public:
  struct Constant {
    int value;
  };
  struct StepSchedule {
    std::vector<std::pair<std::int64_t, int>> entries;  // (from_step, value)
  };
  struct Trace {
    std::filesystem::path path;
    std::vector<int> values;  // line k holds value k
    TraceExhaustion policy = TraceExhaustion::kHoldLast;
  };

  static SenseProvider constant(int value);
  static SenseProvider step_schedule(std::vector<std::pair<std::int64_t, int>> entries);
  /// Reads one positive integer per line. Throws ParseError naming the
  /// 1-based line on malformed input, InvalidCapacity for values < 1.
  static SenseProvider trace_file(const std::filesystem::path& path,
                                  TraceExhaustion policy = TraceExhaustion::kHoldLast);
  static SenseProvider trace(std::vector<int> values,
                             TraceExhaustion policy = TraceExhaustion::kHoldLast);

  /// N(t) for t >= 1. Throws TraceExhausted past the end of a trace under
  /// the kError policy.
  int sense(std::int64_t step) const;

  std::string describe() const;

  /// The same function of t, for driving the engine.
  ChannelProfile to_channel_profile() const;

  const std::variant<Constant, StepSchedule, Trace>& kind() const { return kind_; }

 private:
  explicit SenseProvider(std::variant<Constant, StepSchedule, Trace> kind) : kind_(std::move(kind)) {}

  std::variant<Constant, StepSchedule, Trace> kind_;
};

inline int sense(const SenseProvider& provider, std::int64_t step) { return provider.sense(step); }

enum class Planner { kLookup, kAdaptive };
std::string_view to_string(Planner planner);

enum class MapeStatus { kNoChange, kUndershoot, kOvershoot, kSaturated };
std::string_view to_string(MapeStatus status);

struct MapeConfig {
  Planner planner = Planner::kAdaptive;
  AdaptiveMode mode = AdaptiveMode::kHBisection;
  /// Incumbent mu within [cp, cp * (1 + band)] needs no change.
  Rational band = Rational(1, 10);
  /// How far the sensing clock advances per loop iteration.
  std::int64_t steps_per_iteration = 1;
};

struct MapeDecision {
  int iteration = 0;
  std::int64_t step = 0;
  int cp = 0;
  MapeStatus status = MapeStatus::kNoChange;
  Rational previous_h;
  Rational previous_mu;
  Rational chosen_h;
  Rational chosen_mu;
  std::vector<AdaptiveResult> iteration_log;  // planner probes this round
  std::size_t map_size = 0;
  bool converged = false;  // adaptive planner could not place a new probe
};

/// Monitor-Analyze-Plan-Execute controller around a ParallelismMap.
class MapeController {
 public:
  MapeController(ParallelismMap map, SenseProvider provider, MapeConfig config,
                 Rational initial_h = Rational(0), MuEvaluator evaluator = {});

  /// One full loop: sense, assess the incumbent, plan if needed, adopt.
  MapeDecision iterate();

  const Rational& incumbent_h() const { return incumbent_h_; }
  const Rational& incumbent_mu() const { return incumbent_mu_; }
  const ParallelismMap& map() const { return map_; }
  std::int64_t step() const { return step_; }
  int iterations() const { return iterations_; }

 private:
  Rational mu_of(const Rational& h);

  ParallelismMap map_;
  SenseProvider provider_;
  MapeConfig config_;
  MuEvaluator evaluator_;
  Rational incumbent_h_;
  Rational incumbent_mu_;
  std::int64_t step_ = 1;
  int iterations_ = 0;
};

/// Iterates up to `max_iterations` times; with `stop_when_stable`, stops
/// after the first iteration that leaves the incumbent unchanged.
std::vector<MapeDecision> run_autotune(MapeController& controller, int max_iterations,
                                       bool stop_when_stable = true);

}  // namespace gossiplab
