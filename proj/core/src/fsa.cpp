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

#include "gossiplab/fsa.hpp"

#include <algorithm>
#include <map>

#include "gossiplab/error.hpp"

namespace gossiplab {
namespace {

void require_owner(ProcessId owner, SystemSize n) {
  if (!n.contains(owner)) {
    throw GossipError(ErrorCode::kOutOfRange, "process " + std::to_string(owner.value) +
                                                  " outside 0.." + std::to_string(n.n()));
  }
}

std::vector<bool> prefix_strategy(SystemSize n, int k) {
  std::vector<bool> flags(static_cast<std::size_t>(n.process_count()), false);
  for (int p = 0; p < k; ++p) flags[static_cast<std::size_t>(p)] = true;
  return flags;
}

// Bresenham-style interleaving: process p is pipelined when the running
// quota floor((p+1)k/(N+1)) increments at p.
std::vector<bool> spread_strategy(SystemSize n, int k) {
  const int count = n.process_count();
  std::vector<bool> flags(static_cast<std::size_t>(count), false);
  for (int p = 0; p < count; ++p) {
    flags[static_cast<std::size_t>(p)] =
        (static_cast<long long>(p + 1) * k) / count > (static_cast<long long>(p) * k) / count;
  }
  return flags;
}

const std::map<std::string, AssignmentStrategy, std::less<>>& registry() {
  static const std::map<std::string, AssignmentStrategy, std::less<>> strategies{
      {"prefix", prefix_strategy},
      {"spread", spread_strategy},
  };
  return strategies;
}

}  // namespace

PermutationSpec identity_permutation(ProcessId owner, SystemSize n) {
  require_owner(owner, n);
  std::vector<ProcessId> targets;
  targets.reserve(static_cast<std::size_t>(n.n()));
  for (int p = 0; p <= n.n(); ++p) {
    if (p != owner.value) targets.emplace_back(p);
  }
  return validate_permutation(owner, targets, n);
}

PermutationSpec pipelined_permutation(ProcessId owner, SystemSize n) {
  require_owner(owner, n);
  std::vector<ProcessId> targets;
  targets.reserve(static_cast<std::size_t>(n.n()));
  for (int step = 1; step <= n.n(); ++step) {
    targets.emplace_back((owner.value + step) % n.process_count());
  }
  return validate_permutation(owner, targets, n);
}

FsaProgram compose_fsa(ProcessId owner, SystemSize n, const PermutationSpec& perm) {
  require_owner(owner, n);
  if (perm.owner() != owner || perm.size() != n) {
    throw GossipError(ErrorCode::kOwnerMismatch,
                      "permutation of process " + std::to_string(perm.owner().value) +
                          " given to process " + std::to_string(owner.value));
  }
  FsaProgram program{owner, {}};
  program.couples.reserve(2 * static_cast<std::size_t>(n.n()));
  for (int j = 0; j < owner.value; ++j) program.couples.push_back(StateCouple::receive());
  for (ProcessId target : perm.targets()) program.couples.push_back(StateCouple::send(target));
  for (int j = owner.value + 1; j <= n.n(); ++j) program.couples.push_back(StateCouple::receive());
  return program;
}

const AssignmentStrategy& assignment_strategy(std::string_view name) {
  const auto& strategies = registry();
  auto it = strategies.find(name);
  if (it == strategies.end()) {
    throw GossipError(ErrorCode::kUnknownStrategy,
                      "unknown assignment strategy '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<std::string> assignment_strategy_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

int pipelined_process_count(SystemSize n, const Rational& h) {
  return static_cast<int>((h * Rational(n.process_count())).round_half_up());
}

std::vector<PermutationSpec> hybrid_assignment(const HybridSpec& spec) {
  if (spec.h < Rational(0) || spec.h > Rational(1)) {
    throw GossipError(ErrorCode::kInvalidArgument,
                      "hybrid fraction " + spec.h.to_string() + " outside [0, 1]");
  }
  const auto& strategy = assignment_strategy(spec.strategy);
  const int k = pipelined_process_count(spec.n, spec.h);
  std::vector<bool> pipelined = strategy(spec.n, k);
  if (pipelined.size() != static_cast<std::size_t>(spec.n.process_count()) ||
      std::count(pipelined.begin(), pipelined.end(), true) != k) {
    throw GossipError(ErrorCode::kInvalidArgument,
                      "strategy '" + spec.strategy + "' returned a malformed assignment");
  }
  std::vector<PermutationSpec> out;
  out.reserve(pipelined.size());
  for (int p = 0; p <= spec.n.n(); ++p) {
    ProcessId id{p};
    out.push_back(pipelined[static_cast<std::size_t>(p)] ? pipelined_permutation(id, spec.n)
                                                         : identity_permutation(id, spec.n));
  }
  return out;
}

std::vector<PermutationSpec> identity_assignment(SystemSize n) {
  return hybrid_assignment({n, Rational(0), "prefix"});
}

std::vector<PermutationSpec> pipelined_assignment(SystemSize n) {
  return hybrid_assignment({n, Rational(1), "prefix"});
}

}  // namespace gossiplab
