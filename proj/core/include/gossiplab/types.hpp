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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gossiplab/rational.hpp"

namespace gossiplab {

/// Process identifier in {0,...,N}. The upper bound depends on the
/// enclosing SystemSize and is checked where one is available.
struct ProcessId {
  int value = 0;

  constexpr ProcessId() = default;
  constexpr explicit ProcessId(int v) : value(v) {}

  friend constexpr auto operator<=>(ProcessId, ProcessId) = default;
};

/// N, for a system of N+1 processes. Always at least 1.
class SystemSize {
 public:
  /// Throws GossipError(InvalidArgument) for n < 1.
  explicit SystemSize(int n);

  int n() const { return n_; }
  int process_count() const { return n_ + 1; }
  bool contains(ProcessId id) const { return id.value >= 0 && id.value <= n_; }

  friend bool operator==(SystemSize, SystemSize) = default;

 private:
  int n_;
};

/// The send order of one process: a permutation of {0..N} minus the owner.
/// Only obtainable through validate_permutation().
class PermutationSpec {
 public:
  ProcessId owner() const { return owner_; }
  std::span<const ProcessId> targets() const { return targets_; }
  SystemSize size() const { return size_; }

  friend bool operator==(const PermutationSpec&, const PermutationSpec&) = default;

 private:
  friend PermutationSpec validate_permutation(ProcessId, std::span<const ProcessId>, SystemSize);
  PermutationSpec(ProcessId owner, std::vector<ProcessId> targets, SystemSize size)
      : owner_(owner), targets_(std::move(targets)), size_(size) {}

  ProcessId owner_;
  std::vector<ProcessId> targets_;
  SystemSize size_;
};

/// Checks that `targets` is a permutation of {0..N} \ {owner}. Errors name
/// the offending index: WrongLength, OutOfRange, SelfTarget, DuplicateTarget.
PermutationSpec validate_permutation(ProcessId owner, std::span<const ProcessId> targets,
                                     SystemSize n);

/// Convenience overload for integer lists.
PermutationSpec validate_permutation(int owner, const std::vector<int>& targets, SystemSize n);

enum class ActionKind : std::uint8_t { kSend, kReceive, kWaitSend, kWaitReceive };

/// What one process does during one step. `peer` is meaningful only for
/// Send and Receive.
struct Action {
  ActionKind kind = ActionKind::kWaitReceive;
  ProcessId peer{};

  static constexpr Action send(ProcessId to) { return {ActionKind::kSend, to}; }
  static constexpr Action receive(ProcessId from) { return {ActionKind::kReceive, from}; }
  static constexpr Action wait_send() { return {ActionKind::kWaitSend, ProcessId{}}; }
  static constexpr Action wait_receive() { return {ActionKind::kWaitReceive, ProcessId{}}; }

  constexpr bool uses_slot() const {
    return kind == ActionKind::kSend || kind == ActionKind::kReceive;
  }

  friend constexpr bool operator==(const Action& a, const Action& b) {
    if (a.kind != b.kind) return false;
    return !a.uses_slot() || a.peer == b.peer;
  }
};

struct UtilizationString {
  std::vector<int> values;

  friend bool operator==(const UtilizationString&, const UtilizationString&) = default;
};

/// Action matrix of a run, rows = processes 0..N, columns = steps 1..lambda,
/// plus the per-step count of used slots.
class RunTable {
 public:
  /// Builds a table from a row-major action list (row length = steps) and
  /// checks the structural invariants. Throws GossipError(InvalidArgument)
  /// naming the first violation.
  RunTable(SystemSize n, std::size_t steps, std::vector<Action> actions);

  SystemSize size() const { return n_; }
  std::size_t steps() const { return steps_; }

  /// `step` is 1-based, as in the rendered run-tables.
  const Action& at(ProcessId process, std::size_t step) const {
    return actions_[static_cast<std::size_t>(process.value) * steps_ + (step - 1)];
  }

  std::span<const Action> row(ProcessId process) const {
    return std::span<const Action>(actions_).subspan(
        static_cast<std::size_t>(process.value) * steps_, steps_);
  }

  const UtilizationString& nu() const { return nu_; }

  friend bool operator==(const RunTable& a, const RunTable& b) {
    return a.n_ == b.n_ && a.steps_ == b.steps_ && a.actions_ == b.actions_;
  }

 private:
  SystemSize n_;
  std::size_t steps_;
  std::vector<Action> actions_;
  UtilizationString nu_;
};

/// Lists every violated RunTable invariant; empty when the table is sound.
/// With `assignment`, also checks that row i's sends follow assignment[i].
std::vector<std::string> check_run_table(const RunTable& table,
                                         std::span<const PermutationSpec> assignment = {});

/// Contextual parallelism: how many pairs may communicate at step t.
class ChannelProfile {
 public:
  using CapacityFn = std::function<int(std::int64_t step)>;

  ChannelProfile(CapacityFn capacity, std::string description);

  /// 𝒩(t) for t >= 1. Throws GossipError(InvalidCapacity) if the underlying
  /// function yields a value below 1.
  int capacity(std::int64_t step) const;

  const std::string& description() const { return description_; }

  /// N+1 at every step, which no step can exceed.
  static ChannelProfile unconstrained(SystemSize n);
  static ChannelProfile constant(int capacity);
  /// Piecewise-constant: each (from_step, value) holds until the next entry.
  /// Entries must be sorted by from_step, the first starting at step 1.
  static ChannelProfile schedule(std::vector<std::pair<std::int64_t, int>> entries);

 private:
  CapacityFn capacity_;
  std::string description_;
};

struct Metrics {
  std::int64_t lambda = 0;
  Rational mu;
  Rational efficiency;
};

}  // namespace gossiplab
