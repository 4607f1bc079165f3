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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gossiplab/fsa.hpp"
#include "gossiplab/types.hpp"

namespace gossiplab {

/// Program counter over one process's couples.
class ProcessCursor {
 public:
  explicit ProcessCursor(FsaProgram program) : program_(std::move(program)) {}

  ProcessId owner() const { return program_.owner; }
  bool stopped() const { return position_ >= program_.couples.size(); }
  std::size_t position() const { return position_; }
  const StateCouple& next() const { return program_.couples[position_]; }
  void advance() { ++position_; }

 private:
  FsaProgram program_;
  std::size_t position_ = 0;
};

struct CommunicationPair {
  ProcessId sender;
  ProcessId receiver;

  friend bool operator==(const CommunicationPair&, const CommunicationPair&) = default;
};

struct StepOutcome {
  std::int64_t step = 0;
  std::vector<CommunicationPair> pairs;  // ascending receiver id
  std::vector<Action> actions;           // indexed by process id
};

/// Executes one synchronous step.
///
/// A sender whose next couple targets r is eligible with r when r's next
/// couple is a receive. Receivers are served in ascending id, each taking
/// the lowest-id eligible sender; at most `cap` pairs are kept, again in
/// ascending receiver order. Paired cursors advance. Everyone else records
/// a blocked send or blocked receive; stopped processes record a blocked
/// receive.
///
/// Throws DeadlockDetected if some cursor is active but no pair can form,
/// InvalidArgument if every cursor is stopped or cap < 1.
StepOutcome match_step(std::span<ProcessCursor> cursors, int cap, std::int64_t step);

/// 10 N^2 + 10.
std::int64_t default_step_cap(SystemSize n);

/// Runs the N+1 programs built from `assignment` (indexed by owner) until
/// all stop. Throws StepLimitExceeded once more than `max_steps` steps
/// would be needed, DeadlockDetected if the programs block each other.
RunTable simulate(std::span<const PermutationSpec> assignment, const ChannelProfile& profile,
                  std::int64_t max_steps);

/// Same with the default step cap.
RunTable simulate(std::span<const PermutationSpec> assignment, const ChannelProfile& profile);

/// Runs like simulate() but keeps only the utilization string, for system
/// sizes where the full action matrix is too large to hold.
UtilizationString simulate_utilization(std::span<const PermutationSpec> assignment,
                                       const ChannelProfile& profile, std::int64_t max_steps);
UtilizationString simulate_utilization(std::span<const PermutationSpec> assignment,
                                       const ChannelProfile& profile);

}  // namespace gossiplab
