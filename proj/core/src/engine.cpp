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

#include "gossiplab/engine.hpp"

#include "engine_detail.hpp"
#include "gossiplab/error.hpp"

namespace gossiplab {
namespace detail {

void StepMatcher::run(std::span<ProcessCursor> cursors, int cap, std::int64_t step,
                      std::vector<CommunicationPair>& pairs, std::span<Action> actions) {
  if (cap < 1) {
    throw GossipError(ErrorCode::kInvalidCapacity, "step capacity must be >= 1");
  }
  const std::size_t count = cursors.size();
  lowest_sender_.assign(count, -1);
  pairs.clear();

  bool any_active = false;
  // Senders are visited in ascending id, so the first one recorded for a
  // receiver is the lowest.
  for (std::size_t p = 0; p < count; ++p) {
    const ProcessCursor& c = cursors[p];
    if (c.stopped()) continue;
    any_active = true;
    const StateCouple& next = c.next();
    if (next.kind != StateCouple::Kind::kSend) continue;
    auto r = static_cast<std::size_t>(next.target.value);
    if (lowest_sender_[r] < 0) lowest_sender_[r] = static_cast<int>(p);
  }
  if (!any_active) {
    throw GossipError(ErrorCode::kInvalidArgument, "match_step called with every process stopped");
  }

  for (std::size_t r = 0; r < count; ++r) {
    int s = lowest_sender_[r];
    if (s < 0) continue;
    const ProcessCursor& receiver = cursors[r];
    if (receiver.stopped() || receiver.next().kind != StateCouple::Kind::kReceive) continue;
    if (static_cast<int>(pairs.size()) == cap) break;
    pairs.push_back({ProcessId{s}, ProcessId{static_cast<int>(r)}});
  }

  if (pairs.empty()) {
    throw GossipError(ErrorCode::kDeadlockDetected,
                      "no rendezvous possible at step " + std::to_string(step));
  }

  for (std::size_t p = 0; p < count; ++p) {
    const ProcessCursor& c = cursors[p];
    if (c.stopped() || c.next().kind == StateCouple::Kind::kReceive) {
      actions[p] = Action::wait_receive();
    } else {
      actions[p] = Action::wait_send();
    }
  }
  for (const CommunicationPair& pair : pairs) {
    auto s = static_cast<std::size_t>(pair.sender.value);
    auto r = static_cast<std::size_t>(pair.receiver.value);
    actions[s] = Action::send(pair.receiver);
    actions[r] = Action::receive(pair.sender);
    cursors[s].advance();
    cursors[r].advance();
  }
}

std::vector<ProcessCursor> make_cursors(std::span<const PermutationSpec> assignment) {
  if (assignment.empty()) {
    throw GossipError(ErrorCode::kWrongLength, "empty assignment");
  }
  const SystemSize n = assignment.front().size();
  if (assignment.size() != static_cast<std::size_t>(n.process_count())) {
    throw GossipError(ErrorCode::kWrongLength,
                      "assignment has " + std::to_string(assignment.size()) +
                          " permutations, expected " + std::to_string(n.process_count()));
  }
  std::vector<ProcessCursor> cursors;
  cursors.reserve(assignment.size());
  for (std::size_t p = 0; p < assignment.size(); ++p) {
    if (assignment[p].size() != n) {
      throw GossipError(ErrorCode::kWrongLength, "permutation sizes disagree", p);
    }
    cursors.emplace_back(compose_fsa(ProcessId{static_cast<int>(p)}, n, assignment[p]));
  }
  return cursors;
}

}  // namespace detail

StepOutcome match_step(std::span<ProcessCursor> cursors, int cap, std::int64_t step) {
  StepOutcome out;
  out.step = step;
  out.actions.resize(cursors.size());
  detail::StepMatcher matcher;
  matcher.run(cursors, cap, step, out.pairs, out.actions);
  return out;
}

std::int64_t default_step_cap(SystemSize n) {
  return 10LL * n.n() * n.n() + 10;
}

RunTable simulate(std::span<const PermutationSpec> assignment, const ChannelProfile& profile,
                  std::int64_t max_steps) {
  const auto process_count = assignment.size();
  std::vector<Action> columns;  // step-major while running
  detail::run_engine(assignment, profile, max_steps,
                     [&](std::int64_t, std::span<const CommunicationPair>,
                         std::span<const Action> actions) {
                       columns.insert(columns.end(), actions.begin(), actions.end());
                     });
  const std::size_t steps = columns.size() / process_count;
  std::vector<Action> rows(columns.size());
  for (std::size_t t = 0; t < steps; ++t) {
    for (std::size_t p = 0; p < process_count; ++p) {
      rows[p * steps + t] = columns[t * process_count + p];
    }
  }
  return RunTable(assignment.front().size(), steps, std::move(rows));
}

RunTable simulate(std::span<const PermutationSpec> assignment, const ChannelProfile& profile) {
  if (assignment.empty()) throw GossipError(ErrorCode::kWrongLength, "empty assignment");
  return simulate(assignment, profile, default_step_cap(assignment.front().size()));
}

UtilizationString simulate_utilization(std::span<const PermutationSpec> assignment,
                                       const ChannelProfile& profile, std::int64_t max_steps) {
  UtilizationString nu;
  detail::run_engine(assignment, profile, max_steps,
                     [&](std::int64_t, std::span<const CommunicationPair> pairs,
                         std::span<const Action>) {
                       nu.values.push_back(2 * static_cast<int>(pairs.size()));
                     });
  return nu;
}

UtilizationString simulate_utilization(std::span<const PermutationSpec> assignment,
                                       const ChannelProfile& profile) {
  if (assignment.empty()) throw GossipError(ErrorCode::kWrongLength, "empty assignment");
  return simulate_utilization(assignment, profile, default_step_cap(assignment.front().size()));
}

}  // namespace gossiplab
