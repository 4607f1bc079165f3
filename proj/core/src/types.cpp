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

#include "gossiplab/types.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "gossiplab/error.hpp"

namespace gossiplab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDuplicateTarget: return "DuplicateTarget";
    case ErrorCode::kSelfTarget: return "SelfTarget";
    case ErrorCode::kWrongLength: return "WrongLength";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kOwnerMismatch: return "OwnerMismatch";
    case ErrorCode::kUnknownStrategy: return "UnknownStrategy";
    case ErrorCode::kInvalidCapacity: return "InvalidCapacity";
    case ErrorCode::kDeadlockDetected: return "DeadlockDetected";
    case ErrorCode::kStepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::kDomainTooSmall: return "DomainTooSmall";
    case ErrorCode::kEmptyGrid: return "EmptyGrid";
    case ErrorCode::kSaturated: return "Saturated";
    case ErrorCode::kConvergedDuplicate: return "ConvergedDuplicate";
    case ErrorCode::kTraceExhausted: return "TraceExhausted";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

GossipError::GossipError(ErrorCode code, const std::string& message,
                         std::optional<std::size_t> index)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      message_(message),
      index_(index) {}

SystemSize::SystemSize(int n) : n_(n) {
  if (n < 1) {
    throw GossipError(ErrorCode::kInvalidArgument,
                      "system size N must be at least 1, got " + std::to_string(n));
  }
}

PermutationSpec validate_permutation(ProcessId owner, std::span<const ProcessId> targets,
                                     SystemSize n) {
  if (!n.contains(owner)) {
    throw GossipError(ErrorCode::kOutOfRange, "owner " + std::to_string(owner.value) +
                                                  " outside 0.." + std::to_string(n.n()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n.process_count()), false);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    ProcessId t = targets[k];
    std::string where = "target index " + std::to_string(k);
    if (!n.contains(t)) {
      throw GossipError(ErrorCode::kOutOfRange,
                        where + ": " + std::to_string(t.value) + " outside 0.." +
                            std::to_string(n.n()),
                        k);
    }
    if (t == owner) {
      throw GossipError(ErrorCode::kSelfTarget,
                        where + ": process " + std::to_string(owner.value) + " targets itself",
                        k);
    }
    if (seen[static_cast<std::size_t>(t.value)]) {
      throw GossipError(ErrorCode::kDuplicateTarget,
                        where + ": duplicate target " + std::to_string(t.value), k);
    }
    seen[static_cast<std::size_t>(t.value)] = true;
  }
  if (targets.size() != static_cast<std::size_t>(n.n())) {
    throw GossipError(ErrorCode::kWrongLength,
                      "expected " + std::to_string(n.n()) + " targets, got " +
                          std::to_string(targets.size()),
                      targets.size());
  }
  return PermutationSpec(owner, std::vector<ProcessId>(targets.begin(), targets.end()), n);
}

PermutationSpec validate_permutation(int owner, const std::vector<int>& targets, SystemSize n) {
  std::vector<ProcessId> ids;
  ids.reserve(targets.size());
  for (int t : targets) ids.emplace_back(t);
  return validate_permutation(ProcessId{owner}, ids, n);
}

RunTable::RunTable(SystemSize n, std::size_t steps, std::vector<Action> actions)
    : n_(n), steps_(steps), actions_(std::move(actions)) {
  if (actions_.size() != steps_ * static_cast<std::size_t>(n_.process_count())) {
    throw GossipError(ErrorCode::kInvalidArgument, "run-table cell count does not match (N+1) x steps");
  }
  nu_.values.assign(steps_, 0);
  for (const Action& a : actions_) {
    if (a.uses_slot() && !n_.contains(a.peer)) {
      throw GossipError(ErrorCode::kOutOfRange, "run-table peer id outside 0..N");
    }
  }
  for (int p = 0; p <= n_.n(); ++p) {
    auto r = row(ProcessId{p});
    for (std::size_t t = 0; t < steps_; ++t) {
      if (r[t].uses_slot()) ++nu_.values[t];
    }
  }
  if (auto problems = check_run_table(*this); !problems.empty()) {
    throw GossipError(ErrorCode::kInvalidArgument, "invalid run-table: " + problems.front());
  }
}

std::vector<std::string> check_run_table(const RunTable& table,
                                         std::span<const PermutationSpec> assignment) {
  std::vector<std::string> problems;
  const int n = table.size().n();
  const std::size_t steps = table.steps();
  auto fail = [&](const std::string& what) { problems.push_back(what); };

  if (steps == 0) {
    fail("run-table has no steps");
    return problems;
  }
  if (!assignment.empty() && assignment.size() != static_cast<std::size_t>(n + 1)) {
    fail("assignment size differs from N+1");
    return problems;
  }

  for (int p = 0; p <= n; ++p) {
    ProcessId pid{p};
    auto row = table.row(pid);
    int sends = 0;
    int receives = 0;
    int receives_before_first_send = -1;
    std::vector<ProcessId> send_order;
    for (std::size_t t = 0; t < steps; ++t) {
      const Action& a = row[t];
      if (a.uses_slot() && a.peer == pid) {
        fail("process " + std::to_string(p) + " talks to itself at step " + std::to_string(t + 1));
      }
      if (a.kind == ActionKind::kSend) {
        if (receives_before_first_send < 0) receives_before_first_send = receives;
        ++sends;
        send_order.push_back(a.peer);
        const Action& other = table.at(a.peer, t + 1);
        if (!(other.kind == ActionKind::kReceive && other.peer == pid)) {
          fail("send " + std::to_string(p) + "->" + std::to_string(a.peer.value) + " at step " +
               std::to_string(t + 1) + " has no matching receive");
        }
      } else if (a.kind == ActionKind::kReceive) {
        ++receives;
        const Action& other = table.at(a.peer, t + 1);
        if (!(other.kind == ActionKind::kSend && other.peer == pid)) {
          fail("receive " + std::to_string(p) + "<-" + std::to_string(a.peer.value) +
               " at step " + std::to_string(t + 1) + " has no matching send");
        }
      }
    }
    if (sends != n) {
      fail("process " + std::to_string(p) + " sends " + std::to_string(sends) + " times, expected " +
           std::to_string(n));
    }
    if (receives != n) {
      fail("process " + std::to_string(p) + " receives " + std::to_string(receives) +
           " times, expected " + std::to_string(n));
    }
    if (sends > 0 && receives_before_first_send != p) {
      fail("process " + std::to_string(p) + " starts broadcasting after " +
           std::to_string(receives_before_first_send) + " receptions");
    }
    if (!assignment.empty()) {
      auto expected = assignment[static_cast<std::size_t>(p)].targets();
      if (!std::equal(expected.begin(), expected.end(), send_order.begin(), send_order.end())) {
        fail("process " + std::to_string(p) + " send order differs from its permutation");
      }
    }
  }

  std::int64_t total = 0;
  const auto& nu = table.nu().values;
  for (std::size_t t = 0; t < nu.size(); ++t) {
    if (nu[t] % 2 != 0 || nu[t] < 0 || nu[t] > n + 1) {
      fail("utilization at step " + std::to_string(t + 1) + " is " + std::to_string(nu[t]));
    }
    total += nu[t];
  }
  if (total != 2LL * n * (n + 1)) {
    fail("total used slots " + std::to_string(total) + " differs from 2N(N+1)");
  }
  if (nu.back() == 0) fail("final step carries no communication");
  return problems;
}

ChannelProfile::ChannelProfile(CapacityFn capacity, std::string description)
    : capacity_(std::move(capacity)), description_(std::move(description)) {
  if (!capacity_) throw GossipError(ErrorCode::kInvalidArgument, "empty capacity function");
}

int ChannelProfile::capacity(std::int64_t step) const {
  int c = capacity_(step);
  if (c < 1) {
    throw GossipError(ErrorCode::kInvalidCapacity,
                      "capacity " + std::to_string(c) + " at step " + std::to_string(step) +
                          " would stall the run");
  }
  return c;
}

ChannelProfile ChannelProfile::unconstrained(SystemSize n) {
  int c = n.process_count();
  return ChannelProfile([c](std::int64_t) { return c; }, "unconstrained");
}

ChannelProfile ChannelProfile::constant(int capacity) {
  if (capacity < 1) {
    throw GossipError(ErrorCode::kInvalidCapacity,
                      "constant capacity must be >= 1, got " + std::to_string(capacity));
  }
  return ChannelProfile([capacity](std::int64_t) { return capacity; },
                        "constant(" + std::to_string(capacity) + ")");
}

ChannelProfile ChannelProfile::schedule(std::vector<std::pair<std::int64_t, int>> entries) {
  if (entries.empty() || entries.front().first != 1) {
    throw GossipError(ErrorCode::kInvalidArgument, "schedule must start at step 1");
  }
  std::ostringstream desc;
  desc << "schedule(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k > 0 && entries[k].first <= entries[k - 1].first) {
      throw GossipError(ErrorCode::kInvalidArgument, "schedule steps must increase", k);
    }
    if (entries[k].second < 1) {
      throw GossipError(ErrorCode::kInvalidCapacity, "schedule capacity must be >= 1", k);
    }
    desc << (k ? "," : "") << entries[k].first << ":" << entries[k].second;
  }
  desc << ")";
  return ChannelProfile(
      [entries = std::move(entries)](std::int64_t step) {
        auto it = std::upper_bound(
            entries.begin(), entries.end(), step,
            [](std::int64_t s, const std::pair<std::int64_t, int>& e) { return s < e.first; });
        return it == entries.begin() ? entries.front().second : std::prev(it)->second;
      },
      desc.str());
}

}  // namespace gossiplab
