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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gossiplab/rational.hpp"
#include "gossiplab/types.hpp"

namespace gossiplab {

/// A wait state fused with the action state it leads to. A receive couple
/// accepts a message from any sender; a send couple targets one process.
struct StateCouple {
  enum class Kind : std::uint8_t { kReceive, kSend };

  Kind kind = Kind::kReceive;
  ProcessId target{};  // kSend only

  static constexpr StateCouple receive() { return {Kind::kReceive, ProcessId{}}; }
  static constexpr StateCouple send(ProcessId to) { return {Kind::kSend, to}; }

  friend constexpr bool operator==(const StateCouple& a, const StateCouple& b) {
    return a.kind == b.kind && (a.kind == Kind::kReceive || a.target == b.target);
  }
};

/// Program of one process: `owner` receive couples, then N send couples in
/// permutation order, then N - owner receive couples.
struct FsaProgram {
  ProcessId owner;
  std::vector<StateCouple> couples;

  friend bool operator==(const FsaProgram&, const FsaProgram&) = default;
};

/// Ascending order 0..N, skipping the owner.
PermutationSpec identity_permutation(ProcessId owner, SystemSize n);

/// owner+1..N, then 0..owner-1.
PermutationSpec pipelined_permutation(ProcessId owner, SystemSize n);

/// Throws GossipError(OwnerMismatch) if `perm` belongs to another process.
FsaProgram compose_fsa(ProcessId owner, SystemSize n, const PermutationSpec& perm);

/// Marks which processes run the pipelined permutation, given how many
/// (`pipelined_count`) should. Must return exactly N+1 flags with exactly
/// `pipelined_count` set.
using AssignmentStrategy = std::function<std::vector<bool>(SystemSize, int pipelined_count)>;

/// "prefix" (processes 0..k-1 pipelined, the default) and "spread"
/// (pipelined processes evenly interleaved). Throws UnknownStrategy.
const AssignmentStrategy& assignment_strategy(std::string_view name);
std::vector<std::string> assignment_strategy_names();

/// Fraction `h` of processes using the pipelined permutation.
struct HybridSpec {
  SystemSize n;
  Rational h;
  std::string strategy = "prefix";
};

/// k = round_half_up(h * (N+1)).
int pipelined_process_count(SystemSize n, const Rational& h);

/// One PermutationSpec per process 0..N. Throws InvalidArgument for h
/// outside [0, 1] and UnknownStrategy for an unregistered strategy name.
std::vector<PermutationSpec> hybrid_assignment(const HybridSpec& spec);

std::vector<PermutationSpec> identity_assignment(SystemSize n);
std::vector<PermutationSpec> pipelined_assignment(SystemSize n);

}  // namespace gossiplab
