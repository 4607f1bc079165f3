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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gossiplab/engine.hpp"
#include "gossiplab/error.hpp"
#include "gossiplab/fsa.hpp"
#include "golden.hpp"

namespace gossiplab {
namespace {

ErrorCode code_of(int owner, const std::vector<int>& targets, int n, std::size_t* index = nullptr) {
  try {
    validate_permutation(owner, targets, SystemSize(n));
  } catch (const GossipError& e) {
    if (index != nullptr && e.index()) *index = *e.index();
    return e.code();
  }
  ADD_FAILURE() << "expected a GossipError";
  return ErrorCode::kInvalidArgument;
}

TEST(SystemSize, RejectsBelowOne) {
  EXPECT_THROW(SystemSize(0), GossipError);
  EXPECT_THROW(SystemSize(-3), GossipError);
  SystemSize s(4);
  EXPECT_EQ(s.process_count(), 5);
  EXPECT_TRUE(s.contains(ProcessId{4}));
  EXPECT_FALSE(s.contains(ProcessId{5}));
  EXPECT_FALSE(s.contains(ProcessId{-1}));
}

TEST(ValidatePermutation, AcceptsPermutations) {
  PermutationSpec p = validate_permutation(2, {3, 0, 1}, SystemSize(3));
  EXPECT_EQ(p.owner(), ProcessId{2});
  ASSERT_EQ(p.targets().size(), 3u);
  EXPECT_EQ(p.targets()[0], ProcessId{3});
  EXPECT_EQ(p.size(), SystemSize(3));
}

TEST(ValidatePermutation, ReportsOffendingIndex) {
  std::size_t index = 99;
  EXPECT_EQ(code_of(0, {1, 1}, 2, &index), ErrorCode::kDuplicateTarget);
  EXPECT_EQ(index, 1u);
  EXPECT_EQ(code_of(1, {0, 1}, 2, &index), ErrorCode::kSelfTarget);
  EXPECT_EQ(index, 1u);
  EXPECT_EQ(code_of(0, {1, 7}, 2, &index), ErrorCode::kOutOfRange);
  EXPECT_EQ(index, 1u);
  EXPECT_EQ(code_of(0, {1, -1}, 2), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of(0, {1}, 2, &index), ErrorCode::kWrongLength);
  EXPECT_EQ(index, 1u);
  EXPECT_EQ(code_of(0, {1, 2, 3}, 2), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of(5, {1, 2}, 2), ErrorCode::kOutOfRange);
}

TEST(ValidatePermutation, RandomPermutationsAlwaysValidate) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    SystemSize n(1 + static_cast<int>(rng() % 30));
    auto assignment = testing::random_assignment(n, rng);
    for (const auto& spec : assignment) {
      std::vector<ProcessId> sorted(spec.targets().begin(), spec.targets().end());
      std::sort(sorted.begin(), sorted.end());
      int expected = 0;
      for (ProcessId t : sorted) {
        if (expected == spec.owner().value) ++expected;
        EXPECT_EQ(t.value, expected++);
      }
    }
  }
}

TEST(ValidatePermutation, CorruptingOneEntryIsRejected) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    SystemSize n(2 + static_cast<int>(rng() % 20));
    auto spec = testing::random_assignment(n, rng)[0];
    std::vector<int> targets;
    for (ProcessId t : spec.targets()) targets.push_back(t.value);
    std::size_t k = rng() % targets.size();
    std::size_t other = (k + 1) % targets.size();
    targets[k] = targets[other];
    EXPECT_EQ(code_of(0, targets, n.n()), ErrorCode::kDuplicateTarget);
  }
}

TEST(Action, SlotUseAndEquality) {
  EXPECT_TRUE(Action::send(ProcessId{1}).uses_slot());
  EXPECT_TRUE(Action::receive(ProcessId{1}).uses_slot());
  EXPECT_FALSE(Action::wait_send().uses_slot());
  EXPECT_FALSE(Action::wait_receive().uses_slot());
  EXPECT_NE(Action::send(ProcessId{1}), Action::send(ProcessId{2}));
  EXPECT_NE(Action::wait_send(), Action::wait_receive());
}

TEST(RunTable, SmallestSystem) {
  // N=1: 0 sends to 1, then 1 sends to 0.
  std::vector<Action> cells = {Action::send(ProcessId{1}), Action::receive(ProcessId{1}),
                               Action::receive(ProcessId{0}), Action::send(ProcessId{0})};
  RunTable t(SystemSize(1), 2, cells);
  EXPECT_EQ(t.nu().values, (std::vector<int>{2, 2}));
  EXPECT_EQ(t.at(ProcessId{1}, 2), Action::send(ProcessId{0}));
  EXPECT_TRUE(check_run_table(t).empty());
}

TEST(RunTable, RejectsUnmatchedSend) {
  std::vector<Action> cells = {Action::send(ProcessId{1}), Action::receive(ProcessId{1}),
                               Action::wait_receive(), Action::send(ProcessId{0})};
  EXPECT_THROW(RunTable(SystemSize(1), 2, cells), GossipError);
}

TEST(RunTable, RejectsWrongCellCount) {
  EXPECT_THROW(RunTable(SystemSize(1), 2, std::vector<Action>(3)), GossipError);
}

TEST(RunTable, RejectsIdleFinalStep) {
  std::vector<Action> cells = {Action::send(ProcessId{1}), Action::receive(ProcessId{1}),
                               Action::wait_receive(), Action::receive(ProcessId{0}),
                               Action::send(ProcessId{0}), Action::wait_receive()};
  EXPECT_THROW(RunTable(SystemSize(1), 3, cells), GossipError);
}

TEST(RunTable, AssignmentOrderChecked) {
  SystemSize n(3);
  auto identity = identity_assignment(n);
  auto pipelined = pipelined_assignment(n);
  RunTable t = simulate(identity, ChannelProfile::unconstrained(n));
  EXPECT_TRUE(check_run_table(t, identity).empty());
  auto problems = check_run_table(t, pipelined);
  ASSERT_FALSE(problems.empty());
  EXPECT_NE(problems.front().find("send order"), std::string::npos);
}

TEST(ChannelProfile, ConstantAndUnconstrained) {
  EXPECT_EQ(ChannelProfile::constant(3).capacity(1), 3);
  EXPECT_EQ(ChannelProfile::constant(3).capacity(1000), 3);
  EXPECT_EQ(ChannelProfile::unconstrained(SystemSize(7)).capacity(5), 8);
}

TEST(ChannelProfile, Schedule) {
  auto p = ChannelProfile::schedule({{1, 4}, {10, 1}, {20, 9}});
  EXPECT_EQ(p.capacity(1), 4);
  EXPECT_EQ(p.capacity(9), 4);
  EXPECT_EQ(p.capacity(10), 1);
  EXPECT_EQ(p.capacity(19), 1);
  EXPECT_EQ(p.capacity(500), 9);
  EXPECT_THROW(ChannelProfile::schedule({}), GossipError);
  EXPECT_THROW(ChannelProfile::schedule({{2, 4}}), GossipError);
  EXPECT_THROW(ChannelProfile::schedule({{1, 4}, {1, 5}}), GossipError);
}

TEST(ChannelProfile, InvalidCapacity) {
  ChannelProfile p([](std::int64_t t) { return t < 3 ? 2 : 0; }, "drops to zero");
  EXPECT_EQ(p.capacity(2), 2);
  try {
    p.capacity(3);
    FAIL() << "expected InvalidCapacity";
  } catch (const GossipError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidCapacity);
  }
}

TEST(ErrorCode, NamesAreStable) {
  EXPECT_EQ(error_code_name(ErrorCode::kDuplicateTarget), "DuplicateTarget");
  EXPECT_EQ(error_code_name(ErrorCode::kDeadlockDetected), "DeadlockDetected");
  EXPECT_EQ(error_code_name(ErrorCode::kTraceExhausted), "TraceExhausted");
}

}  // namespace
}  // namespace gossiplab
