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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "gossiplab/error.hpp"
#include "gossiplab/metrics.hpp"
#include "golden.hpp"

namespace gossiplab {
namespace {

std::string cell(const Action& a) {
  switch (a.kind) {
    case ActionKind::kSend: return "S" + std::to_string(a.peer.value);
    case ActionKind::kReceive: return "R" + std::to_string(a.peer.value);
    case ActionKind::kWaitSend: return "ws";
    case ActionKind::kWaitReceive: return "wr";
  }
  return "?";
}

std::vector<ProcessCursor> cursors_for(const std::vector<PermutationSpec>& assignment) {
  std::vector<ProcessCursor> out;
  for (const auto& spec : assignment) {
    out.emplace_back(compose_fsa(spec.owner(), spec.size(), spec));
  }
  return out;
}

std::int64_t sum(const UtilizationString& nu) {
  std::int64_t s = 0;
  for (int v : nu.values) s += v;
  return s;
}

void expect_matches_golden(const RunTable& table, const std::string& file) {
  testing::GoldenTable g = testing::load_golden(file);
  ASSERT_EQ(g.cells.size(), static_cast<std::size_t>(table.size().process_count()));
  ASSERT_EQ(g.used.size(), table.steps());
  for (int p = 0; p <= table.size().n(); ++p) {
    const auto& row = g.cells[static_cast<std::size_t>(p)];
    ASSERT_EQ(row.size(), table.steps()) << "process " << p;
    for (std::size_t t = 1; t <= table.steps(); ++t) {
      EXPECT_EQ(cell(table.at(ProcessId{p}, t)), row[t - 1]) << "process " << p << " step " << t;
    }
  }
  EXPECT_EQ(table.nu().values, g.used);
}

TEST(MatchStep, FirstStepOfSmallestIdentity) {
  auto cursors = cursors_for(identity_assignment(SystemSize(2)));
  StepOutcome out = match_step(cursors, 3, 1);
  ASSERT_EQ(out.pairs.size(), 1u);
  EXPECT_EQ(out.pairs[0], (CommunicationPair{ProcessId{0}, ProcessId{1}}));
  EXPECT_EQ(out.actions[0], Action::send(ProcessId{1}));
  EXPECT_EQ(out.actions[1], Action::receive(ProcessId{0}));
  EXPECT_EQ(out.actions[2], Action::wait_receive());
  EXPECT_EQ(cursors[0].position(), 1u);
  EXPECT_EQ(cursors[2].position(), 0u);
}

TEST(MatchStep, EighthStepOfIdentityFive) {
  auto cursors = cursors_for(identity_assignment(SystemSize(5)));
  for (std::int64_t t = 1; t < 8; ++t) match_step(cursors, 6, t);
  StepOutcome out = match_step(cursors, 6, 8);
  ASSERT_EQ(out.pairs.size(), 2u);
  // ascending receiver id
  EXPECT_EQ(out.pairs[0], (CommunicationPair{ProcessId{2}, ProcessId{0}}));
  EXPECT_EQ(out.pairs[1], (CommunicationPair{ProcessId{1}, ProcessId{3}}));
}

TEST(MatchStep, LowestSenderWinsTie) {
  SystemSize n(2);
  std::vector<PermutationSpec> a = {validate_permutation(0, {2, 1}, n), validate_permutation(1, {2, 0}, n),
                                    validate_permutation(2, {0, 1}, n)};
  RunTable t = simulate(a, ChannelProfile::unconstrained(n));
  // At step 4 both 1 and 2 want to send to 0.
  EXPECT_EQ(t.at(ProcessId{0}, 4), Action::receive(ProcessId{1}));
  EXPECT_EQ(t.at(ProcessId{1}, 4), Action::send(ProcessId{0}));
  EXPECT_EQ(t.at(ProcessId{2}, 4), Action::wait_send());
}

TEST(MatchStep, CapKeepsLowestReceivers) {
  auto cursors = cursors_for(identity_assignment(SystemSize(5)));
  for (std::int64_t t = 1; t < 8; ++t) match_step(cursors, 6, t);
  StepOutcome out = match_step(cursors, 1, 8);
  ASSERT_EQ(out.pairs.size(), 1u);
  EXPECT_EQ(out.pairs[0].receiver, ProcessId{0});
  EXPECT_EQ(out.actions[1], Action::wait_send());
  EXPECT_EQ(out.actions[3], Action::wait_receive());
}

TEST(MatchStep, RejectsBadInput) {
  auto cursors = cursors_for(identity_assignment(SystemSize(2)));
  EXPECT_THROW(match_step(cursors, 0, 1), GossipError);
  std::vector<ProcessCursor> done;
  done.emplace_back(FsaProgram{ProcessId{0}, {}});
  done.emplace_back(FsaProgram{ProcessId{1}, {}});
  EXPECT_THROW(match_step(done, 1, 1), GossipError);
}

TEST(MatchStep, DetectsDeadlock) {
  // Two hand-built programs that both wait to send to a peer that is also
  // sending: not expressible through compose_fsa, so built directly.
  std::vector<ProcessCursor> cursors;
  cursors.emplace_back(FsaProgram{ProcessId{0}, {StateCouple::send(ProcessId{1})}});
  cursors.emplace_back(FsaProgram{ProcessId{1}, {StateCouple::send(ProcessId{0})}});
  try {
    match_step(cursors, 2, 1);
    FAIL() << "expected DeadlockDetected";
  } catch (const GossipError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDeadlockDetected);
  }
}

TEST(Simulate, IdentityFiveMatchesGolden) {
  SystemSize n(5);
  RunTable t = simulate(identity_assignment(n), ChannelProfile::unconstrained(n));
  EXPECT_EQ(t.steps(), 26u);
  expect_matches_golden(t, "identity_n5.txt");
}

TEST(Simulate, PipelinedEightMatchesGolden) {
  SystemSize n(8);
  RunTable t = simulate(pipelined_assignment(n), ChannelProfile::unconstrained(n));
  EXPECT_EQ(t.steps(), 24u);
  expect_matches_golden(t, "pipelined_n8.txt");
}

TEST(Simulate, SinglePairChannel) {
  SystemSize n(8);
  RunTable t = simulate(pipelined_assignment(n), ChannelProfile::constant(1));
  EXPECT_EQ(t.steps(), 72u);
  for (int v : t.nu().values) EXPECT_EQ(v, 2);
  EXPECT_TRUE(check_run_table(t, pipelined_assignment(n)).empty());
}

TEST(Simulate, StepLimit) {
  SystemSize n(5);
  try {
    simulate(identity_assignment(n), ChannelProfile::unconstrained(n), 25);
    FAIL() << "expected StepLimitExceeded";
  } catch (const GossipError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStepLimitExceeded);
  }
  EXPECT_EQ(simulate(identity_assignment(n), ChannelProfile::unconstrained(n), 26).steps(), 26u);
  EXPECT_EQ(default_step_cap(n), 260);
}

TEST(Simulate, InvalidCapacityPropagates) {
  SystemSize n(3);
  ChannelProfile p([](std::int64_t t) { return t < 4 ? 2 : 0; }, "fades");
  try {
    simulate(identity_assignment(n), p);
    FAIL() << "expected InvalidCapacity";
  } catch (const GossipError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidCapacity);
  }
}

// Any assignment of permutations completes: no deadlock, every message
// delivered exactly once, and every step moves at least one message.
TEST(SimulateProperty, RandomAssignmentsTerminateAndConserve) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    SystemSize n(1 + static_cast<int>(rng() % 16));
    auto a = testing::random_assignment(n, rng);
    int cap = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n.process_count()));
    ChannelProfile profile = trial % 2 == 0 ? ChannelProfile::unconstrained(n) : ChannelProfile::constant(cap);
    RunTable t = simulate(a, profile);
    EXPECT_TRUE(check_run_table(t, a).empty()) << "trial " << trial;
    EXPECT_EQ(sum(t.nu()), 2LL * n.n() * n.process_count());
    for (int v : t.nu().values) EXPECT_GE(v, 2);
  }
}

TEST(SimulateProperty, Deterministic) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    SystemSize n(2 + static_cast<int>(rng() % 12));
    auto a = testing::random_assignment(n, rng);
    RunTable first = simulate(a, ChannelProfile::constant(3));
    RunTable second = simulate(a, ChannelProfile::constant(3));
    EXPECT_EQ(first, second);
  }
}

TEST(SimulateProperty, UtilizationPathAgrees) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    SystemSize n(1 + static_cast<int>(rng() % 20));
    auto a = testing::random_assignment(n, rng);
    auto profile = ChannelProfile::schedule({{1, 2}, {5, n.process_count()}, {9, 1}});
    EXPECT_EQ(simulate_utilization(a, profile), simulate(a, profile).nu());
  }
}

TEST(SimulateProperty, CapBoundsUtilization) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    SystemSize n(2 + static_cast<int>(rng() % 12));
    auto a = testing::random_assignment(n, rng);
    int cap = 1 + static_cast<int>(rng() % 4);
    RunTable t = simulate(a, ChannelProfile::constant(cap));
    for (int v : t.nu().values) EXPECT_LE(v, 2 * cap);
  }
}

TEST(SimulateProperty, HomogeneousLengthNonIncreasingInCap) {
  for (int size = 1; size <= 10; ++size) {
    SystemSize n(size);
    for (const auto& a : {identity_assignment(n), pipelined_assignment(n)}) {
      std::size_t previous = 0;
      for (int cap = 1; cap <= n.process_count(); ++cap) {
        std::size_t lambda = simulate(a, ChannelProfile::constant(cap)).steps();
        if (cap == 1) EXPECT_EQ(lambda, static_cast<std::size_t>(size * (size + 1)));
        if (cap > 1) EXPECT_LE(lambda, previous) << "N=" << size << " cap=" << cap;
        previous = lambda;
      }
    }
  }
}

}  // namespace
}  // namespace gossiplab
