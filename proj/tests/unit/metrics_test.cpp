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

#include "gossiplab/metrics.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gossiplab/engine.hpp"
#include "gossiplab/error.hpp"
#include "gossiplab/fsa.hpp"
#include "golden.hpp"

namespace gossiplab {
namespace {

RunTable run(const std::vector<PermutationSpec>& a) {
  return simulate(a, ChannelProfile::unconstrained(a.front().size()));
}

TEST(Metrics, IdentityFive) {
  Metrics m = compute_metrics(run(identity_assignment(SystemSize(5))));
  EXPECT_EQ(m.lambda, 26);
  EXPECT_EQ(m.mu, Rational(30, 13));
  EXPECT_EQ(m.efficiency, Rational(5, 13));
  EXPECT_EQ(m.mu.to_decimal(4), "2.3077");
}

TEST(Metrics, PipelinedEight) {
  Metrics m = compute_metrics(run(pipelined_assignment(SystemSize(8))));
  EXPECT_EQ(m.lambda, 24);
  EXPECT_EQ(m.mu, Rational(6));
  EXPECT_EQ(m.efficiency, Rational(2, 3));
}

TEST(Metrics, AgreesWithDirectCount) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    SystemSize n(1 + static_cast<int>(rng() % 15));
    RunTable t = run(testing::random_assignment(n, rng));
    // brute force over the action matrix
    std::int64_t used = 0;
    for (int p = 0; p <= n.n(); ++p) {
      for (const Action& a : t.row(ProcessId{p})) used += a.uses_slot() ? 1 : 0;
    }
    Rational mu(used, static_cast<std::int64_t>(t.steps()));
    EXPECT_EQ(mean_slot_utilization(t), mu);
    EXPECT_EQ(run_length(t), static_cast<std::int64_t>(t.steps()));
    EXPECT_EQ(efficiency(t), mu / Rational(n.process_count()));
    EXPECT_EQ(utilization_string(t), t.nu());
    EXPECT_EQ(compute_metrics(n, t.nu()).mu, mu);
  }
}

TEST(ClosedForms, IdentityMatchesSimulation) {
  for (int size = 1; size <= 50; ++size) {
    SystemSize n(size);
    EXPECT_EQ(run_length(run(identity_assignment(n))), closed_form_length_identity(n)) << "N=" << size;
  }
  EXPECT_EQ(closed_form_length_identity(SystemSize(5)), 26);
}

TEST(ClosedForms, PipelinedMatchesSimulation) {
  for (int size = 2; size <= 50; ++size) {
    SystemSize n(size);
    Metrics m = compute_metrics(run(pipelined_assignment(n)));
    EXPECT_EQ(m.lambda, closed_form_length_pipelined(n)) << "N=" << size;
    EXPECT_EQ(m.mu, closed_form_mu_pipelined(n)) << "N=" << size;
  }
}

TEST(ClosedForms, PipelinedDomain) {
  try {
    closed_form_length_pipelined(SystemSize(1));
    FAIL() << "expected DomainTooSmall";
  } catch (const GossipError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainTooSmall);
  }
  EXPECT_THROW(closed_form_mu_pipelined(SystemSize(1)), GossipError);
  // The smallest system finishes in two steps.
  EXPECT_EQ(run_length(run(pipelined_assignment(SystemSize(1)))), 2);
}

TEST(ClosedForms, IdentityApproachesLimit) {
  SystemSize n(500);
  UtilizationString nu = simulate_utilization(identity_assignment(n), ChannelProfile::unconstrained(n));
  Rational mu = mean_slot_utilization(nu);
  double rel = (mu - asymptotic_mu_identity()).to_double() / asymptotic_mu_identity().to_double();
  EXPECT_LT(std::abs(rel), 0.01);
  EXPECT_EQ(static_cast<std::int64_t>(nu.values.size()), closed_form_length_identity(n));
}

}  // namespace
}  // namespace gossiplab
