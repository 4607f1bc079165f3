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

#include <numeric>

#include "gossiplab/error.hpp"

namespace gossiplab {
namespace {

void require_pipelined_domain(SystemSize n) {
  if (n.n() < 2) {
    throw GossipError(ErrorCode::kDomainTooSmall,
                      "pipelined closed forms hold for N >= 2, got N=" + std::to_string(n.n()));
  }
}

}  // namespace

UtilizationString utilization_string(const RunTable& table) { return table.nu(); }

std::int64_t run_length(const RunTable& table) {
  return static_cast<std::int64_t>(table.steps());
}

Rational mean_slot_utilization(const UtilizationString& nu) {
  if (nu.values.empty()) {
    throw GossipError(ErrorCode::kInvalidArgument, "empty utilization string");
  }
  std::int64_t used = std::accumulate(nu.values.begin(), nu.values.end(), std::int64_t{0});
  return Rational(used, static_cast<std::int64_t>(nu.values.size()));
}

Rational mean_slot_utilization(const RunTable& table) {
  return mean_slot_utilization(table.nu());
}

Rational efficiency(const RunTable& table) {
  return mean_slot_utilization(table) / Rational(table.size().process_count());
}

Metrics compute_metrics(SystemSize n, const UtilizationString& nu) {
  Metrics m;
  m.lambda = static_cast<std::int64_t>(nu.values.size());
  m.mu = mean_slot_utilization(nu);
  m.efficiency = m.mu / Rational(n.process_count());
  return m;
}

Metrics compute_metrics(const RunTable& table) {
  return compute_metrics(table.size(), table.nu());
}

std::int64_t closed_form_length_identity(SystemSize n) {
  const std::int64_t v = n.n();
  const std::int64_t quarters = 3 * v * v + 5 * v + 2 * (v / 2);
  // 3N^2 + 5N is even for every N, and 2 floor(N/2) absorbs the remaining
  // residue mod 4.
  return quarters / 4;
}

std::int64_t closed_form_length_pipelined(SystemSize n) {
  require_pipelined_domain(n);
  return 3LL * n.n();
}

Rational closed_form_mu_pipelined(SystemSize n) {
  require_pipelined_domain(n);
  return Rational(2, 3) * Rational(n.process_count());
}

Rational asymptotic_mu_identity() { return Rational(8, 3); }

}  // namespace gossiplab
