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

#include <cstdint>

#include "gossiplab/rational.hpp"
#include "gossiplab/types.hpp"

namespace gossiplab {

// Run quality metrics. Everything is exact; doubles appear only when
// rendering.

UtilizationString utilization_string(const RunTable& table);

std::int64_t run_length(const RunTable& table);

/// Average used slots per step: sum(nu) / lambda.
Rational mean_slot_utilization(const RunTable& table);
Rational mean_slot_utilization(const UtilizationString& nu);

/// mu / (N+1).
Rational efficiency(const RunTable& table);

Metrics compute_metrics(const RunTable& table);
Metrics compute_metrics(SystemSize n, const UtilizationString& nu);

// Closed forms for the two homogeneous families, used as oracles.

/// 3/4 N^2 + 5/4 N + 1/2 floor(N/2), evaluated in integers.
std::int64_t closed_form_length_identity(SystemSize n);

/// 3N. Throws DomainTooSmall for N < 2: a one-pair-per-step system of two
/// processes finishes in 2 steps, not 3.
std::int64_t closed_form_length_pipelined(SystemSize n);

/// (2/3)(N+1). Throws DomainTooSmall for N < 2.
Rational closed_form_mu_pipelined(SystemSize n);

/// Limit of the identity family's mu as N grows: 8/3.
Rational asymptotic_mu_identity();

}  // namespace gossiplab
