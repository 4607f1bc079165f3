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
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gossiplab/rational.hpp"
#include "gossiplab/types.hpp"

namespace gossiplab::cli {

/// Permutation assignment file: one "id: t1,t2,...,tN" line per process,
/// ids covering 0..N exactly once in any order. Blank lines and '#'
/// comments are skipped. Result is indexed by id.
std::vector<PermutationSpec> read_permutation_file(std::istream& in, SystemSize n);
void write_permutation_file(std::span<const PermutationSpec> assignment, std::ostream& out);

/// "2..50" or "7".
std::pair<int, int> parse_int_range(std::string_view text);

/// "0,0.25,1/3".
std::vector<Rational> parse_grid(std::string_view text);

/// "1:4,100:16" -> {(1,4),(100,16)}.
std::vector<std::pair<std::int64_t, int>> parse_schedule(std::string_view text);

}  // namespace gossiplab::cli
