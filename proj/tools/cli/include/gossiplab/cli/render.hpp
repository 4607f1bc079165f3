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

#include <string>
#include <string_view>
#include <vector>

#include "gossiplab/types.hpp"

namespace gossiplab::cli {

struct RenderOptions {
  bool unicode = false;  // blocked states as arrows instead of ws/wr
};

/// "S3", "R3", "ws", "wr" (or the arrow glyphs with `unicode`).
std::string cell_text(const Action& action, const RenderOptions& options = {});

/// Inverse of cell_text; accepts both spellings of the wait states.
Action parse_cell(std::string_view token);

/// Aligned text run-table:
///
///   id/step  1  2 ...
///   0       S1 S2 ...
///   ...
///   used     2  2 ...
///
/// Lines starting with '#' are comments. No trailing metrics line; see
/// metrics_footer().
std::string render_run_table_text(const RunTable& table, const RenderOptions& options = {});

/// Parses render_run_table_text() output back into a RunTable. Comment
/// lines and a trailing "lambda=..." footer are ignored; the "used" row must
/// agree with the cells. Throws GossipError(ParseError) naming the line.
RunTable parse_run_table_text(std::string_view text);

/// "lambda=26 mu=2.3077 efficiency=38.46%"
std::string metrics_footer(const Metrics& metrics);

/// Matrix CSV: "id,1,...,lambda", one row per process, then "used".
std::string render_run_table_csv(const RunTable& table);

}  // namespace gossiplab::cli
