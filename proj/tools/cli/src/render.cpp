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

#include "gossiplab/cli/render.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gossiplab/error.hpp"
#include "gossiplab/metrics.hpp"

namespace gossiplab::cli {
namespace {

constexpr std::string_view kWaitSendArrow = "↷";
constexpr std::string_view kWaitReceiveArrow = "↶";
constexpr std::string_view kCorner = "id/step";
constexpr std::string_view kUsed = "used";

// Display width in code points; every glyph we emit is one column wide.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void pad_left(std::ostream& os, std::string_view s, std::size_t width) {
  for (std::size_t w = display_width(s); w < width; ++w) os << ' ';
  os << s;
}

void pad_right(std::ostream& os, std::string_view s, std::size_t width) {
  os << s;
  for (std::size_t w = display_width(s); w < width; ++w) os << ' ';
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_nonneg(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw GossipError(ErrorCode::kParseError, "run-table line " + std::to_string(line_no) + ": " + what,
                    line_no);
}

}  // namespace

std::string cell_text(const Action& action, const RenderOptions& options) {
  switch (action.kind) {
    case ActionKind::kSend: return "S" + std::to_string(action.peer.value);
    case ActionKind::kReceive: return "R" + std::to_string(action.peer.value);
    case ActionKind::kWaitSend: return options.unicode ? std::string(kWaitSendArrow) : "ws";
    case ActionKind::kWaitReceive: return options.unicode ? std::string(kWaitReceiveArrow) : "wr";
  }
  return "?";
}

Action parse_cell(std::string_view token) {
  if (token == "ws" || token == kWaitSendArrow) return Action::wait_send();
  if (token == "wr" || token == kWaitReceiveArrow) return Action::wait_receive();
  int peer = 0;
  if (token.size() >= 2 && (token[0] == 'S' || token[0] == 'R') && parse_nonneg(token.substr(1), peer)) {
    return token[0] == 'S' ? Action::send(ProcessId{peer}) : Action::receive(ProcessId{peer});
  }
  throw GossipError(ErrorCode::kParseError, "bad run-table cell '" + std::string(token) + "'");
}

std::string render_run_table_text(const RunTable& table, const RenderOptions& options) {
  const int n = table.size().n();
  const std::size_t steps = table.steps();

  std::vector<std::string> cells;
  cells.reserve(static_cast<std::size_t>(n + 1) * steps);
  std::size_t width = std::to_string(steps).size();
  for (int p = 0; p <= n; ++p) {
    for (const Action& a : table.row(ProcessId{p})) {
      cells.push_back(cell_text(a, options));
      width = std::max(width, display_width(cells.back()));
    }
  }
  for (int v : table.nu().values) width = std::max(width, std::to_string(v).size());
  const std::size_t label = std::max({kCorner.size(), kUsed.size(), std::to_string(n).size()});

  std::ostringstream os;
  pad_right(os, kCorner, label);
  for (std::size_t t = 1; t <= steps; ++t) {
    os << ' ';
    pad_left(os, std::to_string(t), width);
  }
  os << '\n';
  for (int p = 0; p <= n; ++p) {
    pad_right(os, std::to_string(p), label);
    for (std::size_t t = 0; t < steps; ++t) {
      os << ' ';
      pad_left(os, cells[static_cast<std::size_t>(p) * steps + t], width);
    }
    os << '\n';
  }
  pad_right(os, kUsed, label);
  for (int v : table.nu().values) {
    os << ' ';
    pad_left(os, std::to_string(v), width);
  }
  os << '\n';
  return os.str();
}

RunTable parse_run_table_text(std::string_view text) {
  std::vector<std::vector<Action>> rows;
  std::vector<int> used;
  std::size_t steps = 0;
  bool header_seen = false;
  bool used_seen = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;

    if (!header_seen) {
      if (tokens.front() != kCorner) parse_error(line_no, "expected header starting with 'id/step'");
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        int step = 0;
        if (!parse_nonneg(tokens[k], step) || static_cast<std::size_t>(step) != k) {
          parse_error(line_no, "step labels must count 1, 2, ...");
        }
      }
      steps = tokens.size() - 1;
      if (steps == 0) parse_error(line_no, "no steps");
      header_seen = true;
      continue;
    }
    if (used_seen) {
      if (tokens.front().starts_with("lambda=")) continue;
      parse_error(line_no, "unexpected content after the used row");
    }
    if (tokens.size() != steps + 1) parse_error(line_no, "expected " + std::to_string(steps) + " cells");
    if (tokens.front() == kUsed) {
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        int v = 0;
        if (!parse_nonneg(tokens[k], v)) parse_error(line_no, "bad used count");
        used.push_back(v);
      }
      used_seen = true;
      continue;
    }
    int id = 0;
    if (!parse_nonneg(tokens.front(), id) || static_cast<std::size_t>(id) != rows.size()) {
      parse_error(line_no, "expected process id " + std::to_string(rows.size()));
    }
    std::vector<Action> row;
    row.reserve(steps);
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      try {
        row.push_back(parse_cell(tokens[k]));
      } catch (const GossipError& e) {
        parse_error(line_no, e.message());
      }
    }
    rows.push_back(std::move(row));
  }

  if (!header_seen) throw GossipError(ErrorCode::kParseError, "run-table has no header");
  if (!used_seen) throw GossipError(ErrorCode::kParseError, "run-table has no used row");
  if (rows.size() < 2) throw GossipError(ErrorCode::kParseError, "run-table needs at least two processes");

  std::vector<Action> actions;
  actions.reserve(rows.size() * steps);
  for (auto& row : rows) actions.insert(actions.end(), row.begin(), row.end());
  RunTable table(SystemSize(static_cast<int>(rows.size()) - 1), steps, std::move(actions));
  if (table.nu().values != used) {
    throw GossipError(ErrorCode::kParseError, "used row disagrees with the cells");
  }
  return table;
}

std::string metrics_footer(const Metrics& metrics) {
  return "lambda=" + std::to_string(metrics.lambda) + " mu=" + metrics.mu.to_decimal(4) +
         " efficiency=" + (metrics.efficiency * Rational(100)).to_decimal(2) + "%";
}

std::string render_run_table_csv(const RunTable& table) {
  std::ostringstream os;
  os << "id";
  for (std::size_t t = 1; t <= table.steps(); ++t) os << ',' << t;
  os << '\n';
  for (int p = 0; p <= table.size().n(); ++p) {
    os << p;
    for (const Action& a : table.row(ProcessId{p})) os << ',' << cell_text(a);
    os << '\n';
  }
  os << "used";
  for (int v : table.nu().values) os << ',' << v;
  os << '\n';
  return os.str();
}

}  // namespace gossiplab::cli
