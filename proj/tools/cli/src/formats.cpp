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

#include "gossiplab/cli/formats.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "gossiplab/error.hpp"

namespace gossiplab::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

std::vector<PermutationSpec> read_permutation_file(std::istream& in, SystemSize n) {
  std::vector<std::optional<PermutationSpec>> by_id(static_cast<std::size_t>(n.process_count()));
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw GossipError(ErrorCode::kParseError,
                        "line " + std::to_string(line_no) + ": expected 'id: t1,t2,...'", line_no);
    }
    auto id = to_int<int>(trim(line.substr(0, colon)));
    if (!id) {
      throw GossipError(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": bad process id",
                        line_no);
    }
    if (!n.contains(ProcessId{*id})) {
      throw GossipError(ErrorCode::kOutOfRange,
                        "line " + std::to_string(line_no) + ": process " + std::to_string(*id) +
                            " outside 0.." + std::to_string(n.n()),
                        line_no);
    }
    auto& slot = by_id[static_cast<std::size_t>(*id)];
    if (slot) {
      throw GossipError(ErrorCode::kParseError,
                        "line " + std::to_string(line_no) + ": process " + std::to_string(*id) +
                            " listed twice",
                        line_no);
    }
    std::vector<ProcessId> targets;
    std::string_view body = trim(line.substr(colon + 1));
    if (!body.empty()) {
      for (std::string_view part : split(body, ',')) {
        auto t = to_int<int>(part);
        if (!t) {
          throw GossipError(ErrorCode::kParseError,
                            "line " + std::to_string(line_no) + ": bad target '" + std::string(part) + "'",
                            line_no);
        }
        targets.emplace_back(*t);
      }
    }
    try {
      slot = validate_permutation(ProcessId{*id}, targets, n);
    } catch (const GossipError& e) {
      throw GossipError(e.code(), "line " + std::to_string(line_no) + ": " + e.message(), e.index());
    }
  }

  std::vector<PermutationSpec> out;
  out.reserve(by_id.size());
  for (std::size_t p = 0; p < by_id.size(); ++p) {
    if (!by_id[p]) {
      throw GossipError(ErrorCode::kWrongLength,
                        "permutation file has no line for process " + std::to_string(p), p);
    }
    out.push_back(*by_id[p]);
  }
  return out;
}

void write_permutation_file(std::span<const PermutationSpec> assignment, std::ostream& out) {
  for (const PermutationSpec& spec : assignment) {
    out << spec.owner().value << ':';
    const char* sep = " ";
    for (ProcessId t : spec.targets()) {
      out << sep << t.value;
      sep = ",";
    }
    out << '\n';
  }
}

std::pair<int, int> parse_int_range(std::string_view text) {
  text = trim(text);
  auto dots = text.find("..");
  auto lo = to_int<int>(trim(text.substr(0, dots)));
  auto hi = dots == std::string_view::npos ? lo : to_int<int>(trim(text.substr(dots + 2)));
  if (!lo || !hi || *lo > *hi) {
    throw GossipError(ErrorCode::kInvalidArgument, "expected a range like 2..50, got '" + std::string(text) + "'");
  }
  return {*lo, *hi};
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> grid;
  if (trim(text).empty()) return grid;
  for (std::string_view part : split(text, ',')) grid.push_back(Rational::parse(part));
  return grid;
}

std::vector<std::pair<std::int64_t, int>> parse_schedule(std::string_view text) {
  std::vector<std::pair<std::int64_t, int>> entries;
  for (std::string_view part : split(text, ',')) {
    auto colon = part.find(':');
    std::optional<std::int64_t> from;
    std::optional<int> value;
    if (colon != std::string_view::npos) {
      from = to_int<std::int64_t>(trim(part.substr(0, colon)));
      value = to_int<int>(trim(part.substr(colon + 1)));
    }
    if (!from || !value) {
      throw GossipError(ErrorCode::kInvalidArgument,
                        "expected schedule entries like 1:4,100:16, got '" + std::string(part) + "'");
    }
    entries.emplace_back(*from, *value);
  }
  return entries;
}

}  // namespace gossiplab::cli
