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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gossiplab {

enum class ErrorCode {
  kInvalidArgument,
  kDuplicateTarget,
  kSelfTarget,
  kWrongLength,
  kOutOfRange,
  kOwnerMismatch,
  kUnknownStrategy,
  kInvalidCapacity,
  kDeadlockDetected,
  kStepLimitExceeded,
  kDomainTooSmall,
  kEmptyGrid,
  kSaturated,
  kConvergedDuplicate,
  kTraceExhausted,
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

/// The single exception type thrown by the library. `index()` names the
/// offending position when the failure is tied to one element of an input
/// sequence (a permutation slot, a file line, a grid point).
class GossipError : public std::runtime_error {
 public:
  GossipError(ErrorCode code, const std::string& message,
              std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  /// what() without the leading code name.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> index_;
};

}  // namespace gossiplab
