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

#include <span>
#include <vector>

#include "gossiplab/engine.hpp"
#include "gossiplab/error.hpp"

namespace gossiplab::detail {

// Reusable scratch space for match_step; avoids per-step allocation in long
// runs.
class StepMatcher {
 public:
  void run(std::span<ProcessCursor> cursors, int cap, std::int64_t step,
           std::vector<CommunicationPair>& pairs, std::span<Action> actions);

 private:
  std::vector<int> lowest_sender_;
};

std::vector<ProcessCursor> make_cursors(std::span<const PermutationSpec> assignment);

// Drives the step loop, handing each step to `sink(step, pairs, actions)`.
// Returns the run length.
template <typename Sink>
std::int64_t run_engine(std::span<const PermutationSpec> assignment, const ChannelProfile& profile,
                        std::int64_t max_steps, Sink&& sink) {
  std::vector<ProcessCursor> cursors = make_cursors(assignment);
  std::vector<Action> actions(cursors.size());
  std::vector<CommunicationPair> pairs;
  StepMatcher matcher;
  std::size_t stopped = 0;
  std::int64_t step = 0;
  while (stopped < cursors.size()) {
    ++step;
    if (step > max_steps) {
      throw GossipError(ErrorCode::kStepLimitExceeded,
                        "run did not finish within " + std::to_string(max_steps) + " steps");
    }
    matcher.run(cursors, profile.capacity(step), step, pairs, actions);
    for (const CommunicationPair& pair : pairs) {
      if (cursors[static_cast<std::size_t>(pair.sender.value)].stopped()) ++stopped;
      if (cursors[static_cast<std::size_t>(pair.receiver.value)].stopped()) ++stopped;
    }
    sink(step, std::span<const CommunicationPair>(pairs), std::span<const Action>(actions));
  }
  return step;
}

}  // namespace gossiplab::detail
