// Copyright 2026 The netinspect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETINSPECT_SET_COVER_HPP_
#define NETINSPECT_SET_COVER_HPP_

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "netinspect/types.hpp"

namespace netinspect {

enum class CoverMode { kExact, kGreedy };

struct CoverResult {
  std::vector<NodeIndex> nodes;  // ascending node index
  bool optimal = false;          // minimality certified
  int64_t nodes_explored = 0;    // branch-and-bound search nodes

  int size() const { return static_cast<int>(nodes.size()); }
};

// Minimum set cover of the component universe by monitoring sets.
//
// kGreedy: largest-uncovered-first, ties broken by lowest node index.
// kExact: branch-and-bound seeded with the greedy cover: branch on the
// uncovered component with the fewest remaining candidates, prune with
// ceil(uncovered / largest-available-set) and pull in nodes forced by
// uniquely-covered components. Falls back to the incumbent with
// optimal=false when the time budget runs out.
CoverResult min_set_cover(
    const GameInstance& instance, CoverMode mode,
    std::chrono::milliseconds time_budget = std::chrono::milliseconds(10000));

struct Partition {
  // owner[e]: the cover node whose block contains component e.
  std::vector<NodeIndex> owners;
  // Blocks in the order the downstream disjoint profile consumes them:
  // descending size, ties by ascending node index. Empty blocks are kept.
  std::vector<std::pair<NodeIndex, ComponentSet>> ordered_blocks;
};

// Greedy partition of the component universe among cover nodes: repeatedly
// freeze the largest remaining block (ties by lowest node index) and strip
// its components from the others.
Partition greedy_partition(const GameInstance& instance,
                           const CoverResult& cover);

}  // namespace netinspect

#endif  // NETINSPECT_SET_COVER_HPP_
