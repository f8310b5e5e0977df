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

#include "netinspect/set_cover.hpp"

#include <algorithm>
#include <cassert>

namespace netinspect {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<NodeIndex> greedy_cover(const GameInstance& instance) {
  const int n = instance.num_nodes();
  ComponentSet uncovered(instance.num_components());
  for (int e = 0; e < instance.num_components(); ++e) uncovered.insert(e);

  std::vector<NodeIndex> cover;
  while (!uncovered.empty()) {
    NodeIndex best = -1;
    int best_gain = 0;
    for (NodeIndex v = 0; v < n; ++v) {
      int gain = instance.monitoring_set(v).intersection_count(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    assert(best >= 0);  // coverage is an instance invariant
    cover.push_back(best);
    uncovered.subtract(instance.monitoring_set(best));
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

class BranchAndBound {
 public:
  BranchAndBound(const GameInstance& instance, Clock::time_point deadline)
      : instance_(instance), deadline_(deadline) {}

  // Returns true when the search ran to completion (certified optimum).
  bool run(std::vector<NodeIndex>* best) {
    best_ = best;
    ComponentSet uncovered(instance_.num_components());
    for (int e = 0; e < instance_.num_components(); ++e) uncovered.insert(e);
    std::vector<char> banned(instance_.num_nodes(), 0);
    std::vector<NodeIndex> chosen;
    timed_out_ = false;
    search(uncovered, banned, chosen);
    return !timed_out_;
  }

  int64_t explored() const { return explored_; }

 private:
  void search(ComponentSet uncovered, std::vector<char> banned,
              std::vector<NodeIndex> chosen) {
    if (timed_out_) return;
    if ((++explored_ & 1023) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }

    // Forced picks: a component whose only remaining candidate is v pins v.
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> todo = uncovered.to_indices();
      for (int e : todo) {
        if (!uncovered.contains(e)) continue;
        NodeIndex only = -1;
        int candidates = 0;
        for (NodeIndex v = 0; v < instance_.num_nodes(); ++v) {
          if (banned[v] || !instance_.monitoring_set(v).contains(e)) continue;
          if (++candidates > 1) break;
          only = v;
        }
        if (candidates == 0) return;  // dead branch
        if (candidates == 1) {
          chosen.push_back(only);
          if (static_cast<int>(chosen.size()) >=
              static_cast<int>(best_->size())) {
            return;
          }
          uncovered.subtract(instance_.monitoring_set(only));
          banned[only] = 1;
          changed = true;
        }
      }
    }

    if (uncovered.empty()) {
      if (chosen.size() < best_->size()) {
        std::sort(chosen.begin(), chosen.end());
        *best_ = chosen;
      }
      return;
    }

    // Lower bound: even the largest remaining set covers at most `largest`
    // of the uncovered components per pick.
    int largest = 0;
    for (NodeIndex v = 0; v < instance_.num_nodes(); ++v) {
      if (banned[v]) continue;
      largest = std::max(largest,
                         instance_.monitoring_set(v).intersection_count(
                             uncovered));
    }
    if (largest == 0) return;
    int lb = static_cast<int>(chosen.size()) +
             (uncovered.count() + largest - 1) / largest;
    if (lb >= static_cast<int>(best_->size())) return;

    // Branch on the uncovered component with the fewest candidates, trying
    // candidates in ascending node order.
    int branch_e = -1;
    int fewest = instance_.num_nodes() + 1;
    uncovered.for_each([&](int e) {
      int candidates = 0;
      for (NodeIndex v = 0; v < instance_.num_nodes(); ++v) {
        if (!banned[v] && instance_.monitoring_set(v).contains(e)) ++candidates;
      }
      if (candidates < fewest) {
        fewest = candidates;
        branch_e = e;
      }
    });
    assert(branch_e >= 0);

    for (NodeIndex v = 0; v < instance_.num_nodes(); ++v) {
      if (banned[v] || !instance_.monitoring_set(v).contains(branch_e)) {
        continue;
      }
      std::vector<char> child_banned = banned;
      child_banned[v] = 1;
      std::vector<NodeIndex> child_chosen = chosen;
      child_chosen.push_back(v);
      if (static_cast<int>(child_chosen.size()) <
          static_cast<int>(best_->size())) {
        ComponentSet child_uncovered = uncovered;
        child_uncovered.subtract(instance_.monitoring_set(v));
        search(std::move(child_uncovered), std::move(child_banned),
               std::move(child_chosen));
        if (timed_out_) return;
      }
      // A later candidate covering branch_e must not reuse v.
      banned[v] = 1;
    }
  }

  const GameInstance& instance_;
  Clock::time_point deadline_;
  std::vector<NodeIndex>* best_ = nullptr;
  int64_t explored_ = 0;
  bool timed_out_ = false;
};

}  // namespace

CoverResult min_set_cover(const GameInstance& instance, CoverMode mode,
                          std::chrono::milliseconds time_budget) {
  CoverResult result;
  result.nodes = greedy_cover(instance);
  result.optimal = false;
  if (mode == CoverMode::kGreedy) return result;

  BranchAndBound bnb(instance, Clock::now() + time_budget);
  result.optimal = bnb.run(&result.nodes);
  result.nodes_explored = bnb.explored();
  return result;
}

Partition greedy_partition(const GameInstance& instance,
                           const CoverResult& cover) {
  ComponentSet all(instance.num_components());
  for (int e = 0; e < instance.num_components(); ++e) all.insert(e);
  ComponentSet covered(instance.num_components());
  for (NodeIndex v : cover.nodes) covered |= instance.monitoring_set(v);
  if (!(covered == all)) {
    throw_validation("incomplete_cover",
                     "cover does not span the component universe");
  }

  std::vector<std::pair<NodeIndex, ComponentSet>> working;
  working.reserve(cover.nodes.size());
  for (NodeIndex v : cover.nodes) {
    working.emplace_back(v, instance.monitoring_set(v));
  }

  Partition partition;
  partition.owners.assign(instance.num_components(), -1);
  std::vector<char> frozen(working.size(), 0);
  for (size_t round = 0; round < working.size(); ++round) {
    int pick = -1;
    int pick_size = -1;
    for (size_t i = 0; i < working.size(); ++i) {
      if (frozen[i]) continue;
      int size = working[i].second.count();
      if (size > pick_size ||
          (size == pick_size && working[i].first < working[pick].first)) {
        pick = static_cast<int>(i);
        pick_size = size;
      }
    }
    frozen[pick] = 1;
    const ComponentSet& block = working[pick].second;
    block.for_each(
        [&](int e) { partition.owners[e] = working[pick].first; });
    for (size_t i = 0; i < working.size(); ++i) {
      if (!frozen[i]) working[i].second.subtract(block);
    }
  }

  partition.ordered_blocks = std::move(working);
  std::sort(partition.ordered_blocks.begin(), partition.ordered_blocks.end(),
            [](const auto& a, const auto& b) {
              int ca = a.second.count(), cb = b.second.count();
              if (ca != cb) return ca > cb;
              return a.first < b.first;
            });
  return partition;
}

}  // namespace netinspect
