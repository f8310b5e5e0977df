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

#ifndef NETINSPECT_COMPONENT_SET_HPP_
#define NETINSPECT_COMPONENT_SET_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace netinspect {

// Fixed-universe bitset over component indices. Monitoring-set intersections
// and removals dominate the cover/partition runtime, so everything is word
// parallel.
class ComponentSet {
 public:
  ComponentSet() = default;
  explicit ComponentSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return universe_; }

  void insert(int i) {
    assert(i >= 0 && i < universe_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }

  void erase(int i) {
    assert(i >= 0 && i < universe_);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }

  bool contains(int i) const {
    if (i < 0 || i >= universe_) return false;
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  bool intersects(const ComponentSet& other) const {
    assert(universe_ == other.universe_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  int intersection_count(const ComponentSet& other) const {
    assert(universe_ == other.universe_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  bool is_subset_of(const ComponentSet& other) const {
    assert(universe_ == other.universe_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ComponentSet& operator|=(const ComponentSet& other) {
    assert(universe_ == other.universe_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ComponentSet& operator&=(const ComponentSet& other) {
    assert(universe_ == other.universe_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  // Removes every element of `other` from this set.
  ComponentSet& subtract(const ComponentSet& other) {
    assert(universe_ == other.universe_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        fn(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ComponentSet&, const ComponentSet&) = default;

 private:
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace netinspect

#endif  // NETINSPECT_COMPONENT_SET_HPP_
