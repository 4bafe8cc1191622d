// Copyright 2026 The alexdual Authors
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

#pragma once

// Depth-first search for an ordering of t items where the admissibility
// of the next item depends only on the *set* of items already placed.
// Dead sets are memoized, so the search is exhaustive and visits each
// subset at most once.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "alexdual/errors.hpp"

namespace alexdual::detail {

class BitKey {
 public:
  explicit BitKey(std::size_t t) : words_((t + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) {
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  friend bool operator==(const BitKey&, const BitKey&) = default;

  struct Hash {
    std::size_t operator()(const BitKey& k) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (std::uint64_t w : k.words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

 private:
  std::vector<std::uint64_t> words_;
};

struct OrderSearchBudget {
  std::chrono::milliseconds timeout{30'000};
  std::size_t max_states = std::size_t{1} << 22;
};

// `candidates(prefix, placed)` returns, in priority order, the unplaced
// items that may be appended to `prefix`.
template <typename CandidateFn>
class OrderSearch {
 public:
  OrderSearch(std::size_t t, CandidateFn candidates, OrderSearchBudget budget,
              std::string what)
      : t_(t),
        candidates_(std::move(candidates)),
        budget_(budget),
        what_(std::move(what)),
        placed_(t),
        deadline_(std::chrono::steady_clock::now() + budget.timeout) {}

  std::optional<std::vector<std::size_t>> run() {
    prefix_.clear();
    if (dfs()) return prefix_;
    return std::nullopt;
  }

 private:
  bool dfs() {
    if (prefix_.size() == t_) return true;
    if (dead_.contains(placed_)) return false;
    if (++visited_ % 1024 == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      throw ResourceError(what_ + ": search timed out after " +
                          std::to_string(budget_.timeout.count()) + " ms");
    }
    for (std::size_t c : candidates_(prefix_, placed_)) {
      prefix_.push_back(c);
      placed_.set(c);
      if (dfs()) return true;
      placed_.reset(c);
      prefix_.pop_back();
    }
    dead_.insert(placed_);
    if (dead_.size() > budget_.max_states) {
      throw ResourceError(what_ + ": search exceeded " +
                          std::to_string(budget_.max_states) + " states");
    }
    return false;
  }

  std::size_t t_;
  CandidateFn candidates_;
  OrderSearchBudget budget_;
  std::string what_;
  BitKey placed_;
  std::vector<std::size_t> prefix_;
  std::unordered_set<BitKey, BitKey::Hash> dead_;
  std::size_t visited_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace alexdual::detail
