// Copyright 2026 The swclab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWCLAB_SRC_CLOSURE_HPP_
#define SWCLAB_SRC_CLOSURE_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "swclab/error.hpp"
#include "swclab/limits.hpp"

namespace swclab::detail {

// Smallest subset of {0..order-1} that contains 0 and gens and is closed
// under add and under act(r, .) for every r < ring_order. Requires that
// act(unity, x) = x, so each R*g contains g. Returns sorted members.
template <class Add, class Act>
std::vector<int> close_span(int order, int ring_order,
                            const std::vector<int>& gens, Add add, Act act) {
  std::vector<char> in(order, 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<char> in_cyclic(order, 0);
  std::vector<int> cyclic;
  for (int g : gens) {
    if (in[g]) continue;
    cyclic.clear();
    std::fill(in_cyclic.begin(), in_cyclic.end(), 0);
    for (int r = 0; r < ring_order; ++r) {
      const int x = act(r, g);
      if (!in_cyclic[x]) {
        in_cyclic[x] = 1;
        cyclic.push_back(x);
      }
    }
    const size_t base = members.size();
    for (size_t i = 0; i < base; ++i) {
      for (int x : cyclic) {
        const int y = add(members[i], x);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

template <class Add>
std::vector<int> sum_of_sets(int order, const std::vector<int>& a,
                             const std::vector<int>& b, Add add) {
  std::vector<char> in(order, 0);
  std::vector<int> out;
  for (int x : a) {
    for (int y : b) {
      const int z = add(x, y);
      if (!in[z]) {
        in[z] = 1;
        out.push_back(z);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool size_then_lex(const std::vector<int>& a,
                          const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Every closed subset (submodule / one-sided ideal), obtained by closing
// each single element and then saturating under pairwise sums. Canonically
// sorted by size, then lexicographically.
template <class Add, class Act>
std::vector<std::vector<int>> enumerate_spans(int order, int ring_order,
                                              Add add, Act act,
                                              const Limits& limits,
                                              const char* what) {
  if (order > limits.max_order) {
    throw GuardExceeded(std::string(what) + " enumeration needs order <= " +
                        std::to_string(limits.max_order) + ", got " +
                        std::to_string(order));
  }
  std::set<std::vector<int>> principal;
  for (int a = 0; a < order; ++a) {
    principal.insert(close_span(order, ring_order, {a}, add, act));
  }
  std::set<std::vector<int>> all(principal.begin(), principal.end());
  std::vector<std::vector<int>> frontier(principal.begin(), principal.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (const auto& p : principal) {
        auto t = sum_of_sets(order, s, p, add);
        if (all.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

}  // namespace swclab::detail

#endif  // SWCLAB_SRC_CLOSURE_HPP_
