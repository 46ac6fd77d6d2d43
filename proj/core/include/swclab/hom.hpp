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

#ifndef SWCLAB_HOM_HPP_
#define SWCLAB_HOM_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "swclab/limits.hpp"
#include "swclab/module.hpp"

namespace swclab {

// Backtracking enumeration of R-linear maps from the submodule of `source`
// generated by a tuple of generators into `target`.
//
// Each generator g may only go to elements t with Ann(g) contained in
// Ann(t) (Ann(g) = Ann(t) when injectivity is required). After every choice
// the partial map is extended over D + R*g and checked for consistency, so
// every map handed to the visitor is a well-defined homomorphism.
class HomSearch {
 public:
  HomSearch(const Module& source, const Module& target,
            const Limits& limits = {});

  // Generators of the domain. Defaults to minimal_generators(source).
  void set_generators(std::vector<int> gens);
  // A hom fixed in advance on a submodule (entries -1 outside it).
  void fix(std::vector<int> partial);
  void require_injective(bool on) { injective_ = on; }

  // Calls visit(table) for every hom, table[x] = image of x or -1 outside
  // the domain. The visitor returns false to stop early. Returns the number
  // of maps visited. Throws kGuardExceeded past limits.max_search_steps.
  std::uint64_t run(const std::function<bool(const std::vector<int>&)>& visit);

 private:
  bool extend(int g, int image, std::vector<int>& assigned);
  bool recurse(size_t depth,
               const std::function<bool(const std::vector<int>&)>& visit,
               std::uint64_t& visited);

  const Module& source_;
  const Module& target_;
  Limits limits_;
  std::vector<int> gens_;
  bool injective_ = false;
  std::vector<int> map_;
  std::vector<int> domain_;
  std::vector<std::vector<std::uint64_t>> ann_source_;
  std::vector<std::vector<std::uint64_t>> ann_target_;
  std::uint64_t steps_ = 0;
};

// |Hom_R(source, target)|.
std::uint64_t count_homs(const Module& source, const Module& target,
                         const Limits& limits = {});
// The first injective hom found, as a table over source elements.
std::optional<std::vector<int>> find_embedding(const Module& source,
                                               const Module& target,
                                               const Limits& limits = {});
bool embeds_into(const Module& source, const Module& target,
                 const Limits& limits = {});
bool isomorphic(const Module& a, const Module& b, const Limits& limits = {});

}  // namespace swclab

#endif  // SWCLAB_HOM_HPP_
