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

#ifndef SWCLAB_EXTENSION_HPP_
#define SWCLAB_EXTENSION_HPP_

#include <cstdint>
#include <map>
#include <optional>

#include "swclab/automorphism.hpp"
#include "swclab/code.hpp"
#include "swclab/limits.hpp"

namespace swclab {

// Multiset of orbit labels down column i (label -> count).
std::map<int, int> column_fingerprint(const Code& code, int i,
                                      const OrbitIndex& index);

int count_zero_columns(const Code& code);

struct ExtensionSearch {
  std::optional<MonomialTransform> transform;
  // n! * |G|^n, the unpruned candidate count (as a double; it overflows
  // 64 bits quickly).
  double candidate_space = 0;
  // (target column, source column) pairs that survived fingerprinting.
  std::uint64_t compatible_pairs = 0;
  // Automorphism tests performed while solving per-column constraints.
  std::uint64_t tau_tests = 0;
  // Permutation-backtracking nodes expanded.
  std::uint64_t nodes = 0;
};

// Finds a G-monomial transform T with cT = f(c) for every source codeword,
// or proves none exists. For each (target i, source j) pair the admissible
// τ are solved from the generator constraints g_j τ = f(g)_i; the
// permutation is then the lexicographically least perfect matching over
// admissible pairs, with the smallest admissible τ per coordinate. Column
// fingerprints prune pairs soundly. Throws kGuardExceeded when
// n^2 * |G| * (#generators) exceeds limits.max_extension_work.
ExtensionSearch extension_search(const CodeMap& f, const AutGroup& group,
                                 const Limits& limits = {});

}  // namespace swclab

#endif  // SWCLAB_EXTENSION_HPP_
