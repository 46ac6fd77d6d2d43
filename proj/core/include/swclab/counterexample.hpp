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

#ifndef SWCLAB_COUNTEREXAMPLE_HPP_
#define SWCLAB_COUNTEREXAMPLE_HPP_

#include <cstdint>
#include <string>

#include "swclab/code.hpp"
#include "swclab/limits.hpp"

namespace swclab {

// prod_{i=1}^{k-1} (1 + q^i). Throws kInput for k < 1 or q not a prime
// power, kGuardExceeded on 64-bit overflow.
std::uint64_t counterexample_length(int q, int k);

// The six machine checks every emitted pack must pass.
struct PackTranscript {
  bool length_ok = false;        // both codes have the declared length
  bool bijection_ok = false;     // f is a linear bijection, |C±| = |param|
  bool hamming_ok = false;       // f preserves Hamming weight
  bool swc_ok = false;           // f preserves swc built on Aut_R(A)
  bool zero_column_ok = false;   // C+ has a zero column, C- has none
  bool non_extension_ok = false;  // no Aut_R(A)-monomial map extends f

  // "exhaustive-search" or "zero-column".
  std::string non_extension_certificate;
  int aut_order = 0;
  int zero_columns_plus = 0;
  int zero_columns_minus = 0;
  double candidate_space = 0;
  std::uint64_t search_nodes = 0;
  std::uint64_t tau_tests = 0;

  bool all_pass() const {
    return length_ok && bijection_ok && hamming_ok && swc_ok &&
           zero_column_ok && non_extension_ok;
  }
};

// A verified pair of codes C+, C- ⊆ A^N and an R-linear isomorphism
// f: C+ -> C- preserving Hamming weight and swc that no monomial
// transformation extends.
struct CounterexamplePack {
  RingPtr ring;
  ModulePtr alphabet;
  // Parameters of the matrix construction: R' = M_m(F_q),
  // A' = M_{m x k}(F_q). For packs pulled back to another alphabet, these
  // describe the block the construction ran in.
  int m = 0;
  int k = 0;
  int q = 0;
  std::uint64_t length = 0;
  int parameter_order = 0;  // |M_{m x k}(F_q)|
  std::string construction;  // "subspace" or "search"
  CodePtr plus;
  CodePtr minus;
  CodeMap f;
  PackTranscript transcript;
};

// Runs all six checks. expected_length == 0 only requires equal lengths.
PackTranscript verify_pack(const CodeMap& f, std::uint64_t expected_length,
                           int parameter_order, const Limits& limits = {});

struct BuildOptions {
  // Skip the subspace construction and go straight to the search fallback.
  bool force_search = false;
  int search_max_length = 3;
};

// Over R = M_m(F_q), A = M_{m x k}(F_q), k > m.
//
// Subspace construction: for every subspace W ⊆ F_q^k of dimension k - d,
// q^{d(d-1)/2} coordinates a -> a P_W, where P_W is the projection with
// kernel W onto the span of the standard basis vectors outside W's pivot
// columns. Even d go to C+, odd d to C-; f identifies the two codewords
// of the same a. The pack is emitted only if every check passes; otherwise
// a bounded search over short codes a -> (a P_1, ..., a P_n) is tried.
// Throws kInput unless k > m >= 1, kUnsupported if nothing verifies.
CounterexamplePack build_counterexample(int m, int k, int q,
                                        const Limits& limits = {},
                                        const BuildOptions& options = {});

}  // namespace swclab

#endif  // SWCLAB_COUNTEREXAMPLE_HPP_
