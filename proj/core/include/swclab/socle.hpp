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

#ifndef SWCLAB_SOCLE_HPP_
#define SWCLAB_SOCLE_HPP_

#include <optional>
#include <vector>

#include "swclab/limits.hpp"
#include "swclab/module.hpp"

namespace swclab {

struct SimpleModule {
  ModulePtr module;  // T_i as an R-module
  int mu = 0;        // multiplicity of T_i in R / rad R
  int endo_order = 0;  // |End_R(T_i)|
};

// Every simple left R-module up to isomorphism, ordered by
// (endo_order, mu, |T_i|, defining minimal ideal of R / rad R).
struct SimpleCatalog {
  std::vector<SimpleModule> entries;
};

// Built from the minimal left ideals of R / rad R, grouped by brute-force
// isomorphism search and pulled back to R.
SimpleCatalog simple_catalog(const RingPtr& ring, const Limits& limits = {});

struct SocleReport {
  Submodule socle;
  std::vector<int> multiplicities;  // s_i, aligned with the catalog
  std::vector<int> mu;              // mu_i, aligned with the catalog
  std::vector<int> endo_orders;
  // s_i <= mu_i for every i.
  bool cyclic = false;
  // Some single element generates the socle.
  bool cyclic_by_generator = false;
  std::optional<int> socle_generator;
  // A embeds into the character module of R; absent past the guard.
  std::optional<bool> cyclic_by_embedding;
  bool methods_agree = false;
};

// s_i is read off |Hom_R(T_i, A)| = endo_order^{s_i}. The three cyclicity
// criteria are computed independently; disagreement throws kInternal.
SocleReport socle_report(const ModulePtr& module, const Limits& limits = {});

// Characters of (R, +) with values in Z/E, E the exponent of (R, +),
// sorted lexicographically by value vector; (r·χ)(x) = χ(x r).
ModulePtr character_module(const RingPtr& ring, const Limits& limits = {});

// Exponent of the additive group of the ring.
int additive_exponent(const Ring& ring);

}  // namespace swclab

#endif  // SWCLAB_SOCLE_HPP_
