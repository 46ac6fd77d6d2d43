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

#ifndef SWCLAB_MODULE_HPP_
#define SWCLAB_MODULE_HPP_

#include <memory>
#include <string>
#include <vector>

#include "swclab/limits.hpp"
#include "swclab/ring.hpp"

namespace swclab {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

enum class ModuleKind {
  kColumn,
  kRegular,
  kModM,
  kDirectSum,
  kTable,
  kPullback,   // column module of a Wedderburn block, pulled back to R
  kCharacter,  // character module of R
  kQuotient,   // regular module of R / I, pulled back to R
  kSimple,     // minimal left ideal of R / rad R, pulled back to R
  kSubmodule,  // a submodule re-indexed as a module
};

struct ModuleProvenance {
  ModuleKind kind = ModuleKind::kTable;
  int k = 0;  // kColumn, kPullback: number of columns
  int m = 0;  // kModM: modulus
  std::vector<ModulePtr> summands;  // kDirectSum
};

// A finite left R-module, materialized as an addition table and an action
// table act(r, a) over element indices 0..order-1. Index 0 is the zero.
//
// Encodings: column modules M_{m x k}(F_q) are row-major base-q integers
// (first entry most significant); Z/m uses residues; direct sums use mixed
// radix with the leftmost summand most significant.
class Module {
 public:
  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  int order() const { return order_; }
  int add(int a, int b) const { return add_[a * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int act(int r, int a) const { return act_[r * order_ + a]; }

  const ModuleProvenance& provenance() const { return provenance_; }
  std::string name() const;

  // Components of a direct-sum element, leftmost summand first.
  std::vector<int> components(int a) const;
  int from_components(const std::vector<int>& parts) const;

  // Construction without axiom checks.
  static ModulePtr from_tables(RingPtr ring, int order, std::vector<int> add,
                               std::vector<int> act,
                               ModuleProvenance provenance);

 private:
  Module() = default;

  RingPtr ring_;
  int order_ = 0;
  std::vector<int> add_;
  std::vector<int> neg_;
  std::vector<int> act_;
  ModuleProvenance provenance_;
};

// M_{m x k}(F_q) over M_m(F_q) acting by left multiplication.
ModulePtr make_column_module(const RingPtr& ring, int k,
                             const Limits& limits = {});
ModulePtr make_regular_module(const RingPtr& ring, const Limits& limits = {});
// Z/m over Z/n, m | n.
ModulePtr make_mod_m_module(const RingPtr& ring, int m,
                            const Limits& limits = {});
ModulePtr make_direct_sum(const RingPtr& ring,
                          const std::vector<ModulePtr>& summands,
                          const Limits& limits = {});
// A^n as a module (n copies, mixed radix).
ModulePtr make_power(const ModulePtr& alphabet, int n,
                     const Limits& limits = {});
// Validated exhaustively (guarded by limits.max_order).
ModulePtr make_table_module(const RingPtr& ring,
                            const std::vector<std::vector<int>>& add,
                            const std::vector<std::vector<int>>& act,
                            const Limits& limits = {});
// M_{mu x k}(F_q) with R acting through a block projection R -> M_mu(F_q).
ModulePtr make_pullback_column_module(const RingPtr& ring,
                                      const BlockProjection& projection,
                                      int k, const Limits& limits = {});

// Empty string when the tables form a left module, else the first failure.
std::string check_module_axioms(const Module& module);

struct Submodule {
  std::vector<int> members;  // sorted

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int a) const;
  friend bool operator==(const Submodule&, const Submodule&) = default;
  friend auto operator<=>(const Submodule&, const Submodule&) = default;
};

Submodule submodule_generated(const Module& module,
                              const std::vector<int>& gens);
// Every submodule, sorted by size then members. Guarded by max_order.
std::vector<Submodule> submodules_enumerate(const Module& module,
                                            const Limits& limits = {});
LeftIdeal annihilator(const Module& module, int a);
// Elements killed by the Jacobson radical of the ring.
Submodule socle(const Module& module);

// The submodule as a module of its own; element i is members[i].
ModulePtr submodule_as_module(const Module& module, const Submodule& sub);

// A generating tuple of smallest size where the search is affordable
// (lexicographically first among those), otherwise a greedy tuple that
// maximizes growth at each step.
std::vector<int> minimal_generators(const Module& module);

}  // namespace swclab

#endif  // SWCLAB_MODULE_HPP_
