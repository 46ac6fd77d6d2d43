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

#ifndef SWCLAB_AUTOMORPHISM_HPP_
#define SWCLAB_AUTOMORPHISM_HPP_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "swclab/limits.hpp"
#include "swclab/module.hpp"

namespace swclab {

// An automorphism as its image table: perm[a] is the image of a.
using Perm = std::vector<int>;

// A group of R-module automorphisms of a fixed module, stored as a sorted
// list of image tables. The identity is always element 0 (it is the
// lexicographically smallest permutation).
class AutGroup {
 public:
  // Aut_R(A), by enumerating bijective generator images.
  static AutGroup full(const ModulePtr& module, const Limits& limits = {});
  // Closure of the given automorphisms under composition.
  static AutGroup generated_by(const ModulePtr& module, std::vector<Perm> gens,
                               const Limits& limits = {});
  // An explicitly listed subgroup; throws kInput if any element is not an
  // automorphism or the set is not closed under composition.
  static AutGroup from_elements(const ModulePtr& module,
                                std::vector<Perm> elements);

  const Module& module() const { return *module_; }
  const ModulePtr& module_ptr() const { return module_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  int identity() const { return 0; }

  // Index of the map "apply i, then j"; inputs are on the left, so
  // a(i∘j) = (a i) j.
  int compose(int i, int j) const;
  int inverse(int i) const;
  // -1 if the table is not in the group.
  int index_of(const Perm& p) const;
  bool is_closed() const;

 private:
  AutGroup(ModulePtr module, std::vector<Perm> elements);

  ModulePtr module_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
};

// True iff perm is an additive, action-commuting bijection of the module.
bool is_automorphism(const Module& module, const Perm& perm);

enum class PartitionKind { kAutOrbit, kAnnihilator };

// A partition of a module's elements. label[a] is the smallest element of
// a's class.
struct OrbitIndex {
  PartitionKind kind = PartitionKind::kAutOrbit;
  std::vector<int> label;

  int num_classes() const;
  // Sorted class representatives (labels).
  std::vector<int> classes() const;
  std::vector<int> members(int label_value) const;
  friend bool operator==(const OrbitIndex&, const OrbitIndex&) = default;
};

// Orbits of the subgroup generated by the given automorphisms.
OrbitIndex orbit_partition(const Module& module,
                           std::span<const Perm> generators);
OrbitIndex orbit_partition(const AutGroup& group);
// a ≈ b iff Ann(a) = Ann(b).
OrbitIndex annihilator_partition(const Module& module);
// True iff every class of `fine` lies inside a class of `coarse`.
bool refines(const OrbitIndex& fine, const OrbitIndex& coarse);

// Extends an injective hom f: B -> A (images[i] is the image of
// B.members[i]) to an endomorphism of A, preferring automorphisms. Returns
// the endomorphism's image table, or nullopt when no extension exists.
// Throws kInput if f is not linear or not injective.
std::optional<Perm> extend_mono(const ModulePtr& module, const Submodule& sub,
                                std::span<const int> images,
                                const Limits& limits = {});

struct PseudoInjectivity {
  bool holds = true;
  std::uint64_t submodules = 0;
  std::uint64_t monomorphisms = 0;
  // First unextendable monomorphism found, if any.
  std::optional<Submodule> witness_domain;
  std::vector<int> witness_images;
};

// Every mono from a submodule into A extends to an endomorphism of A.
PseudoInjectivity check_pseudo_injective(const ModulePtr& module,
                                         const Limits& limits = {});
bool is_pseudo_injective(const ModulePtr& module, const Limits& limits = {});

}  // namespace swclab

#endif  // SWCLAB_AUTOMORPHISM_HPP_
