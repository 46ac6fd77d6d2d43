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

#ifndef SWCLAB_RING_HPP_
#define SWCLAB_RING_HPP_

#include <memory>
#include <string>
#include <vector>

#include "swclab/field.hpp"
#include "swclab/limits.hpp"

namespace swclab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind { kMatrix, kModN, kProduct, kTable };

struct RingProvenance {
  RingKind kind = RingKind::kTable;
  int m = 0;                     // kMatrix: matrix size
  FieldPtr field;                // kMatrix: coefficient field
  int n = 0;                     // kModN: modulus
  std::vector<RingPtr> factors;  // kProduct
};

// A finite ring with unity, materialized as addition and multiplication
// tables over element indices 0..order-1. Index 0 is always the zero.
//
// Encodings: M_m(F_q) elements are row-major base-q integers (first entry
// most significant); Z/n elements are residues; products use mixed radix
// with the leftmost factor most significant.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  int order() const { return order_; }
  int zero() const { return 0; }
  int one() const { return one_; }
  int add(int a, int b) const { return add_[a * order_ + b]; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  bool is_unit(int a) const { return unit_[a] != 0; }

  const RingProvenance& provenance() const { return provenance_; }
  // Human-readable name such as "M_2(F_2)", "Z/4" or "Z/2 x Z/3".
  std::string name() const;

  // Decomposes a product-ring element into its factor components.
  std::vector<int> product_components(int a) const;

  // Construction without axiom checks; callers guarantee a unital ring with
  // zero at index 0.
  static RingPtr from_tables(int order, std::vector<int> add,
                             std::vector<int> mul, RingProvenance provenance);

 private:
  Ring() = default;

  int order_ = 0;
  int one_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<char> unit_;
  RingProvenance provenance_;
};

RingPtr make_matrix_ring(int m, int q, const Limits& limits = {});
RingPtr make_mod_n_ring(int n, const Limits& limits = {});
RingPtr make_product_ring(const std::vector<RingPtr>& factors,
                          const Limits& limits = {});
// Validates every ring axiom (guarded by limits.max_order); element 0 must
// be the additive identity and some element must act as unity.
RingPtr make_table_ring(const std::vector<std::vector<int>>& add,
                        const std::vector<std::vector<int>>& mul,
                        const Limits& limits = {});

// Checks every ring axiom exhaustively; returns an empty string when the
// tables form a unital ring, otherwise a description of the first failure.
std::string check_ring_axioms(const Ring& ring);

// A left (or right, or two-sided) ideal as a sorted member list.
struct LeftIdeal {
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int a) const;
  bool contains(const LeftIdeal& other) const;
  friend bool operator==(const LeftIdeal&, const LeftIdeal&) = default;
  friend auto operator<=>(const LeftIdeal&, const LeftIdeal&) = default;
};

// Canonical order for ideal lists: by size, then by member list.
bool canonical_less(const LeftIdeal& a, const LeftIdeal& b);

enum class Side { kLeft, kRight };

// {r : 1 - s*r is a unit for every s}.
LeftIdeal jacobson_radical(const Ring& ring);

// Smallest left (right) ideal containing gens.
LeftIdeal ideal_generated(const Ring& ring, const std::vector<int>& gens,
                          Side side = Side::kLeft);

// All left (right) ideals, canonically sorted. Guarded by limits.max_order.
std::vector<LeftIdeal> left_ideals_enumerate(const Ring& ring,
                                             const Limits& limits = {},
                                             Side side = Side::kLeft);

bool is_two_sided(const Ring& ring, const LeftIdeal& ideal);

// True iff every left (right) ideal is R*g (g*R) for a single g.
bool is_left_pir(const Ring& ring, const Limits& limits = {},
                 Side side = Side::kLeft);

// Smallest element index g with R*g = ideal. Every left ideal containing g
// then contains the whole ideal. Throws kHypothesisUnmet when the ideal is
// not principal.
int principal_generator(const Ring& ring, const LeftIdeal& ideal);

// R / I for a two-sided ideal I, materialized over canonical coset
// representatives (the smallest index in each coset) listed in increasing
// order. projection[r] is the quotient index of r.
struct QuotientRing {
  RingPtr ring;
  std::vector<int> projection;
  std::vector<int> representatives;
};
QuotientRing quotient_ring(const Ring& ring, const LeftIdeal& ideal);

struct WedderburnBlock {
  int mu = 0;  // matrix size
  int q = 0;   // field order
  friend bool operator==(const WedderburnBlock&,
                         const WedderburnBlock&) = default;
  friend auto operator<=>(const WedderburnBlock&,
                          const WedderburnBlock&) = default;
};

// Blocks (mu_i, q_i) with R / rad R = sum of M_{mu_i}(F_{q_i}), sorted by
// (q_i, mu_i).
struct WedderburnData {
  std::vector<WedderburnBlock> blocks;
};

// Structural for matrix, Z/n and product rings; table rings go through the
// simple-module catalog (guarded).
WedderburnData wedderburn_data(const Ring& ring, const Limits& limits = {});

// A surjective ring map R -> M_mu(F_q) onto one Wedderburn block.
// image[r] is the row-major base-q code of the image matrix.
struct BlockProjection {
  WedderburnBlock block;
  FieldPtr field;
  std::vector<long long> image;
};

// Available for matrix, Z/n and product provenance; throws kUnsupported for
// table rings. Same order as wedderburn_data.
std::vector<BlockProjection> block_projections(const Ring& ring);

}  // namespace swclab

#endif  // SWCLAB_RING_HPP_
