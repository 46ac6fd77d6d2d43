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


#include "swclab/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "swclab/error.hpp"

namespace swclab {
namespace {

using ::swclab::testing::oracle_left_ideals;
using ::swclab::testing::oracle_radical;

// F_2[x, y] / (x, y)^2: elements a + b x + c y encoded a + 2b + 4c. Its
// maximal ideal (x, y) needs two generators.
RingPtr local_ring_order_8() {
  std::vector<std::vector<int>> add(8, std::vector<int>(8));
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      add[u][v] = u ^ v;
      const int a = u & 1, b = (u >> 1) & 1, c = (u >> 2) & 1;
      const int d = v & 1, e = (v >> 1) & 1, f = (v >> 2) & 1;
      mul[u][v] = (a & d) | (((a & e) ^ (b & d)) << 1) |
                  (((a & f) ^ (c & d)) << 2);
    }
  }
  return make_table_ring(add, mul);
}

RingPtr as_table(const Ring& r) {
  std::vector<std::vector<int>> add(r.order(), std::vector<int>(r.order()));
  auto mul = add;
  for (int a = 0; a < r.order(); ++a) {
    for (int b = 0; b < r.order(); ++b) {
      add[a][b] = r.add(a, b);
      mul[a][b] = r.mul(a, b);
    }
  }
  return make_table_ring(add, mul);
}

std::vector<RingPtr> catalog() {
  return {make_mod_n_ring(2),
          make_mod_n_ring(4),
          make_mod_n_ring(6),
          make_mod_n_ring(8),
          make_mod_n_ring(9),
          make_matrix_ring(1, 4),
          make_matrix_ring(2, 2),
          make_product_ring({make_mod_n_ring(2), make_mod_n_ring(2)}),
          make_product_ring({make_mod_n_ring(2), make_mod_n_ring(4)}),
          local_ring_order_8()};
}

std::vector<std::vector<int>> members(const std::vector<LeftIdeal>& ideals) {
  std::vector<std::vector<int>> out;
  for (const auto& i : ideals) out.push_back(i.members);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(RingTest, ModFourArithmetic) {
  RingPtr z4 = make_mod_n_ring(4);
  EXPECT_EQ(z4->order(), 4);
  EXPECT_EQ(z4->mul(2, 2), 0);
  EXPECT_EQ(z4->one(), 1);
}

TEST(RingTest, MatrixRingIdentityIsOne) {
  RingPtr m2 = make_matrix_ring(2, 2);
  EXPECT_EQ(m2->order(), 16);
  EXPECT_EQ(m2->one(), 9);  // [[1,0],[0,1]] row-major base 2
}

TEST(RingTest, ProductOfTwoAndThreeIsIsomorphicToSix) {
  RingPtr prod = make_product_ring({make_mod_n_ring(2), make_mod_n_ring(3)});
  RingPtr z6 = make_mod_n_ring(6);
  ASSERT_EQ(prod->order(), 6);
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  int isomorphisms = 0;
  do {
    bool ok = true;
    for (int a = 0; a < 6 && ok; ++a) {
      for (int b = 0; b < 6 && ok; ++b) {
        ok = perm[prod->add(a, b)] == z6->add(perm[a], perm[b]) &&
             perm[prod->mul(a, b)] == z6->mul(perm[a], perm[b]);
      }
    }
    isomorphisms += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Ring isomorphisms Z/6 -> Z/6 fix 1, so there is exactly one.
  EXPECT_EQ(isomorphisms, 1);
}

TEST(RingTest, MixedRadixProductEncoding) {
  RingPtr prod = make_product_ring({make_mod_n_ring(2), make_mod_n_ring(3)});
  EXPECT_EQ(prod->product_components(5), (std::vector<int>{1, 2}));
  EXPECT_EQ(prod->one(), 4);  // (1, 1) = 1*3 + 1
}

TEST(RingTest, RadicalExamples) {
  EXPECT_EQ(jacobson_radical(*make_mod_n_ring(4)).members,
            (std::vector<int>{0, 2}));
  EXPECT_EQ(jacobson_radical(*make_matrix_ring(2, 2)).members,
            (std::vector<int>{0}));
  EXPECT_EQ(jacobson_radical(*make_mod_n_ring(6)).members,
            (std::vector<int>{0}));
}

TEST(RingTest, RadicalMatchesMaximalIdealIntersection) {
  for (const RingPtr& r : catalog()) {
    EXPECT_EQ(jacobson_radical(*r).members, oracle_radical(*r)) << r->name();
  }
}

TEST(RingTest, RadicalIsTwoSidedNilpotentAndQuotientSemisimple) {
  for (const RingPtr& r : catalog()) {
    LeftIdeal rad = jacobson_radical(*r);
    EXPECT_TRUE(is_two_sided(*r, rad)) << r->name();
    std::set<int> power(rad.members.begin(), rad.members.end());
    for (int step = 0; step < r->order() && power.size() > 1; ++step) {
      std::set<int> next;
      for (int a : power) {
        for (int b : rad.members) next.insert(r->mul(a, b));
      }
      power = next;
    }
    EXPECT_EQ(power, std::set<int>{0}) << r->name();
    QuotientRing quo = quotient_ring(*r, rad);
    EXPECT_EQ(quo.ring->order() * rad.size(), r->order());
    EXPECT_EQ(jacobson_radical(*quo.ring).members, std::vector<int>{0});
  }
}

TEST(RingTest, LeftIdealCounts) {
  EXPECT_EQ(left_ideals_enumerate(*make_mod_n_ring(4)).size(), 3u);
  EXPECT_EQ(left_ideals_enumerate(*make_matrix_ring(2, 2)).size(), 5u);
  EXPECT_EQ(left_ideals_enumerate(*make_mod_n_ring(6)).size(), 4u);
}

TEST(RingTest, LeftIdealsMatchSubsetOracle) {
  for (const RingPtr& r : catalog()) {
    EXPECT_EQ(members(left_ideals_enumerate(*r)), oracle_left_ideals(*r))
        << r->name();
  }
}

TEST(RingTest, MatrixRingIdealsCountSubspaces) {
  // Left ideals of M_m(F_q) correspond to subspaces of F_q^m; count the
  // latter as closed subsets of the vector space.
  for (auto [m, q] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 2}}) {
    int n = 1;
    for (int i = 0; i < m; ++i) n *= q;
    auto subspaces = testing::closed_subsets(
        n, q,
        [&](int a, int b) {
          int out = 0;
          for (int i = 0, s = 1; i < m; ++i, s *= q) {
            out += ((a / s % q + b / s % q) % q) * s;
          }
          return out;
        },
        [&](int c, int a) {
          int out = 0;
          for (int i = 0, s = 1; i < m; ++i, s *= q) {
            out += ((c * (a / s % q)) % q) * s;
          }
          return out;
        });
    EXPECT_EQ(left_ideals_enumerate(*make_matrix_ring(m, q)).size(),
              subspaces.size())
        << m << "," << q;
  }
}

TEST(RingTest, LeftIdealsFormALattice) {
  for (const RingPtr& r : catalog()) {
    auto ideals = left_ideals_enumerate(*r);
    std::set<std::vector<int>> all;
    for (const auto& i : ideals) all.insert(i.members);
    for (const auto& a : ideals) {
      for (const auto& b : ideals) {
        std::vector<int> meet;
        std::set_intersection(a.members.begin(), a.members.end(),
                              b.members.begin(), b.members.end(),
                              std::back_inserter(meet));
        EXPECT_TRUE(all.count(meet));
        std::vector<int> gens = a.members;
        gens.insert(gens.end(), b.members.begin(), b.members.end());
        EXPECT_TRUE(all.count(ideal_generated(*r, gens).members));
      }
    }
  }
}

TEST(RingTest, IdealGenerated) {
  RingPtr z4 = make_mod_n_ring(4);
  EXPECT_EQ(ideal_generated(*z4, {2}).members, (std::vector<int>{0, 2}));
  EXPECT_EQ(ideal_generated(*z4, {3}).size(), 4);
  RingPtr m2 = make_matrix_ring(2, 2);
  // E_11 = [[1,0],[0,0]] encodes as 8; R E_11 has zero second column.
  LeftIdeal i = ideal_generated(*m2, {8});
  EXPECT_EQ(i.size(), 4);
  for (int x : i.members) {
    EXPECT_EQ(x & 0b0101, 0) << x;
  }
}

TEST(RingTest, PrincipalIdealRings) {
  EXPECT_TRUE(is_left_pir(*make_mod_n_ring(4)));
  EXPECT_TRUE(is_left_pir(*make_matrix_ring(2, 2)));
  EXPECT_TRUE(is_left_pir(
      *make_product_ring({make_mod_n_ring(2), make_mod_n_ring(2)})));
  EXPECT_TRUE(is_left_pir(*make_matrix_ring(2, 2), {}, Side::kRight));
  EXPECT_FALSE(is_left_pir(*local_ring_order_8()));
}

TEST(RingTest, PrincipalGeneratorExamples) {
  RingPtr z4 = make_mod_n_ring(4);
  EXPECT_EQ(principal_generator(*z4, LeftIdeal{{0, 2}}), 2);
  EXPECT_EQ(principal_generator(*z4, LeftIdeal{{0, 1, 2, 3}}), 1);
  EXPECT_EQ(principal_generator(*z4, LeftIdeal{{0}}), 0);
}

TEST(RingTest, PrincipalGeneratorRejectsNonPrincipal) {
  RingPtr r = local_ring_order_8();
  LeftIdeal maximal = jacobson_radical(*r);
  ASSERT_EQ(maximal.size(), 4);
  try {
    principal_generator(*r, maximal);
    FAIL() << "expected a hypothesis error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kHypothesisUnmet);
  }
}

TEST(RingTest, PrincipalGeneratorHasDistinguishedProperty) {
  for (const RingPtr& r : catalog()) {
    if (!is_left_pir(*r)) continue;
    auto ideals = left_ideals_enumerate(*r);
    for (const auto& i : ideals) {
      const int g = principal_generator(*r, i);
      EXPECT_EQ(ideal_generated(*r, {g}), i);
      for (const auto& j : ideals) {
        if (j.contains(g)) EXPECT_TRUE(j.contains(i)) << r->name();
      }
    }
  }
}

TEST(RingTest, WedderburnExamples) {
  using B = WedderburnBlock;
  EXPECT_EQ(wedderburn_data(*make_matrix_ring(2, 2)).blocks,
            (std::vector<B>{{2, 2}}));
  EXPECT_EQ(wedderburn_data(*make_mod_n_ring(4)).blocks,
            (std::vector<B>{{1, 2}}));
  EXPECT_EQ(wedderburn_data(*make_mod_n_ring(6)).blocks,
            (std::vector<B>{{1, 2}, {1, 3}}));
}

TEST(RingTest, WedderburnOrderIdentity) {
  for (const RingPtr& r : catalog()) {
    long long expected = 1;
    for (const auto& b : wedderburn_data(*r).blocks) {
      for (int i = 0; i < b.mu * b.mu; ++i) expected *= b.q;
    }
    EXPECT_EQ(expected * jacobson_radical(*r).size(), r->order()) << r->name();
  }
}

TEST(RingTest, TableProvenanceWedderburnAgreesWithStructural) {
  for (const RingPtr& r : catalog()) {
    if (r->provenance().kind == RingKind::kTable) continue;
    EXPECT_EQ(wedderburn_data(*as_table(*r)).blocks,
              wedderburn_data(*r).blocks)
        << r->name();
  }
}

TEST(RingTest, BlockProjectionsAreSurjectiveRingMaps) {
  for (const RingPtr& r : catalog()) {
    if (r->provenance().kind == RingKind::kTable) {
      EXPECT_THROW(block_projections(*r), Error);
      continue;
    }
    auto projections = block_projections(*r);
    auto blocks = wedderburn_data(*r).blocks;
    ASSERT_EQ(projections.size(), blocks.size());
    for (size_t i = 0; i < blocks.size(); ++i) {
      const BlockProjection& p = projections[i];
      EXPECT_EQ(p.block, blocks[i]);
      RingPtr target = make_matrix_ring(p.block.mu, p.block.q);
      EXPECT_EQ(p.image[r->one()], target->one());
      std::set<long long> hit(p.image.begin(), p.image.end());
      EXPECT_EQ(static_cast<int>(hit.size()), target->order());
      for (int a = 0; a < r->order(); ++a) {
        for (int b = 0; b < r->order(); ++b) {
          ASSERT_EQ(p.image[r->mul(a, b)],
                    target->mul(p.image[a], p.image[b]));
          ASSERT_EQ(p.image[r->add(a, b)],
                    target->add(p.image[a], p.image[b]));
        }
      }
    }
  }
}

TEST(RingTest, TableRingValidation) {
  // Z/2 addition with a non-associative multiplication.
  std::vector<std::vector<int>> add{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> bad_mul{{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  EXPECT_THROW(make_table_ring(add, bad_mul), Error);
  std::vector<std::vector<int>> mul{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  RingPtr z3 = make_table_ring(add, mul);
  EXPECT_EQ(check_ring_axioms(*z3), "");
  EXPECT_EQ(z3->one(), 1);
}

TEST(RingTest, ConstructedRingsSatisfyAxioms) {
  for (const RingPtr& r : catalog()) {
    EXPECT_EQ(check_ring_axioms(*r), "") << r->name();
  }
}

}  // namespace
}  // namespace swclab
