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


#include "swclab/hom.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/catalog.hpp"
#include "support/oracles.hpp"
#include "swclab/error.hpp"
#include "swclab/socle.hpp"

namespace swclab {
namespace {

using ::swclab::testing::oracle_homs;

// Modules sharing one ring object, so every ordered pair is comparable.
struct Family {
  std::string name;
  std::vector<ModulePtr> modules;
};

std::vector<Family> families() {
  RingPtr z4 = make_mod_n_ring(4);
  ModulePtr z2 = make_mod_m_module(z4, 2);
  RingPtr f2 = make_matrix_ring(1, 2);
  RingPtr m2 = make_matrix_ring(2, 2);
  RingPtr z6 = make_mod_n_ring(6);
  return {
      {"Z4",
       {make_regular_module(z4), z2, make_direct_sum(z4, {z2, z2}),
        make_direct_sum(z4, {z2, make_regular_module(z4)})}},
      {"F2",
       {make_column_module(f2, 1), make_column_module(f2, 2),
        make_column_module(f2, 3)}},
      {"M2(F2)", {make_column_module(m2, 1), make_regular_module(m2)}},
      {"Z6",
       {make_regular_module(z6), make_mod_m_module(z6, 2),
        make_mod_m_module(z6, 3)}},
  };
}

TEST(HomTest, CountsMatchBruteForce) {
  for (const auto& family : families()) {
    for (const auto& a : family.modules) {
      for (const auto& b : family.modules) {
        EXPECT_EQ(count_homs(*a, *b), oracle_homs(*a, *b).size())
            << family.name << " |A|=" << a->order() << " |B|=" << b->order();
      }
    }
  }
}

TEST(HomTest, EveryVisitedMapIsLinear) {
  for (const auto& family : families()) {
    for (const auto& a : family.modules) {
      for (const auto& b : family.modules) {
        std::vector<std::vector<int>> seen;
        HomSearch search(*a, *b);
        search.run([&](const std::vector<int>& h) {
          for (int x = 0; x < a->order(); ++x) {
            for (int y = 0; y < a->order(); ++y) {
              EXPECT_EQ(h[a->add(x, y)], b->add(h[x], h[y]));
            }
            for (int r = 0; r < a->ring().order(); ++r) {
              EXPECT_EQ(h[a->act(r, x)], b->act(r, h[x]));
            }
          }
          seen.push_back(h);
          return true;
        });
        std::sort(seen.begin(), seen.end());
        EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
      }
    }
  }
}

TEST(HomTest, KnownCounts) {
  RingPtr z4 = make_mod_n_ring(4);
  ModulePtr r = make_regular_module(z4);
  ModulePtr z2 = make_mod_m_module(z4, 2);
  EXPECT_EQ(count_homs(*r, *r), 4u);
  EXPECT_EQ(count_homs(*z2, *make_direct_sum(z4, {z2, z2})), 4u);
  EXPECT_EQ(count_homs(*r, *z2), 2u);
}

TEST(HomTest, EmbeddingIntoCharacterModule) {
  RingPtr z4 = make_mod_n_ring(4);
  ModulePtr hat = character_module(z4);
  ModulePtr z2 = make_mod_m_module(z4, 2);
  EXPECT_TRUE(embeds_into(*make_regular_module(z4), *hat));
  EXPECT_FALSE(embeds_into(*make_direct_sum(z4, {z2, z2}), *hat));
}

TEST(HomTest, ZeroModuleEmbedsAnywhere) {
  ModulePtr r = testing::z4_regular();
  ModulePtr zero = submodule_as_module(*r, submodule_generated(*r, {}));
  ASSERT_EQ(zero->order(), 1);
  EXPECT_TRUE(embeds_into(*zero, *r));
}

TEST(HomTest, FoundEmbeddingIsInjectiveAndLinear) {
  for (const auto& family : families()) {
    for (const auto& a : family.modules) {
      for (const auto& b : family.modules) {
        auto e = find_embedding(*a, *b);
        bool oracle = false;
        for (const auto& h : oracle_homs(*a, *b)) {
          std::vector<int> sorted = h;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) ==
              sorted.end()) {
            oracle = true;
          }
        }
        ASSERT_EQ(e.has_value(), oracle) << family.name;
        if (!e) continue;
        std::vector<int> sorted = *e;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()),
                  sorted.end());
        for (int x = 0; x < a->order(); ++x) {
          for (int y = 0; y < a->order(); ++y) {
            EXPECT_EQ((*e)[a->add(x, y)], b->add((*e)[x], (*e)[y]));
          }
        }
      }
    }
  }
}

TEST(HomTest, IsomorphismDetectsDifferentModules) {
  RingPtr z4 = make_mod_n_ring(4);
  ModulePtr z2 = make_mod_m_module(z4, 2);
  EXPECT_TRUE(isomorphic(*character_module(z4), *make_regular_module(z4)));
  EXPECT_FALSE(
      isomorphic(*make_direct_sum(z4, {z2, z2}), *make_regular_module(z4)));
}

TEST(HomTest, GuardStopsLargeSearches) {
  Limits tight;
  tight.max_search_steps = 5;
  ModulePtr a = testing::m2f2_column(3);
  try {
    count_homs(*a, *a, tight);
    FAIL() << "expected guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGuardExceeded);
  }
}

}  // namespace
}  // namespace swclab
