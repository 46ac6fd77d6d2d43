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


#include "swclab/extension.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "support/catalog.hpp"
#include "support/oracles.hpp"
#include "swclab/counterexample.hpp"
#include "swclab/error.hpp"

namespace swclab {
namespace {

using ::swclab::testing::naive_extension;

void expect_sound(const CodeMap& f, const AutGroup& g,
                  const MonomialTransform& t) {
  for (int c = 0; c < f.source().size(); ++c) {
    EXPECT_EQ(monomial_apply(t, g, f.source().elements()[c]), f.apply(c));
  }
}

TEST(ExtensionTest, IdentityExtendsToIdentity) {
  ModulePtr a = testing::f2_column(2);
  AutGroup g = AutGroup::full(a);
  CodePtr c = Code::generate(a, 3, {{1, 2, 3}, {2, 2, 0}});
  ExtensionSearch s = extension_search(CodeMap::identity(c), g);
  ASSERT_TRUE(s.transform.has_value());
  EXPECT_EQ(s.transform->sigma, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(s.transform->taus, (std::vector<int>{0, 0, 0}));
}

TEST(ExtensionTest, DiagonalTwistIsFound) {
  ModulePtr a = testing::f2_column(2);
  AutGroup g = AutGroup::full(a);
  CodePtr diag = Code::generate(a, 2, {{1, 1}, {2, 2}});
  ASSERT_EQ(diag->size(), 4);
  for (int u = 0; u < g.size(); ++u) {
    const Perm& p = g.element(u);
    CodeMap f = CodeMap::make(diag, diag, {{p[1], p[1]}, {p[2], p[2]}});
    ExtensionSearch s = extension_search(f, g);
    ASSERT_TRUE(s.transform.has_value());
    EXPECT_EQ(*s.transform, (MonomialTransform{{0, 1}, {u, u}}));
  }
}

TEST(ExtensionTest, SmallestCounterexampleDoesNotExtend) {
  CounterexamplePack pack = build_counterexample(1, 2, 2);
  AutGroup g = AutGroup::full(pack.alphabet);
  ExtensionSearch s = extension_search(pack.f, g);
  EXPECT_FALSE(s.transform.has_value());
  EXPECT_DOUBLE_EQ(s.candidate_space, 6.0 * 6 * 6 * 6);
  EXPECT_FALSE(naive_extension(pack.f, g).has_value());
}

TEST(ExtensionTest, CounterexampleColumnFingerprints) {
  CounterexamplePack pack = build_counterexample(1, 2, 2);
  OrbitIndex orbits = orbit_partition(AutGroup::full(pack.alphabet));
  for (int i = 0; i < pack.minus->length(); ++i) {
    EXPECT_EQ(column_fingerprint(*pack.minus, i, orbits),
              (std::map<int, int>{{0, 2}, {1, 2}}));
  }
  EXPECT_EQ(count_zero_columns(*pack.plus), 1);
  EXPECT_EQ(count_zero_columns(*pack.minus), 0);
  EXPECT_EQ(column_fingerprint(*pack.plus, 0, orbits),
            (std::map<int, int>{{0, 4}}));
}

TEST(ExtensionTest, TwistedColumnsShareFingerprints) {
  ModulePtr a = testing::z4_z2_plus_z4();
  AutGroup g = AutGroup::full(a);
  OrbitIndex orbits = orbit_partition(g);
  for (int u = 0; u < g.size(); ++u) {
    const Perm& p = g.element(u);
    CodePtr c = Code::generate(a, 2, {{1, p[1]}, {4, p[4]}});
    EXPECT_EQ(column_fingerprint(*c, 0, orbits),
              column_fingerprint(*c, 1, orbits));
  }
}

TEST(ExtensionTest, ZeroColumnObstruction) {
  ModulePtr z4 = testing::z4_regular();
  AutGroup g = AutGroup::full(z4);
  CodePtr c1 = Code::generate(z4, 2, {{1, 0}});
  CodePtr c2 = Code::generate(z4, 2, {{1, 2}});
  CodeMap f = CodeMap::make(c1, c2, {{1, 2}});
  EXPECT_FALSE(extension_search(f, g).transform.has_value());
}

// Random codes over small alphabets, every map between them that
// CodeMap accepts, compared with the unpruned enumeration.
TEST(ExtensionTest, AgreesWithUnprunedSearch) {
  std::mt19937 rng(2026);
  std::vector<ModulePtr> alphabets{testing::z4_regular(),
                                   testing::f2_column(2), testing::z4_z2()};
  int extendable = 0;
  int not_extendable = 0;
  for (const auto& a : alphabets) {
    AutGroup g = AutGroup::full(a);
    ASSERT_LE(g.size(), 6);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 3);
      Word gen(n);
      for (int& x : gen) x = static_cast<int>(rng() % a->order());
      CodePtr c1 = Code::generate(a, n, {gen});
      Word other(n);
      for (int& x : other) x = static_cast<int>(rng() % a->order());
      CodePtr c2 = Code::generate(a, n, {other});
      for (const Word& image : c2->elements()) {
        std::optional<CodeMap> f;
        try {
          f = CodeMap::make(c1, c2, {image});
        } catch (const Error&) {
          continue;
        }
        ExtensionSearch s = extension_search(*f, g);
        auto naive = naive_extension(*f, g);
        ASSERT_EQ(s.transform.has_value(), naive.has_value());
        if (naive) {
          EXPECT_EQ(*s.transform, *naive);
          expect_sound(*f, g, *s.transform);
          ++extendable;
        } else {
          ++not_extendable;
        }
      }
    }
  }
  EXPECT_GT(extendable, 0);
  EXPECT_GT(not_extendable, 0);
}

TEST(ExtensionTest, RecoversRandomTransforms) {
  std::mt19937 rng(99);
  ModulePtr a = testing::z4_z2_plus_z4();
  AutGroup g = AutGroup::full(a);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4;
    MonomialTransform t{{0, 1, 2, 3}, {}};
    std::shuffle(t.sigma.begin(), t.sigma.end(), rng);
    for (int i = 0; i < n; ++i) {
      t.taus.push_back(static_cast<int>(rng() % g.size()));
    }
    std::vector<Word> gens(2, Word(n));
    for (auto& w : gens) {
      for (int& x : w) x = static_cast<int>(rng() % a->order());
    }
    CodePtr c1 = Code::generate(a, n, gens);
    std::vector<Word> images;
    for (const Word& w : gens) images.push_back(monomial_apply(t, g, w));
    CodePtr c2 = Code::generate(a, n, images);
    CodeMap f = CodeMap::make(c1, c2, images);
    ExtensionSearch s = extension_search(f, g);
    ASSERT_TRUE(s.transform.has_value());
    expect_sound(f, g, *s.transform);
  }
}

TEST(ExtensionTest, GuardIsReported) {
  CounterexamplePack pack = build_counterexample(1, 3, 2);
  AutGroup g = AutGroup::full(pack.alphabet);
  Limits tight;
  tight.max_extension_work = 10;
  try {
    extension_search(pack.f, g, tight);
    FAIL() << "expected guard";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGuardExceeded);
  }
}

}  // namespace
}  // namespace swclab
