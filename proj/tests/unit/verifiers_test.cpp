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


#include "swclab/verifiers.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/catalog.hpp"
#include "support/oracles.hpp"
#include "swclab/socle.hpp"

namespace swclab {
namespace {

TEST(VerifiersTest, OrbitLemmaExamples) {
  VerdictReport z4 = verify_orbit_lemma(testing::z4_regular());
  EXPECT_EQ(z4.result, Verdict::kVerified);
  EXPECT_EQ(z4.witness.at("aut_partition"), "0 | 1,3 | 2");
  EXPECT_EQ(z4.witness.at("annihilator_partition"), "0 | 1,3 | 2");

  VerdictReport f22 = verify_orbit_lemma(testing::f2_column(2));
  EXPECT_EQ(f22.result, Verdict::kVerified);
  EXPECT_EQ(f22.witness.at("aut_partition"), "0 | 1,2,3");

  VerdictReport mixed = verify_orbit_lemma(testing::z4_z2_plus_z4());
  EXPECT_EQ(mixed.result, Verdict::kHypothesesUnmet);
  EXPECT_EQ(mixed.witness.at("refinement"), "holds");
  EXPECT_TRUE(mixed.witness.count("unextendable_domain"));
}

TEST(VerifiersTest, VerdictNames) {
  EXPECT_EQ(verdict_name(Verdict::kVerified), "verified");
  EXPECT_EQ(verdict_name(Verdict::kCounterexample), "counterexample");
  EXPECT_EQ(verdict_name(Verdict::kHypothesesUnmet), "hypotheses-unmet");
  EXPECT_EQ(verdict_name(Verdict::kGuardExceeded), "guard-exceeded");
}

TEST(VerifiersTest, PeelingCertifiesCounterexample) {
  CounterexamplePack pack = build_counterexample(1, 2, 2);
  PeelingResult r = midway_peeling(pack.f);
  EXPECT_EQ(r.report.result, Verdict::kVerified);
  ASSERT_EQ(r.traces.size(), static_cast<size_t>(pack.plus->size()));
  for (const PeelTrace& t : r.traces) {
    EXPECT_TRUE(t.balanced);
    for (const PeelStep& s : t.steps) {
      EXPECT_EQ(s.zeros_source, s.zeros_target);
    }
  }
}

TEST(VerifiersTest, PeelingIdentity) {
  ModulePtr a = testing::z4_z2_squared();
  CodePtr c = Code::generate(a, 3, {{1, 2, 3}, {2, 0, 1}});
  PeelingResult r = midway_peeling(CodeMap::identity(c));
  EXPECT_EQ(r.report.result, Verdict::kVerified);
}

TEST(VerifiersTest, PeelingRejectsNonHammingMaps) {
  ModulePtr z4 = testing::z4_regular();
  CodePtr c1 = Code::generate(z4, 2, {{1, 0}});
  CodePtr c2 = Code::generate(z4, 2, {{1, 2}});
  PeelingResult r = midway_peeling(CodeMap::make(c1, c2, {{1, 2}}));
  EXPECT_EQ(r.report.result, Verdict::kHypothesesUnmet);
}

TEST(VerifiersTest, MidwayExamples) {
  VerdictReport f2 = verify_midway(testing::f2_column(2));
  EXPECT_EQ(f2.result, Verdict::kVerified);
  EXPECT_GT(f2.counts.at("hamming_preserving"), 0u);
  EXPECT_EQ(f2.counts.at("peel_aw_disagreements"), 0u);
  EXPECT_EQ(f2.counts.at("forward_failures"), 0u);
  EXPECT_EQ(f2.counts.at("backward_failures"), 0u);

  VerdictReport z4 = verify_midway(testing::z4_z2_squared());
  EXPECT_EQ(z4.result, Verdict::kVerified);
  EXPECT_EQ(z4.counts.at("peel_aw_disagreements"), 0u);

  EXPECT_EQ(verify_midway(testing::z4_z2_plus_z4()).result,
            Verdict::kHypothesesUnmet);
}

TEST(VerifiersTest, MidwayGuard) {
  Limits big;
  big.max_n = 10;
  EXPECT_EQ(verify_midway(testing::f2_column(2), big).result,
            Verdict::kGuardExceeded);
}

TEST(VerifiersTest, SufficiencyExamples) {
  Limits two;
  two.max_n = 2;
  VerdictReport z4 = verify_sufficiency(testing::z4_regular(), two);
  EXPECT_EQ(z4.result, Verdict::kVerified);
  EXPECT_EQ(z4.counts.at("unextendable"), 0u);
  EXPECT_EQ(verify_sufficiency(testing::f2_column(1)).result,
            Verdict::kVerified);
  EXPECT_EQ(verify_sufficiency(testing::z4_z2_squared()).result,
            Verdict::kHypothesesUnmet);
}

TEST(VerifiersTest, NecessityExamples) {
  NecessityResult v = verify_necessity(testing::z4_z2_squared());
  EXPECT_EQ(v.report.result, Verdict::kCounterexample);
  ASSERT_TRUE(v.pack.has_value());
  EXPECT_EQ(v.pack->length, 3u);
  EXPECT_TRUE(v.pack->transcript.all_pass());

  NecessityResult m = verify_necessity(testing::m2f2_column(3));
  EXPECT_EQ(m.report.result, Verdict::kCounterexample);
  ASSERT_TRUE(m.pack.has_value());
  EXPECT_EQ(m.pack->length, 15u);
  EXPECT_EQ(m.pack->transcript.aut_order, 168);

  NecessityResult cyclic = verify_necessity(testing::z4_regular());
  EXPECT_EQ(cyclic.report.result, Verdict::kHypothesesUnmet);
  EXPECT_FALSE(cyclic.pack.has_value());
}

// Aut_R(A) separates (0,2) from (1,0) and (1,2) in the socle of Z/2 + Z/4,
// so a pack pulled back from (Z/2)^2 need not preserve swc over A. The
// pipeline then searches codes over A built from Hom_R((Z/2)^2, A).
TEST(VerifiersTest, NecessityWhenAutomorphismsSplitTheSocle) {
  NecessityResult r = verify_necessity(testing::z4_z2_plus_z4());
  ASSERT_EQ(r.report.result, Verdict::kCounterexample);
  ASSERT_TRUE(r.pack.has_value());
  EXPECT_EQ(r.pack->construction, "direct-search");
  EXPECT_EQ(r.pack->length, 3u);
  EXPECT_TRUE(r.pack->transcript.all_pass());
  AutGroup g = AutGroup::full(r.pack->alphabet);
  const OrbitIndex orbits = orbit_partition(g);
  EXPECT_TRUE(map_preserves(r.pack->f, WeightKind::kSwc, &orbits));
  EXPECT_FALSE(testing::naive_extension(r.pack->f, g).has_value());
}

// Exactly one side of the dichotomy succeeds, and the socle decides which.
TEST(VerifiersTest, DichotomyConsistency) {
  Limits limits;
  limits.max_n = 2;
  std::vector<testing::CatalogEntry> entries = testing::small_catalog();
  entries.push_back({"M2(F2):M2x3(F2)", testing::m2f2_column(3)});
  for (const auto& [name, m] : entries) {
    if (m->order() > 16) {
      if (socle_report(m).cyclic) continue;
    }
    const bool cyclic = socle_report(m).cyclic;
    VerdictReport s = verify_sufficiency(m, limits);
    NecessityResult n = verify_necessity(m, limits);
    if (s.result == Verdict::kGuardExceeded) continue;
    const bool sufficiency = s.result == Verdict::kVerified;
    const bool necessity = n.pack.has_value();
    EXPECT_NE(sufficiency, necessity) << name;
    EXPECT_EQ(sufficiency, cyclic) << name;
    if (necessity) EXPECT_TRUE(n.pack->transcript.all_pass()) << name;
  }
}

}  // namespace
}  // namespace swclab
