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


#include "swclab/counterexample.hpp"

#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "swclab/error.hpp"
#include "swclab/extension.hpp"

namespace swclab {
namespace {

using ::swclab::testing::naive_extension;

// prod_{i=1}^{k-1} (1 + q^i), evaluated directly.
std::uint64_t product_formula(std::uint64_t q, int k) {
  std::uint64_t out = 1;
  std::uint64_t power = 1;
  for (int i = 1; i < k; ++i) {
    power *= q;
    out *= 1 + power;
  }
  return out;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternal;
}

TEST(CounterexampleTest, LengthExamples) {
  EXPECT_EQ(counterexample_length(2, 2), 3u);
  EXPECT_EQ(counterexample_length(2, 3), 15u);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) EXPECT_EQ(counterexample_length(q, 1), 1u);
}

TEST(CounterexampleTest, LengthMatchesProduct) {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    for (int k = 1; k <= 6; ++k) {
      EXPECT_EQ(counterexample_length(q, k), product_formula(q, k));
    }
  }
}

TEST(CounterexampleTest, LengthErrors) {
  EXPECT_EQ(kind_of([] { counterexample_length(6, 2); }), ErrorKind::kInput);
  EXPECT_EQ(kind_of([] { counterexample_length(2, 0); }), ErrorKind::kInput);
  EXPECT_EQ(kind_of([] { counterexample_length(2, 40); }),
            ErrorKind::kGuardExceeded);
}

TEST(CounterexampleTest, RequiresKGreaterThanM) {
  EXPECT_EQ(kind_of([] { build_counterexample(1, 1, 2); }), ErrorKind::kInput);
  EXPECT_EQ(kind_of([] { build_counterexample(0, 2, 2); }), ErrorKind::kInput);
  EXPECT_EQ(kind_of([] { build_counterexample(1, 2, 6); }), ErrorKind::kInput);
}

TEST(CounterexampleTest, SmallestPackShape) {
  CounterexamplePack pack = build_counterexample(1, 2, 2);
  EXPECT_EQ(pack.length, 3u);
  EXPECT_EQ(pack.construction, "subspace");
  EXPECT_EQ(pack.parameter_order, 4);
  EXPECT_TRUE(pack.transcript.all_pass());
  EXPECT_EQ(pack.transcript.non_extension_certificate, "exhaustive-search");
  EXPECT_EQ(pack.transcript.aut_order, 6);
  ASSERT_EQ(pack.plus->size(), 4);
  ASSERT_EQ(pack.minus->size(), 4);
  // C+ = {(0, a, a)}.
  for (const Word& w : pack.plus->elements()) {
    EXPECT_EQ(w[0], 0);
    EXPECT_EQ(w[1], w[2]);
  }
  // C- columns are three rank-one projections with distinct kernels.
  std::set<std::vector<int>> columns;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> col = pack.minus->column(i);
    int zeros = 0;
    for (int x : col) zeros += x == 0;
    EXPECT_EQ(zeros, 2);
    std::vector<int> kernel;
    for (int a = 0; a < 4; ++a) {
      if (pack.f.apply(pack.plus->index_of({0, a, a}))[i] == 0) {
        kernel.push_back(a);
      }
    }
    EXPECT_EQ(kernel.size(), 2u);
    columns.insert(kernel);
  }
  EXPECT_EQ(columns.size(), 3u);
}

TEST(CounterexampleTest, SmallestPackAgainstUnprunedSearch) {
  CounterexamplePack pack = build_counterexample(1, 2, 2);
  AutGroup g = AutGroup::full(pack.alphabet);
  ASSERT_EQ(g.size(), 6);
  // 3! orderings times 6^3 tau tuples, all rejected.
  EXPECT_FALSE(naive_extension(pack.f, g).has_value());
}

TEST(CounterexampleTest, TernaryPack) {
  CounterexamplePack pack = build_counterexample(1, 2, 3);
  EXPECT_EQ(pack.length, 4u);
  EXPECT_EQ(pack.plus->length(), 4);
  EXPECT_EQ(pack.minus->length(), 4);
  EXPECT_TRUE(pack.transcript.all_pass());
  AutGroup g = AutGroup::full(pack.alphabet);
  EXPECT_FALSE(naive_extension(pack.f, g).has_value());
}

TEST(CounterexampleTest, SideLengthsMatchFormula) {
  struct Case {
    int m, k, q;
  };
  for (const Case& c : {Case{1, 2, 2}, Case{1, 2, 3}, Case{1, 3, 2},
                        Case{2, 3, 2}, Case{1, 2, 4}}) {
    CounterexamplePack pack = build_counterexample(c.m, c.k, c.q);
    ASSERT_EQ(pack.construction, "subspace");
    const auto n = static_cast<int>(counterexample_length(c.q, c.k));
    EXPECT_EQ(pack.plus->length(), n);
    EXPECT_EQ(pack.minus->length(), n);
    EXPECT_TRUE(pack.transcript.all_pass()) << c.m << c.k << c.q;
  }
}

TEST(CounterexampleTest, MatrixBlockPack) {
  CounterexamplePack pack = build_counterexample(2, 3, 2);
  EXPECT_EQ(pack.length, 15u);
  EXPECT_EQ(pack.transcript.aut_order, 168);
  EXPECT_TRUE(pack.transcript.all_pass());
}

TEST(CounterexampleTest, SearchFallback) {
  BuildOptions options;
  options.force_search = true;
  CounterexamplePack pack = build_counterexample(1, 2, 2, {}, options);
  EXPECT_EQ(pack.construction, "search");
  EXPECT_EQ(pack.length, 3u);
  EXPECT_TRUE(pack.transcript.all_pass());
  PackTranscript replay =
      verify_pack(pack.f, pack.length, pack.parameter_order);
  EXPECT_TRUE(replay.all_pass());
}

TEST(CounterexampleTest, ReplayMatchesRecordedTranscript) {
  CounterexamplePack pack = build_counterexample(1, 3, 2);
  PackTranscript replay =
      verify_pack(pack.f, pack.length, pack.parameter_order);
  EXPECT_TRUE(replay.all_pass());
  EXPECT_EQ(replay.non_extension_certificate,
            pack.transcript.non_extension_certificate);
  EXPECT_EQ(replay.zero_columns_plus, pack.transcript.zero_columns_plus);
}

TEST(CounterexampleTest, IdentityMapIsRejected) {
  CounterexamplePack pack = build_counterexample(1, 2, 2);
  PackTranscript t = verify_pack(CodeMap::identity(pack.plus), 3, 4);
  EXPECT_TRUE(t.hamming_ok);
  EXPECT_TRUE(t.swc_ok);
  EXPECT_FALSE(t.zero_column_ok);
  EXPECT_FALSE(t.non_extension_ok);
  EXPECT_FALSE(t.all_pass());
}

}  // namespace
}  // namespace swclab
