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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "swclab/error.hpp"
#include "swclab/extension.hpp"
#include "swclab/field.hpp"
#include "swclab/matrix.hpp"
#include "swclab/ring.hpp"

namespace swclab {
namespace {

constexpr std::uint64_t kMaxSubspaceWork = 1u << 22;
constexpr std::uint64_t kMaxSearchTuples = 2'000'000;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw GuardExceeded("counterexample length overflows 64 bits");
  }
  return a * b;
}

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

// Reduced row echelon bases of all w-dimensional subspaces of F_q^k,
// sorted by encoding.
std::vector<Matrix> subspaces(const FieldPtr& field, int k, int w) {
  if (w == 0) return {Matrix(field, 0, k)};
  const std::uint64_t count = ipow(field->order(), w * k);
  if (count > kMaxSubspaceWork) {
    throw GuardExceeded("subspace enumeration over F_" +
                        std::to_string(field->order()) + "^" +
                        std::to_string(k) + " exceeds guard");
  }
  std::map<long long, Matrix> seen;
  for (std::uint64_t c = 0; c < count; ++c) {
    Matrix b = Matrix::decode(field, w, k, static_cast<long long>(c));
    if (rank(b) != w) continue;
    Matrix r = rref(b);
    seen.emplace(r.encode(), r);
  }
  std::vector<Matrix> out;
  out.reserve(seen.size());
  for (auto& [code, m] : seen) out.push_back(m);
  return out;
}

// Idempotent P with {x : xP = 0} = rowspace(basis), projecting onto the
// span of the standard vectors at basis's non-pivot columns.
Matrix kernel_projection(const FieldPtr& field, int k, const Matrix& basis) {
  const int w = basis.rows();
  std::vector<bool> pivot(k, false);
  for (int r = 0; r < w; ++r) {
    for (int c = 0; c < k; ++c) {
      if (basis.at(r, c) != 0) {
        pivot[c] = true;
        break;
      }
    }
  }
  Matrix change(field, k, k);
  for (int r = 0; r < w; ++r) {
    for (int c = 0; c < k; ++c) change.set(r, c, basis.at(r, c));
  }
  int row = w;
  for (int c = 0; c < k; ++c) {
    if (!pivot[c]) change.set(row++, c, 1);
  }
  Matrix diag(field, k, k);
  for (int i = w; i < k; ++i) diag.set(i, i, 1);
  return mat_mul(mat_mul(inverse(change), diag), change);
}

struct Parametrized {
  std::vector<Matrix> plus;
  std::vector<Matrix> minus;
};

Parametrized subspace_coordinates(const FieldPtr& field, int k) {
  const int q = field->order();
  Parametrized out;
  for (int d = 0; d <= k; ++d) {
    const std::uint64_t mult = ipow(q, d * (d - 1) / 2);
    for (const Matrix& basis : subspaces(field, k, k - d)) {
      Matrix p = kernel_projection(field, k, basis);
      auto& side = (d % 2 == 0) ? out.plus : out.minus;
      for (std::uint64_t i = 0; i < mult; ++i) side.push_back(p);
    }
  }
  return out;
}

// image[P][a] = encoding of a*P in the alphabet.
std::vector<std::vector<int>> right_images(const FieldPtr& field, int m, int k,
                                           const std::vector<Matrix>& coords,
                                           int alphabet_order) {
  std::vector<Matrix> elems;
  elems.reserve(alphabet_order);
  for (int a = 0; a < alphabet_order; ++a) {
    elems.push_back(Matrix::decode(field, m, k, a));
  }
  std::vector<std::vector<int>> out(coords.size(),
                                    std::vector<int>(alphabet_order));
  for (size_t i = 0; i < coords.size(); ++i) {
    for (int a = 0; a < alphabet_order; ++a) {
      out[i][a] = static_cast<int>(mat_mul(elems[a], coords[i]).encode());
    }
  }
  return out;
}

Word coordinate_word(const std::vector<std::vector<int>>& images,
                     const std::vector<int>& which, int a) {
  Word w(which.size());
  for (size_t i = 0; i < which.size(); ++i) w[i] = images[which[i]][a];
  return w;
}

struct Context {
  RingPtr ring;
  ModulePtr alphabet;
  FieldPtr field;
  int m, k, q;
  std::vector<int> gens;  // alphabet generators
};

// Builds C+, C- and f from coordinate selections and verifies them.
// Returns nullopt if any check fails (including a non-injective
// parametrization).
std::optional<CounterexamplePack> assemble(
    const Context& ctx, const std::vector<std::vector<int>>& images,
    const std::vector<int>& plus_sel, const std::vector<int>& minus_sel,
    std::uint64_t expected_length, const std::string& construction,
    const Limits& limits) {
  const int length = static_cast<int>(plus_sel.size());
  std::vector<Word> plus_gens;
  std::vector<Word> minus_gens;
  for (int g : ctx.gens) {
    plus_gens.push_back(coordinate_word(images, plus_sel, g));
    minus_gens.push_back(coordinate_word(images, minus_sel, g));
  }
  CodePtr plus = Code::generate(ctx.alphabet, length, plus_gens, limits);
  CodePtr minus = Code::generate(ctx.alphabet,
                                 static_cast<int>(minus_sel.size()),
                                 minus_gens, limits);
  if (plus->size() != ctx.alphabet->order() ||
      minus->size() != ctx.alphabet->order()) {
    return std::nullopt;
  }
  CodeMap f;
  try {
    f = CodeMap::make(plus, minus, minus_gens);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInput) return std::nullopt;
    throw;
  }
  PackTranscript t =
      verify_pack(f, expected_length, ctx.alphabet->order(), limits);
  if (!t.all_pass()) return std::nullopt;
  CounterexamplePack pack;
  pack.ring = ctx.ring;
  pack.alphabet = ctx.alphabet;
  pack.m = ctx.m;
  pack.k = ctx.k;
  pack.q = ctx.q;
  pack.length = static_cast<std::uint64_t>(length);
  pack.parameter_order = ctx.alphabet->order();
  pack.construction = construction;
  pack.plus = plus;
  pack.minus = minus;
  pack.f = f;
  pack.transcript = t;
  return pack;
}

void next_multiset(std::vector<int>& t, int lo, int hi, bool& done) {
  // Nondecreasing tuples over [lo, hi), lexicographic.
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (t[i] + 1 < hi) {
      ++t[i];
      for (size_t j = i + 1; j < t.size(); ++j) t[j] = t[i];
      return;
    }
  }
  done = true;
  (void)lo;
}

std::uint64_t multiset_count(int kinds, int n) {
  // C(kinds + n - 1, n), saturating.
  double c = 1;
  for (int i = 1; i <= n; ++i) c = c * (kinds + n - i) / i;
  return c > 1e18 ? std::numeric_limits<std::uint64_t>::max()
                  : static_cast<std::uint64_t>(c + 0.5);
}

std::optional<CounterexamplePack> search_construction(
    const Context& ctx, int max_length, const Limits& limits) {
  const int kk = ctx.k * ctx.k;
  const std::uint64_t num = ipow(ctx.q, kk);
  if (num > 4096) return std::nullopt;
  std::vector<Matrix> coords;
  for (std::uint64_t c = 0; c < num; ++c) {
    coords.push_back(Matrix::decode(ctx.field, ctx.k, ctx.k,
                                    static_cast<long long>(c)));
  }
  const int order = ctx.alphabet->order();
  auto images = right_images(ctx.field, ctx.m, ctx.k, coords, order);
  const int kinds = static_cast<int>(num);
  auto weights = [&](const std::vector<int>& sel) {
    std::vector<int> w(order, 0);
    for (int a = 0; a < order; ++a) {
      for (int p : sel) w[a] += images[p][a] != 0;
    }
    return w;
  };
  for (int n = 1; n <= max_length; ++n) {
    if (multiset_count(kinds - 1, n) > kMaxSearchTuples ||
        (n > 1 && multiset_count(kinds, n - 1) > kMaxSearchTuples)) {
      break;
    }
    // C- candidates: nonzero coordinate matrices, grouped by Hamming
    // profile of the parametrization.
    std::map<std::vector<int>, std::vector<std::vector<int>>> by_weight;
    std::vector<int> t(n, 1);
    for (bool done = false; !done; next_multiset(t, 1, kinds, done)) {
      by_weight[weights(t)].push_back(t);
    }
    // C+ candidates: a zero coordinate first, then anything.
    std::vector<int> rest(n - 1, 0);
    for (bool done = false; !done;) {
      std::vector<int> plus_sel{0};
      plus_sel.insert(plus_sel.end(), rest.begin(), rest.end());
      std::vector<int> w = weights(plus_sel);
      bool injective = true;
      for (int a = 1; a < order; ++a) injective = injective && w[a] > 0;
      if (injective) {
        auto it = by_weight.find(w);
        if (it != by_weight.end()) {
          for (const auto& minus_sel : it->second) {
            auto pack = assemble(ctx, images, plus_sel, minus_sel, 0,
                                 "search", limits);
            if (pack) return pack;
          }
        }
      }
      if (rest.empty()) break;
      next_multiset(rest, 0, kinds, done);
    }
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t counterexample_length(int q, int k) {
  if (prime_power_split(q).first == 0) {
    throw InputError("q = " + std::to_string(q) + " is not a prime power");
  }
  if (k < 1) throw InputError("k must be at least 1");
  std::uint64_t n = 1;
  std::uint64_t qi = 1;
  for (int i = 1; i < k; ++i) {
    qi = checked_mul(qi, static_cast<std::uint64_t>(q));
    if (qi == std::numeric_limits<std::uint64_t>::max()) {
      throw GuardExceeded("counterexample length overflows 64 bits");
    }
    n = checked_mul(n, qi + 1);
  }
  return n;
}

PackTranscript verify_pack(const CodeMap& f, std::uint64_t expected_length,
                           int parameter_order, const Limits& limits) {
  const Code& plus = f.source();
  const Code& minus = f.target();
  PackTranscript t;
  const ModulePtr& alphabet = plus.alphabet_ptr();
  t.length_ok = plus.length() == minus.length() &&
                (expected_length == 0 ||
                 static_cast<std::uint64_t>(plus.length()) == expected_length);
  t.bijection_ok = alphabet == minus.alphabet_ptr() &&
                   plus.size() == parameter_order &&
                   minus.size() == parameter_order;
  t.hamming_ok = map_preserves(f, WeightKind::kHamming);
  AutGroup group = AutGroup::full(alphabet, limits);
  t.aut_order = group.size();
  OrbitIndex orbits = orbit_partition(group);
  t.swc_ok = map_preserves(f, WeightKind::kSwc, &orbits);
  t.zero_columns_plus = count_zero_columns(plus);
  t.zero_columns_minus = count_zero_columns(minus);
  t.zero_column_ok = t.zero_columns_plus >= 1 && t.zero_columns_minus == 0;
  try {
    ExtensionSearch es = extension_search(f, group, limits);
    t.non_extension_certificate = "exhaustive-search";
    t.non_extension_ok = !es.transform.has_value();
    t.candidate_space = es.candidate_space;
    t.search_nodes = es.nodes;
    t.tau_tests = es.tau_tests;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kGuardExceeded) throw;
    // Monomial maps carry zero columns to zero columns.
    t.non_extension_certificate = "zero-column";
    t.non_extension_ok = t.zero_columns_plus != t.zero_columns_minus;
  }
  return t;
}

CounterexamplePack build_counterexample(int m, int k, int q,
                                        const Limits& limits,
                                        const BuildOptions& options) {
  if (m < 1) throw InputError("m must be at least 1");
  if (k <= m) {
    throw InputError("construction requires k > m (got m = " +
                     std::to_string(m) + ", k = " + std::to_string(k) + ")");
  }
  const std::uint64_t length = counterexample_length(q, k);
  Context ctx;
  ctx.ring = make_matrix_ring(m, q, limits);
  ctx.alphabet = make_column_module(ctx.ring, k, limits);
  ctx.field = ctx.ring->provenance().field;
  ctx.m = m;
  ctx.k = k;
  ctx.q = q;
  ctx.gens = minimal_generators(*ctx.alphabet);

  if (!options.force_search) {
    if (length > static_cast<std::uint64_t>(limits.max_code_size)) {
      throw GuardExceeded("counterexample length " + std::to_string(length) +
                          " exceeds max_code_size");
    }
    Parametrized coords = subspace_coordinates(ctx.field, k);
    std::vector<Matrix> all = coords.plus;
    all.insert(all.end(), coords.minus.begin(), coords.minus.end());
    auto images =
        right_images(ctx.field, m, k, all, ctx.alphabet->order());
    std::vector<int> plus_sel(coords.plus.size());
    std::vector<int> minus_sel(coords.minus.size());
    for (size_t i = 0; i < plus_sel.size(); ++i) plus_sel[i] = static_cast<int>(i);
    for (size_t i = 0; i < minus_sel.size(); ++i) {
      minus_sel[i] = static_cast<int>(plus_sel.size() + i);
    }
    auto pack = assemble(ctx, images, plus_sel, minus_sel, length, "subspace",
                         limits);
    if (pack) return *pack;
  }
  auto pack = search_construction(ctx, options.search_max_length, limits);
  if (pack) return *pack;
  throw Unsupported("no verified counterexample for m = " + std::to_string(m) +
                    ", k = " + std::to_string(k) + ", q = " +
                    std::to_string(q) + " within limits");
}

}  // namespace swclab
