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

#include <cmath>
#include <functional>
#include <string>

#include "swclab/error.hpp"

namespace swclab {

std::map<int, int> column_fingerprint(const Code& code, int i,
                                      const OrbitIndex& index) {
  std::map<int, int> out;
  for (int v : code.column(i)) ++out[index.label[v]];
  return out;
}

int count_zero_columns(const Code& code) {
  int zeros = 0;
  for (int i = 0; i < code.length(); ++i) {
    bool all_zero = true;
    for (const auto& w : code.elements()) {
      if (w[i] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) ++zeros;
  }
  return zeros;
}

namespace {

// Kuhn's augmenting-path matching restricted to rows >= first_row and to
// columns not yet used. Returns true iff every such row can be matched.
bool has_perfect_completion(const std::vector<std::vector<int>>& admissible,
                            int first_row, const std::vector<char>& used) {
  const int n = static_cast<int>(admissible.size());
  std::vector<int> match_col(n, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int row) {
    for (int col = 0; col < n; ++col) {
      if (used[col] || admissible[row][col] < 0 || seen[col]) continue;
      seen[col] = 1;
      if (match_col[col] < 0 || augment(match_col[col])) {
        match_col[col] = row;
        return true;
      }
    }
    return false;
  };
  for (int row = first_row; row < n; ++row) {
    seen.assign(n, 0);
    if (!augment(row)) return false;
  }
  return true;
}

}  // namespace

ExtensionSearch extension_search(const CodeMap& f, const AutGroup& group,
                                 const Limits& limits) {
  const Code& src = f.source();
  const Code& dst = f.target();
  const int n = src.length();
  if (dst.length() != n) {
    throw InputError("extension search needs codes of equal length");
  }
  if (group.module().order() != src.alphabet().order() ||
      group.module().ring_ptr() != src.alphabet().ring_ptr()) {
    throw InputError("automorphism group is not over the code alphabet");
  }
  const auto& gens = src.generators();
  const auto& images = f.gen_images();
  const double work = static_cast<double>(n) * n * group.size() *
                      std::max<size_t>(1, gens.size());
  if (work > static_cast<double>(limits.max_extension_work)) {
    throw GuardExceeded("extension search work " + std::to_string(work) +
                        " exceeds " +
                        std::to_string(limits.max_extension_work));
  }

  ExtensionSearch out;
  out.candidate_space = std::tgamma(n + 1.0) *
                        std::pow(static_cast<double>(group.size()), n);

  const OrbitIndex orbits = orbit_partition(group);
  std::vector<std::map<int, int>> src_fp(n);
  std::vector<std::map<int, int>> dst_fp(n);
  for (int i = 0; i < n; ++i) {
    src_fp[i] = column_fingerprint(src, i, orbits);
    dst_fp[i] = column_fingerprint(dst, i, orbits);
  }
  // admissible[i][j]: smallest τ with g_j τ = f(g)_i for every generator g,
  // or -1.
  std::vector<std::vector<int>> admissible(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (dst_fp[i] != src_fp[j]) continue;
      ++out.compatible_pairs;
      for (int t = 0; t < group.size(); ++t) {
        ++out.tau_tests;
        const Perm& tau = group.element(t);
        bool ok = true;
        for (size_t g = 0; g < gens.size() && ok; ++g) {
          ok = tau[gens[g][j]] == images[g][i];
        }
        if (ok) {
          admissible[i][j] = t;
          break;
        }
      }
    }
  }
  std::vector<char> used(n, 0);
  if (!has_perfect_completion(admissible, 0, used)) return out;
  MonomialTransform t;
  t.sigma.assign(n, -1);
  t.taus.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (used[j] || admissible[i][j] < 0) continue;
      ++out.nodes;
      used[j] = 1;
      if (has_perfect_completion(admissible, i + 1, used)) {
        t.sigma[i] = j;
        t.taus[i] = admissible[i][j];
        break;
      }
      used[j] = 0;
    }
    if (t.sigma[i] < 0) {
      throw InternalError("matching vanished during lexicographic descent");
    }
  }
  for (int i = 0; i < src.size(); ++i) {
    if (monomial_apply(t, group, src.elements()[i]) != f.apply(i)) {
      throw InternalError("extension witness fails the restriction identity");
    }
  }
  out.transform = std::move(t);
  return out;
}

}  // namespace swclab
