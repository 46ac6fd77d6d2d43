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
#include <string>

#include "closure.hpp"
#include "swclab/error.hpp"
#include "swclab/matrix.hpp"

namespace swclab {
namespace {

void require_table_order(long long order, const Limits& limits) {
  if (order > limits.max_table_order) {
    throw GuardExceeded("ring order " + std::to_string(order) +
                        " exceeds the table limit " +
                        std::to_string(limits.max_table_order));
  }
}

}  // namespace

RingPtr Ring::from_tables(int order, std::vector<int> add, std::vector<int> mul,
                          RingProvenance provenance) {
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->order_ = order;
  ring->add_ = std::move(add);
  ring->mul_ = std::move(mul);
  ring->provenance_ = std::move(provenance);
  ring->neg_.assign(order, 0);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (ring->add(a, b) == 0) {
        ring->neg_[a] = b;
        break;
      }
    }
  }
  ring->one_ = -1;
  for (int u = 0; u < order && ring->one_ < 0; ++u) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) {
      ok = ring->mul(u, x) == x && ring->mul(x, u) == x;
    }
    if (ok) ring->one_ = u;
  }
  if (ring->one_ < 0) throw InputError("ring has no multiplicative identity");
  ring->unit_.assign(order, 0);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (ring->mul(a, b) == ring->one_) {
        ring->unit_[a] = 1;
        break;
      }
    }
  }
  return ring;
}

std::string Ring::name() const {
  switch (provenance_.kind) {
    case RingKind::kMatrix:
      return "M_" + std::to_string(provenance_.m) + "(F_" +
             std::to_string(provenance_.field->order()) + ")";
    case RingKind::kModN:
      return "Z/" + std::to_string(provenance_.n);
    case RingKind::kProduct: {
      std::string out;
      for (const auto& f : provenance_.factors) {
        if (!out.empty()) out += " x ";
        const bool wrap = f->provenance().kind == RingKind::kProduct;
        out += wrap ? "(" + f->name() + ")" : f->name();
      }
      return out;
    }
    case RingKind::kTable:
      break;
  }
  return "table(order " + std::to_string(order_) + ")";
}

std::vector<int> Ring::product_components(int a) const {
  const auto& factors = provenance_.factors;
  std::vector<int> out(factors.size());
  for (int j = static_cast<int>(factors.size()) - 1; j >= 0; --j) {
    out[j] = a % factors[j]->order();
    a /= factors[j]->order();
  }
  return out;
}

RingPtr make_matrix_ring(int m, int q, const Limits& limits) {
  if (m < 1) throw InputError("matrix size must be positive");
  FieldPtr field = FiniteField::of_order(q);
  long long order = 1;
  for (int i = 0; i < m * m; ++i) {
    order *= q;
    require_table_order(order, limits);
  }
  const int n = static_cast<int>(order);
  std::vector<Matrix> elems;
  elems.reserve(n);
  for (int a = 0; a < n; ++a) elems.push_back(Matrix::decode(field, m, m, a));
  std::vector<int> add(static_cast<size_t>(n) * n);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<int>(mat_add(elems[a], elems[b]).encode());
      mul[a * n + b] = static_cast<int>(mat_mul(elems[a], elems[b]).encode());
    }
  }
  RingProvenance prov;
  prov.kind = RingKind::kMatrix;
  prov.m = m;
  prov.field = field;
  return Ring::from_tables(n, std::move(add), std::move(mul), std::move(prov));
}

RingPtr make_mod_n_ring(int n, const Limits& limits) {
  if (n < 2) throw InputError("Z/n requires n >= 2");
  require_table_order(n, limits);
  std::vector<int> add(static_cast<size_t>(n) * n);
  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  }
  RingProvenance prov;
  prov.kind = RingKind::kModN;
  prov.n = n;
  return Ring::from_tables(n, std::move(add), std::move(mul), std::move(prov));
}

RingPtr make_product_ring(const std::vector<RingPtr>& factors,
                          const Limits& limits) {
  if (factors.empty()) throw InputError("product ring needs a factor");
  long long order = 1;
  for (const auto& f : factors) {
    order *= f->order();
    require_table_order(order, limits);
  }
  const int n = static_cast<int>(order);
  RingProvenance prov;
  prov.kind = RingKind::kProduct;
  prov.factors = factors;
  // Build component decompositions once.
  std::vector<std::vector<int>> comps(n, std::vector<int>(factors.size()));
  for (int a = 0; a < n; ++a) {
    int x = a;
    for (int j = static_cast<int>(factors.size()) - 1; j >= 0; --j) {
      comps[a][j] = x % factors[j]->order();
      x /= factors[j]->order();
    }
  }
  auto compose = [&](auto op) {
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int code = 0;
        for (size_t j = 0; j < factors.size(); ++j) {
          code = code * factors[j]->order() +
                 op(*factors[j], comps[a][j], comps[b][j]);
        }
        table[a * n + b] = code;
      }
    }
    return table;
  };
  auto add = compose([](const Ring& r, int x, int y) { return r.add(x, y); });
  auto mul = compose([](const Ring& r, int x, int y) { return r.mul(x, y); });
  return Ring::from_tables(n, std::move(add), std::move(mul), std::move(prov));
}

RingPtr make_table_ring(const std::vector<std::vector<int>>& add,
                        const std::vector<std::vector<int>>& mul,
                        const Limits& limits) {
  const int n = static_cast<int>(add.size());
  if (n < 1) throw InputError("table ring is empty");
  if (n > limits.max_order) {
    throw GuardExceeded("table ring of order " + std::to_string(n) +
                        " exceeds the validation limit " +
                        std::to_string(limits.max_order));
  }
  if (static_cast<int>(mul.size()) != n) {
    throw InputError("ring add and mul tables differ in size");
  }
  std::vector<int> flat_add(static_cast<size_t>(n) * n);
  std::vector<int> flat_mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(add[a].size()) != n ||
        static_cast<int>(mul[a].size()) != n) {
      throw InputError("ring table row " + std::to_string(a) +
                       " has the wrong length");
    }
    for (int b = 0; b < n; ++b) {
      if (add[a][b] < 0 || add[a][b] >= n || mul[a][b] < 0 ||
          mul[a][b] >= n) {
        throw InputError("ring table entry out of range");
      }
      flat_add[a * n + b] = add[a][b];
      flat_mul[a * n + b] = mul[a][b];
    }
  }
  for (int a = 0; a < n; ++a) {
    if (flat_add[a] != a || flat_add[a * n] != a) {
      throw InputError("ring axiom violated: element 0 is not additive identity");
    }
  }
  RingProvenance prov;
  prov.kind = RingKind::kTable;
  RingPtr ring =
      Ring::from_tables(n, std::move(flat_add), std::move(flat_mul), prov);
  if (auto why = check_ring_axioms(*ring); !why.empty()) {
    throw InputError("ring axiom violated: " + why);
  }
  return ring;
}

std::string check_ring_axioms(const Ring& r) {
  const int n = r.order();
  for (int a = 0; a < n; ++a) {
    if (r.add(a, 0) != a) return "0 is not an additive identity";
    if (r.add(a, r.neg(a)) != 0) return "missing additive inverse";
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) {
      return "unity fails";
    }
    for (int b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return "addition not commutative";
      for (int c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
          return "addition not associative";
        }
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
          return "multiplication not associative";
        }
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
          return "left distributivity fails";
        }
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) {
          return "right distributivity fails";
        }
      }
    }
  }
  return {};
}

bool LeftIdeal::contains(int a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

bool LeftIdeal::contains(const LeftIdeal& other) const {
  return std::includes(members.begin(), members.end(), other.members.begin(),
                       other.members.end());
}

bool canonical_less(const LeftIdeal& a, const LeftIdeal& b) {
  return detail::size_then_lex(a.members, b.members);
}

LeftIdeal jacobson_radical(const Ring& ring) {
  LeftIdeal rad;
  for (int r = 0; r < ring.order(); ++r) {
    bool quasi_regular = true;
    for (int s = 0; s < ring.order() && quasi_regular; ++s) {
      quasi_regular = ring.is_unit(ring.sub(ring.one(), ring.mul(s, r)));
    }
    if (quasi_regular) rad.members.push_back(r);
  }
  return rad;
}

namespace {

auto actor(const Ring& ring, Side side) {
  return [&ring, side](int r, int x) {
    return side == Side::kLeft ? ring.mul(r, x) : ring.mul(x, r);
  };
}

}  // namespace

LeftIdeal ideal_generated(const Ring& ring, const std::vector<int>& gens,
                          Side side) {
  for (int g : gens) {
    if (g < 0 || g >= ring.order()) throw InputError("generator not in ring");
  }
  return {detail::close_span(
      ring.order(), ring.order(), gens,
      [&ring](int a, int b) { return ring.add(a, b); }, actor(ring, side))};
}

std::vector<LeftIdeal> left_ideals_enumerate(const Ring& ring,
                                             const Limits& limits, Side side) {
  auto spans = detail::enumerate_spans(
      ring.order(), ring.order(),
      [&ring](int a, int b) { return ring.add(a, b); }, actor(ring, side),
      limits, "ideal");
  std::vector<LeftIdeal> out;
  out.reserve(spans.size());
  for (auto& s : spans) out.push_back({std::move(s)});
  return out;
}

bool is_two_sided(const Ring& ring, const LeftIdeal& ideal) {
  for (int x : ideal.members) {
    for (int r = 0; r < ring.order(); ++r) {
      if (!ideal.contains(ring.mul(r, x)) || !ideal.contains(ring.mul(x, r))) {
        return false;
      }
    }
  }
  return true;
}

bool is_left_pir(const Ring& ring, const Limits& limits, Side side) {
  const auto ideals = left_ideals_enumerate(ring, limits, side);
  std::set<std::vector<int>> principal;
  for (int g = 0; g < ring.order(); ++g) {
    principal.insert(ideal_generated(ring, {g}, side).members);
  }
  for (const auto& ideal : ideals) {
    if (!principal.contains(ideal.members)) return false;
  }
  return true;
}

int principal_generator(const Ring& ring, const LeftIdeal& ideal) {
  for (int g : ideal.members) {
    if (ideal_generated(ring, {g}).members == ideal.members) return g;
  }
  throw HypothesisUnmet("left ideal of size " + std::to_string(ideal.size()) +
                        " is not principal");
}

QuotientRing quotient_ring(const Ring& ring, const LeftIdeal& ideal) {
  if (!is_two_sided(ring, ideal)) {
    throw InputError("quotient requires a two-sided ideal");
  }
  const int n = ring.order();
  QuotientRing out;
  std::vector<int> rep(n, -1);
  for (int r = 0; r < n; ++r) {
    if (rep[r] >= 0) continue;
    out.representatives.push_back(r);
    for (int i : ideal.members) rep[ring.add(r, i)] = r;
  }
  const int m = static_cast<int>(out.representatives.size());
  std::vector<int> index_of(n, -1);
  for (int i = 0; i < m; ++i) index_of[out.representatives[i]] = i;
  out.projection.resize(n);
  for (int r = 0; r < n; ++r) out.projection[r] = index_of[rep[r]];
  std::vector<int> add(static_cast<size_t>(m) * m);
  std::vector<int> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int x = out.representatives[a];
      const int y = out.representatives[b];
      add[a * m + b] = out.projection[ring.add(x, y)];
      mul[a * m + b] = out.projection[ring.mul(x, y)];
    }
  }
  out.ring = Ring::from_tables(m, std::move(add), std::move(mul),
                               RingProvenance{});
  return out;
}

std::vector<BlockProjection> block_projections(const Ring& ring) {
  const auto& prov = ring.provenance();
  std::vector<BlockProjection> out;
  switch (prov.kind) {
    case RingKind::kMatrix: {
      BlockProjection b;
      b.block = {prov.m, prov.field->order()};
      b.field = prov.field;
      b.image.resize(ring.order());
      std::iota(b.image.begin(), b.image.end(), 0LL);
      out.push_back(std::move(b));
      break;
    }
    case RingKind::kModN: {
      int n = prov.n;
      for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        BlockProjection b;
        b.block = {1, p};
        b.field = FiniteField::make(p, 1);
        b.image.resize(ring.order());
        for (int r = 0; r < ring.order(); ++r) b.image[r] = r % p;
        out.push_back(std::move(b));
      }
      break;
    }
    case RingKind::kProduct: {
      for (size_t j = 0; j < prov.factors.size(); ++j) {
        for (auto& fb : block_projections(*prov.factors[j])) {
          BlockProjection b;
          b.block = fb.block;
          b.field = fb.field;
          b.image.resize(ring.order());
          for (int r = 0; r < ring.order(); ++r) {
            b.image[r] = fb.image[ring.product_components(r)[j]];
          }
          out.push_back(std::move(b));
        }
      }
      break;
    }
    case RingKind::kTable:
      throw Unsupported(
          "block projections are only available for matrix, Z/n and "
          "product rings");
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BlockProjection& a, const BlockProjection& b) {
                     return std::pair(a.block.q, a.block.mu) <
                            std::pair(b.block.q, b.block.mu);
                   });
  return out;
}

}  // namespace swclab
