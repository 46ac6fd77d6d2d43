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

#include "swclab/socle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "closure.hpp"
#include "swclab/error.hpp"
#include "swclab/hom.hpp"

namespace swclab {
namespace {

// Smallest s with base^s == value; throws kInternal when value is not a
// power of base.
int exact_log(std::uint64_t value, int base) {
  int s = 0;
  std::uint64_t acc = 1;
  while (acc < value) {
    acc *= base;
    ++s;
  }
  if (acc != value) {
    throw InternalError("hom count " + std::to_string(value) +
                        " is not a power of " + std::to_string(base));
  }
  return s;
}

// R / rad R as an R-module, or one of its left ideals as an R-module.
ModulePtr pulled_back(const RingPtr& ring, const QuotientRing& quotient,
                      const std::vector<int>& members, ModuleKind kind) {
  const Ring& q = *quotient.ring;
  const int n = static_cast<int>(members.size());
  std::vector<int> index_of(q.order(), -1);
  for (int i = 0; i < n; ++i) index_of[members[i]] = i;
  std::vector<int> add(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      add[i * n + j] = index_of[q.add(members[i], members[j])];
    }
  }
  std::vector<int> act(static_cast<size_t>(ring->order()) * n);
  for (int r = 0; r < ring->order(); ++r) {
    for (int i = 0; i < n; ++i) {
      act[r * n + i] = index_of[q.mul(quotient.projection[r], members[i])];
    }
  }
  ModuleProvenance prov;
  prov.kind = kind;
  return Module::from_tables(ring, n, std::move(add), std::move(act), prov);
}

}  // namespace

SimpleCatalog simple_catalog(const RingPtr& ring, const Limits& limits) {
  const QuotientRing quotient = quotient_ring(*ring, jacobson_radical(*ring));
  const auto ideals = left_ideals_enumerate(*quotient.ring, limits);
  std::vector<LeftIdeal> minimal;
  for (const auto& ideal : ideals) {
    if (ideal.size() == 1) continue;
    bool is_minimal = true;
    for (const auto& smaller : ideals) {
      if (smaller.size() == 1 || smaller.size() >= ideal.size()) continue;
      if (ideal.contains(smaller)) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(ideal);
  }
  std::vector<int> all(quotient.ring->order());
  std::iota(all.begin(), all.end(), 0);
  const ModulePtr regular =
      pulled_back(ring, quotient, all, ModuleKind::kQuotient);

  struct Entry {
    SimpleModule simple;
    std::vector<int> defining_ideal;
  };
  std::vector<Entry> classes;
  for (const auto& ideal : minimal) {
    ModulePtr t = pulled_back(ring, quotient, ideal.members,
                              ModuleKind::kSimple);
    bool known = false;
    for (const auto& c : classes) {
      if (isomorphic(*c.simple.module, *t, limits)) {
        known = true;
        break;
      }
    }
    if (known) continue;
    Entry e;
    e.simple.module = t;
    e.simple.endo_order = static_cast<int>(count_homs(*t, *t, limits));
    e.simple.mu = exact_log(count_homs(*t, *regular, limits),
                            e.simple.endo_order);
    e.defining_ideal = ideal.members;
    classes.push_back(std::move(e));
  }
  std::sort(classes.begin(), classes.end(),
            [](const Entry& a, const Entry& b) {
              return std::tuple(a.simple.endo_order, a.simple.mu,
                                a.simple.module->order(), a.defining_ideal) <
                     std::tuple(b.simple.endo_order, b.simple.mu,
                                b.simple.module->order(), b.defining_ideal);
            });
  SimpleCatalog out;
  for (auto& c : classes) out.entries.push_back(std::move(c.simple));
  return out;
}

SocleReport socle_report(const ModulePtr& module, const Limits& limits) {
  const Module& a = *module;
  if (a.order() > limits.max_order) {
    throw GuardExceeded("socle report needs module order <= " +
                        std::to_string(limits.max_order));
  }
  const SimpleCatalog catalog = simple_catalog(a.ring_ptr(), limits);
  SocleReport out;
  out.socle = socle(a);
  out.cyclic = true;
  std::uint64_t product = 1;
  for (const auto& t : catalog.entries) {
    const int s = exact_log(count_homs(*t.module, a, limits), t.endo_order);
    out.multiplicities.push_back(s);
    out.mu.push_back(t.mu);
    out.endo_orders.push_back(t.endo_order);
    if (s > t.mu) out.cyclic = false;
    for (int i = 0; i < s; ++i) product *= t.module->order();
  }
  if (product != static_cast<std::uint64_t>(out.socle.size())) {
    throw InternalError("socle order " + std::to_string(out.socle.size()) +
                        " does not match the multiplicities");
  }
  for (int x : out.socle.members) {
    if (submodule_generated(a, {x}) == out.socle) {
      out.cyclic_by_generator = true;
      out.socle_generator = x;
      break;
    }
  }
  if (a.ring().order() <= limits.max_order) {
    const ModulePtr chars = character_module(a.ring_ptr(), limits);
    out.cyclic_by_embedding = embeds_into(a, *chars, limits);
  }
  out.methods_agree =
      out.cyclic == out.cyclic_by_generator &&
      (!out.cyclic_by_embedding || *out.cyclic_by_embedding == out.cyclic);
  if (!out.methods_agree) {
    throw InternalError("cyclic-socle criteria disagree for " + a.name());
  }
  return out;
}

int additive_exponent(const Ring& ring) {
  int e = 1;
  for (int a = 0; a < ring.order(); ++a) {
    int order = 1;
    for (int x = a; x != 0; x = ring.add(x, a)) ++order;
    e = std::lcm(e, order);
  }
  return e;
}

ModulePtr character_module(const RingPtr& ring_ptr, const Limits& limits) {
  const Ring& ring = *ring_ptr;
  const int n = ring.order();
  if (n > limits.max_order) {
    throw GuardExceeded("character module needs ring order <= " +
                        std::to_string(limits.max_order));
  }
  const int exponent = additive_exponent(ring);
  // multiple[k][x] = k * x in (R, +).
  std::vector<std::vector<int>> multiple(exponent, std::vector<int>(n, 0));
  for (int k = 1; k < exponent; ++k) {
    for (int x = 0; x < n; ++x) multiple[k][x] = ring.add(multiple[k - 1][x], x);
  }
  auto z_add = [&ring](int a, int b) { return ring.add(a, b); };
  auto z_act = [&multiple](int k, int x) { return multiple[k][x]; };
  // Generators of (R, +) as an abelian group.
  std::vector<int> gens;
  for (int a = 0; a < n; ++a) {
    auto span = detail::close_span(n, exponent, gens, z_add, z_act);
    if (static_cast<int>(span.size()) == n) break;
    if (!std::binary_search(span.begin(), span.end(), a)) gens.push_back(a);
  }
  std::vector<std::vector<int>> characters;
  std::vector<int> value(n, -1);
  std::vector<int> domain{0};
  value[0] = 0;
  std::function<void(size_t)> recurse = [&](size_t depth) {
    if (depth == gens.size()) {
      characters.push_back(value);
      return;
    }
    const int g = gens[depth];
    for (int v = 0; v < exponent; ++v) {
      std::vector<int> assigned;
      bool ok = true;
      const size_t base = domain.size();
      for (int k = 0; k < exponent && ok; ++k) {
        for (size_t i = 0; i < base && ok; ++i) {
          const int x = ring.add(domain[i], multiple[k][g]);
          const int y = (value[domain[i]] + k * v) % exponent;
          if (value[x] < 0) {
            value[x] = y;
            domain.push_back(x);
            assigned.push_back(x);
          } else if (value[x] != y) {
            ok = false;
          }
        }
      }
      if (ok) recurse(depth + 1);
      for (int x : assigned) value[x] = -1;
      domain.resize(base);
    }
  };
  recurse(0);
  std::sort(characters.begin(), characters.end());
  if (static_cast<int>(characters.size()) != n) {
    throw InternalError("character count differs from the ring order");
  }
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < n; ++i) index_of.emplace(characters[i], i);
  std::vector<int> add(static_cast<size_t>(n) * n);
  std::vector<int> sum(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < n; ++x) {
        sum[x] = (characters[i][x] + characters[j][x]) % exponent;
      }
      add[i * n + j] = index_of.at(sum);
    }
  }
  std::vector<int> act(static_cast<size_t>(n) * n);
  std::vector<int> twisted(n);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      for (int x = 0; x < n; ++x) twisted[x] = characters[i][ring.mul(x, r)];
      act[r * n + i] = index_of.at(twisted);
    }
  }
  ModuleProvenance prov;
  prov.kind = ModuleKind::kCharacter;
  return Module::from_tables(ring_ptr, n, std::move(add), std::move(act), prov);
}

WedderburnData wedderburn_data(const Ring& ring, const Limits& limits) {
  WedderburnData out;
  if (ring.provenance().kind != RingKind::kTable) {
    for (const auto& b : block_projections(ring)) out.blocks.push_back(b.block);
    return out;
  }
  // Table rings: read the blocks off the simple-module catalog.
  for (const auto& t : simple_catalog(ring.shared_from_this(), limits).entries) {
    out.blocks.push_back({t.mu, t.endo_order});
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const WedderburnBlock& a, const WedderburnBlock& b) {
              return std::pair(a.q, a.mu) < std::pair(b.q, b.mu);
            });
  return out;
}

}  // namespace swclab
