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

#include "swclab/module.hpp"

#include <algorithm>
#include <string>

#include "closure.hpp"
#include "swclab/error.hpp"
#include "swclab/matrix.hpp"

namespace swclab {
namespace {

void require_table_order(long long order, const Limits& limits) {
  if (order > limits.max_table_order) {
    throw GuardExceeded("module order " + std::to_string(order) +
                        " exceeds the table limit " +
                        std::to_string(limits.max_table_order));
  }
}

std::vector<int> flat_act(const Ring& ring, int order, auto&& fn) {
  std::vector<int> act(static_cast<size_t>(ring.order()) * order);
  for (int r = 0; r < ring.order(); ++r) {
    for (int a = 0; a < order; ++a) act[r * order + a] = fn(r, a);
  }
  return act;
}

}  // namespace

ModulePtr Module::from_tables(RingPtr ring, int order, std::vector<int> add,
                              std::vector<int> act,
                              ModuleProvenance provenance) {
  auto m = std::shared_ptr<Module>(new Module());
  m->ring_ = std::move(ring);
  m->order_ = order;
  m->add_ = std::move(add);
  m->act_ = std::move(act);
  m->provenance_ = std::move(provenance);
  m->neg_.assign(order, 0);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (m->add(a, b) == 0) {
        m->neg_[a] = b;
        break;
      }
    }
  }
  return m;
}

std::string Module::name() const {
  switch (provenance_.kind) {
    case ModuleKind::kColumn: {
      const auto& rp = ring_->provenance();
      return "M_{" + std::to_string(rp.m) + "x" + std::to_string(provenance_.k) +
             "}(F_" + std::to_string(rp.field->order()) + ")";
    }
    case ModuleKind::kPullback:
      return "pullback column module (k=" + std::to_string(provenance_.k) +
             ")";
    case ModuleKind::kRegular:
      return ring_->name() + " (regular)";
    case ModuleKind::kModM:
      return "Z/" + std::to_string(provenance_.m);
    case ModuleKind::kDirectSum: {
      std::string out;
      for (const auto& s : provenance_.summands) {
        if (!out.empty()) out += " + ";
        out += s->name();
      }
      return out;
    }
    case ModuleKind::kCharacter:
      return "character module of " + ring_->name();
    case ModuleKind::kQuotient:
      return "quotient module of " + ring_->name();
    case ModuleKind::kSimple:
      return "simple module (order " + std::to_string(order_) + ")";
    case ModuleKind::kSubmodule:
      return "submodule (order " + std::to_string(order_) + ")";
    case ModuleKind::kTable:
      break;
  }
  return "table(order " + std::to_string(order_) + ")";
}

std::vector<int> Module::components(int a) const {
  const auto& s = provenance_.summands;
  std::vector<int> out(s.size());
  for (int j = static_cast<int>(s.size()) - 1; j >= 0; --j) {
    out[j] = a % s[j]->order();
    a /= s[j]->order();
  }
  return out;
}

int Module::from_components(const std::vector<int>& parts) const {
  const auto& s = provenance_.summands;
  int code = 0;
  for (size_t j = 0; j < s.size(); ++j) code = code * s[j]->order() + parts[j];
  return code;
}

ModulePtr make_column_module(const RingPtr& ring, int k, const Limits& limits) {
  const auto& rp = ring->provenance();
  if (rp.kind != RingKind::kMatrix) {
    throw InputError("column module requires a matrix ring, got " +
                     ring->name());
  }
  if (k < 1) throw InputError("column module needs k >= 1");
  const int m = rp.m;
  const FieldPtr& field = rp.field;
  long long order = 1;
  for (int i = 0; i < m * k; ++i) {
    order *= field->order();
    require_table_order(order, limits);
  }
  const int n = static_cast<int>(order);
  std::vector<Matrix> elems;
  elems.reserve(n);
  for (int a = 0; a < n; ++a) elems.push_back(Matrix::decode(field, m, k, a));
  std::vector<int> add(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<int>(mat_add(elems[a], elems[b]).encode());
    }
  }
  std::vector<Matrix> ring_elems;
  ring_elems.reserve(ring->order());
  for (int r = 0; r < ring->order(); ++r) {
    ring_elems.push_back(Matrix::decode(field, m, m, r));
  }
  auto act = flat_act(*ring, n, [&](int r, int a) {
    return static_cast<int>(mat_mul(ring_elems[r], elems[a]).encode());
  });
  ModuleProvenance prov;
  prov.kind = ModuleKind::kColumn;
  prov.k = k;
  return Module::from_tables(ring, n, std::move(add), std::move(act), prov);
}

ModulePtr make_regular_module(const RingPtr& ring, const Limits& limits) {
  const int n = ring->order();
  require_table_order(n, limits);
  std::vector<int> add(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) add[a * n + b] = ring->add(a, b);
  }
  auto act = flat_act(*ring, n, [&](int r, int a) { return ring->mul(r, a); });
  ModuleProvenance prov;
  prov.kind = ModuleKind::kRegular;
  return Module::from_tables(ring, n, std::move(add), std::move(act), prov);
}

ModulePtr make_mod_m_module(const RingPtr& ring, int m, const Limits& limits) {
  const auto& rp = ring->provenance();
  if (rp.kind != RingKind::kModN) {
    throw InputError("mod_m module requires a Z/n ring, got " + ring->name());
  }
  if (m < 1 || rp.n % m != 0) {
    throw InputError("mod_m module requires m | n (m=" + std::to_string(m) +
                     ", n=" + std::to_string(rp.n) + ")");
  }
  require_table_order(m, limits);
  std::vector<int> add(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) add[a * m + b] = (a + b) % m;
  }
  auto act = flat_act(*ring, m, [&](int r, int a) { return (r * a) % m; });
  ModuleProvenance prov;
  prov.kind = ModuleKind::kModM;
  prov.m = m;
  return Module::from_tables(ring, m, std::move(add), std::move(act), prov);
}

ModulePtr make_direct_sum(const RingPtr& ring,
                          const std::vector<ModulePtr>& summands,
                          const Limits& limits) {
  if (summands.empty()) throw InputError("direct sum needs a summand");
  long long order = 1;
  for (const auto& s : summands) {
    if (s->ring_ptr() != ring) {
      throw InputError("direct sum summands must share the ring");
    }
    order *= s->order();
    require_table_order(order, limits);
  }
  const int n = static_cast<int>(order);
  const size_t t = summands.size();
  std::vector<std::vector<int>> comps(n, std::vector<int>(t));
  for (int a = 0; a < n; ++a) {
    int x = a;
    for (int j = static_cast<int>(t) - 1; j >= 0; --j) {
      comps[a][j] = x % summands[j]->order();
      x /= summands[j]->order();
    }
  }
  auto encode = [&](auto&& part) {
    int code = 0;
    for (size_t j = 0; j < t; ++j) code = code * summands[j]->order() + part(j);
    return code;
  };
  std::vector<int> add(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = encode(
          [&](size_t j) { return summands[j]->add(comps[a][j], comps[b][j]); });
    }
  }
  auto act = flat_act(*ring, n, [&](int r, int a) {
    return encode([&](size_t j) { return summands[j]->act(r, comps[a][j]); });
  });
  ModuleProvenance prov;
  prov.kind = ModuleKind::kDirectSum;
  prov.summands = summands;
  return Module::from_tables(ring, n, std::move(add), std::move(act), prov);
}

ModulePtr make_power(const ModulePtr& alphabet, int n, const Limits& limits) {
  if (n < 1) throw InputError("module power needs n >= 1");
  return make_direct_sum(alphabet->ring_ptr(),
                         std::vector<ModulePtr>(n, alphabet), limits);
}

ModulePtr make_table_module(const RingPtr& ring,
                            const std::vector<std::vector<int>>& add,
                            const std::vector<std::vector<int>>& act,
                            const Limits& limits) {
  const int n = static_cast<int>(add.size());
  if (n < 1) throw InputError("table module is empty");
  if (n > limits.max_order) {
    throw GuardExceeded("table module of order " + std::to_string(n) +
                        " exceeds the validation limit " +
                        std::to_string(limits.max_order));
  }
  if (static_cast<int>(act.size()) != ring->order()) {
    throw InputError("action table needs one row per ring element");
  }
  std::vector<int> flat_add(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(add[a].size()) != n) {
      throw InputError("module add table row has the wrong length");
    }
    for (int b = 0; b < n; ++b) {
      if (add[a][b] < 0 || add[a][b] >= n) {
        throw InputError("module add table entry out of range");
      }
      flat_add[a * n + b] = add[a][b];
    }
  }
  std::vector<int> flat_act(static_cast<size_t>(ring->order()) * n);
  for (int r = 0; r < ring->order(); ++r) {
    if (static_cast<int>(act[r].size()) != n) {
      throw InputError("module action table row has the wrong length");
    }
    for (int a = 0; a < n; ++a) {
      if (act[r][a] < 0 || act[r][a] >= n) {
        throw InputError("module action table entry out of range");
      }
      flat_act[r * n + a] = act[r][a];
    }
  }
  for (int a = 0; a < n; ++a) {
    if (flat_add[a] != a) {
      throw InputError("module axiom violated: element 0 is not the zero");
    }
  }
  auto module = Module::from_tables(ring, n, std::move(flat_add),
                                    std::move(flat_act), ModuleProvenance{});
  if (auto why = check_module_axioms(*module); !why.empty()) {
    throw InputError("module axiom violated: " + why);
  }
  return module;
}

ModulePtr make_pullback_column_module(const RingPtr& ring,
                                      const BlockProjection& projection, int k,
                                      const Limits& limits) {
  const int mu = projection.block.mu;
  const FieldPtr& field = projection.field;
  long long order = 1;
  for (int i = 0; i < mu * k; ++i) {
    order *= field->order();
    require_table_order(order, limits);
  }
  const int n = static_cast<int>(order);
  std::vector<Matrix> elems;
  elems.reserve(n);
  for (int a = 0; a < n; ++a) elems.push_back(Matrix::decode(field, mu, k, a));
  std::vector<int> add(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<int>(mat_add(elems[a], elems[b]).encode());
    }
  }
  auto act = flat_act(*ring, n, [&](int r, int a) {
    const Matrix pr = Matrix::decode(field, mu, mu, projection.image[r]);
    return static_cast<int>(mat_mul(pr, elems[a]).encode());
  });
  ModuleProvenance prov;
  prov.kind = ModuleKind::kPullback;
  prov.k = k;
  return Module::from_tables(ring, n, std::move(add), std::move(act), prov);
}

std::string check_module_axioms(const Module& m) {
  const Ring& r = m.ring();
  const int n = m.order();
  for (int a = 0; a < n; ++a) {
    if (m.add(a, 0) != a) return "0 is not an additive identity";
    if (m.add(a, m.neg(a)) != 0) return "missing additive inverse";
    if (m.act(r.one(), a) != a) return "unity does not act as identity";
    if (m.act(0, a) != 0) return "zero of the ring does not act as zero";
    for (int b = 0; b < n; ++b) {
      if (m.add(a, b) != m.add(b, a)) return "addition not commutative";
      for (int c = 0; c < n; ++c) {
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c))) {
          return "addition not associative";
        }
      }
    }
  }
  for (int s = 0; s < r.order(); ++s) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (m.act(s, m.add(a, b)) != m.add(m.act(s, a), m.act(s, b))) {
          return "action not additive in the module argument";
        }
      }
      for (int t = 0; t < r.order(); ++t) {
        if (m.act(r.mul(s, t), a) != m.act(s, m.act(t, a))) {
          return "action not associative";
        }
        if (m.act(r.add(s, t), a) != m.add(m.act(s, a), m.act(t, a))) {
          return "action not additive in the ring argument";
        }
      }
    }
  }
  return {};
}

bool Submodule::contains(int a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

namespace {

auto module_add(const Module& m) {
  return [&m](int a, int b) { return m.add(a, b); };
}
auto module_act(const Module& m) {
  return [&m](int r, int a) { return m.act(r, a); };
}

}  // namespace

Submodule submodule_generated(const Module& module,
                              const std::vector<int>& gens) {
  for (int g : gens) {
    if (g < 0 || g >= module.order()) {
      throw InputError("generator " + std::to_string(g) + " not in module");
    }
  }
  return {detail::close_span(module.order(), module.ring().order(), gens,
                             module_add(module), module_act(module))};
}

std::vector<Submodule> submodules_enumerate(const Module& module,
                                            const Limits& limits) {
  auto spans = detail::enumerate_spans(module.order(), module.ring().order(),
                                       module_add(module), module_act(module),
                                       limits, "submodule");
  std::vector<Submodule> out;
  out.reserve(spans.size());
  for (auto& s : spans) out.push_back({std::move(s)});
  return out;
}

LeftIdeal annihilator(const Module& module, int a) {
  LeftIdeal out;
  for (int r = 0; r < module.ring().order(); ++r) {
    if (module.act(r, a) == 0) out.members.push_back(r);
  }
  return out;
}

Submodule socle(const Module& module) {
  const LeftIdeal rad = jacobson_radical(module.ring());
  Submodule out;
  for (int a = 0; a < module.order(); ++a) {
    bool killed = true;
    for (int r : rad.members) {
      if (module.act(r, a) != 0) {
        killed = false;
        break;
      }
    }
    if (killed) out.members.push_back(a);
  }
  return out;
}

ModulePtr submodule_as_module(const Module& module, const Submodule& sub) {
  const int n = sub.size();
  std::vector<int> index_of(module.order(), -1);
  for (int i = 0; i < n; ++i) index_of[sub.members[i]] = i;
  std::vector<int> add(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      add[i * n + j] = index_of[module.add(sub.members[i], sub.members[j])];
    }
  }
  auto act = flat_act(module.ring(), n, [&](int r, int i) {
    return index_of[module.act(r, sub.members[i])];
  });
  ModuleProvenance prov;
  prov.kind = ModuleKind::kSubmodule;
  return Module::from_tables(module.ring_ptr(), n, std::move(add),
                             std::move(act), prov);
}

std::vector<int> minimal_generators(const Module& module) {
  const int n = module.order();
  if (n == 1) return {};
  auto spans_all = [&](const std::vector<int>& gens) {
    return static_cast<int>(submodule_generated(module, gens).members.size()) ==
           n;
  };
  constexpr double kMaxCombinations = 20000;
  for (int size = 1; size < n; ++size) {
    // C(n - 1, size) combinations over the nonzero elements.
    double combos = 1;
    for (int i = 0; i < size; ++i) combos = combos * (n - 1 - i) / (i + 1);
    if (combos > kMaxCombinations) break;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i + 1;
    while (true) {
      if (spans_all(idx)) return idx;
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  std::vector<int> gens;
  std::vector<int> current{0};
  while (static_cast<int>(current.size()) < n) {
    int best = -1;
    size_t best_size = 0;
    for (int a = 1; a < n; ++a) {
      if (std::binary_search(current.begin(), current.end(), a)) continue;
      auto trial = gens;
      trial.push_back(a);
      const size_t s = submodule_generated(module, trial).members.size();
      if (s > best_size) {
        best_size = s;
        best = a;
      }
    }
    gens.push_back(best);
    current = submodule_generated(module, gens).members;
  }
  return gens;
}

}  // namespace swclab
