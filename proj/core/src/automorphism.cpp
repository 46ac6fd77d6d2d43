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

#include "swclab/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "swclab/error.hpp"
#include "swclab/hom.hpp"

namespace swclab {
namespace {

constexpr size_t kMaxGroupOrder = 2'000'000;

Perm compose_tables(const Perm& first, const Perm& second) {
  Perm out(first.size());
  for (size_t a = 0; a < first.size(); ++a) out[a] = second[first[a]];
  return out;
}

// Generators of the whole module on top of an existing submodule.
std::vector<int> complete_generators(const Module& module,
                                     std::vector<int> base_gens) {
  std::vector<int> extra;
  Submodule span = submodule_generated(module, base_gens);
  for (int a = 0; a < module.order() && span.size() < module.order(); ++a) {
    if (span.contains(a)) continue;
    extra.push_back(a);
    base_gens.push_back(a);
    span = submodule_generated(module, base_gens);
  }
  return extra;
}

}  // namespace

AutGroup::AutGroup(ModulePtr module, std::vector<Perm> elements)
    : module_(std::move(module)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (int i = 0; i < size(); ++i) index_.emplace(elements_[i], i);
}

bool is_automorphism(const Module& m, const Perm& p) {
  const int n = m.order();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int a = 0; a < n; ++a) {
    if (p[a] < 0 || p[a] >= n || seen[p[a]]) return false;
    seen[p[a]] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (p[m.add(a, b)] != m.add(p[a], p[b])) return false;
    }
    for (int r = 0; r < m.ring().order(); ++r) {
      if (p[m.act(r, a)] != m.act(r, p[a])) return false;
    }
  }
  return true;
}

AutGroup AutGroup::full(const ModulePtr& module, const Limits& limits) {
  if (module->order() > limits.max_order) {
    throw GuardExceeded("automorphism enumeration needs order <= " +
                        std::to_string(limits.max_order));
  }
  HomSearch search(*module, *module, limits);
  search.set_generators(minimal_generators(*module));
  search.require_injective(true);
  std::vector<Perm> elements;
  search.run([&elements](const std::vector<int>& map) {
    elements.push_back(map);
    return true;
  });
  return AutGroup(module, std::move(elements));
}

AutGroup AutGroup::generated_by(const ModulePtr& module, std::vector<Perm> gens,
                                const Limits& /*limits*/) {
  Perm id(module->order());
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : gens) {
    if (!is_automorphism(*module, g)) {
      throw InputError("generator is not an automorphism of the module");
    }
  }
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Perm c = compose_tables(p, g);
        if (seen.insert(c).second) {
          if (seen.size() > kMaxGroupOrder) {
            throw GuardExceeded("generated automorphism group too large");
          }
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  return AutGroup(module, std::vector<Perm>(seen.begin(), seen.end()));
}

AutGroup AutGroup::from_elements(const ModulePtr& module,
                                 std::vector<Perm> elements) {
  for (const auto& p : elements) {
    if (!is_automorphism(*module, p)) {
      throw InputError("listed map is not an automorphism of the module");
    }
  }
  Perm id(module->order());
  std::iota(id.begin(), id.end(), 0);
  AutGroup group(module, std::move(elements));
  if (group.index_of(id) != 0 || !group.is_closed()) {
    throw InputError("listed automorphisms are not closed under composition");
  }
  return group;
}

int AutGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int AutGroup::compose(int i, int j) const {
  return index_of(compose_tables(elements_[i], elements_[j]));
}

int AutGroup::inverse(int i) const {
  const Perm& p = elements_[i];
  Perm inv(p.size());
  for (size_t a = 0; a < p.size(); ++a) inv[p[a]] = static_cast<int>(a);
  return index_of(inv);
}

bool AutGroup::is_closed() const {
  for (int i = 0; i < size(); ++i) {
    if (inverse(i) < 0) return false;
    for (int j = 0; j < size(); ++j) {
      if (compose(i, j) < 0) return false;
    }
  }
  return true;
}

int OrbitIndex::num_classes() const {
  return static_cast<int>(classes().size());
}

std::vector<int> OrbitIndex::classes() const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(label.size()); ++a) {
    if (label[a] == a) out.push_back(a);
  }
  return out;
}

std::vector<int> OrbitIndex::members(int label_value) const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(label.size()); ++a) {
    if (label[a] == label_value) out.push_back(a);
  }
  return out;
}

OrbitIndex orbit_partition(const Module& module,
                           std::span<const Perm> generators) {
  const int n = module.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) {
      throw InputError("automorphism table does not match the module");
    }
    for (int a = 0; a < n; ++a) {
      const int ra = find(a);
      const int rb = find(g[a]);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  OrbitIndex out;
  out.kind = PartitionKind::kAutOrbit;
  out.label.resize(n);
  // Roots are the smallest members since unions keep the smaller root.
  for (int a = 0; a < n; ++a) out.label[a] = find(a);
  return out;
}

OrbitIndex orbit_partition(const AutGroup& group) {
  return orbit_partition(group.module(), group.elements());
}

OrbitIndex annihilator_partition(const Module& module) {
  std::map<std::vector<int>, int> first;
  OrbitIndex out;
  out.kind = PartitionKind::kAnnihilator;
  out.label.resize(module.order());
  for (int a = 0; a < module.order(); ++a) {
    auto [it, inserted] = first.emplace(annihilator(module, a).members, a);
    out.label[a] = it->second;
  }
  return out;
}

bool refines(const OrbitIndex& fine, const OrbitIndex& coarse) {
  if (fine.label.size() != coarse.label.size()) return false;
  for (size_t a = 0; a < fine.label.size(); ++a) {
    if (coarse.label[a] != coarse.label[fine.label[a]]) return false;
  }
  return true;
}

std::optional<Perm> extend_mono(const ModulePtr& module, const Submodule& sub,
                                std::span<const int> images,
                                const Limits& limits) {
  const Module& m = *module;
  if (static_cast<int>(images.size()) != sub.size()) {
    throw InputError("mono needs one image per submodule element");
  }
  std::vector<int> partial(m.order(), -1);
  for (int i = 0; i < sub.size(); ++i) {
    if (images[i] < 0 || images[i] >= m.order()) {
      throw InputError("mono image out of range");
    }
    partial[sub.members[i]] = images[i];
  }
  if (partial[0] != 0) throw InputError("mono does not fix zero");
  std::vector<char> used(m.order(), 0);
  for (int x : sub.members) {
    if (used[partial[x]]) throw InputError("map is not injective");
    used[partial[x]] = 1;
    for (int y : sub.members) {
      const int s = m.add(x, y);
      if (partial[s] < 0 || partial[s] != m.add(partial[x], partial[y])) {
        throw InputError("map is not additive on the submodule");
      }
    }
    for (int r = 0; r < m.ring().order(); ++r) {
      const int rx = m.act(r, x);
      if (partial[rx] < 0 || partial[rx] != m.act(r, partial[x])) {
        throw InputError("map does not commute with the action");
      }
    }
  }
  const std::vector<int> extra = complete_generators(m, sub.members);
  for (bool bijective : {true, false}) {
    HomSearch search(m, m, limits);
    search.fix(partial);
    search.set_generators(extra);
    search.require_injective(bijective);
    std::optional<Perm> found;
    search.run([&found](const std::vector<int>& map) {
      found = map;
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

PseudoInjectivity check_pseudo_injective(const ModulePtr& module,
                                         const Limits& limits) {
  const Module& m = *module;
  PseudoInjectivity out;
  for (const Submodule& sub : submodules_enumerate(m, limits)) {
    ++out.submodules;
    // Generators of the submodule, in module indices.
    std::vector<int> gens;
    {
      const auto as_module = submodule_as_module(m, sub);
      for (int g : minimal_generators(*as_module)) {
        gens.push_back(sub.members[g]);
      }
    }
    const std::vector<int> extra = complete_generators(m, gens);
    HomSearch monos(m, m, limits);
    monos.set_generators(gens);
    monos.require_injective(true);
    monos.run([&](const std::vector<int>& mono) {
      ++out.monomorphisms;
      HomSearch ext(m, m, limits);
      ext.fix(mono);
      ext.set_generators(extra);
      bool extends = false;
      ext.run([&extends](const std::vector<int>&) {
        extends = true;
        return false;
      });
      if (!extends) {
        out.holds = false;
        out.witness_domain = sub;
        out.witness_images.clear();
        for (int x : sub.members) out.witness_images.push_back(mono[x]);
      }
      return extends;
    });
    if (!out.holds) break;
  }
  return out;
}

bool is_pseudo_injective(const ModulePtr& module, const Limits& limits) {
  return check_pseudo_injective(module, limits).holds;
}

}  // namespace swclab
