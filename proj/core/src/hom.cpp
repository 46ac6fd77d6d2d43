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

#include <string>

#include "swclab/error.hpp"

namespace swclab {
namespace {

using Bits = std::vector<std::uint64_t>;

Bits annihilator_bits(const Module& m, int a) {
  Bits bits((m.ring().order() + 63) / 64, 0);
  for (int r = 0; r < m.ring().order(); ++r) {
    if (m.act(r, a) == 0) bits[r / 64] |= std::uint64_t{1} << (r % 64);
  }
  return bits;
}

bool subset(const Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

}  // namespace

HomSearch::HomSearch(const Module& source, const Module& target,
                     const Limits& limits)
    : source_(source), target_(target), limits_(limits) {
  if (source.ring_ptr() != target.ring_ptr()) {
    throw InputError("hom search between modules over different rings");
  }
  gens_ = minimal_generators(source);
  map_.assign(source.order(), -1);
  map_[0] = 0;
  domain_ = {0};
  ann_target_.reserve(target.order());
  for (int t = 0; t < target.order(); ++t) {
    ann_target_.push_back(annihilator_bits(target, t));
  }
}

void HomSearch::set_generators(std::vector<int> gens) {
  gens_ = std::move(gens);
}

void HomSearch::fix(std::vector<int> partial) {
  if (static_cast<int>(partial.size()) != source_.order() || partial[0] != 0) {
    throw InputError("fixed partial map must cover the zero element");
  }
  map_ = std::move(partial);
  domain_.clear();
  for (int x = 0; x < source_.order(); ++x) {
    if (map_[x] >= 0) domain_.push_back(x);
  }
}

bool HomSearch::extend(int g, int image, std::vector<int>& assigned) {
  const Ring& ring = source_.ring();
  const size_t base = domain_.size();
  steps_ += base * ring.order();
  if (steps_ > limits_.max_search_steps) {
    throw GuardExceeded("hom search exceeded " +
                        std::to_string(limits_.max_search_steps) + " steps");
  }
  for (int r = 0; r < ring.order(); ++r) {
    const int rg = source_.act(r, g);
    const int rt = target_.act(r, image);
    for (size_t i = 0; i < base; ++i) {
      const int d = domain_[i];
      const int x = source_.add(d, rg);
      const int y = target_.add(map_[d], rt);
      if (map_[x] < 0) {
        if (injective_ && y == 0) return false;
        map_[x] = y;
        domain_.push_back(x);
        assigned.push_back(x);
      } else if (map_[x] != y) {
        return false;
      }
    }
  }
  return true;
}

bool HomSearch::recurse(
    size_t depth, const std::function<bool(const std::vector<int>&)>& visit,
    std::uint64_t& visited) {
  if (depth == gens_.size()) {
    ++visited;
    return visit(map_);
  }
  const int g = gens_[depth];
  if (map_[g] >= 0) return recurse(depth + 1, visit, visited);
  const Bits ann_g = annihilator_bits(source_, g);
  std::vector<int> assigned;
  for (int t = 0; t < target_.order(); ++t) {
    if (!subset(ann_g, ann_target_[t])) continue;
    if (injective_ && !subset(ann_target_[t], ann_g)) continue;
    assigned.clear();
    const bool ok = extend(g, t, assigned);
    bool keep_going = true;
    if (ok) keep_going = recurse(depth + 1, visit, visited);
    for (int x : assigned) map_[x] = -1;
    domain_.resize(domain_.size() - assigned.size());
    if (!keep_going) return false;
  }
  return true;
}

std::uint64_t HomSearch::run(
    const std::function<bool(const std::vector<int>&)>& visit) {
  for (int g : gens_) {
    if (g < 0 || g >= source_.order()) {
      throw InputError("hom search generator out of range");
    }
  }
  std::uint64_t visited = 0;
  recurse(0, visit, visited);
  return visited;
}

std::uint64_t count_homs(const Module& source, const Module& target,
                         const Limits& limits) {
  HomSearch search(source, target, limits);
  search.set_generators(minimal_generators(source));
  return search.run([](const std::vector<int>&) { return true; });
}

std::optional<std::vector<int>> find_embedding(const Module& source,
                                               const Module& target,
                                               const Limits& limits) {
  if (source.order() > target.order()) return std::nullopt;
  HomSearch search(source, target, limits);
  search.set_generators(minimal_generators(source));
  search.require_injective(true);
  std::optional<std::vector<int>> found;
  search.run([&found](const std::vector<int>& map) {
    found = map;
    return false;
  });
  return found;
}

bool embeds_into(const Module& source, const Module& target,
                 const Limits& limits) {
  return find_embedding(source, target, limits).has_value();
}

bool isomorphic(const Module& a, const Module& b, const Limits& limits) {
  return a.order() == b.order() && embeds_into(a, b, limits);
}

}  // namespace swclab
