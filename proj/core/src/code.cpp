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

#include "swclab/code.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "swclab/error.hpp"

namespace swclab {

Word word_add(const Module& alphabet, const Word& x, const Word& y) {
  Word out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = alphabet.add(x[i], y[i]);
  return out;
}

Word word_act(const Module& alphabet, int r, const Word& x) {
  Word out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = alphabet.act(r, x[i]);
  return out;
}

int hamming_weight(const Word& x) {
  return static_cast<int>(
      std::count_if(x.begin(), x.end(), [](int v) { return v != 0; }));
}

namespace {

void check_word(const Module& alphabet, int length, const Word& w) {
  if (static_cast<int>(w.size()) != length) {
    throw InputError("codeword has length " + std::to_string(w.size()) +
                     ", expected " + std::to_string(length));
  }
  for (int v : w) {
    if (v < 0 || v >= alphabet.order()) {
      throw InputError("codeword entry " + std::to_string(v) +
                       " is not an alphabet element");
    }
  }
}

}  // namespace

CodePtr Code::generate(const ModulePtr& alphabet, int length,
                       std::vector<Word> generators, const Limits& limits) {
  if (length < 1) throw InputError("code length must be positive");
  const Module& a = *alphabet;
  for (const auto& g : generators) check_word(a, length, g);
  std::set<Word> members{Word(length, 0)};
  std::vector<Word> list{Word(length, 0)};
  for (const auto& g : generators) {
    if (members.contains(g)) continue;
    std::set<Word> cyclic;
    for (int r = 0; r < a.ring().order(); ++r) cyclic.insert(word_act(a, r, g));
    const size_t base = list.size();
    for (size_t i = 0; i < base; ++i) {
      for (const auto& x : cyclic) {
        Word y = word_add(a, list[i], x);
        if (members.insert(y).second) {
          list.push_back(std::move(y));
          if (static_cast<int>(list.size()) > limits.max_code_size) {
            throw GuardExceeded("code exceeds " +
                                std::to_string(limits.max_code_size) +
                                " codewords");
          }
        }
      }
    }
  }
  auto code = std::shared_ptr<Code>(new Code());
  code->alphabet_ = alphabet;
  code->length_ = length;
  code->generators_ = std::move(generators);
  code->elements_.assign(members.begin(), members.end());
  return code;
}

int Code::index_of(const Word& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || *it != w) return -1;
  return static_cast<int>(it - elements_.begin());
}

std::vector<int> Code::column(int i) const {
  if (i < 0 || i >= length_) throw InputError("column index out of range");
  std::vector<int> out;
  out.reserve(elements_.size());
  for (const auto& w : elements_) out.push_back(w[i]);
  return out;
}

CodeMap CodeMap::make(CodePtr source, CodePtr target,
                      std::vector<Word> gen_images) {
  const Code& s = *source;
  const Code& t = *target;
  if (s.alphabet_ptr() != t.alphabet_ptr() &&
      s.alphabet().ring_ptr() != t.alphabet().ring_ptr()) {
    throw InputError("code map between codes over different rings");
  }
  if (gen_images.size() != s.generators().size()) {
    throw InputError("code map needs one image per source generator");
  }
  const Module& ta = t.alphabet();
  for (const auto& w : gen_images) check_word(ta, t.length(), w);
  const Module& sa = s.alphabet();
  std::map<Word, Word> image{{Word(s.length(), 0), Word(t.length(), 0)}};
  std::vector<Word> domain{Word(s.length(), 0)};
  for (size_t j = 0; j < gen_images.size(); ++j) {
    const size_t base = domain.size();
    for (int r = 0; r < sa.ring().order(); ++r) {
      const Word rg = word_act(sa, r, s.generators()[j]);
      const Word rh = word_act(ta, r, gen_images[j]);
      for (size_t i = 0; i < base; ++i) {
        Word x = word_add(sa, domain[i], rg);
        Word y = word_add(ta, image.at(domain[i]), rh);
        auto it = image.find(x);
        if (it == image.end()) {
          image.emplace(x, std::move(y));
          domain.push_back(std::move(x));
        } else if (it->second != y) {
          throw InputError(
              "ill-defined: generator images violate a relation among the "
              "source generators");
        }
      }
    }
  }
  std::set<Word> distinct;
  for (const auto& [x, y] : image) distinct.insert(y);
  if (distinct.size() != image.size()) {
    throw InputError("non-injective: two codewords share an image");
  }
  CodeMap f;
  f.induced_.resize(s.size());
  for (int i = 0; i < s.size(); ++i) {
    f.induced_[i] = t.index_of(image.at(s.elements()[i]));
  }
  if (std::find(f.induced_.begin(), f.induced_.end(), -1) != f.induced_.end() ||
      s.size() != t.size()) {
    throw InputError("image mismatch: the map does not land exactly on the "
                     "target code");
  }
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.gen_images_ = std::move(gen_images);
  return f;
}

CodeMap CodeMap::identity(const CodePtr& code) {
  return make(code, code, code->generators());
}

const Word& CodeMap::apply(int source_index) const {
  return target_->elements()[induced_[source_index]];
}

Word CodeMap::apply(const Word& w) const {
  const int i = source_->index_of(w);
  if (i < 0) throw InputError("word is not in the source code");
  return apply(i);
}

int WeightProfile::total() const {
  int sum = 0;
  for (const auto& [label, count] : counts) sum += count;
  return sum;
}

WeightProfile weight_profile(const Word& c, WeightKind kind,
                             const OrbitIndex* index) {
  WeightProfile out;
  out.kind = kind;
  if (kind == WeightKind::kHamming) {
    for (int v : c) ++out.counts[v == 0 ? 0 : 1];
    return out;
  }
  const PartitionKind needed = kind == WeightKind::kSwc
                                   ? PartitionKind::kAutOrbit
                                   : PartitionKind::kAnnihilator;
  if (index == nullptr || index->kind != needed) {
    throw InputError("index/alphabet mismatch: wrong partition for weight");
  }
  for (int v : c) {
    if (v < 0 || v >= static_cast<int>(index->label.size())) {
      throw InputError("index/alphabet mismatch: element outside partition");
    }
    ++out.counts[index->label[v]];
  }
  return out;
}

bool map_preserves(const CodeMap& f, WeightKind kind, const OrbitIndex* index) {
  const auto& src = f.source().elements();
  for (int i = 0; i < static_cast<int>(src.size()); ++i) {
    if (weight_profile(src[i], kind, index) !=
        weight_profile(f.apply(i), kind, index)) {
      return false;
    }
  }
  return true;
}

Word monomial_apply(const MonomialTransform& t, const AutGroup& group,
                    const Word& c) {
  const size_t n = c.size();
  if (t.sigma.size() != n || t.taus.size() != n) {
    throw InputError("monomial transform length does not match the word");
  }
  Word out(n);
  for (size_t i = 0; i < n; ++i) {
    out[i] = group.element(t.taus[i])[c[t.sigma[i]]];
  }
  return out;
}

MonomialTransform monomial_compose(const MonomialTransform& first,
                                   const MonomialTransform& second,
                                   const AutGroup& group) {
  const size_t n = first.sigma.size();
  if (second.sigma.size() != n) {
    throw InputError("monomial transforms of different lengths");
  }
  MonomialTransform out;
  out.sigma.resize(n);
  out.taus.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const int j = second.sigma[i];
    out.sigma[i] = first.sigma[j];
    out.taus[i] = group.compose(first.taus[j], second.taus[i]);
  }
  return out;
}

}  // namespace swclab
