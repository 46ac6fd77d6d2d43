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

#ifndef SWCLAB_CODE_HPP_
#define SWCLAB_CODE_HPP_

#include <map>
#include <memory>
#include <vector>

#include "swclab/automorphism.hpp"
#include "swclab/limits.hpp"
#include "swclab/module.hpp"

namespace swclab {

// A word of A^n: one alphabet element index per coordinate.
using Word = std::vector<int>;

Word word_add(const Module& alphabet, const Word& x, const Word& y);
Word word_act(const Module& alphabet, int r, const Word& x);
int hamming_weight(const Word& x);

class Code;
using CodePtr = std::shared_ptr<const Code>;

// A linear code C ⊆ A^n: the R-submodule generated by a list of words,
// materialized in lexicographic order (so the zero word comes first).
class Code {
 public:
  // Throws kInput on malformed words, kGuardExceeded past
  // limits.max_code_size.
  static CodePtr generate(const ModulePtr& alphabet, int length,
                          std::vector<Word> generators,
                          const Limits& limits = {});

  const Module& alphabet() const { return *alphabet_; }
  const ModulePtr& alphabet_ptr() const { return alphabet_; }
  int length() const { return length_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Word>& generators() const { return generators_; }
  const std::vector<Word>& elements() const { return elements_; }
  // Position in elements(), or -1.
  int index_of(const Word& w) const;
  bool contains(const Word& w) const { return index_of(w) >= 0; }
  // The i-th coordinate of every codeword, in element order.
  std::vector<int> column(int i) const;

 private:
  Code() = default;

  ModulePtr alphabet_;
  int length_ = 0;
  std::vector<Word> generators_;
  std::vector<Word> elements_;
};

// An R-linear bijection between codes given by the images of the source
// generators, materialized and checked over the whole source.
class CodeMap {
 public:
  // Throws kInput when the generator assignment is ill-defined, not
  // injective, or does not hit the target exactly.
  static CodeMap make(CodePtr source, CodePtr target,
                      std::vector<Word> gen_images);
  static CodeMap identity(const CodePtr& code);

  const Code& source() const { return *source_; }
  const Code& target() const { return *target_; }
  const CodePtr& source_ptr() const { return source_; }
  const CodePtr& target_ptr() const { return target_; }
  const std::vector<Word>& gen_images() const { return gen_images_; }
  // induced()[i] = target index of f(source.elements()[i]).
  const std::vector<int>& induced() const { return induced_; }
  const Word& apply(int source_index) const;
  Word apply(const Word& w) const;

 private:
  CodePtr source_;
  CodePtr target_;
  std::vector<Word> gen_images_;
  std::vector<int> induced_;
};

enum class WeightKind { kHamming, kSwc, kAw };

// Component counts per class label. Hamming uses the two-class partition
// {0} | A \ {0}, whose labels are 0 and 1. Only nonzero counts are stored.
struct WeightProfile {
  WeightKind kind = WeightKind::kHamming;
  std::map<int, int> counts;

  int total() const;
  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

// `index` must be an aut-orbit partition for kSwc and an annihilator
// partition for kAw, built over the word's alphabet; ignored for kHamming.
WeightProfile weight_profile(const Word& c, WeightKind kind,
                             const OrbitIndex* index = nullptr);

// True iff f preserves the given weight on every source codeword.
bool map_preserves(const CodeMap& f, WeightKind kind,
                   const OrbitIndex* index = nullptr);

// (x_1..x_n)T = (x_{σ(1)}τ_1, ..., x_{σ(n)}τ_n), 0-based: coordinate i of
// the result is taus[i] applied to coordinate sigma[i] of the input.
struct MonomialTransform {
  std::vector<int> sigma;
  std::vector<int> taus;  // indices into an AutGroup
  friend bool operator==(const MonomialTransform&,
                         const MonomialTransform&) = default;
};

Word monomial_apply(const MonomialTransform& t, const AutGroup& group,
                    const Word& c);
// The transform that applies `first`, then `second`.
MonomialTransform monomial_compose(const MonomialTransform& first,
                                   const MonomialTransform& second,
                                   const AutGroup& group);

}  // namespace swclab

#endif  // SWCLAB_CODE_HPP_
