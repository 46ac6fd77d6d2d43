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

#ifndef SWCLAB_VERIFIERS_HPP_
#define SWCLAB_VERIFIERS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swclab/automorphism.hpp"
#include "swclab/code.hpp"
#include "swclab/counterexample.hpp"
#include "swclab/limits.hpp"
#include "swclab/module.hpp"

namespace swclab {

enum class Verdict { kVerified, kCounterexample, kHypothesesUnmet, kGuardExceeded };

// "verified", "counterexample", "hypotheses-unmet", "guard-exceeded".
std::string verdict_name(Verdict v);

// kVerified is only reported after the declared enumeration completed.
struct VerdictReport {
  std::string claim;
  std::map<std::string, bool> hypotheses;
  Verdict result = Verdict::kVerified;
  std::map<std::string, std::string> witness;
  std::map<std::string, std::uint64_t> counts;
  std::vector<std::string> notes;
};

// "0 | 2 | 1,3": classes ordered by smallest member.
std::string format_partition(const OrbitIndex& index);

// Aut-orbit and annihilator partitions coincide on pseudo-injective
// modules; aut-orbits always refine annihilator classes.
VerdictReport verify_orbit_lemma(const ModulePtr& module,
                                 const Limits& limits = {});

struct PeelStep {
  std::vector<int> ideal;  // members of the maximal annihilator I
  int generator = 0;       // e with R e = I
  int zeros_source = 0;    // positions newly zeroed by e in c
  int zeros_target = 0;    // positions newly zeroed by e in f(c)
};

struct PeelTrace {
  int codeword = 0;  // index into the source code
  std::vector<PeelStep> steps;
  bool balanced = true;
};

struct PeelingResult {
  VerdictReport report;
  std::vector<PeelTrace> traces;
};

// Certifies that a Hamming-preserving f preserves annihilator weight by
// peeling off one maximal annihilator class at a time. Requires a left
// principal ideal ring; unmet preconditions land in the report.
PeelingResult midway_peeling(const CodeMap& f, const Limits& limits = {});

// Over A^n for n <= limits.max_n and codes with <= limits.max_gens
// generators: every linear monomorphism C -> A^n preserves Hamming weight
// iff it preserves swc. Hypotheses: R left PIR, A pseudo-injective.
VerdictReport verify_midway(const ModulePtr& module, const Limits& limits = {});

// Same enumeration: every swc-preserving monomorphism extends to a
// monomial transformation over Aut_R(A). Hypothesis: cyclic socle.
VerdictReport verify_sufficiency(const ModulePtr& module,
                                 const Limits& limits = {});

struct NecessityResult {
  VerdictReport report;
  std::optional<CounterexamplePack> pack;  // set iff result is counterexample
};

// For a non-cyclic socle: builds the counterexample for the first simple
// T_i with s_i > mu_i, pulls it back into A^N and re-verifies it there.
// Throws kUnsupported when no block projection or verified construction is
// available.
NecessityResult verify_necessity(const ModulePtr& module,
                                 const Limits& limits = {});

}  // namespace swclab

#endif  // SWCLAB_VERIFIERS_HPP_
