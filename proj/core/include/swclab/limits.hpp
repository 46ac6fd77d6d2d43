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

#ifndef SWCLAB_LIMITS_HPP_
#define SWCLAB_LIMITS_HPP_

#include <cstdint>

namespace swclab {

// Size guards for every brute-force computation in the library. Anything
// that would exceed one of these throws ErrorKind::kGuardExceeded instead of
// running (or silently truncating).
struct Limits {
  // Largest ring/module order for which ring tables are materialized.
  int max_table_order = 1024;
  // Largest ring/module order for full lattice, automorphism and hom
  // enumeration.
  int max_order = 64;
  // Largest materialized code.
  int max_code_size = 4096;
  // Largest ambient module A^n materialized by the exhaustive verifiers.
  int max_ambient_order = 1024;
  // Largest number of partial-map extension steps a hom search may take.
  std::uint64_t max_search_steps = 200'000'000;
  // Extension search gives up (guard) beyond n * n * |G| * generators.
  std::uint64_t max_extension_work = 50'000'000;
  // Verifier bounds.
  int max_n = 3;
  int max_gens = 2;
};

}  // namespace swclab

#endif  // SWCLAB_LIMITS_HPP_
