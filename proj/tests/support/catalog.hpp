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

// Shared (R, A) fixtures for the unit and acceptance suites.

#ifndef SWCLAB_TESTS_SUPPORT_CATALOG_HPP_
#define SWCLAB_TESTS_SUPPORT_CATALOG_HPP_

#include <string>
#include <vector>

#include "swclab/module.hpp"
#include "swclab/ring.hpp"

namespace swclab::testing {

struct CatalogEntry {
  std::string name;
  ModulePtr module;
};

inline ModulePtr z4_regular() { return make_regular_module(make_mod_n_ring(4)); }

inline ModulePtr z4_z2() {
  return make_mod_m_module(make_mod_n_ring(4), 2);
}

inline ModulePtr z4_z2_squared() {
  RingPtr z4 = make_mod_n_ring(4);
  ModulePtr v = make_mod_m_module(z4, 2);
  return make_direct_sum(z4, {v, v});
}

inline ModulePtr z4_z2_plus_z4() {
  RingPtr z4 = make_mod_n_ring(4);
  return make_direct_sum(z4, {make_mod_m_module(z4, 2), make_regular_module(z4)});
}

inline ModulePtr f2_column(int k) {
  return make_column_module(make_matrix_ring(1, 2), k);
}

inline ModulePtr m2f2_column(int k) {
  return make_column_module(make_matrix_ring(2, 2), k);
}

inline ModulePtr z6_regular() { return make_regular_module(make_mod_n_ring(6)); }

// Modules of order <= 16, small enough for subset-based oracles.
inline std::vector<CatalogEntry> small_catalog() {
  RingPtr z8 = make_mod_n_ring(8);
  RingPtr z2z2 = make_product_ring({make_mod_n_ring(2), make_mod_n_ring(2)});
  return {
      {"Z4", z4_regular()},
      {"Z4:(Z2)^2", z4_z2_squared()},
      {"Z4:Z2", z4_z2()},
      {"Z4:Z2+Z4", z4_z2_plus_z4()},
      {"F2:F2^2", f2_column(2)},
      {"F2:F2^3", f2_column(3)},
      {"F2:F2", f2_column(1)},
      {"Z6", z6_regular()},
      {"Z8", make_regular_module(z8)},
      {"Z8:Z2+Z4", make_direct_sum(z8, {make_mod_m_module(z8, 2),
                                        make_mod_m_module(z8, 4)})},
      {"Z2xZ2", make_regular_module(z2z2)},
      {"M2(F2):F2^2", m2f2_column(1)},
      {"M2(F2)", make_regular_module(make_matrix_ring(2, 2))},
      {"F4:F4^2", make_column_module(make_matrix_ring(1, 4), 2)},
  };
}

// The acceptance catalog of (R, A) pairs plus the larger fixtures.
inline std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out = small_catalog();
  out.push_back({"M2(F2):M2x3(F2)", m2f2_column(3)});
  out.push_back({"F3:F3^2", make_column_module(make_matrix_ring(1, 3), 2)});
  return out;
}

}  // namespace swclab::testing

#endif  // SWCLAB_TESTS_SUPPORT_CATALOG_HPP_
