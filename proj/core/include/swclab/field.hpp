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

#ifndef SWCLAB_FIELD_HPP_
#define SWCLAB_FIELD_HPP_

#include <memory>
#include <vector>

namespace swclab {

// Finite field F_q, q = p^e, with precomputed arithmetic tables.
//
// Elements are the integers 0..q-1. An element's base-p digits are the
// coefficients of its polynomial representative, constant term least
// significant; so in F_4 the class of x is 2 and x^2 = x + 1 is 3. The
// defining modulus is the lexicographically smallest monic irreducible of
// degree e over F_p, comparing coefficient lists from the constant term up.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 256;

  // Throws kInput for non-prime p or e < 1, kGuardExceeded when
  // p^e > kMaxOrder.
  static std::shared_ptr<const FiniteField> make(int p, int e);
  // Same, from the order q; throws kInput unless q is a prime power.
  static std::shared_ptr<const FiniteField> of_order(int q);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  int order() const { return q_; }
  // Monic modulus, coefficients from the constant term up (size e + 1).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  // Multiplicative inverse; a must be nonzero.
  int inv(int a) const;
  int pow(int a, long long n) const;

  bool same_as(const FiniteField& other) const {
    return p_ == other.p_ && e_ == other.e_;
  }

 private:
  FiniteField(int p, int e, std::vector<int> modulus);

  int p_;
  int e_;
  int q_;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(long long n);
// Returns {p, e} with q = p^e, or {0, 0} if q is not a prime power.
std::pair<int, int> prime_power_split(long long q);

}  // namespace swclab

#endif  // SWCLAB_FIELD_HPP_
