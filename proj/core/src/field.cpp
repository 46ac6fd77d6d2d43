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

#include "swclab/field.hpp"

#include <string>

#include "swclab/error.hpp"

namespace swclab {
namespace {

using Poly = std::vector<int>;  // coefficients, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int lead = a.back();
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int t = 0; t < count; ++t) {
      Poly g(d + 1, 0);
      g[d] = 1;
      for (int i = 0, x = t; i < d; ++i, x /= p) g[i] = x % p;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree e, coefficient lists compared from
// the constant term up.
Poly smallest_irreducible(int p, int e) {
  int count = 1;
  for (int i = 0; i < e; ++i) count *= p;
  for (int t = 0; t < count; ++t) {
    Poly f(e + 1, 0);
    f[e] = 1;
    // c_0 is the most significant digit of t so that t follows the order.
    for (int i = e - 1, x = t; i >= 0; --i, x /= p) f[i] = x % p;
    if (is_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");
}

Poly to_poly(int a, int p, int e) {
  Poly v(e, 0);
  for (int i = 0; i < e; ++i, a /= p) v[i] = a % p;
  return v;
}

int from_poly(const Poly& v, int p) {
  int a = 0;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) a = a * p + v[i];
  return a;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<int, int> prime_power_split(long long q) {
  if (q < 2) return {0, 0};
  long long p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {static_cast<int>(p), e};
}

std::shared_ptr<const FiniteField> FiniteField::make(int p, int e) {
  if (!is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not prime");
  }
  if (e < 1) throw InputError("field degree must be positive");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw GuardExceeded("field order exceeds " + std::to_string(kMaxOrder));
    }
  }
  return std::shared_ptr<const FiniteField>(
      new FiniteField(p, e, smallest_irreducible(p, e)));
}

std::shared_ptr<const FiniteField> FiniteField::of_order(int q) {
  const auto [p, e] = prime_power_split(q);
  if (p == 0) {
    throw InputError("field order " + std::to_string(q) +
                     " is not a prime power");
  }
  return make(p, e);
}

FiniteField::FiniteField(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e_; ++i) q_ *= p_;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    const Poly pa = to_poly(a, p_, e_);
    Poly na(e_);
    for (int i = 0; i < e_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = from_poly(na, p_);
    for (int b = 0; b < q_; ++b) {
      const Poly pb = to_poly(b, p_, e_);
      Poly sum(e_);
      for (int i = 0; i < e_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = from_poly(sum, p_);
      Poly prod(2 * e_, 0);
      for (int i = 0; i < e_; ++i) {
        for (int j = 0; j < e_; ++j) {
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
        }
      }
      Poly rem = poly_mod(prod, modulus_, p_);
      rem.resize(e_, 0);
      mul_[a * q_ + b] = from_poly(rem, p_);
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw InputError("zero has no multiplicative inverse");
  return inv_[a];
}

int FiniteField::pow(int a, long long n) const {
  int result = 1;
  int base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

}  // namespace swclab
