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

#include "swclab/matrix.hpp"

#include <string>
#include <utility>

#include "swclab/error.hpp"

namespace swclab {

Matrix::Matrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * cols, 0) {}

Matrix::Matrix(FieldPtr field, int rows, int cols, std::vector<int> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != rows_ * cols_) {
    throw InputError("matrix entry count does not match its dimensions");
  }
  for (int v : entries_) {
    if (v < 0 || v >= field_->order()) {
      throw InputError("matrix entry " + std::to_string(v) +
                       " is not a field element");
    }
  }
}

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::decode(FieldPtr field, int rows, int cols, long long code) {
  Matrix m(field, rows, cols);
  const int q = field->order();
  for (int i = rows * cols - 1; i >= 0; --i, code /= q) {
    m.entries_[i] = static_cast<int>(code % q);
  }
  return m;
}

long long Matrix::encode() const {
  long long code = 0;
  for (int v : entries_) code = code * field_->order() + v;
  return code;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

bool Matrix::is_zero() const {
  for (int v : entries_) {
    if (v != 0) return false;
  }
  return true;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!a.field().same_as(b.field())) {
    throw InputError("matrices are over different fields");
  }
}

}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("matrix dimension mismatch in addition");
  }
  const FiniteField& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.set(r, c, f.add(a.at(r, c), b.at(r, c)));
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw InputError("matrix dimension mismatch in product");
  }
  const FiniteField& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      int acc = 0;
      for (int i = 0; i < a.cols(); ++i) {
        acc = f.add(acc, f.mul(a.at(r, i), b.at(i, c)));
      }
      out.set(r, c, acc);
    }
  }
  return out;
}

Matrix rref(const Matrix& a) {
  const FiniteField& f = a.field();
  Matrix m = a;
  int pivot_row = 0;
  for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    int found = -1;
    for (int r = pivot_row; r < m.rows(); ++r) {
      if (m.at(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) {
      for (int c = 0; c < m.cols(); ++c) {
        const int tmp = m.at(found, c);
        m.set(found, c, m.at(pivot_row, c));
        m.set(pivot_row, c, tmp);
      }
    }
    const int scale = f.inv(m.at(pivot_row, col));
    for (int c = 0; c < m.cols(); ++c) {
      m.set(pivot_row, c, f.mul(scale, m.at(pivot_row, c)));
    }
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, col) == 0) continue;
      const int factor = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c) {
        m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(pivot_row, c))));
      }
    }
    ++pivot_row;
  }
  return m;
}

int rank(const Matrix& a) {
  const Matrix r = rref(a);
  int count = 0;
  for (int row = 0; row < r.rows(); ++row) {
    for (int c = 0; c < r.cols(); ++c) {
      if (r.at(row, c) != 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
  const int n = a.rows();
  Matrix aug(a.field_ptr(), n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.set(r, c, a.at(r, c));
    aug.set(r, n + r, 1);
  }
  const Matrix red = rref(aug);
  Matrix out(a.field_ptr(), n, n);
  for (int r = 0; r < n; ++r) {
    if (red.at(r, r) != 1) throw InputError("matrix is singular");
    for (int c = 0; c < n; ++c) out.set(r, c, red.at(r, n + c));
  }
  return out;
}

}  // namespace swclab
