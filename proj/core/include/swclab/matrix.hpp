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

#ifndef SWCLAB_MATRIX_HPP_
#define SWCLAB_MATRIX_HPP_

#include <span>
#include <vector>

#include "swclab/field.hpp"

namespace swclab {

// Dense matrix over a FiniteField, entries stored row-major as field
// element encodings.
class Matrix {
 public:
  Matrix(FieldPtr field, int rows, int cols);
  Matrix(FieldPtr field, int rows, int cols, std::vector<int> entries);

  static Matrix identity(FieldPtr field, int n);
  // Decodes a row-major base-q integer, first entry most significant.
  static Matrix decode(FieldPtr field, int rows, int cols, long long code);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<int>& entries() const { return entries_; }

  int at(int r, int c) const { return entries_[r * cols_ + c]; }
  void set(int r, int c, int v) { entries_[r * cols_ + c] = v; }

  // Row-major base-q integer, first entry most significant.
  long long encode() const;

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.field_->same_as(*b.field_) && a.entries_ == b.entries_;
  }

 private:
  FieldPtr field_;
  int rows_;
  int cols_;
  std::vector<int> entries_;
};

// All of these throw kInput on dimension or field mismatch.
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
// Reduced row echelon form: leftmost pivot first, rows scanned top-down,
// pivots scaled to 1, zero rows at the bottom.
Matrix rref(const Matrix& a);
int rank(const Matrix& a);
// Throws kInput when a is singular or not square.
Matrix inverse(const Matrix& a);

}  // namespace swclab

#endif  // SWCLAB_MATRIX_HPP_
