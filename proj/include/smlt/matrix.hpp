// Copyright 2026 The smlt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SMLT_MATRIX_HPP
#define SMLT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "smlt/field.hpp"

namespace smlt {

// Row-major dense matrix over a prime field, with opaque row/column labels.
// Used for the Nisan-style coefficient matrices M_k, L_k and R_k.
class DenseMatrix {
 public:
  static constexpr std::size_t kMaxEntries = 4'000'000;

  DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  FieldElement at(std::size_t r, std::size_t c) const {
    return FieldElement(values_[r * cols_ + c], field_.prime());
  }
  void set(std::size_t r, std::size_t c, FieldElement v) {
    values_[r * cols_ + c] = v.value();
  }

  std::vector<std::string>& row_labels() { return row_labels_; }
  std::vector<std::string>& col_labels() { return col_labels_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  DenseMatrix multiply(const DenseMatrix& other) const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> values_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Rank over F_p by exact Gaussian elimination; deterministic.
std::size_t matrix_rank(const DenseMatrix& m);

}  // namespace smlt

#endif  // SMLT_MATRIX_HPP
