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

#include "smlt/matrix.hpp"

#include "smlt/error.hpp"

namespace smlt {

DenseMatrix::DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (rows != 0 && cols != 0 && rows > kMaxEntries / cols) {
    throw ceiling_error("MatrixTooLarge",
                        std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds the " + std::to_string(kMaxEntries) +
                            "-entry ceiling");
  }
  values_.assign(rows * cols, 0);
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
  if (cols_ != other.rows_ || field_ != other.field_) {
    throw validation_error("DimensionMismatch",
                           "cannot multiply " + std::to_string(rows_) + "x" +
                               std::to_string(cols_) + " by " +
                               std::to_string(other.rows_) + "x" +
                               std::to_string(other.cols_));
  }
  DenseMatrix out(field_, rows_, other.cols_);
  std::uint64_t p = field_.prime();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = values_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        std::uint64_t b = other.values_[k * other.cols_ + j];
        if (b == 0) continue;
        std::uint64_t& cell = out.values_[i * other.cols_ + j];
        cell = (cell + a * b % p) % p;
      }
    }
  }
  out.row_labels_ = row_labels_;
  out.col_labels_ = other.col_labels_;
  return out;
}

std::size_t matrix_rank(const DenseMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::uint64_t p = m.field().prime();
  std::vector<std::vector<std::uint64_t>> a(rows,
                                            std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = m.at(i, j).value();
    }
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::uint64_t inv =
        FieldElement(a[rank][col], p).inverse().value();
    for (std::size_t j = col; j < cols; ++j) {
      a[rank][j] = a[rank][j] * inv % p;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      std::uint64_t f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace smlt
