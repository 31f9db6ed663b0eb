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

#ifndef SMLT_PARTITION_HPP
#define SMLT_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "smlt/error.hpp"

namespace smlt {

// Subset of the bucket indices [1..d], d <= 64.  Buckets are 1-based
// throughout; bit i-1 of the mask stands for bucket i.
class IndexSet {
 public:
  static constexpr int kMaxBuckets = 64;

  IndexSet() : bits_(0) {}
  static IndexSet single(int bucket) { return IndexSet(bit(bucket)); }
  static IndexSet full(int d) {
    return IndexSet(d == 64 ? ~std::uint64_t{0}
                            : ((std::uint64_t{1} << d) - 1));
  }
  static IndexSet from_elements(const std::vector<int>& elements) {
    IndexSet s;
    for (int e : elements) s.bits_ |= bit(e);
    return s;
  }

  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }
  bool contains(int bucket) const { return (bits_ & bit(bucket)) != 0; }
  bool disjoint_with(IndexSet other) const { return (bits_ & other.bits_) == 0; }
  bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

  IndexSet with(int bucket) const { return IndexSet(bits_ | bit(bucket)); }
  IndexSet operator|(IndexSet other) const { return IndexSet(bits_ | other.bits_); }
  IndexSet operator&(IndexSet other) const { return IndexSet(bits_ & other.bits_); }
  // Set difference.
  IndexSet operator-(IndexSet other) const { return IndexSet(bits_ & ~other.bits_); }

  int min_element() const { return bits_ == 0 ? 0 : __builtin_ctzll(bits_) + 1; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(__builtin_ctzll(b) + 1);
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  std::uint64_t bits() const { return bits_; }

  friend auto operator<=>(IndexSet a, IndexSet b) = default;

 private:
  explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  static std::uint64_t bit(int bucket) {
    if (bucket < 1 || bucket > kMaxBuckets) {
      throw validation_error("BucketOutOfRange",
                             "bucket " + std::to_string(bucket) +
                                 " outside [1," +
                                 std::to_string(kMaxBuckets) + "]");
    }
    return std::uint64_t{1} << (bucket - 1);
  }

  std::uint64_t bits_;
};

// A variable x_{i,j}: bucket i, column j within the bucket.
struct Variable {
  int bucket;
  int column;

  friend auto operator<=>(const Variable&, const Variable&) = default;

  std::string to_string() const {
    return "x_{" + std::to_string(bucket) + "," + std::to_string(column) + "}";
  }
};

// The ambient partition X = X_1 | ... | X_d with |X_i| = bucket_sizes[i-1].
class VariablePartition {
 public:
  VariablePartition() = default;
  explicit VariablePartition(std::vector<int> bucket_sizes)
      : bucket_sizes_(std::move(bucket_sizes)) {
    if (bucket_sizes_.size() > IndexSet::kMaxBuckets) {
      throw validation_error("BucketOutOfRange",
                             "at most 64 buckets are supported");
    }
    for (int n : bucket_sizes_) {
      if (n < 1) {
        throw validation_error("BadPartition", "bucket sizes must be >= 1");
      }
    }
  }
  static VariablePartition uniform(int d, int n) {
    return VariablePartition(std::vector<int>(static_cast<std::size_t>(d), n));
  }

  int degree() const { return static_cast<int>(bucket_sizes_.size()); }
  int bucket_size(int bucket) const {
    check_bucket(bucket);
    return bucket_sizes_[static_cast<std::size_t>(bucket - 1)];
  }
  const std::vector<int>& bucket_sizes() const { return bucket_sizes_; }
  IndexSet all_buckets() const { return IndexSet::full(degree()); }

  bool contains(Variable v) const {
    return v.bucket >= 1 && v.bucket <= degree() && v.column >= 1 &&
           v.column <= bucket_sizes_[static_cast<std::size_t>(v.bucket - 1)];
  }
  void check_variable(Variable v) const {
    if (!contains(v)) {
      throw validation_error("UnknownVariable",
                             v.to_string() + " is not in the partition");
    }
  }

  friend bool operator==(const VariablePartition&,
                         const VariablePartition&) = default;

 private:
  void check_bucket(int bucket) const {
    if (bucket < 1 || bucket > degree()) {
      throw validation_error("BucketOutOfRange",
                             "bucket " + std::to_string(bucket) +
                                 " outside [1," + std::to_string(degree()) +
                                 "]");
    }
  }

  std::vector<int> bucket_sizes_;
};

}  // namespace smlt

#endif  // SMLT_PARTITION_HPP
