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

#ifndef SMLT_FIELD_HPP
#define SMLT_FIELD_HPP

#include <cstdint>
#include <string>

#include "smlt/error.hpp"

namespace smlt {

// Exact arithmetic modulo a prime p < 2^32.  Elements carry their modulus so
// that mixing residues from different fields is caught at run time.
class FieldElement {
 public:
  FieldElement() : value_(0), prime_(0) {}
  FieldElement(std::uint64_t value, std::uint64_t prime)
      : value_(value), prime_(prime) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t prime() const { return prime_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElement operator+(FieldElement other) const;
  FieldElement operator-(FieldElement other) const;
  FieldElement operator*(FieldElement other) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.value_ == b.value_ && a.prime_ == b.prime_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

  std::string to_decimal() const { return std::to_string(value_); }

 private:
  void check_same_field(FieldElement other) const;

  std::uint64_t value_;
  std::uint64_t prime_;
};

// Prime-field configuration.  The modulus is validated by trial division at
// construction time; moduli at or above 2^32 are rejected so that products
// of residues always fit in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
  static constexpr std::uint64_t kSecondPrime = 1000000007;

  explicit PrimeField(std::uint64_t prime = kDefaultPrime);

  std::uint64_t prime() const { return prime_; }

  FieldElement zero() const { return FieldElement(0, prime_); }
  FieldElement one() const { return FieldElement(1, prime_); }
  // Reduces an arbitrary signed integer into [0, p).
  FieldElement element(std::int64_t n) const;
  FieldElement from_value(std::uint64_t v) const {
    return FieldElement(v % prime_, prime_);
  }
  // Parses an optionally signed decimal string; rejects anything else.
  FieldElement parse(const std::string& text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.prime_ == b.prime_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) {
    return !(a == b);
  }

 private:
  std::uint64_t prime_;
};

}  // namespace smlt

#endif  // SMLT_FIELD_HPP
