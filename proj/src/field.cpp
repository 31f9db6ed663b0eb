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

#include "smlt/field.hpp"

#include <cctype>

namespace smlt {

void FieldElement::check_same_field(FieldElement other) const {
  if (prime_ != other.prime_ || prime_ == 0) {
    throw validation_error("FieldMismatch",
                           "operands belong to different prime fields (" +
                               std::to_string(prime_) + " vs " +
                               std::to_string(other.prime_) + ")");
  }
}

FieldElement FieldElement::operator+(FieldElement other) const {
  check_same_field(other);
  std::uint64_t s = value_ + other.value_;
  if (s >= prime_) s -= prime_;
  return FieldElement(s, prime_);
}

FieldElement FieldElement::operator-(FieldElement other) const {
  check_same_field(other);
  std::uint64_t s = value_ + prime_ - other.value_;
  if (s >= prime_) s -= prime_;
  return FieldElement(s, prime_);
}

FieldElement FieldElement::operator*(FieldElement other) const {
  check_same_field(other);
  return FieldElement((value_ * other.value_) % prime_, prime_);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : prime_ - value_, prime_);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result(1 % prime_, prime_);
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) {
    throw validation_error("DivisionByZero", "inverse of 0 is undefined");
  }
  return pow(prime_ - 2);
}

PrimeField::PrimeField(std::uint64_t prime) : prime_(prime) {
  if (prime < 2 || prime >= (std::uint64_t{1} << 32)) {
    throw validation_error("BadPrime",
                           "modulus must satisfy 2 <= p < 2^32, got " +
                               std::to_string(prime));
  }
  for (std::uint64_t q = 2; q * q <= prime; ++q) {
    if (prime % q == 0) {
      throw validation_error("BadPrime", std::to_string(prime) +
                                             " is divisible by " +
                                             std::to_string(q));
    }
  }
}

FieldElement PrimeField::element(std::int64_t n) const {
  std::int64_t p = static_cast<std::int64_t>(prime_);
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return FieldElement(static_cast<std::uint64_t>(r), prime_);
}

FieldElement PrimeField::parse(const std::string& text) const {
  if (text.empty()) {
    throw io_error("BadFieldLiteral", "empty field constant");
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    i = 1;
    if (text.size() == 1) {
      throw io_error("BadFieldLiteral", "'-' is not a number");
    }
  }
  std::uint64_t acc = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw io_error("BadFieldLiteral",
                     "field constant is not a decimal integer: " + text);
    }
    acc = (acc * 10 + static_cast<std::uint64_t>(text[i] - '0')) % prime_;
  }
  FieldElement v(acc, prime_);
  return negative ? -v : v;
}

}  // namespace smlt
