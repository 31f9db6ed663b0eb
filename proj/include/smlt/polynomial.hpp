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

#ifndef SMLT_POLYNOMIAL_HPP
#define SMLT_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smlt/field.hpp"
#include "smlt/partition.hpp"

namespace smlt {

// A set-multilinear monomial: one chosen column per bucket of its support.
// Stored as a (bucket, column) sequence sorted by bucket, so comparison is
// plain lexicographic order and equality is structural.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Variable> vars);

  static Monomial unit() { return Monomial(); }
  static Monomial variable(Variable v) { return Monomial({v}); }

  const std::vector<Variable>& variables() const { return vars_; }
  IndexSet support() const;
  int degree() const { return static_cast<int>(vars_.size()); }
  std::optional<int> column_for(int bucket) const;

  // Merge of two monomials with disjoint supports.
  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Variable> vars_;
};

using Assignment = std::map<Variable, FieldElement>;

// Sparse exact representation of a set-multilinear polynomial: every stored
// monomial has support equal to index_set() and a nonzero coefficient.  The
// zero polynomial keeps its index set explicitly.  Term order is canonical,
// so operator== is structural equality.
class Polynomial {
 public:
  Polynomial(PrimeField field, IndexSet index_set)
      : field_(field), index_set_(index_set) {}

  static Polynomial zero(PrimeField field, IndexSet index_set) {
    return Polynomial(field, index_set);
  }
  static Polynomial constant(PrimeField field, FieldElement value);
  static Polynomial variable(PrimeField field, Variable v);
  // Sum_j coeffs[j] * x_{bucket, j}; index set {bucket}.
  static Polynomial linear_form(PrimeField field, int bucket,
                                const std::map<int, FieldElement>& coeffs);

  const PrimeField& field() const { return field_; }
  IndexSet index_set() const { return index_set_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  FieldElement coefficient(const Monomial& m) const;
  void set_coefficient(const Monomial& m, FieldElement c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(FieldElement c) const;

  FieldElement evaluate(const Assignment& assignment) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.index_set_ == b.index_set_ &&
           a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  PrimeField field_;
  IndexSet index_set_;
  std::map<Monomial, FieldElement> terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
FieldElement poly_eval(const Polynomial& p, const Assignment& assignment);

}  // namespace smlt

#endif  // SMLT_POLYNOMIAL_HPP
