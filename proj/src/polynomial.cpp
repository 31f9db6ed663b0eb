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

#include "smlt/polynomial.hpp"

#include <algorithm>

namespace smlt {

Monomial::Monomial(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  for (std::size_t i = 1; i < vars_.size(); ++i) {
    if (vars_[i - 1].bucket == vars_[i].bucket) {
      throw validation_error("IndexSetOverlap",
                             "monomial uses bucket " +
                                 std::to_string(vars_[i].bucket) + " twice");
    }
  }
}

IndexSet Monomial::support() const {
  IndexSet s;
  for (const Variable& v : vars_) s = s.with(v.bucket);
  return s;
}

std::optional<int> Monomial::column_for(int bucket) const {
  for (const Variable& v : vars_) {
    if (v.bucket == bucket) return v.column;
  }
  return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Variable> merged = vars_;
  merged.insert(merged.end(), other.vars_.begin(), other.vars_.end());
  return Monomial(std::move(merged));
}

std::string Monomial::to_string() const {
  if (vars_.empty()) return "1";
  std::string s;
  for (const Variable& v : vars_) s += v.to_string();
  return s;
}

Polynomial Polynomial::constant(PrimeField field, FieldElement value) {
  Polynomial p(field, IndexSet());
  if (!value.is_zero()) p.terms_.emplace(Monomial::unit(), value);
  return p;
}

Polynomial Polynomial::variable(PrimeField field, Variable v) {
  Polynomial p(field, IndexSet::single(v.bucket));
  p.terms_.emplace(Monomial::variable(v), field.one());
  return p;
}

Polynomial Polynomial::linear_form(PrimeField field, int bucket,
                                   const std::map<int, FieldElement>& coeffs) {
  Polynomial p(field, IndexSet::single(bucket));
  for (const auto& [column, c] : coeffs) {
    if (!c.is_zero()) {
      p.terms_.emplace(Monomial::variable({bucket, column}), c);
    }
  }
  return p;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::set_coefficient(const Monomial& m, FieldElement c) {
  if (m.support() != index_set_) {
    throw validation_error("IndexSetMismatch",
                           "monomial support " + m.support().to_string() +
                               " differs from polynomial index set " +
                               index_set_.to_string());
  }
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (index_set_ != other.index_set_) {
    throw validation_error("IndexSetMismatch",
                           "cannot add polynomials over index sets " +
                               index_set_.to_string() + " and " +
                               other.index_set_.to_string());
  }
  Polynomial out(field_, index_set_);
  out.terms_ = terms_;
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = out.terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (!index_set_.disjoint_with(other.index_set_)) {
    throw validation_error("IndexSetOverlap",
                           "cannot multiply polynomials over overlapping "
                           "index sets " +
                               index_set_.to_string() + " and " +
                               other.index_set_.to_string());
  }
  Polynomial out(field_, index_set_ | other.index_set_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      Monomial m = m1 * m2;
      FieldElement c = c1 * c2;
      auto [it, inserted] = out.terms_.emplace(std::move(m), c);
      if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial out(field_, index_set_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) {
    out.terms_.emplace(m, coeff * c);
  }
  return out;
}

FieldElement Polynomial::evaluate(const Assignment& assignment) const {
  FieldElement total = field_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElement prod = c;
    for (const Variable& v : m.variables()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        throw validation_error("MissingAssignment",
                               "no value for " + v.to_string());
      }
      prod = prod * it->second;
    }
    total = total + prod;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    if (!c.is_one() || m.degree() == 0) {
      s += c.to_decimal();
      if (m.degree() > 0) s += "*";
    }
    if (m.degree() > 0) s += m.to_string();
    first = false;
  }
  return s;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

FieldElement poly_eval(const Polynomial& p, const Assignment& assignment) {
  return p.evaluate(assignment);
}

}  // namespace smlt
