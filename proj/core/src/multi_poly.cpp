#include "mrbound/multi_poly.hpp"

#include <numeric>

namespace mrbound {

std::uint64_t LatticePoint::norm() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint64_t{0});
}

std::string LatticePoint::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j > 0) out += ";";
    out += std::to_string(coords_[j]);
  }
  return out + ")";
}

MultiPoly::MultiPoly(std::shared_ptr<const NumberField> field, std::size_t arity)
    : field_(std::move(field)), arity_(arity) {}

MultiPoly MultiPoly::constant(const FieldElement& value, std::size_t arity) {
  MultiPoly out(value.field_ptr(), arity);
  out.add_term(Exponents(arity, 0), value);
  return out;
}

void MultiPoly::add_term(const Exponents& exponents, const FieldElement& coefficient) {
  if (exponents.size() != arity_) {
    throw Error(ErrorCode::kArityMismatch, "monomial has " + std::to_string(exponents.size()) +
                                               " exponents, polynomial arity is " + std::to_string(arity_));
  }
  if (!field_->same_field(coefficient.field())) {
    throw Error(ErrorCode::kFieldMismatch, "coefficient from a different number field");
  }
  if (coefficient.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coefficient);
    return;
  }
  FieldElement sum = it->second + coefficient;
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = std::move(sum);
  }
}

unsigned MultiPoly::absolute_degree() const {
  unsigned m = 0;
  for (const auto& [exps, coeff] : terms_) {
    m = std::max(m, std::accumulate(exps.begin(), exps.end(), 0u));
  }
  return m;
}

FieldElement MultiPoly::evaluate(const LatticePoint& n) const {
  if (n.arity() != arity_) {
    throw Error(ErrorCode::kArityMismatch, "point " + n.to_string() + " does not have arity " +
                                               std::to_string(arity_));
  }
  std::vector<Rational> acc(static_cast<std::size_t>(field_->degree()));
  Integer monomial, factor;
  for (const auto& [exps, coeff] : terms_) {
    monomial = 1;
    for (std::size_t j = 0; j < arity_ && monomial != 0; ++j) {
      mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(n[j]), exps[j]);
      monomial *= factor;
    }
    if (monomial == 0) continue;
    const Rational scale(monomial);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (coeff.coords()[i] != 0) acc[i] += scale * coeff.coords()[i];
    }
  }
  return FieldElement(field_, std::move(acc));
}

MultiPoly MultiPoly::scaled(const Rational& factor) const {
  MultiPoly out(field_, arity_);
  for (const auto& [exps, coeff] : terms_) out.add_term(exps, factor * coeff);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exps, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff.to_string() + ")";
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] == 0) continue;
      out += "*X" + std::to_string(j + 1);
      if (exps[j] > 1) out += "^" + std::to_string(exps[j]);
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.arity() == b.arity() && a.field().same_field(b.field()) && a.terms() == b.terms();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::kArityMismatch, "adding polynomials of different arity");
  MultiPoly out = a;
  for (const auto& [exps, coeff] : b.terms()) out.add_term(exps, coeff);
  return out;
}

MultiPoly operator-(const MultiPoly& a) { return a.scaled(Rational(-1)); }

}  // namespace mrbound
