#pragma once

#include <string>

#include "mrbound/multirec.hpp"
#include "mrbound/spec_io.hpp"

namespace fixture {

inline std::string data_path(const std::string& name) { return std::string(MRBOUND_DATA_DIR) + "/" + name; }

inline mrbound::MultiRecurrence load(const std::string& name) {
  return mrbound::parse_spec(mrbound::read_text_file(data_path(name)));
}

inline std::shared_ptr<const mrbound::NumberField> q() { return mrbound::NumberField::rationals(); }

inline std::shared_ptr<const mrbound::NumberField> q_sqrt5() {
  static const auto k = mrbound::NumberField::create(mrbound::IntPolynomial{-5, 0, 1});
  return k;
}

inline std::shared_ptr<const mrbound::NumberField> q_cbrt2() {
  static const auto k = mrbound::NumberField::create(mrbound::IntPolynomial{-2, 0, 0, 1});
  return k;
}

inline mrbound::FieldElement rat(const std::shared_ptr<const mrbound::NumberField>& k, long p, long q = 1) {
  mrbound::Rational x(p, q);
  x.canonicalize();
  return k->from_rational(x);
}

/// phi = (1 + sqrt5)/2 and psi = (1 - sqrt5)/2 in Q(sqrt5).
inline mrbound::FieldElement phi() { return q_sqrt5()->element({mrbound::Rational(1, 2), mrbound::Rational(1, 2)}); }
inline mrbound::FieldElement psi() { return q_sqrt5()->element({mrbound::Rational(1, 2), mrbound::Rational(-1, 2)}); }

/// Single-variable polynomial c * X1^e.
inline mrbound::MultiPoly monomial(const mrbound::FieldElement& c, mrbound::Exponents e) {
  mrbound::MultiPoly p(c.field_ptr(), e.size());
  p.add_term(e, c);
  return p;
}

/// Canonical index of the phi term in the Fibonacci fixture.
inline std::size_t fibonacci_phi_index(const mrbound::MultiRecurrence& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.terms()[i].bases[0] == phi()) return i;
  }
  return g.size();
}

}  // namespace fixture
