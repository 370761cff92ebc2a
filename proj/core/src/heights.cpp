#include "mrbound/heights.hpp"

namespace mrbound {

namespace {

RealInterval linear_measure(const IntPolynomial& q, mpfr_prec_t prec) {
  Integer a = abs(q.coefficient(1));
  Integer b = abs(q.coefficient(0));
  return RealInterval(a > b ? a : b, prec);
}

RealInterval squarefree_measure(const IntPolynomial& q, mpfr_prec_t prec) {
  if (q.degree() == 1) return linear_measure(q, prec);
  const RealInterval one(1L, prec);
  RealInterval acc(Integer(abs(q.lead())), prec);
  for (const auto& r : isolate_roots(q, prec)) acc = acc * max(one, r.box().abs());
  return acc;
}

unsigned long exponent_for(const FieldElement& x, const IntPolynomial& minpoly) {
  return static_cast<unsigned long>(x.field().degree() / minpoly.degree());
}

}  // namespace

RealInterval mahler_measure(const IntPolynomial& p, mpfr_prec_t prec) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "Mahler measure of the zero polynomial");
  const SquarefreeDecomposition dec = squarefree_decomposition(p);
  RealInterval acc(Integer(abs(dec.constant)), prec);
  for (const auto& [q, e] : dec.factors) acc = acc * pow(squarefree_measure(q, prec), e);
  return acc;
}

RealInterval field_height(const FieldElement& x, mpfr_prec_t prec) {
  if (x.is_zero()) throw Error(ErrorCode::kZeroElement, "height of zero is undefined");
  const IntPolynomial mp = minimal_polynomial(x);
  return pow(mahler_measure(mp, prec), exponent_for(x, mp));
}

Integer finite_part_exact(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::kZeroElement, "finite part of zero is undefined");
  const IntPolynomial mp = minimal_polynomial(x);
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), mp.lead().get_mpz_t(), exponent_for(x, mp));
  return out;
}

RealInterval finite_part(const FieldElement& x, mpfr_prec_t prec) {
  return RealInterval(finite_part_exact(x), prec);
}

RealInterval archimedean_part(const FieldElement& x, mpfr_prec_t prec) {
  const RealInterval one(1L, prec);
  RealInterval acc = one;
  for (const auto& c : x.conjugates(prec)) acc = acc * max(one, c.abs());
  return acc;
}

LemmaConstants lemma_constants(const MultiPoly& f, mpfr_prec_t prec) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "lemma constants need a non-zero polynomial");
  LemmaConstants out{RealInterval(0L, prec), Integer(1), RealInterval(prec), f.field().degree(),
                     f.absolute_degree()};
  for (const auto& [exps, coeff] : f.terms()) {
    out.c1 = out.c1 + house(coeff, prec);
    out.c2 *= finite_part_exact(coeff);
  }
  out.c = pow(max(RealInterval(1L, prec), out.c1), static_cast<unsigned long>(out.D)) * RealInterval(out.c2, prec);
  return out;
}

LemmaReport lemma_check(const MultiPoly& f, const std::vector<LatticePoint>& points, mpfr_prec_t prec,
                        mpfr_prec_t cap) {
  LemmaReport report{lemma_constants(f, prec), {}, 0, 0, 0, 0};
  const unsigned long dm = static_cast<unsigned long>(report.constants.D) * report.constants.m;
  for (const auto& n : points) {
    if (n.is_zero()) throw Error(ErrorCode::kInvalidArgument, "Lemma bound needs n != 0");
    LemmaPoint entry{n, LemmaStatus::kSkippedZero, RealInterval(prec), RealInterval(prec)};
    const FieldElement value = f.evaluate(n);
    if (value.is_zero()) {
      ++report.skipped;
      report.points.push_back(std::move(entry));
      continue;
    }
    const IntPolynomial mp = minimal_polynomial(value);
    const unsigned long e = exponent_for(value, mp);
    for (mpfr_prec_t p = prec;; p *= 2) {
      const LemmaConstants& k = p == prec ? report.constants : lemma_constants(f, p);
      entry.height = pow(mahler_measure(mp, p), e);
      entry.bound = k.c * pow(RealInterval(Integer(n.norm()), p), dm);
      const Tri le = certainly_le(entry.height, entry.bound);
      if (le != Tri::kUndecided || p * 2 > cap) {
        entry.status = le == Tri::kTrue    ? LemmaStatus::kHolds
                       : le == Tri::kFalse ? LemmaStatus::kViolated
                                           : LemmaStatus::kUndecided;
        break;
      }
    }
    switch (entry.status) {
      case LemmaStatus::kHolds: ++report.holds; break;
      case LemmaStatus::kViolated: ++report.violations; break;
      default: ++report.undecided; break;
    }
    report.points.push_back(std::move(entry));
  }
  return report;
}

}  // namespace mrbound
