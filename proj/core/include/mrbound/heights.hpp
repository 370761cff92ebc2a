#pragma once

#include <vector>

#include "mrbound/multi_poly.hpp"

namespace mrbound {

/// |lead(p)| * prod over complex roots r of max(1, |r|).
/// Linear factors are handled exactly; the rest go through root isolation.
/// Throws Error(kZeroPolynomial) for p = 0.
RealInterval mahler_measure(const IntPolynomial& p, mpfr_prec_t prec);

/// Field height H_K(x) = prod over places of K of max(1, |x|_v), with the
/// archimedean places weighted 1 (real) or 2 (complex). Computed as
/// M(minpoly(x))^(D / deg x). Throws Error(kZeroElement) for x = 0.
RealInterval field_height(const FieldElement& x, mpfr_prec_t prec);

/// Finite-place part of H_K(x), i.e. H_K(x) divided by its archimedean part.
/// By the Mahler identity this is |lead(minpoly x)|^(D / deg x), an integer.
Integer finite_part_exact(const FieldElement& x);
RealInterval finite_part(const FieldElement& x, mpfr_prec_t prec);

/// Archimedean part prod_t max(1, |sigma_t(x)|).
RealInterval archimedean_part(const FieldElement& x, mpfr_prec_t prec);

/// Constants with H_K(f(n)) <= c * |n|^(D m) whenever n != 0 and f(n) != 0.
struct LemmaConstants {
  RealInterval c1;  // sum over coefficients of house(coeff)
  Integer c2;       // product over coefficients of finite_part(coeff)
  RealInterval c;   // max(1, c1)^D * c2
  int D = 1;
  unsigned m = 0;
};

/// Throws Error(kZeroPolynomial) when f has no terms.
LemmaConstants lemma_constants(const MultiPoly& f, mpfr_prec_t prec = kDefaultPrecision);

enum class LemmaStatus { kHolds, kViolated, kUndecided, kSkippedZero };

struct LemmaPoint {
  LatticePoint n;
  LemmaStatus status = LemmaStatus::kSkippedZero;
  RealInterval height;  // H_K(f(n)); meaningless when skipped
  RealInterval bound;   // c * |n|^(D m)
};

struct LemmaReport {
  LemmaConstants constants;
  std::vector<LemmaPoint> points;
  std::size_t holds = 0;
  std::size_t violations = 0;
  std::size_t undecided = 0;
  std::size_t skipped = 0;
};

/// Compares H_K(f(n)) against c * |n|^(D m) at every point, refining the
/// precision up to `cap` while the comparison is undecided. Points with
/// f(n) = 0 are skipped. Throws Error(kInvalidArgument) for the zero point.
LemmaReport lemma_check(const MultiPoly& f, const std::vector<LatticePoint>& points,
                        mpfr_prec_t prec = kDefaultPrecision, mpfr_prec_t cap = kPrecisionCap);

}  // namespace mrbound
