#pragma once

#include <vector>

#include "mrbound/int_polynomial.hpp"
#include "mrbound/interval.hpp"

namespace mrbound {

/// A certified root disk: exactly one root of the polynomial lies within
/// `radius` of `center`. Real roots have a real center and `real` set.
struct RootEnclosure {
  ComplexInterval center;  // point interval
  RealInterval radius;     // point interval, upper bound on the distance
  bool real = false;

  /// Axis-aligned box containing the disk (imaginary part [0,0] for real roots).
  ComplexInterval box() const;
  /// Disks overlap (conservative: true when undecidable).
  bool may_intersect(const RootEnclosure& other) const;
};

/// Isolates all complex roots of a squarefree integer polynomial of degree >= 1.
///
/// Approximations come from Aberth iteration; each is certified by the
/// Weierstrass-correction Gershgorin argument: with
/// W_i = p(z_i) / (lead * prod_{j != i} (z_i - z_j)) every connected union of
/// m disks D(z_i, n|W_i|) holds exactly m roots, so pairwise disjoint disks
/// hold one root each. Working precision starts near `prec` and doubles until
/// the disks separate; PrecisionCapExceeded is thrown past `cap`.
///
/// Order: real roots ascending, then non-real roots by (re, im) of the centers.
std::vector<RootEnclosure> isolate_roots(const IntPolynomial& p, mpfr_prec_t prec,
                                         mpfr_prec_t cap = kPrecisionCap);

}  // namespace mrbound
