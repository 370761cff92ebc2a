#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mrbound/multirec.hpp"

namespace mrbound {

struct VerifierConfig {
  Rational epsilon{1, 10};
  std::size_t i0 = 0;  // canonical term index, 0-based
  std::uint64_t max_norm = 1;
  mpfr_prec_t precision = kDefaultPrecision;  // starting precision
  mpfr_prec_t cap = kPrecisionCap;
  std::optional<std::size_t> place;  // embedding index; field default when empty
  unsigned threads = 0;              // 0 picks std::thread::hardware_concurrency()
  std::size_t subset_cap = kDefaultSubsetCap;
  int width_bits = 20;  // target relative width 2^-width_bits
};

/// Throws Error(kInvalidArgument) or Error(kIndexOutOfRange) when the config
/// does not fit the recurrence.
void validate(const MultiRecurrence& g, const VerifierConfig& config);
std::size_t resolve_place(const MultiRecurrence& g, const VerifierConfig& config);

struct ProofConstants {
  Integer z;                                 // lcm of coefficient denominators
  RealInterval A;                            // max_{i,j,t} max(1, |sigma_t(alpha_ij)|)
  std::optional<RealInterval> epsilon_prime;  // empty when A = 1
  unsigned m = 0;                            // max absolute degree
  std::size_t ell_cap = 0;                   // number of terms k
};

Integer denominator_z(const MultiRecurrence& g);
RealInterval a_constant(const MultiRecurrence& g, mpfr_prec_t prec);
/// eps / (2 log A). Throws Error(kDegenerateA) when the enclosure of A touches 1.
RealInterval epsilon_prime(const RealInterval& epsilon, const RealInterval& a);
RealInterval epsilon_prime(const Rational& epsilon, const RealInterval& a);
/// Refines A until it separates from 1 (or is exactly 1) before computing eps'.
ProofConstants proof_constants(const MultiRecurrence& g, const Rational& epsilon, mpfr_prec_t prec,
                               mpfr_prec_t cap = kPrecisionCap);

/// Rational primes below which the bases fail to be units: the prime divisors
/// of the field norms N(alpha_ij). Throws Error(kUnsupported) if a norm has a
/// composite cofactor beyond trial division.
std::vector<Integer> support_primes(const MultiRecurrence& g);

/// C2 = max_i sum over coefficients of f_i of house(coeff).
RealInterval c2_constant(const MultiRecurrence& g, mpfr_prec_t prec);

enum class BoundStatus {
  kHolds,     // lhs <= rhs proven by the enclosures
  kTight,     // enclosures overlap (typically an equality case)
  kViolated,  // lhs > rhs proven: a defect
};

struct NormBoundReport {
  BoundStatus status = BoundStatus::kTight;
  RealInterval lhs;  // max_{i,t} |sigma_t(f_i(n) alpha_i^n)|
  RealInterval rhs;  // C2 |n|^m A^|n|
  RealInterval c2;
  RealInterval a;
  mpfr_prec_t precision = kDefaultPrecision;
};

/// Throws Error(kInvalidArgument) for n = 0.
NormBoundReport norm_bound_check(const MultiRecurrence& g, const LatticePoint& n,
                                 mpfr_prec_t prec = kDefaultPrecision, mpfr_prec_t cap = kPrecisionCap);

enum class PointKind { kEvaluated, kSkippedZeroF, kSkippedVanishing, kUndecided };

struct RatioResult {
  PointKind kind = PointKind::kEvaluated;
  /// r(n) = |G(n)| e^{eps |n|} / |f_i0(n) alpha_i0^n|; set for evaluated and undecided points.
  std::optional<RealInterval> ratio;
  mpfr_prec_t precision = kDefaultPrecision;
  std::vector<IndexSet> vanishing;  // subsets found at n, when skipped for that reason
};

/// Classifies n and, unless skipped, encloses r(n) at increasing precision
/// until it is decided against 1 with relative width <= 2^-width_bits.
/// Undecided means the enclosure still contains 1 at the cap.
RatioResult bound_ratio(const MultiRecurrence& g, const VerifierConfig& config, const LatticePoint& n);

/// Number of n in N_0^s with |n| = N.
std::uint64_t shell_size(std::size_t s, std::uint64_t norm);
/// All n in N_0^s with |n| = N in colexicographic order.
std::vector<LatticePoint> shell_points(std::size_t s, std::uint64_t norm);

struct ShellReport {
  std::uint64_t N = 0;
  std::optional<RealInterval> min_ratio;  // empty when no point was evaluated
  LatticePoint argmin;
  std::uint64_t points_total = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped_vanishing = 0;
  std::uint64_t skipped_zero_f = 0;
  std::uint64_t undecided = 0;
  std::uint64_t failures = 0;  // evaluated points with r(n) < 1
  std::vector<LatticePoint> undecided_points;
};

struct ScanResult {
  std::vector<ShellReport> shells;
  /// Least N0 with r(n) >= 1 at every decided point of N0 <= |n| <= N_max;
  /// empty when even shell N_max fails.
  std::optional<std::uint64_t> threshold;
  std::uint64_t undecided_total = 0;
};

ScanResult scan_shells(const MultiRecurrence& g, const VerifierConfig& config);

/// C_emp(n) = |G(n)| prod_i H_K(z f_i(n)) ||z x||^{eps'} / max_i |z f_i(n) alpha_i^n|,
/// products and maxima over the terms with f_i(n) != 0, at one precision.
RealInterval probe_value(const MultiRecurrence& g, const ProofConstants& constants, std::size_t place,
                         const LatticePoint& n, mpfr_prec_t prec);

struct ProbePoint {
  LatticePoint n;
  RealInterval value;
  bool decided = true;  // positive with relative width <= 2^-width_bits
};

struct ProbeShell {
  std::uint64_t N = 0;
  std::optional<RealInterval> min_value;
  LatticePoint argmin;
  std::optional<RealInterval> running_min;
  std::uint64_t points_total = 0;
  std::uint64_t skipped = 0;
  std::uint64_t undecided = 0;
};

struct ProbeResult {
  ProofConstants constants;
  std::vector<ProbeShell> shells;
  std::vector<ProbePoint> points;  // evaluated points in scan order
  std::uint64_t undecided_total = 0;
};

/// Throws Error(kDegenerateA) when eps' is undefined for this recurrence.
ProbeResult evertse_probe(const MultiRecurrence& g, const VerifierConfig& config);

}  // namespace mrbound
