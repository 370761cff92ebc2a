#include "mrbound/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mrbound/heights.hpp"

namespace mrbound {

namespace {

RealInterval modulus(const FieldElement& x, std::size_t place, mpfr_prec_t prec) {
  return x.embed(place, prec).abs();
}

/// |sigma(f)| * prod_j |sigma(alpha_j)|^{n_j}; no cancellation, unlike embedding the product.
RealInterval term_modulus(const Term& t, const FieldElement& f, std::size_t place, const LatticePoint& n,
                          mpfr_prec_t prec) {
  RealInterval acc = modulus(f, place, prec);
  for (std::size_t j = 0; j < n.arity(); ++j) {
    if (n[j] > 0) acc = acc * pow(modulus(t.bases[j], place, prec), n[j]);
  }
  return acc;
}

bool decided_against_one(const RealInterval& r) {
  const RealInterval one(1L, r.precision());
  return certainly_le(one, r) == Tri::kTrue || certainly_lt(r, one) == Tri::kTrue;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  // Without thread-local MPFR caches concurrent calls are unsafe.
  if (!mpfr_buildopt_tls_p()) n = 1;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const unsigned workers = worker_count(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Smaller lower endpoint wins; ties go to the lexicographically smaller point.
bool better_min(const RealInterval& value, const LatticePoint& n, const RealInterval& best, const LatticePoint& at) {
  const int c = mpfr_cmp(value.lower(), best.lower());
  return c < 0 || (c == 0 && n < at);
}

struct Classification {
  PointKind kind = PointKind::kEvaluated;
  std::vector<FieldElement> values;
  std::vector<IndexSet> vanishing;
};

Classification classify(const MultiRecurrence& g, const VerifierConfig& config, const LatticePoint& n) {
  Classification out;
  if (g.term(config.i0).poly.evaluate(n).is_zero()) {
    out.kind = PointKind::kSkippedZeroF;
    return out;
  }
  out.values = g.term_values(n);
  out.vanishing = vanishing_subsets(out.values, config.i0, config.subset_cap);
  if (!out.vanishing.empty()) out.kind = PointKind::kSkippedVanishing;
  return out;
}

}  // namespace

void validate(const MultiRecurrence& g, const VerifierConfig& config) {
  if (config.epsilon <= 0) throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  if (config.i0 >= g.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "i0 = " + std::to_string(config.i0) + " out of range (k = " + std::to_string(g.size()) + ")");
  }
  if (config.max_norm < 1) throw Error(ErrorCode::kInvalidArgument, "max_norm must be at least 1");
  if (config.precision < 16 || config.precision > config.cap) {
    throw Error(ErrorCode::kInvalidArgument, "precision must lie in [16, " + std::to_string(config.cap) + "]");
  }
  if (config.place && *config.place >= static_cast<std::size_t>(g.field().degree())) {
    throw Error(ErrorCode::kIndexOutOfRange, "place index out of range (D = " +
                                                 std::to_string(g.field().degree()) + ")");
  }
}

std::size_t resolve_place(const MultiRecurrence& g, const VerifierConfig& config) {
  return config.place.value_or(g.field().default_place());
}

Integer denominator_z(const MultiRecurrence& g) {
  Integer z = 1;
  for (const auto& t : g.terms()) {
    for (const auto& [exps, coeff] : t.poly.terms()) z = lcm(z, denominator(coeff));
  }
  return z;
}

RealInterval a_constant(const MultiRecurrence& g, mpfr_prec_t prec) {
  RealInterval a(1L, prec);
  for (const auto& t : g.terms()) {
    for (const auto& b : t.bases) a = max(a, house(b, prec));
  }
  return a;
}

RealInterval epsilon_prime(const RealInterval& epsilon, const RealInterval& a) {
  const RealInterval one(1L, a.precision());
  if (certainly_lt(one, a) != Tri::kTrue) {
    throw Error(ErrorCode::kDegenerateA, "A = " + a.to_string() +
                                             " is not separated from 1; all base conjugates lie on the unit circle");
  }
  return epsilon / (RealInterval(2L, a.precision()) * log(a));
}

RealInterval epsilon_prime(const Rational& epsilon, const RealInterval& a) {
  return epsilon_prime(RealInterval(epsilon, a.precision()), a);
}

ProofConstants proof_constants(const MultiRecurrence& g, const Rational& epsilon, mpfr_prec_t prec,
                               mpfr_prec_t cap) {
  ProofConstants out{denominator_z(g), a_constant(g, prec), std::nullopt, g.absolute_degree(), g.size()};
  const RealInterval one(1L, prec);
  for (mpfr_prec_t p = prec; !out.A.is_point() && certainly_lt(one, out.A) != Tri::kTrue && p * 2 <= cap;) {
    p *= 2;
    out.A = a_constant(g, p);
  }
  if (certainly_lt(RealInterval(1L, out.A.precision()), out.A) == Tri::kTrue) {
    out.epsilon_prime = epsilon_prime(epsilon, out.A);
  }
  return out;
}

std::vector<Integer> support_primes(const MultiRecurrence& g) {
  constexpr unsigned long kTrialLimit = 1UL << 20;
  std::vector<Integer> primes;
  auto add = [&](const Integer& p) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  };
  for (const auto& t : g.terms()) {
    for (const auto& b : t.bases) {
      Integer n = abs(field_norm(b).get_num());
      for (unsigned long p = 2; p <= kTrialLimit && n > 1; ++p) {
        if (Integer(p) * p > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
          add(Integer(p));
          while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
        }
      }
      if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
          throw Error(ErrorCode::kUnsupported, "base norm cofactor " + to_string(n) + " is beyond trial division");
        }
        add(n);
      }
    }
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

RealInterval c2_constant(const MultiRecurrence& g, mpfr_prec_t prec) {
  RealInterval c2(0L, prec);
  for (const auto& t : g.terms()) {
    RealInterval sum(0L, prec);
    for (const auto& [exps, coeff] : t.poly.terms()) sum = sum + house(coeff, prec);
    c2 = max(c2, sum);
  }
  return c2;
}

NormBoundReport norm_bound_check(const MultiRecurrence& g, const LatticePoint& n, mpfr_prec_t prec,
                                 mpfr_prec_t cap) {
  if (n.arity() != g.arity()) {
    throw Error(ErrorCode::kArityMismatch, "point " + n.to_string() + " does not have arity " +
                                               std::to_string(g.arity()));
  }
  if (n.is_zero()) throw Error(ErrorCode::kInvalidArgument, "norm bound needs n != 0");
  std::vector<FieldElement> f;
  for (const auto& t : g.terms()) f.push_back(t.poly.evaluate(n));
  const auto D = static_cast<std::size_t>(g.field().degree());
  NormBoundReport out;
  // Equality cases never separate, so only two refinements are attempted.
  const mpfr_prec_t last = std::min(cap, prec * 4);
  for (mpfr_prec_t p = prec; p <= last; p *= 2) {
    out.precision = p;
    out.c2 = c2_constant(g, p);
    out.a = a_constant(g, p);
    out.lhs = RealInterval(0L, p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (f[i].is_zero()) continue;
      for (std::size_t t = 0; t < D; ++t) out.lhs = max(out.lhs, term_modulus(g.terms()[i], f[i], t, n, p));
    }
    out.rhs = out.c2 * pow(RealInterval(Integer(n.norm()), p), g.absolute_degree()) * pow(out.a, n.norm());
    if (certainly_le(out.lhs, out.rhs) == Tri::kTrue) {
      out.status = BoundStatus::kHolds;
      break;
    }
    if (certainly_lt(out.rhs, out.lhs) == Tri::kTrue) {
      out.status = BoundStatus::kViolated;
      break;
    }
    out.status = BoundStatus::kTight;
  }
  return out;
}

RatioResult bound_ratio(const MultiRecurrence& g, const VerifierConfig& config, const LatticePoint& n) {
  validate(g, config);
  if (n.arity() != g.arity()) {
    throw Error(ErrorCode::kArityMismatch, "point " + n.to_string() + " does not have arity " +
                                               std::to_string(g.arity()));
  }
  RatioResult out;
  Classification c = classify(g, config, n);
  out.kind = c.kind;
  out.vanishing = std::move(c.vanishing);
  if (out.kind != PointKind::kEvaluated) return out;

  const std::size_t place = resolve_place(g, config);
  FieldElement value = g.field().zero();
  for (const auto& v : c.values) value = value + v;
  const Term& term = g.term(config.i0);
  const FieldElement f = term.poly.evaluate(n);
  for (mpfr_prec_t p = config.precision;; p *= 2) {
    out.precision = p;
    const RealInterval denom = term_modulus(term, f, place, n, p);
    if (!denom.contains_zero()) {
      const RealInterval growth = exp(RealInterval(config.epsilon, p) * RealInterval(Integer(n.norm()), p));
      out.ratio = modulus(value, place, p) * growth / denom;
      const bool decided = decided_against_one(*out.ratio);
      if (decided && out.ratio->relative_width_at_most(config.width_bits)) break;
      if (p * 2 > config.cap) {
        if (!decided) out.kind = PointKind::kUndecided;
        break;
      }
    } else if (p * 2 > config.cap) {
      out.kind = PointKind::kUndecided;
      break;
    }
  }
  return out;
}

std::uint64_t shell_size(std::size_t s, std::uint64_t norm) {
  if (s == 0) return norm == 0 ? 1 : 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), norm + s - 1, s - 1);
  return b.get_ui();
}

namespace {

void colex_fill(std::vector<std::uint64_t>& coords, std::size_t len, std::uint64_t remaining,
                std::vector<LatticePoint>& out) {
  if (len == 1) {
    coords[0] = remaining;
    out.emplace_back(coords);
    return;
  }
  for (std::uint64_t last = 0; last <= remaining; ++last) {
    coords[len - 1] = last;
    colex_fill(coords, len - 1, remaining - last, out);
  }
}

}  // namespace

std::vector<LatticePoint> shell_points(std::size_t s, std::uint64_t norm) {
  std::vector<LatticePoint> out;
  if (s == 0) return out;
  out.reserve(shell_size(s, norm));
  std::vector<std::uint64_t> coords(s, 0);
  colex_fill(coords, s, norm, out);
  return out;
}

ScanResult scan_shells(const MultiRecurrence& g, const VerifierConfig& config) {
  validate(g, config);
  ScanResult out;
  std::optional<std::uint64_t> last_failure;
  for (std::uint64_t N = 1; N <= config.max_norm; ++N) {
    const std::vector<LatticePoint> points = shell_points(g.arity(), N);
    std::vector<RatioResult> results(points.size());
    parallel_for(points.size(), config.threads, [&](std::size_t i) { results[i] = bound_ratio(g, config, points[i]); });

    ShellReport shell;
    shell.N = N;
    shell.points_total = points.size();
    for (std::size_t i = 0; i < points.size(); ++i) {
      const RatioResult& r = results[i];
      switch (r.kind) {
        case PointKind::kSkippedZeroF: ++shell.skipped_zero_f; continue;
        case PointKind::kSkippedVanishing: ++shell.skipped_vanishing; continue;
        case PointKind::kUndecided:
          ++shell.undecided;
          shell.undecided_points.push_back(points[i]);
          continue;
        case PointKind::kEvaluated: break;
      }
      ++shell.evaluated;
      const RealInterval one(1L, r.ratio->precision());
      if (certainly_lt(*r.ratio, one) == Tri::kTrue) ++shell.failures;
      if (!shell.min_ratio) {
        shell.min_ratio = *r.ratio;
        shell.argmin = points[i];
      } else {
        if (better_min(*r.ratio, points[i], *shell.min_ratio, shell.argmin)) shell.argmin = points[i];
        shell.min_ratio = min(*shell.min_ratio, *r.ratio);
      }
    }
    if (shell.failures > 0) last_failure = N;
    out.undecided_total += shell.undecided;
    out.shells.push_back(std::move(shell));
  }
  if (!last_failure) {
    out.threshold = 1;
  } else if (*last_failure < config.max_norm) {
    out.threshold = *last_failure + 1;
  }
  return out;
}

RealInterval probe_value(const MultiRecurrence& g, const ProofConstants& constants, std::size_t place,
                         const LatticePoint& n, mpfr_prec_t prec) {
  if (!constants.epsilon_prime) throw Error(ErrorCode::kDegenerateA, "eps' is undefined because A = 1");
  const auto D = static_cast<std::size_t>(g.field().degree());
  const RealInterval z(constants.z, prec);
  RealInterval heights(1L, prec);
  RealInterval house_x(0L, prec);
  std::optional<RealInterval> max_term;
  FieldElement value = g.field().zero();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Term& t = g.terms()[i];
    const FieldElement f = t.poly.evaluate(n);
    if (f.is_zero()) continue;
    value = value + f * g.base_power(i, n);
    heights = heights * field_height(constants.z * f, prec);
    for (std::size_t s = 0; s < D; ++s) {
      const RealInterval m = z * term_modulus(t, f, s, n, prec);
      house_x = max(house_x, m);
      if (s == place) max_term = max_term ? max(*max_term, m) : m;
    }
  }
  if (!max_term || !house_x.is_positive()) {
    throw Error(ErrorCode::kDivisionByZero, "no non-zero term at " + n.to_string());
  }
  const RealInterval scale = exp(RealInterval(*constants.epsilon_prime) * log(house_x));
  return modulus(value, place, prec) * heights * scale / *max_term;
}

ProbeResult evertse_probe(const MultiRecurrence& g, const VerifierConfig& config) {
  validate(g, config);
  ProbeResult out{proof_constants(g, config.epsilon, config.precision, config.cap), {}, {}, 0};
  if (!out.constants.epsilon_prime) {
    throw Error(ErrorCode::kDegenerateA, "A = 1: every base conjugate lies on the unit circle, eps' is undefined");
  }
  const std::size_t place = resolve_place(g, config);
  std::optional<RealInterval> running;
  for (std::uint64_t N = 1; N <= config.max_norm; ++N) {
    const std::vector<LatticePoint> points = shell_points(g.arity(), N);
    std::vector<std::optional<ProbePoint>> results(points.size());
    parallel_for(points.size(), config.threads, [&](std::size_t i) {
      if (classify(g, config, points[i]).kind != PointKind::kEvaluated) return;
      ProbePoint pp{points[i], RealInterval(config.precision), false};
      for (mpfr_prec_t p = config.precision; p <= config.cap; p *= 2) {
        try {
          pp.value = probe_value(g, out.constants, place, points[i], p);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kDivisionByZero && e.code() != ErrorCode::kInvalidArgument) throw;
          continue;
        }
        pp.decided = pp.value.is_positive() && pp.value.relative_width_at_most(config.width_bits);
        if (pp.decided) break;
      }
      results[i] = std::move(pp);
    });

    ProbeShell shell;
    shell.N = N;
    shell.points_total = points.size();
    for (auto& r : results) {
      if (!r) {
        ++shell.skipped;
        continue;
      }
      if (!r->decided) {
        ++shell.undecided;
      } else if (!shell.min_value) {
        shell.min_value = r->value;
        shell.argmin = r->n;
      } else {
        if (better_min(r->value, r->n, *shell.min_value, shell.argmin)) shell.argmin = r->n;
        shell.min_value = min(*shell.min_value, r->value);
      }
      out.points.push_back(std::move(*r));
    }
    if (shell.min_value) running = running ? min(*running, *shell.min_value) : *shell.min_value;
    shell.running_min = running;
    out.undecided_total += shell.undecided;
    out.shells.push_back(std::move(shell));
  }
  return out;
}

}  // namespace mrbound
