#include "commands.hpp"

#include <ostream>
#include <random>
#include <set>

#include "mrbound/heights.hpp"
#include "mrbound/report.hpp"
#include "mrbound/spec_io.hpp"
#include "mrbound/verifier.hpp"

namespace mrbound::cli {

namespace {

struct Loaded {
  SpecDocument doc;
  MultiRecurrence g;
};

Loaded load(const Options& o) {
  SpecDocument doc = parse_document(read_text_file(o.spec_path));
  MultiRecurrence g = MultiRecurrence::canonicalize(doc.field, doc.arity, doc.raw);
  return Loaded{std::move(doc), std::move(g)};
}

std::size_t raw_index(std::size_t one_based, std::size_t raw_size, const char* what) {
  if (one_based < 1 || one_based > raw_size) {
    throw Error(ErrorCode::kIndexOutOfRange, std::string(what) + " = " + std::to_string(one_based) +
                                                 " is not a term of the document (1.." + std::to_string(raw_size) +
                                                 ")");
  }
  return one_based - 1;
}

std::size_t canonical_i0(const Loaded& l, std::size_t one_based) {
  const std::size_t r = raw_index(one_based, l.doc.raw.size(), "i0");
  const auto c = l.g.canonical_index(r);
  if (!c) {
    throw Error(ErrorCode::kInvalidArgument,
                "term " + std::to_string(one_based) + " cancels against terms with the same bases");
  }
  return *c;
}

VerifierConfig make_config(const Loaded& l, const Options& o) {
  VerifierConfig c;
  c.epsilon = parse_decimal(o.eps);
  c.i0 = canonical_i0(l, o.i0);
  c.max_norm = o.max_norm;
  c.precision = o.precision;
  c.threads = o.threads;
  if (o.place) {
    if (*o.place < 1) throw Error(ErrorCode::kIndexOutOfRange, "--place is 1-based");
    c.place = *o.place - 1;
  }
  validate(l.g, c);
  return c;
}

// Canonical index sets rendered through the document numbering.
std::string document_set(const MultiRecurrence& g, const IndexSet& set) {
  std::set<std::size_t> doc;
  for (std::size_t i : set) {
    for (std::size_t r : g.terms()[i].sources) doc.insert(r + 1);
  }
  std::string out = "{";
  for (std::size_t r : doc) out += (out.size() > 1 ? "," : "") + std::to_string(r);
  return out + "}";
}

std::string raw_set(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t r : set) out += (out.size() > 1 ? "," : "") + std::to_string(r + 1);
  return out + "}";
}

std::vector<LatticePoint> sample_points(std::size_t s, std::uint64_t max_norm, std::size_t count,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> norm(1, max_norm);
  std::vector<LatticePoint> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t N = norm(rng);
    std::uniform_int_distribution<std::uint64_t> cut(0, N);
    std::vector<std::uint64_t> cuts{0, N};
    for (std::size_t j = 1; j < s; ++j) cuts.push_back(cut(rng));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::uint64_t> coords;
    for (std::size_t j = 0; j < s; ++j) coords.push_back(cuts[j + 1] - cuts[j]);
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace

int run_eval(const Options& o, std::ostream& out, std::ostream&) {
  const Loaded l = load(o);
  const LatticePoint n = parse_point(o.point);
  VerifierConfig c;
  if (o.place) c.place = *o.place - 1;
  c.max_norm = 1;
  validate(l.g, c);
  const FieldElement value = l.g.evaluate(n);
  const RealInterval modulus = value.embed(resolve_place(l.g, c), o.precision).abs();
  out << "G = " << value.to_string() << " (exact), |G| ∈ " << modulus.to_string() << '\n';
  return kOk;
}

int run_check(const Options& o, std::ostream& out, std::ostream&) {
  const SpecDocument doc = parse_document(read_text_file(o.spec_path));
  const std::size_t i0 = raw_index(o.i0, doc.raw.size(), "i0");
  const auto identical = identically_vanishing_subsums(doc.raw, i0);
  if (identical.empty()) {
    out << "no identically vanishing subsum containing i0\n";
  } else {
    for (const auto& set : identical) out << "identically vanishing subsum " << raw_set(set) << " contains i0\n";
  }

  const Loaded l{doc, MultiRecurrence::canonicalize(doc.field, doc.arity, doc.raw)};
  const auto ci0 = l.g.canonical_index(i0);
  out << "canonical terms: " << l.g.size() << " (document terms: " << doc.raw.size() << ")\n";
  if (!ci0) {
    out << "term " << o.i0 << " cancels completely; the hypothesis fails for every n\n";
    return kOk;
  }
  std::uint64_t total = 0;
  std::uint64_t hits = 0;
  std::string first;
  for (std::uint64_t N = 1; N <= o.max_norm; ++N) {
    for (const auto& n : shell_points(l.g.arity(), N)) {
      ++total;
      const auto sets = pointwise_vanishing_subsums(l.g, n, *ci0);
      if (sets.empty()) continue;
      if (hits++ == 0) first = n.to_string() + " with subset " + document_set(l.g, sets.front());
    }
  }
  if (hits == 0) {
    out << "no pointwise vanishing subsum containing i0 for 1 <= |n| <= " << o.max_norm << '\n';
  } else {
    out << "pointwise vanishing at " << hits << " of " << total << " points with 1 <= |n| <= " << o.max_norm
        << ", first at " << first << '\n';
  }
  const ProofConstants pc = proof_constants(l.g, Rational(1, 10), o.precision);
  out << "z = " << to_string(pc.z) << ", m = " << pc.m << ", A ∈ " << pc.A.to_string() << '\n';
  const auto primes = support_primes(l.g);
  out << "base norm primes:";
  if (primes.empty()) out << " none";
  for (const auto& p : primes) out << ' ' << to_string(p);
  out << '\n';
  return kOk;
}

int run_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const Loaded l = load(o);
  const VerifierConfig c = make_config(l, o);
  const ScanResult r = scan_shells(l.g, c);
  out << scan_csv(r);
  if (r.threshold) {
    err << "threshold estimate: " << *r.threshold << '\n';
  } else {
    err << "threshold estimate: not reached within N_max = " << c.max_norm << '\n';
  }
  if (r.undecided_total > 0) {
    err << "undecided points: " << r.undecided_total << '\n';
    for (const auto& s : r.shells) {
      for (const auto& n : s.undecided_points) err << "  undecided " << n.to_string() << '\n';
    }
    return kUndecided;
  }
  return kOk;
}

int run_lemma(const Options& o, std::ostream& out, std::ostream&) {
  const SpecDocument doc = parse_document(read_text_file(o.spec_path));
  const std::size_t t = raw_index(o.term_index, doc.raw.size(), "term index");
  const MultiPoly& f = doc.raw[t].poly;
  const auto points = sample_points(doc.arity, o.max_norm, o.samples, o.seed);
  const LemmaReport r = lemma_check(f, points, o.precision);
  out << "f = " << f.to_string() << '\n';
  out << "D = " << r.constants.D << ", m = " << r.constants.m << '\n';
  out << "c1 ∈ " << r.constants.c1.to_string() << '\n';
  out << "c2 = " << to_string(r.constants.c2) << '\n';
  out << "c ∈ " << r.constants.c.to_string() << '\n';
  out << "points " << points.size() << ": holds " << r.holds << ", violations " << r.violations << ", undecided "
      << r.undecided << ", skipped (f(n) = 0) " << r.skipped << '\n';
  for (const auto& p : r.points) {
    if (p.status == LemmaStatus::kViolated) {
      out << "violation at " << p.n.to_string() << ": height " << p.height.to_string() << " > bound "
          << p.bound.to_string() << '\n';
    }
  }
  if (r.violations > 0) return kLemmaViolation;
  return r.undecided > 0 ? kUndecided : kOk;
}

int run_height(const Options& o, std::ostream& out, std::ostream&) {
  const SpecDocument doc = parse_document(read_text_file(o.spec_path));
  const FieldElement x = parse_element(doc.field, o.element);
  out << "x = " << x.to_string() << '\n';
  out << "minimal polynomial: " << minimal_polynomial(x).to_string() << '\n';
  out << "H_K(x) ∈ " << field_height(x, o.precision).to_string() << '\n';
  out << "finite part = " << to_string(finite_part_exact(x)) << '\n';
  out << "house ∈ " << house(x, o.precision).to_string() << '\n';
  return kOk;
}

int run_probe(const Options& o, std::ostream& out, std::ostream& err) {
  const Loaded l = load(o);
  const VerifierConfig c = make_config(l, o);
  const ProbeResult r = evertse_probe(l.g, c);
  out << probe_csv(r);
  err << "z = " << to_string(r.constants.z) << ", A ∈ " << r.constants.A.to_string() << ", eps' ∈ "
      << r.constants.epsilon_prime->to_string() << '\n';
  if (r.undecided_total > 0) {
    err << "undecided points: " << r.undecided_total << '\n';
    return kUndecided;
  }
  return kOk;
}

}  // namespace mrbound::cli
