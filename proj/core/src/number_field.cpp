#include "mrbound/number_field.hpp"

#include <algorithm>

namespace mrbound {

struct NumberField::Private {};

NotIrreducibleError::NotIrreducibleError(const std::string& message, std::vector<IntPolynomial> witness)
    : Error(ErrorCode::kNotIrreducible, message), witness_(std::move(witness)) {}

namespace {

std::string factorization_text(const IntPolynomial& p, const std::vector<IntPolynomial>& factors) {
  std::string out = p.to_string() + " = ";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += "*";
    out += "(" + factors[i].to_string() + ")";
  }
  return out;
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::create(IntPolynomial minpoly) {
  if (minpoly.degree() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "defining polynomial must have degree >= 1");
  }
  if (!minpoly.is_monic()) {
    throw Error(ErrorCode::kNotMonic, "defining polynomial " + minpoly.to_string() + " is not monic");
  }
  const IntPolynomial repeated = gcd(minpoly, minpoly.derivative());
  if (repeated.degree() > 0) {
    std::vector<IntPolynomial> witness{repeated, *exact_quotient(minpoly, repeated)};
    throw NotIrreducibleError(factorization_text(minpoly, witness), std::move(witness));
  }
  std::vector<IntPolynomial> factors = find_factorization(minpoly, kDefaultPrecision);
  if (!factors.empty()) {
    const std::string text = factorization_text(minpoly, factors);
    throw NotIrreducibleError(text, std::move(factors));
  }
  std::vector<RootEnclosure> roots = isolate_roots(minpoly, kDefaultPrecision);
  return std::make_shared<const NumberField>(Private{}, std::move(minpoly), std::move(roots));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const std::shared_ptr<const NumberField> q = create(IntPolynomial{0, 1});
  return q;
}

NumberField::NumberField(const Private&, IntPolynomial minpoly, std::vector<RootEnclosure> base_roots)
    : minpoly_(std::move(minpoly)), base_roots_(std::move(base_roots)) {
  real_places_ = static_cast<std::size_t>(
      std::count_if(base_roots_.begin(), base_roots_.end(), [](const RootEnclosure& r) { return r.real; }));
  if (real_places_ > 0) {
    default_place_ = real_places_ - 1;
  } else {
    for (std::size_t t = 0; t < base_roots_.size(); ++t) {
      if (mpfr_sgn(base_roots_[t].center.im().lower()) > 0) {
        default_place_ = t;
        break;
      }
    }
  }
  auto base = std::make_shared<EmbeddingTable>();
  for (const auto& r : base_roots_) base->push_back(Embedding{r.box(), r.real});
  cache_.emplace(kDefaultPrecision, std::move(base));
}

std::shared_ptr<const EmbeddingTable> NumberField::embeddings(mpfr_prec_t prec) const {
  prec = std::max<mpfr_prec_t>(prec, 16);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.lower_bound(prec);
    if (it != cache_.end() && it->first == prec) return it->second;
    // Anything at or above the default precision that is already finer serves.
    if (prec <= kDefaultPrecision) return cache_.at(kDefaultPrecision);
  }
  auto table = refine(prec);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(prec, table);
  return it->second;
}

std::shared_ptr<const EmbeddingTable> NumberField::refine(mpfr_prec_t prec) const {
  std::shared_ptr<const EmbeddingTable> coarser;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.lower_bound(prec);
    coarser = std::prev(it)->second;
  }
  const std::vector<RootEnclosure> fresh = isolate_roots(minpoly_, prec);
  auto table = std::make_shared<EmbeddingTable>(base_roots_.size(), Embedding{ComplexInterval(prec), false});
  std::vector<bool> used(fresh.size(), false);
  for (std::size_t t = 0; t < base_roots_.size(); ++t) {
    std::size_t match = fresh.size();
    for (std::size_t f = 0; f < fresh.size(); ++f) {
      if (used[f] || !fresh[f].may_intersect(base_roots_[t])) continue;
      if (match != fresh.size()) {
        throw Error(ErrorCode::kPrecisionCapExceeded, "ambiguous root matching during refinement");
      }
      match = f;
    }
    if (match == fresh.size()) {
      throw Error(ErrorCode::kPrecisionCapExceeded, "refined root enclosure lost its base root");
    }
    used[match] = true;
    ComplexInterval box = intersect(fresh[match].box(), (*coarser)[t].root);
    if (base_roots_[t].real) box = ComplexInterval(box.re());
    (*table)[t] = Embedding{std::move(box), base_roots_[t].real};
  }
  return table;
}

FieldElement NumberField::zero() const { return from_rational(Rational(0)); }

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::generator() const {
  std::vector<Rational> coords(static_cast<std::size_t>(degree()));
  if (degree() == 1) {
    coords[0] = Rational(-minpoly_.coefficient(0));
  } else {
    coords[1] = 1;
  }
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::from_rational(const Rational& value) const {
  std::vector<Rational> coords(static_cast<std::size_t>(degree()));
  coords[0] = value;
  return FieldElement(shared_from_this(), std::move(coords));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
  if (coords.size() != static_cast<std::size_t>(degree())) {
    throw Error(ErrorCode::kInvalidArgument, "element needs " + std::to_string(degree()) + " coordinates, got " +
                                                 std::to_string(coords.size()));
  }
  return FieldElement(shared_from_this(), std::move(coords));
}

bool NumberField::same_field(const NumberField& other) const {
  return this == &other || minpoly_ == other.minpoly_;
}

}  // namespace mrbound
