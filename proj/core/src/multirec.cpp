#include "mrbound/multirec.hpp"

#include <algorithm>
#include <map>

namespace mrbound {

namespace {

bool coords_less(const FieldElement& a, const FieldElement& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
}

struct BaseLess {
  bool operator()(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), coords_less);
  }
};

void validate(const NumberField& field, std::size_t arity, const RawTerm& t, std::size_t index) {
  const std::string where = "term " + std::to_string(index + 1);
  if (t.poly.arity() != arity || t.bases.size() != arity) {
    throw Error(ErrorCode::kArityMismatch, where + " does not have arity " + std::to_string(arity));
  }
  if (!field.same_field(t.poly.field())) throw Error(ErrorCode::kFieldMismatch, where + " polynomial field");
  for (std::size_t j = 0; j < arity; ++j) {
    const FieldElement& b = t.bases[j];
    if (!field.same_field(b.field())) throw Error(ErrorCode::kFieldMismatch, where + " base field");
    if (b.is_zero()) {
      throw Error(ErrorCode::kZeroElement, where + " base " + std::to_string(j + 1) + " is zero");
    }
    if (!is_algebraic_integer(b)) {
      throw Error(ErrorCode::kNotAlgebraicInteger, where + " base " + std::to_string(j + 1) + " = " + b.to_string() +
                                                       " is not an algebraic integer (minimal polynomial " +
                                                       minimal_polynomial(b).to_string() + ")");
    }
  }
}

}  // namespace

MultiRecurrence::MultiRecurrence(std::shared_ptr<const NumberField> field, std::size_t arity, std::vector<Term> terms,
                                 std::size_t raw_size)
    : field_(std::move(field)), arity_(arity), terms_(std::move(terms)), raw_size_(raw_size) {}

MultiRecurrence MultiRecurrence::canonicalize(std::shared_ptr<const NumberField> field, std::size_t arity,
                                              const std::vector<RawTerm>& raw) {
  std::map<std::vector<FieldElement>, Term, BaseLess> groups;
  for (std::size_t r = 0; r < raw.size(); ++r) {
    validate(*field, arity, raw[r], r);
    auto it = groups.find(raw[r].bases);
    if (it == groups.end()) {
      groups.emplace(raw[r].bases, Term{raw[r].poly, raw[r].bases, {r}});
    } else {
      it->second.poly = it->second.poly + raw[r].poly;
      it->second.sources.push_back(r);
    }
  }
  std::vector<Term> terms;
  for (auto& [bases, term] : groups) {
    if (!term.poly.is_zero()) terms.push_back(std::move(term));
  }
  if (terms.empty()) throw Error(ErrorCode::kEmptyRecurrence, "all terms cancel");
  return MultiRecurrence(std::move(field), arity, std::move(terms), raw.size());
}

const Term& MultiRecurrence::term(std::size_t i) const {
  if (i >= terms_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "term index " + std::to_string(i) + " out of range (k = " + std::to_string(terms_.size()) + ")");
  }
  return terms_[i];
}

std::optional<std::size_t> MultiRecurrence::canonical_index(std::size_t raw_index) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& src = terms_[i].sources;
    if (std::find(src.begin(), src.end(), raw_index) != src.end()) return i;
  }
  return std::nullopt;
}

unsigned MultiRecurrence::absolute_degree() const {
  unsigned m = 0;
  for (const auto& t : terms_) m = std::max(m, t.poly.absolute_degree());
  return m;
}

void MultiRecurrence::check_point(const LatticePoint& n) const {
  if (n.arity() != arity_) {
    throw Error(ErrorCode::kArityMismatch,
                "point " + n.to_string() + " does not have arity " + std::to_string(arity_));
  }
}

FieldElement MultiRecurrence::base_power(std::size_t i, const LatticePoint& n) const {
  check_point(n);
  const Term& t = term(i);
  FieldElement acc = field_->one();
  for (std::size_t j = 0; j < arity_; ++j) {
    if (n[j] > 0) acc = acc * pow(t.bases[j], n[j]);
  }
  return acc;
}

FieldElement MultiRecurrence::term_value(std::size_t i, const LatticePoint& n) const {
  check_point(n);
  FieldElement f = term(i).poly.evaluate(n);
  if (f.is_zero()) return f;
  return f * base_power(i, n);
}

std::vector<FieldElement> MultiRecurrence::term_values(const LatticePoint& n) const {
  std::vector<FieldElement> out;
  out.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) out.push_back(term_value(i, n));
  return out;
}

FieldElement MultiRecurrence::evaluate(const LatticePoint& n) const {
  FieldElement acc = field_->zero();
  for (std::size_t i = 0; i < terms_.size(); ++i) acc = acc + term_value(i, n);
  return acc;
}

bool operator==(const MultiRecurrence& a, const MultiRecurrence& b) {
  if (!a.field().same_field(b.field()) || a.arity() != b.arity() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.terms()[i].poly == b.terms()[i].poly) || a.terms()[i].bases != b.terms()[i].bases) return false;
  }
  return true;
}

namespace {

void check_subset_args(std::size_t k, std::size_t i0, std::size_t cap) {
  if (i0 >= k) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "i0 = " + std::to_string(i0) + " out of range (k = " + std::to_string(k) + ")");
  }
  if (k > cap) {
    throw Error(ErrorCode::kSubsetCapExceeded,
                std::to_string(k) + " terms exceed the subset enumeration cap " + std::to_string(cap));
  }
}

template <typename Pred>
std::vector<IndexSet> enumerate_subsets(std::size_t k, std::size_t i0, std::size_t cap, Pred&& vanishes) {
  check_subset_args(k, i0, cap);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < k; ++i) {
    if (i != i0) others.push_back(i);
  }
  std::vector<IndexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size()); ++mask) {
    IndexSet set{i0};
    for (std::size_t b = 0; b < others.size(); ++b) {
      if (mask >> b & 1) set.push_back(others[b]);
    }
    std::sort(set.begin(), set.end());
    if (vanishes(set)) out.push_back(std::move(set));
  }
  return out;
}

}  // namespace

std::vector<IndexSet> vanishing_subsets(const std::vector<FieldElement>& values, std::size_t i0, std::size_t cap) {
  return enumerate_subsets(values.size(), i0, cap, [&](const IndexSet& set) {
    FieldElement acc = values[set.front()];
    for (std::size_t j = 1; j < set.size(); ++j) acc = acc + values[set[j]];
    return acc.is_zero();
  });
}

std::vector<IndexSet> pointwise_vanishing_subsums(const MultiRecurrence& g, const LatticePoint& n, std::size_t i0,
                                                  std::size_t cap) {
  check_subset_args(g.size(), i0, cap);
  return vanishing_subsets(g.term_values(n), i0, cap);
}

std::vector<IndexSet> identically_vanishing_subsums(const std::vector<RawTerm>& raw, std::size_t i0, std::size_t cap) {
  return enumerate_subsets(raw.size(), i0, cap, [&](const IndexSet& set) {
    std::map<std::vector<FieldElement>, MultiPoly, BaseLess> groups;
    for (std::size_t i : set) {
      auto it = groups.find(raw[i].bases);
      if (it == groups.end()) {
        groups.emplace(raw[i].bases, raw[i].poly);
      } else {
        it->second = it->second + raw[i].poly;
      }
    }
    return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.second.is_zero(); });
  });
}

std::vector<RawTerm> as_raw_terms(const MultiRecurrence& g) {
  std::vector<RawTerm> out;
  for (const auto& t : g.terms()) out.push_back(RawTerm{t.poly, t.bases});
  return out;
}

}  // namespace mrbound
