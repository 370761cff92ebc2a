#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "mrbound/multi_poly.hpp"

namespace mrbound {

inline constexpr std::size_t kDefaultSubsetCap = 16;

/// f(n) * alpha^n with alpha = (alpha_1, ..., alpha_s), as supplied by the user.
struct RawTerm {
  MultiPoly poly;
  std::vector<FieldElement> bases;
};

/// A term of a canonical recurrence. `sources` lists the raw term indices
/// (0-based) that were merged into it.
struct Term {
  MultiPoly poly;
  std::vector<FieldElement> bases;
  std::vector<std::size_t> sources;
};

using IndexSet = std::vector<std::size_t>;

/// G(n) = sum_i f_i(n) alpha_i^n over N_0^s in canonical form: base vectors
/// pairwise distinct, no zero polynomials, terms sorted lexicographically by
/// base coordinates. Term indices in the API are 0-based.
class MultiRecurrence {
 public:
  /// Merges equal base vectors, drops cancelled terms and sorts.
  /// Throws Error with kArityMismatch, kFieldMismatch, kZeroElement (zero
  /// base), kNotAlgebraicInteger, or kEmptyRecurrence.
  static MultiRecurrence canonicalize(std::shared_ptr<const NumberField> field, std::size_t arity,
                                      const std::vector<RawTerm>& raw);

  const NumberField& field() const { return *field_; }
  const std::shared_ptr<const NumberField>& field_ptr() const { return field_; }
  std::size_t arity() const { return arity_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& term(std::size_t i) const;
  std::size_t raw_size() const { return raw_size_; }

  /// Canonical index holding raw term `raw_index`, or nullopt if it cancelled.
  std::optional<std::size_t> canonical_index(std::size_t raw_index) const;

  /// Maximum absolute degree over all f_i.
  unsigned absolute_degree() const;

  FieldElement evaluate(const LatticePoint& n) const;
  /// f_i(n) * alpha_i^n. Throws Error(kIndexOutOfRange).
  FieldElement term_value(std::size_t i, const LatticePoint& n) const;
  /// alpha_i^n alone.
  FieldElement base_power(std::size_t i, const LatticePoint& n) const;
  std::vector<FieldElement> term_values(const LatticePoint& n) const;

  friend bool operator==(const MultiRecurrence& a, const MultiRecurrence& b);

 private:
  MultiRecurrence(std::shared_ptr<const NumberField> field, std::size_t arity, std::vector<Term> terms,
                  std::size_t raw_size);
  void check_point(const LatticePoint& n) const;

  std::shared_ptr<const NumberField> field_;
  std::size_t arity_;
  std::vector<Term> terms_;
  std::size_t raw_size_;
};

/// Subsets I containing i0 (each sorted ascending) with sum_{i in I} values[i] = 0,
/// in increasing order of their bitmask over the other indices.
/// Throws Error(kSubsetCapExceeded) if values.size() > cap and
/// Error(kIndexOutOfRange) for a bad i0.
std::vector<IndexSet> vanishing_subsets(const std::vector<FieldElement>& values, std::size_t i0,
                                        std::size_t cap = kDefaultSubsetCap);

/// Subsets I containing i0 with sum_{i in I} f_i(n) alpha_i^n = 0 at this n.
std::vector<IndexSet> pointwise_vanishing_subsums(const MultiRecurrence& g, const LatticePoint& n,
                                                  std::size_t i0, std::size_t cap = kDefaultSubsetCap);

/// Subsets I of the raw terms containing i0 such that, after grouping the
/// terms of I by base vector, every grouped polynomial is identically zero.
std::vector<IndexSet> identically_vanishing_subsums(const std::vector<RawTerm>& raw, std::size_t i0,
                                                    std::size_t cap = kDefaultSubsetCap);

/// The canonical terms viewed as raw terms (provenance dropped).
std::vector<RawTerm> as_raw_terms(const MultiRecurrence& g);

}  // namespace mrbound
