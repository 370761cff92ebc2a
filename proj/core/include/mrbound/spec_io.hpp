#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mrbound/multirec.hpp"

namespace mrbound {

/// A recurrence document before canonicalization, terms in document order.
///
///   {"field": {"minpoly": [-5, 0, 1]},
///    "s": 1,
///    "terms": [{"poly": [{"exps": [0], "coeff": ["0", "1/5"]}],
///               "bases": [["1/2", "1/2"]]}]}
///
/// Integers may be JSON numbers or decimal strings; rationals are "p" or "p/q".
struct SpecDocument {
  std::shared_ptr<const NumberField> field;
  std::size_t arity = 0;
  std::vector<RawTerm> raw;
};

/// Throws Error(kParseError) with a byte offset or JSON path, or the errors of
/// NumberField::create.
SpecDocument parse_document(std::string_view text);

/// parse_document followed by MultiRecurrence::canonicalize.
MultiRecurrence parse_spec(std::string_view text);

/// Canonical recurrence as a document (two-space indentation).
std::string serialize_spec(const MultiRecurrence& g);

/// Reads a whole file. Throws Error(kParseError) if it cannot be opened.
std::string read_text_file(const std::string& path);

/// Parses comma separated rational coordinates "c0,c1,...". Throws
/// Error(kParseError) on malformed text or a wrong coordinate count.
FieldElement parse_element(const std::shared_ptr<const NumberField>& field, std::string_view text);

/// Parses "a,b,c" or "(a;b;c)" into a lattice point.
LatticePoint parse_point(std::string_view text);

}  // namespace mrbound
