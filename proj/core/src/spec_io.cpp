#include "mrbound/spec_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mrbound {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, "at " + path + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const json& array_at(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

Integer integer_value(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                                           : Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    const Rational r = [&] {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const Error& e) {
        fail(path, e.what());
      }
    }();
    if (r.get_den() != 1) fail(path, "expected an integer");
    return r.get_num();
  }
  fail(path, "expected an integer");
}

Rational rational_value(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(integer_value(v, path));
  if (!v.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

FieldElement element_value(const std::shared_ptr<const NumberField>& field, const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of coordinates");
  const auto D = static_cast<std::size_t>(field->degree());
  if (v.size() != D) fail(path, "expected " + std::to_string(D) + " coordinates, got " + std::to_string(v.size()));
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < D; ++i) coords.push_back(rational_value(v[i], path + "[" + std::to_string(i) + "]"));
  return field->element(std::move(coords));
}

std::size_t arity_value(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) fail(path, "expected a positive integer");
  return static_cast<std::size_t>(v.get<std::uint64_t>());
}

json rational_json(const Rational& r) { return to_string(r); }

json element_json(const FieldElement& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(rational_json(c));
  return out;
}

}  // namespace

SpecDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, "at byte " + std::to_string(e.byte) + ": malformed JSON");
  }

  SpecDocument out;
  const json& field = member(doc, "field", "$");
  const json& minpoly = array_at(field, "minpoly", "$.field");
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < minpoly.size(); ++i) {
    coeffs.push_back(integer_value(minpoly[i], "$.field.minpoly[" + std::to_string(i) + "]"));
  }
  if (coeffs.size() < 2) fail("$.field.minpoly", "need a polynomial of degree >= 1");
  out.field = NumberField::create(IntPolynomial(std::move(coeffs)));

  out.arity = arity_value(member(doc, "s", "$"), "$.s");
  const json& terms = array_at(doc, "terms", "$");
  if (terms.empty()) fail("$.terms", "at least one term is required");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = "$.terms[" + std::to_string(i) + "]";
    MultiPoly poly(out.field, out.arity);
    const json& monomials = array_at(terms[i], "poly", tp);
    if (monomials.empty()) fail(tp + ".poly", "at least one monomial is required");
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      const std::string mp = tp + ".poly[" + std::to_string(k) + "]";
      const json& exps = array_at(monomials[k], "exps", mp);
      if (exps.size() != out.arity) fail(mp + ".exps", "expected " + std::to_string(out.arity) + " exponents");
      Exponents e;
      for (std::size_t j = 0; j < exps.size(); ++j) {
        if (!exps[j].is_number_unsigned() || exps[j].get<std::uint64_t>() > 1000000) {
          fail(mp + ".exps[" + std::to_string(j) + "]", "expected a non-negative integer");
        }
        e.push_back(static_cast<unsigned>(exps[j].get<std::uint64_t>()));
      }
      poly.add_term(e, element_value(out.field, member(monomials[k], "coeff", mp), mp + ".coeff"));
    }
    const json& bases = array_at(terms[i], "bases", tp);
    if (bases.size() != out.arity) fail(tp + ".bases", "expected " + std::to_string(out.arity) + " bases");
    std::vector<FieldElement> alpha;
    for (std::size_t j = 0; j < bases.size(); ++j) {
      alpha.push_back(element_value(out.field, bases[j], tp + ".bases[" + std::to_string(j) + "]"));
    }
    out.raw.push_back(RawTerm{std::move(poly), std::move(alpha)});
  }
  return out;
}

MultiRecurrence parse_spec(std::string_view text) {
  SpecDocument doc = parse_document(text);
  return MultiRecurrence::canonicalize(doc.field, doc.arity, doc.raw);
}

std::string serialize_spec(const MultiRecurrence& g) {
  json minpoly = json::array();
  for (const auto& c : g.field().minpoly().coefficients()) {
    if (c.fits_slong_p()) {
      minpoly.push_back(c.get_si());
    } else {
      minpoly.push_back(to_string(c));
    }
  }
  json terms = json::array();
  for (const auto& t : g.terms()) {
    json poly = json::array();
    for (const auto& [exps, coeff] : t.poly.terms()) poly.push_back({{"exps", exps}, {"coeff", element_json(coeff)}});
    json bases = json::array();
    for (const auto& b : t.bases) bases.push_back(element_json(b));
    terms.push_back({{"poly", poly}, {"bases", bases}});
  }
  json doc = {{"field", {{"minpoly", minpoly}}}, {"s", g.arity()}, {"terms", terms}};
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FieldElement parse_element(const std::shared_ptr<const NumberField>& field, std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    coords.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != static_cast<std::size_t>(field->degree())) {
    throw Error(ErrorCode::kParseError, "element needs " + std::to_string(field->degree()) + " coordinates, got " +
                                            std::to_string(coords.size()));
  }
  return field->element(std::move(coords));
}

LatticePoint parse_point(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<std::uint64_t> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t sep = text.find_first_of(",;", start);
    const std::string_view piece = text.substr(start, sep == std::string_view::npos ? text.npos : sep - start);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw Error(ErrorCode::kParseError, "bad lattice coordinate \"" + std::string(piece) + "\"");
    }
    coords.push_back(v);
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return LatticePoint(std::move(coords));
}

}  // namespace mrbound
