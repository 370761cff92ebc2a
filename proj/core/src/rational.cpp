#include "mrbound/rational.hpp"

#include <cctype>

#include "mrbound/error.hpp"

namespace mrbound {
namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)) ||
      (!den.empty() && (den.front() == '-' || den.front() == '+'))) {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Rational result;
  result.get_num() = Integer(num_str);
  result.get_den() = den.empty() ? Integer(1) : Integer(std::string(den));
  if (result.get_den() == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  }
  result.canonicalize();
  return result;
}

Rational parse_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text);
  const std::string original(text);
  long exponent = 0;
  const auto e = text.find_first_of("eE");
  if (e != std::string_view::npos) {
    const std::string_view exp_text = text.substr(e + 1);
    if (!is_integer_literal(exp_text) || exp_text.size() > 6) {
      throw Error(ErrorCode::kParseError, "malformed number '" + original + "'");
    }
    exponent = std::stol(std::string(exp_text));
    text = text.substr(0, e);
  }
  std::string digits(text);
  const auto dot = digits.find('.');
  if (dot != std::string::npos) {
    exponent -= static_cast<long>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  if (!is_integer_literal(digits)) throw Error(ErrorCode::kParseError, "malformed number '" + original + "'");
  Rational result = parse_rational(digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    result /= scale;
  } else {
    result *= scale;
  }
  return result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace mrbound
