#include "cosetalg/rational.hpp"

#include <cctype>

#include "cosetalg/error.hpp"

namespace cosetalg {

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  if (!is_integer_literal(text)) {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Rational value;
  if (slash == std::string_view::npos) {
    value = Rational(parse_integer(text, text));
  } else {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
      throw Error(ErrorCode::kParseError, "signed denominator in '" + std::string(text) + "'");
    }
    mpz_class den = parse_integer(den_text, text);
    if (den == 0) {
      throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
    }
    value = Rational(num, den);
    value.canonicalize();
  }
  return value;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) {
  return os << "(" << format_rational(z.real()) << ", " << format_rational(z.imag()) << ")";
}

}  // namespace cosetalg
