#include "shapalloc/rational.hpp"

#include <cctype>
#include <cmath>

#include "shapalloc/errors.hpp"

namespace shapalloc {
namespace {

Integer pow10(unsigned k) {
  Integer p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 10;
  return p;
}

[[noreturn]] void malformed(std::string_view text) {
  throw DomainError("malformed decimal '" + std::string(text) + "'");
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  unsigned fraction_digits = 0;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_point) malformed(text);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      malformed(text);
    }
  }
  if (digits.empty()) malformed(text);

  // Leading zeros would select octal parsing.
  const auto nonzero = digits.find_first_not_of('0');
  Integer numerator(nonzero == std::string::npos ? std::string("0") : digits.substr(nonzero));
  if (negative) numerator = -numerator;
  return Rational(numerator, pow10(fraction_digits));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string to_fixed(const Rational& value, int places) {
  if (places < 0) throw DomainError("negative number of decimal places");
  const Integer scale = pow10(static_cast<unsigned>(places));
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  const Integer scaled = abs(num) * scale;
  Integer q = scaled / den;
  const Integer r = scaled % den;
  if (2 * r >= den) ++q;

  std::string digits = q.str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && q != 0) out.push_back('-');
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) {
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(places));
  }
  return out;
}

std::string to_exact_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);

  unsigned twos = 0;
  unsigned fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return num.str() + "/" + boost::multiprecision::denominator(value).str();

  const int places = static_cast<int>(std::max(twos, fives));
  return to_fixed(value, places);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value cannot be made exact");
  return Rational(value);
}

Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

}  // namespace shapalloc
