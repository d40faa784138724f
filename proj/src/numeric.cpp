#include "padic/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace padic {

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("pow: zero to a negative power");
    return pow(Rational(1) / x, -e);
  }
  Integer num = ipow(mp::numerator(x), static_cast<unsigned long>(e));
  Integer den = ipow(mp::denominator(x), static_cast<unsigned long>(e));
  return Rational(num, den);
}

Integer ipow(const Integer& base, unsigned long e) {
  return mp::pow(base, static_cast<unsigned>(e));
}

std::uint64_t pow_u64(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > (std::numeric_limits<std::uint64_t>::max() >> 1) / p)
      throw std::overflow_error("pow_u64: p^e exceeds 64-bit range");
    r *= p;
  }
  return r;
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

long decimal_exponent(const Rational& x) {
  if (x == 0) throw std::domain_error("decimal_exponent of zero");
  const Rational a = abs(x);
  // Start from the bit-length estimate and correct by comparison.
  const long bits = static_cast<long>(mp::msb(mp::numerator(a))) -
                    static_cast<long>(mp::msb(mp::denominator(a)));
  long e = static_cast<long>(static_cast<double>(bits) * 0.30102999566398120);
  while (pow(Rational(10), e) > a) --e;
  while (pow(Rational(10), e + 1) <= a) ++e;
  return e;
}

namespace {

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;  // truncates toward zero
  if ((n % d != 0) && ((n < 0) != (d < 0))) q -= 1;
  return q;
}

Integer round_integer(const Rational& y, Rounding mode) {
  const Integer& n = mp::numerator(y);
  const Integer& d = mp::denominator(y);
  switch (mode) {
    case Rounding::Down:
      return floor_div(n, d);
    case Rounding::Up:
      return -floor_div(-n, d);
    case Rounding::Nearest:
    default:
      return floor_div(2 * n + d, 2 * d);
  }
}

}  // namespace

std::string to_decimal(const Rational& x, unsigned sig, Rounding mode) {
  if (x == 0) return "0";
  if (sig == 0) sig = 1;
  const long e = decimal_exponent(x);
  const long shift = static_cast<long>(sig) - 1 - e;
  const Integer digits_value = round_integer(x * pow(Rational(10), shift), mode);
  if (digits_value == 0) return "0";

  const bool negative = digits_value < 0;
  std::string digits = (negative ? Integer(-digits_value) : digits_value).str();
  std::string out;
  if (shift <= 0) {
    out = digits + std::string(static_cast<std::size_t>(-shift), '0');
  } else {
    const auto s = static_cast<std::size_t>(shift);
    if (digits.size() <= s) digits.insert(0, s - digits.size() + 1, '0');
    out = digits.substr(0, digits.size() - s) + "." + digits.substr(digits.size() - s);
  }
  return negative ? "-" + out : out;
}

namespace {

// Decimal integer with optional sign; Boost would read a leading 0 as octal.
Integer parse_integer(const std::string& text, const std::string& context) {
  std::size_t i = 0;
  const bool negative = !text.empty() && (text[0] == '-' || text[0] == '+') && text[i++] == '-';
  if (i == text.size()) throw std::invalid_argument("malformed integer in '" + context + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("malformed integer in '" + context + "'");
  const std::size_t first = std::min(text.find_first_not_of('0', i), text.size() - 1);
  const Integer value(text.substr(first));
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string mantissa;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (mantissa.empty()) throw std::invalid_argument("malformed number '" + text + "'");
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw std::invalid_argument("malformed number '" + text + "'");
    try {
      std::size_t used = 0;
      exponent = std::stol(text.substr(i + 1), &used);
      if (used != text.size() - i - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + text + "'");
    }
  }
  Rational value{parse_integer(mantissa, text)};
  value *= pow(Rational(10), exponent - frac_digits);
  return negative ? Rational(-value) : value;
}

Rational ten_to_minus(unsigned d) { return pow(Rational(10), -static_cast<long>(d)); }

}  // namespace padic
