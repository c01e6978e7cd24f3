#include "scangame/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace scangame {

namespace {

bool mul_overflow(long long a, long long b, long long* out) {
  return __builtin_mul_overflow(a, b, out);
}

}  // namespace

std::optional<Rational> parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }

  long long mantissa = 0;
  int frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
      continue;
    }
    if (ch == 'e' || ch == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    seen_digit = true;
    if (mul_overflow(mantissa, 10, &mantissa)) return std::nullopt;
    if (__builtin_add_overflow(mantissa, ch - '0', &mantissa)) return std::nullopt;
    if (seen_dot) ++frac_digits;
  }
  if (!seen_digit) return std::nullopt;

  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i == text.size()) return std::nullopt;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 30) return std::nullopt;
    }
    if (exp_neg) exponent = -exponent;
  }
  if (i != text.size()) return std::nullopt;

  long long num = negative ? -mantissa : mantissa;
  long long den = 1;
  int pow10 = exponent - frac_digits;
  for (; pow10 > 0; --pow10)
    if (mul_overflow(num, 10, &num)) return std::nullopt;
  for (; pow10 < 0; ++pow10)
    if (mul_overflow(den, 10, &den)) return std::nullopt;
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace scangame
