#include "pensim/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pensim {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw std::invalid_argument("invalid rational \"" + std::string(text) + "\": " + why);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text, "empty");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) bad(text, "expected integer/integer");
    BigInt p{std::string(num)};
    BigInt q{std::string(den)};
    if (q == 0) bad(text, "zero denominator");
    return Rational(p, q);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '+' || whole.front() == '-')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) bad(text, "no digits");
    for (char c : whole)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad(text, "malformed decimal");
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad(text, "malformed decimal");
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    BigInt units = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt sub = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    BigInt p = units * scale + sub;
    if (negative) p = -p;
    return Rational(p, scale);
  }

  if (!is_integer_token(s)) bad(text, "not a number");
  return Rational(BigInt(std::string(s)));
}

std::string to_fraction_string(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value) {
  BigInt num = numerator(value);
  BigInt den = denominator(value);
  if (den == 1) return num.str();

  // Count factors of 2 and 5; only those give a finite decimal.
  BigInt d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return to_fraction_string(value);

  int digits = twos > fives ? twos : fives;
  BigInt scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  BigInt scaled = num * scale / den;  // exact by construction

  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  // Trim trailing zeros in the fractional part.
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return negative ? "-" + s : s;
}

}  // namespace pensim
