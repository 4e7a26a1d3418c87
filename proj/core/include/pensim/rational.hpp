// rational.hpp — exact rational number support.
//
// Every ledger quantity in this project is an exact rational; equivalence
// claims are checked by exact equality, never by tolerance.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pensim {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer ("-42"), or a finite decimal ("133.1") exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or just "p" when the denominator is 1. Lossless.
std::string to_fraction_string(const Rational& value);

/// Renders as an exact finite decimal when the denominator is of the form
/// 2^a * 5^b, otherwise falls back to the fraction form.
std::string to_decimal_string(const Rational& value);

}  // namespace pensim
