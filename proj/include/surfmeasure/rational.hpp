#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace surfmeasure {

/// Exact arbitrary-precision rational. Every scalar in the library uses it.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" (q > 0, optional leading '-'); result is in lowest terms.
/// Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Fixed-point rendering for display; never parsed back.
std::string format_decimal(const Rational& value, int digits = 6);

inline bool in_unit_interval(const Rational& value)
{
    return value >= 0 && value <= 1;
}

} // namespace surfmeasure
