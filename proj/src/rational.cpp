#include "surfmeasure/rational.hpp"

#include "surfmeasure/errors.hpp"

#include <algorithm>
#include <cctype>

namespace surfmeasure {

namespace {

using boost::multiprecision::cpp_int;

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
        throw ValidationError("not a rational \"p/q\": \"" + std::string(text) + "\"");
    }
    const cpp_int q(std::string{den});
    if (q == 0) {
        throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
    }
    return Rational(cpp_int(std::string{num}), q);
}

std::string format_rational(const Rational& value)
{
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& value, int digits)
{
    cpp_int num = boost::multiprecision::numerator(value);
    const cpp_int den = boost::multiprecision::denominator(value);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    cpp_int scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    // round half up on the magnitude
    const cpp_int scaled = (num * scale * 2 + den) / (den * 2);
    const cpp_int whole = scaled / scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0) {
        std::string frac = cpp_int(scaled % scale).str();
        frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

} // namespace surfmeasure
