#ifndef LEXFST_RATIONAL_HPP
#define LEXFST_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lexfst {

/// Exact rational arithmetic; nothing in the probability code may round.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "num" or "num/den" with optional sign; throws on anything else.
Rational parse_rational(std::string_view text);

/// "num/den" in lowest terms, or plain "num" when the denominator is 1.
std::string format_rational(const Rational& r);

/// Decimal rendering for human-oriented reports only.
double rational_to_double(const Rational& r);

} // namespace lexfst

#endif
