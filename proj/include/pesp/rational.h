#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace pesp {

// Passenger weights and travel times are exact rationals.
using Rational = boost::rational<std::int64_t>;

// Accepts "12", "12.5", "-0.25", "3/7". Throws ParseError on anything else.
Rational ParseRational(std::string_view text);

// Terminating decimals are written without exponent ("12.5"), everything
// else as "p/q". ParseRational(FormatRational(r)) == r.
std::string FormatRational(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace pesp
