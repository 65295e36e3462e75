#include "pesp/rational.h"

#include <algorithm>
#include <cctype>
#include <limits>

#include "pesp/errors.h"

namespace pesp {
namespace {

std::int64_t ParseDigits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid character in number '" + std::string(whole) + "'");
    }
    if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
      throw ParseError("number too large: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = ParseDigits(text.substr(0, slash), whole);
    std::int64_t den = ParseDigits(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    result = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) throw ParseError("too many decimals in '" + std::string(whole) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t ip = int_part.empty() ? 0 : ParseDigits(int_part, whole);
    std::int64_t fp = frac_part.empty() ? 0 : ParseDigits(frac_part, whole);
    if (int_part.empty() && frac_part.empty()) throw ParseError("empty number '" + std::string(whole) + "'");
    result = Rational(ip) + Rational(fp, scale);
  } else {
    result = Rational(ParseDigits(text, whole));
  }
  return negative ? -result : result;
}

std::string FormatRational(const Rational& value) {
  std::int64_t num = value.numerator();
  std::int64_t den = value.denominator();
  std::int64_t rest = den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return std::to_string(num) + "/" + std::to_string(den);

  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = num * (scale / den);
  std::string sign = scaled < 0 ? "-" : "";
  std::uint64_t magnitude = scaled < 0 ? static_cast<std::uint64_t>(-scaled) : static_cast<std::uint64_t>(scaled);
  std::string out = std::to_string(magnitude / static_cast<std::uint64_t>(scale));
  if (digits > 0) {
    std::string frac = std::to_string(magnitude % static_cast<std::uint64_t>(scale));
    frac.insert(0, digits - frac.size(), '0');
    out += "." + frac;
  }
  return sign + out;
}

double ToDouble(const Rational& value) {
  return boost::rational_cast<double>(value);
}

}  // namespace pesp
