#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace boost {

// Boost 1.74's mixed rational/int operator== recurses forever under C++20
// reversed-operand lookup; these exact non-template overloads take priority.
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}

}  // namespace boost

namespace gnatfam {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

/// Largest integer not exceeding `q`.
std::int64_t floor(const Rational& q);

/// `q - floor(q)`, always in [0, 1).
Rational fract(const Rational& q);

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p" with optional sign; throws Error(Input) otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const RationalVector& v);

Rational dot(const RationalVector& v, const IntVector& m);

}  // namespace gnatfam
