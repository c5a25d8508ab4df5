#include "gnatfam/rational.hpp"

#include "gnatfam/error.hpp"

#include <charconv>

namespace gnatfam {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::NonFaithful: return "NonFaithful";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::NotGWeil: return "NotGWeil";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::CatalogTooLarge: return "CatalogTooLarge";
  }
  return "Unknown";
}

std::int64_t floor(const Rational& q) {
  const auto n = q.numerator();
  const auto d = q.denominator();  // always positive
  auto f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

Rational fract(const Rational& q) { return q - floor(q); }

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::Input, "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  const auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(trimmed, text));
  const auto num = parse_int(trimmed.substr(0, slash), text);
  const auto den = parse_int(trimmed.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::Input, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational dot(const RationalVector& v, const IntVector& m) {
  Rational s(0);
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * m[i];
  return s;
}

}  // namespace gnatfam
