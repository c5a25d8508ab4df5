#include "gnatfam/valuation.hpp"

#include <optional>

namespace gnatfam {

QDivisor::QDivisor(const Map& coeffs) {
  for (const auto& [ray, q] : coeffs) set(ray, q);
}

Rational QDivisor::coefficient(std::size_t ray) const {
  const auto it = coeffs_.find(ray);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void QDivisor::set(std::size_t ray, const Rational& q) {
  if (q == 0) coeffs_.erase(ray);
  else coeffs_[ray] = q;
}

bool QDivisor::is_integral() const {
  for (const auto& [ray, q] : coeffs_)
    if (!gnatfam::is_integral(q)) return false;
  return true;
}

QDivisor& QDivisor::operator+=(const QDivisor& other) {
  if (this == &other) {
    for (auto& [ray, q] : coeffs_) q *= 2;
    return *this;
  }
  for (const auto& [ray, q] : other.coeffs_) set(ray, coefficient(ray) + q);
  return *this;
}

QDivisor& QDivisor::operator-=(const QDivisor& other) {
  if (this == &other) {
    coeffs_.clear();
    return *this;
  }
  for (const auto& [ray, q] : other.coeffs_) set(ray, coefficient(ray) - q);
  return *this;
}

QDivisor operator-(const QDivisor& a) {
  QDivisor out;
  for (const auto& [ray, q] : a.coeffs_) out.coeffs_[ray] = -q;
  return out;
}

Rational monomial_valuation(const Ray& ray, const Monomial& m) { return dot(ray.vector, m); }

Rational char_valuation(const Ray& ray, const Character& chi) {
  return fract(dot(ray.vector, chi.rep()));
}

std::vector<Rational> max_shift_coefficients(const AbelianGroup& g, const Ray& ray) {
  const std::size_t n = g.dimension();
  IntVector bound(n);
  for (std::size_t i = 0; i < n; ++i)
    bound[i] = static_cast<std::int64_t>(char_order(g, g.coordinate_weight(i)));

  std::vector<std::optional<Rational>> best(g.order());
  IntVector m(n, 0);
  for (;;) {
    const auto idx = g.index_of(g.reduce(m));
    const auto v = dot(ray.vector, m);
    if (!best[idx] || v < *best[idx]) best[idx] = v;
    std::size_t i = n;
    while (i-- > 0) {
      if (++m[i] < bound[i]) break;
      m[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::vector<Rational> out;
  out.reserve(best.size());
  for (const auto& b : best) out.push_back(*b);  // the x_i generate every character
  return out;
}

Rational max_shift_coeff(const AbelianGroup& g, const Ray& ray, const Character& chi) {
  return max_shift_coefficients(g, ray)[g.index_of(chi)];
}

QDivisor canonical_divisor(const Instance& inst, const Character& chi) {
  QDivisor d;
  for (const auto& ray : inst.fan.rays) d.set(ray.id, char_valuation(ray, chi));
  return d;
}

QDivisor max_shift_divisor(const Instance& inst, const Character& chi) {
  QDivisor d;
  const auto idx = inst.group.index_of(chi);
  for (const auto& ray : inst.fan.rays) d.set(ray.id, max_shift_coefficients(inst.group, ray)[idx]);
  return d;
}

}  // namespace gnatfam
