#pragma once

#include "gnatfam/group.hpp"
#include "gnatfam/lattice.hpp"
#include "gnatfam/rational.hpp"

#include <map>
#include <vector>

namespace gnatfam {

/// Q-Weil divisor sum q_P P on the toric divisors of a fan, keyed by ray id.
/// Zero coefficients are never stored.
class QDivisor {
 public:
  using Map = std::map<std::size_t, Rational>;

  QDivisor() = default;
  explicit QDivisor(const Map& coeffs);

  Rational coefficient(std::size_t ray) const;
  void set(std::size_t ray, const Rational& q);

  const Map& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_integral() const;

  QDivisor& operator+=(const QDivisor& other);
  QDivisor& operator-=(const QDivisor& other);
  friend QDivisor operator+(QDivisor a, const QDivisor& b) { return a += b; }
  friend QDivisor operator-(QDivisor a, const QDivisor& b) { return a -= b; }
  friend QDivisor operator-(const QDivisor& a);
  friend bool operator==(const QDivisor&, const QDivisor&) = default;

 private:
  Map coeffs_;
};

/// <v_P, m>: the Q-valued valuation of x^m along the divisor of `ray`.
Rational monomial_valuation(const Ray& ray, const Monomial& m);

/// fract(<v_P, rep(chi)>), well defined because <v_P, M0> lies in Z.
Rational char_valuation(const Ray& ray, const Character& chi);

/// min over monomials x^m of weight chi of <v_P, m>. Computed over the box
/// 0 <= m_i < order(rho(x_i)); any exponent can be lowered by that order
/// without changing the weight or raising the pairing.
Rational max_shift_coeff(const AbelianGroup& g, const Ray& ray, const Character& chi);

/// The same minimum for every character at once, indexed like
/// `g.characters()`. One pass over the box.
std::vector<Rational> max_shift_coefficients(const AbelianGroup& g, const Ray& ray);

/// C_chi: char_valuation at every ray, lifted to [0,1).
QDivisor canonical_divisor(const Instance& inst, const Character& chi);

/// M_chi: max_shift_coeff at every ray.
QDivisor max_shift_divisor(const Instance& inst, const Character& chi);

}  // namespace gnatfam
