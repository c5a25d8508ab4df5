#pragma once

#include "gnatfam/lattice.hpp"
#include "gnatfam/valuation.hpp"

#include <optional>
#include <vector>

namespace gnatfam {

/// {D_chi} for every character, stored in the order of `group.characters()`.
class ReductorSet {
 public:
  ReductorSet() = default;
  explicit ReductorSet(std::vector<QDivisor> divisors) : divisors_(std::move(divisors)) {}

  std::size_t size() const { return divisors_.size(); }
  const QDivisor& operator[](std::size_t chi) const { return divisors_[chi]; }
  QDivisor& operator[](std::size_t chi) { return divisors_[chi]; }
  const std::vector<QDivisor>& divisors() const { return divisors_; }

  const QDivisor& at(const AbelianGroup& g, const Character& chi) const {
    return divisors_[g.index_of(chi)];
  }

  friend bool operator==(const ReductorSet&, const ReductorSet&) = default;

 private:
  std::vector<QDivisor> divisors_;
};

enum class ViolationKind { GWeil, Inequality };

/// One failed condition. For GWeil, `value` is the offending coefficient and
/// `generator` is empty; for Inequality, `value` is
/// q_{chi,P} + <v_P, e_i> - q_{chi rho(x_i), P} (negative).
struct Violation {
  ViolationKind kind;
  std::size_t ray;
  std::size_t character;
  std::optional<std::size_t> generator;
  Rational value;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every violation, ordered by ray id, character index, then generator
/// (G-Weil failures first).
std::vector<Violation> check_reductor(const Instance& inst, const ReductorSet& set);

ReductorSet canonical_set(const Instance& inst);
ReductorSet maxshift_set(const Instance& inst);
/// Reflection of the maximal shift set; attains the lower bound -M_{chi^-1}.
ReductorSet minshift_set(const Instance& inst);

bool is_normalised(const ReductorSet& set);

/// {D_chi - D_chi0}. Throws NotGWeil if D_chi0 is not integral.
ReductorSet normalize(const ReductorSet& set);

/// D'_{chi lambda} = D_chi - D_{lambda^-1}.
ReductorSet char_shift(const AbelianGroup& g, const ReductorSet& set, const Character& lambda);

/// D'_chi = -D_{chi^-1}.
ReductorSet reflect(const AbelianGroup& g, const ReductorSet& set);

/// {D_chi + n}. Throws NotIntegral unless n is a Weil divisor.
ReductorSet twist(const ReductorSet& set, const QDivisor& n);

/// A monomial exponent m in M0 with <v_P, m> = d_P at every ray, if any.
std::optional<IntVector> is_principal(const Instance& inst, const QDivisor& d);

/// Witness m with a_chi - b_chi = div(x^m) for every chi, if one exists.
std::optional<IntVector> linear_equivalence_witness(const Instance& inst, const ReductorSet& a,
                                                    const ReductorSet& b);

inline bool linear_equiv(const Instance& inst, const ReductorSet& a, const ReductorSet& b) {
  return linear_equivalence_witness(inst, a, b).has_value();
}

}  // namespace gnatfam
