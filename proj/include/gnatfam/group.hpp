#pragma once

#include "gnatfam/linalg.hpp"
#include "gnatfam/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gnatfam {

/// One generator of a diagonal action: g = diag(e^{2πi a_1/r}, …, e^{2πi a_n/r}).
struct GroupGenerator {
  std::int64_t order = 1;
  IntVector weights;
};

struct GroupSpec {
  std::size_t dimension = 0;
  std::vector<GroupGenerator> generators;
};

struct GroupOptions {
  // Reject presentations whose abstract order exceeds the order of their
  // image in (Q/Z)^n. When false the image group is used as given.
  bool strict_presentation = true;
  std::size_t max_order = 10000;
};

/// Exponent vector of a monomial x^m on C^n.
using Monomial = IntVector;

/// An element of the character group, held as the canonical exponent
/// representative of its coset modulo the invariant-monomial lattice M0.
/// Only meaningful together with the group that produced it.
class Character {
 public:
  Character() = default;
  explicit Character(IntVector rep) : rep_(std::move(rep)) {}

  const IntVector& rep() const { return rep_; }

  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;

 private:
  IntVector rep_;
};

/// Finite abelian diagonal subgroup of GL_n(C), stored as its set of weight
/// vectors in [0,1)^n together with the character-group bookkeeping.
class AbelianGroup {
 public:
  std::size_t dimension() const { return dimension_; }
  std::size_t order() const { return elements_.size(); }

  /// Sorted weight vectors; the first is the identity.
  const std::vector<RationalVector>& elements() const { return elements_; }

  /// Triangular basis of M0 = { m : <g, m> in Z for all g }.
  const linalg::IntMatrix& invariant_basis() const { return invariant_basis_; }

  /// Canonical character list in lexicographic order of representatives.
  const std::vector<Character>& characters() const { return characters_; }

  /// Position of `chi` in `characters()`.
  std::size_t index_of(const Character& chi) const;

  /// Reduces any exponent vector (negative entries allowed) to its character.
  Character reduce(const IntVector& m) const;

  /// rho(x_i), the weight of the i-th coordinate function.
  const Character& coordinate_weight(std::size_t i) const { return coordinate_weights_[i]; }

  friend AbelianGroup build_group(const GroupSpec& spec, const GroupOptions& options);

 private:
  std::size_t dimension_ = 0;
  std::vector<RationalVector> elements_;
  linalg::IntMatrix invariant_basis_;
  std::vector<Character> characters_;
  std::vector<Character> coordinate_weights_;
};

AbelianGroup build_group(const GroupSpec& spec, const GroupOptions& options = {});

Character monomial_weight(const AbelianGroup& g, const Monomial& m);
Character trivial_character(const AbelianGroup& g);
Character char_mul(const AbelianGroup& g, const Character& a, const Character& b);
Character char_inv(const AbelianGroup& g, const Character& a);
std::size_t char_order(const AbelianGroup& g, const Character& a);
const std::vector<Character>& enumerate_characters(const AbelianGroup& g);

/// Basis of N = Z^n + sum Z g, as rational rows in triangular form.
linalg::RationalMatrix overlattice_basis(std::size_t dimension,
                                         const std::vector<RationalVector>& elements);

/// Text label "m1,m2,...".
std::string to_string(const Character& chi);

}  // namespace gnatfam
