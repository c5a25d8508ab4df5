#include "gnatfam/group.hpp"

#include "gnatfam/error.hpp"

#include <deque>
#include <set>

namespace gnatfam {

namespace {

RationalVector generator_vector(const GroupGenerator& gen) {
  RationalVector v;
  v.reserve(gen.weights.size());
  for (auto a : gen.weights) v.push_back(fract(Rational(a, gen.order)));
  return v;
}

RationalVector add_mod_one(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fract(a[i] + b[i]);
  return out;
}

void check_spec(const GroupSpec& spec) {
  if (spec.dimension == 0) throw Error(ErrorKind::Input, "dimension must be positive");
  for (const auto& gen : spec.generators) {
    if (gen.order < 1) throw Error(ErrorKind::Input, "generator order must be >= 1");
    if (gen.weights.size() != spec.dimension)
      throw Error(ErrorKind::Input, "generator weight row has length " +
                                        std::to_string(gen.weights.size()) + ", expected " +
                                        std::to_string(spec.dimension));
    for (auto a : gen.weights)
      if (a < 0 || a >= gen.order)
        throw Error(ErrorKind::Input, "generator weight " + std::to_string(a) +
                                          " outside [0, " + std::to_string(gen.order) + ")");
  }
}

}  // namespace

linalg::RationalMatrix overlattice_basis(std::size_t dimension,
                                         const std::vector<RationalVector>& elements) {
  linalg::RationalMatrix gens;
  for (std::size_t i = 0; i < dimension; ++i) {
    RationalVector e(dimension, Rational(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const auto& g : elements) gens.push_back(g);
  const auto scale = linalg::lcm_of_denominators(gens);
  linalg::IntMatrix scaled;
  for (const auto& row : gens) {
    IntVector r;
    for (const auto& q : row) r.push_back((q * scale).numerator());
    scaled.push_back(std::move(r));
  }
  const auto hnf = linalg::lower_hermite_basis(scaled, dimension);
  linalg::RationalMatrix basis;
  for (const auto& row : hnf) {
    RationalVector r;
    for (auto x : row) r.emplace_back(x, scale);
    basis.push_back(std::move(r));
  }
  return basis;
}

AbelianGroup build_group(const GroupSpec& spec, const GroupOptions& options) {
  check_spec(spec);
  const std::size_t n = spec.dimension;

  std::vector<RationalVector> gens;
  for (const auto& gen : spec.generators) gens.push_back(generator_vector(gen));

  std::set<RationalVector> seen{RationalVector(n, Rational(0))};
  std::deque<RationalVector> queue{RationalVector(n, Rational(0))};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      auto next = add_mod_one(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > options.max_order)
          throw Error(ErrorKind::GroupTooLarge,
                      "group order exceeds cap " + std::to_string(options.max_order));
        queue.push_back(std::move(next));
      }
    }
  }

  if (options.strict_presentation) {
    // Abstract order of Z/r_1 x ... x Z/r_k, saturated just above the image size.
    std::size_t abstract = 1;
    for (const auto& gen : spec.generators) {
      if (abstract > seen.size()) break;
      abstract *= static_cast<std::size_t>(gen.order);
    }
    if (abstract != seen.size())
      throw Error(ErrorKind::NonFaithful,
                  "presentation is not faithful: image has order " + std::to_string(seen.size()) +
                      " but the presented group is larger");
  }

  AbelianGroup g;
  g.dimension_ = n;
  g.elements_.assign(seen.begin(), seen.end());

  // M0 is the dual lattice of N: the columns of B^{-1} for the basis rows B.
  const auto basis = overlattice_basis(n, g.elements_);
  const auto inv = linalg::inverse(basis);
  const auto dual = linalg::transpose(*inv);
  linalg::IntMatrix dual_int;
  for (const auto& row : dual) {
    IntVector r;
    for (const auto& q : row) r.push_back(q.numerator());  // integral since Z^n is in N
    dual_int.push_back(std::move(r));
  }
  g.invariant_basis_ = linalg::lower_hermite_basis(dual_int, n);

  // Representatives are the box 0 <= m_i < pivot_i, listed lexicographically.
  IntVector m(n, 0);
  for (;;) {
    g.characters_.emplace_back(m);
    std::size_t i = n;
    while (i-- > 0) {
      if (++m[i] < g.invariant_basis_[i][i]) break;
      m[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    g.coordinate_weights_.push_back(g.reduce(e));
  }
  return g;
}

std::size_t AbelianGroup::index_of(const Character& chi) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dimension_; ++i) {
    idx = idx * static_cast<std::size_t>(invariant_basis_[i][i]) +
          static_cast<std::size_t>(chi.rep()[i]);
  }
  return idx;
}

Character AbelianGroup::reduce(const IntVector& m) const {
  return Character(linalg::reduce_mod(invariant_basis_, m));
}

Character monomial_weight(const AbelianGroup& g, const Monomial& m) {
  if (m.size() != g.dimension()) throw Error(ErrorKind::Input, "monomial has wrong length");
  return g.reduce(m);
}

Character trivial_character(const AbelianGroup& g) { return g.characters().front(); }

Character char_mul(const AbelianGroup& g, const Character& a, const Character& b) {
  IntVector s = a.rep();
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b.rep()[i];
  return g.reduce(s);
}

Character char_inv(const AbelianGroup& g, const Character& a) {
  IntVector s = a.rep();
  for (auto& x : s) x = -x;
  return g.reduce(s);
}

std::size_t char_order(const AbelianGroup& g, const Character& a) {
  const auto e = trivial_character(g);
  auto cur = a;
  std::size_t k = 1;
  while (cur != e) {
    cur = char_mul(g, cur, a);
    ++k;
  }
  return k;
}

const std::vector<Character>& enumerate_characters(const AbelianGroup& g) {
  return g.characters();
}

std::string to_string(const Character& chi) {
  std::string out;
  for (std::size_t i = 0; i < chi.rep().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(chi.rep()[i]);
  }
  return out;
}

}  // namespace gnatfam
