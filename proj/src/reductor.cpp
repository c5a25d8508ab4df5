#include "gnatfam/reductor.hpp"

#include "gnatfam/error.hpp"

namespace gnatfam {

namespace {

void require_total(const Instance& inst, const ReductorSet& set) {
  if (set.size() != inst.group.order())
    throw Error(ErrorKind::Input, "reductor set has " + std::to_string(set.size()) +
                                      " divisors, expected " + std::to_string(inst.group.order()));
  for (const auto& d : set.divisors())
    for (const auto& [ray, q] : d.coefficients())
      if (ray >= inst.fan.rays.size())
        throw Error(ErrorKind::Input, "divisor references unknown ray " + std::to_string(ray));
}

}  // namespace

std::vector<Violation> check_reductor(const Instance& inst, const ReductorSet& set) {
  require_total(inst, set);
  const auto& g = inst.group;
  const auto& chars = g.characters();
  const std::size_t n = g.dimension();

  std::vector<std::vector<std::size_t>> next(chars.size(), std::vector<std::size_t>(n));
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      next[c][i] = g.index_of(char_mul(g, chars[c], g.coordinate_weight(i)));

  std::vector<Violation> out;
  for (const auto& ray : inst.fan.rays) {
    for (std::size_t c = 0; c < chars.size(); ++c) {
      const auto q = set[c].coefficient(ray.id);
      if (fract(q) != char_valuation(ray, chars[c]))
        out.push_back({ViolationKind::GWeil, ray.id, c, std::nullopt, q});
      for (std::size_t i = 0; i < n; ++i) {
        const auto lhs = q + ray.vector[i] - set[next[c][i]].coefficient(ray.id);
        if (lhs < 0) out.push_back({ViolationKind::Inequality, ray.id, c, i, lhs});
      }
    }
  }
  return out;
}

ReductorSet canonical_set(const Instance& inst) {
  std::vector<QDivisor> ds;
  for (const auto& chi : inst.group.characters()) ds.push_back(canonical_divisor(inst, chi));
  return ReductorSet(std::move(ds));
}

ReductorSet maxshift_set(const Instance& inst) {
  std::vector<QDivisor> ds(inst.group.order());
  for (const auto& ray : inst.fan.rays) {
    const auto coeffs = max_shift_coefficients(inst.group, ray);
    for (std::size_t c = 0; c < coeffs.size(); ++c) ds[c].set(ray.id, coeffs[c]);
  }
  return ReductorSet(std::move(ds));
}

ReductorSet minshift_set(const Instance& inst) { return reflect(inst.group, maxshift_set(inst)); }

bool is_normalised(const ReductorSet& set) { return set.size() > 0 && set[0].is_zero(); }

ReductorSet normalize(const ReductorSet& set) {
  const auto base = set[0];
  if (!base.is_integral())
    throw Error(ErrorKind::NotGWeil, "divisor of the trivial character is not integral");
  std::vector<QDivisor> ds;
  for (const auto& d : set.divisors()) ds.push_back(d - base);
  return ReductorSet(std::move(ds));
}

ReductorSet char_shift(const AbelianGroup& g, const ReductorSet& set, const Character& lambda) {
  const auto& chars = g.characters();
  const auto& offset = set.at(g, char_inv(g, lambda));
  std::vector<QDivisor> ds(set.size());
  for (std::size_t c = 0; c < chars.size(); ++c)
    ds[g.index_of(char_mul(g, chars[c], lambda))] = set[c] - offset;
  return ReductorSet(std::move(ds));
}

ReductorSet reflect(const AbelianGroup& g, const ReductorSet& set) {
  const auto& chars = g.characters();
  std::vector<QDivisor> ds(set.size());
  for (std::size_t c = 0; c < chars.size(); ++c) ds[c] = -set.at(g, char_inv(g, chars[c]));
  return ReductorSet(std::move(ds));
}

ReductorSet twist(const ReductorSet& set, const QDivisor& n) {
  if (!n.is_integral()) throw Error(ErrorKind::NotIntegral, "twist divisor has fractional coefficients");
  std::vector<QDivisor> ds;
  for (const auto& d : set.divisors()) ds.push_back(d + n);
  return ReductorSet(std::move(ds));
}

std::optional<IntVector> is_principal(const Instance& inst, const QDivisor& d) {
  for (const auto& [ray, q] : d.coefficients()) {
    if (ray >= inst.fan.rays.size())
      throw Error(ErrorKind::Input, "divisor references unknown ray " + std::to_string(ray));
  }
  if (!d.is_integral()) return std::nullopt;

  // Any maximal cone spans Q^n, so it pins m down; the rest must agree.
  const auto& cone = inst.fan.max_cones.front();
  linalg::RationalMatrix rays;
  RationalVector rhs;
  for (auto r : cone) {
    rays.push_back(inst.fan.rays[r].vector);
    rhs.push_back(d.coefficient(r));
  }
  // <v_k, m> = d_k for rows v_k, i.e. m = R^{-1} d as a column.
  const auto inv = linalg::inverse(rays);
  const auto m_rat = linalg::row_times(rhs, linalg::transpose(*inv));
  IntVector m;
  for (const auto& q : m_rat) {
    if (!gnatfam::is_integral(q)) return std::nullopt;
    m.push_back(q.numerator());
  }
  for (const auto& ray : inst.fan.rays)
    if (dot(ray.vector, m) != d.coefficient(ray.id)) return std::nullopt;
  if (inst.group.reduce(m) != trivial_character(inst.group)) return std::nullopt;
  return m;
}

std::optional<IntVector> linear_equivalence_witness(const Instance& inst, const ReductorSet& a,
                                                    const ReductorSet& b) {
  require_total(inst, a);
  require_total(inst, b);
  const auto diff = a[0] - b[0];
  for (std::size_t c = 1; c < a.size(); ++c)
    if (a[c] - b[c] != diff) return std::nullopt;
  return is_principal(inst, diff);
}

}  // namespace gnatfam
