#pragma once

#include "gnatfam/enumerate.hpp"
#include "gnatfam/io.hpp"
#include "gnatfam/lattice.hpp"
#include "gnatfam/reductor.hpp"

#include <fstream>
#include <numeric>
#include <string>
#include <vector>

namespace gnatfam::testing {

inline Rational Q(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

inline GroupSpec cyclic(std::int64_t r, IntVector weights) {
  const auto n = weights.size();
  return GroupSpec{n, {GroupGenerator{r, std::move(weights)}}};
}

inline GroupSpec trivial_group(std::size_t n) { return GroupSpec{n, {}}; }

inline Instance minimal_instance(std::int64_t r, std::int64_t a) {
  return make_instance(cyclic(r, {1, a}), std::nullopt);
}

/// Every 1/r(1,a) with 2 <= r <= 12 and gcd(a, r) = 1.
inline std::vector<std::pair<std::int64_t, std::int64_t>> cyclic_sweep() {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t r = 2; r <= 12; ++r)
    for (std::int64_t a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) out.emplace_back(r, a);
  return out;
}

/// 1/3(1,1,1) with the star subdivision at (1/3,1/3,1/3).
inline Instance star_3d() {
  ExplicitFan fan;
  fan.rays = {{Q(1), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}, {Q(1, 3), Q(1, 3), Q(1, 3)}};
  fan.cones = {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}};
  return make_instance(cyclic(3, {1, 1, 1}), fan);
}

/// 1/2(1,1,0): the A1 surface singularity times a line.
inline Instance a1_times_line() {
  ExplicitFan fan;
  fan.rays = {{Q(1), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}, {Q(1, 2), Q(1, 2), Q(0)}};
  fan.cones = {{0, 3, 2}, {3, 1, 2}};
  return make_instance(cyclic(2, {1, 1, 0}), fan);
}

/// 1/2(1,0): a quasi-reflection; the quotient is smooth and the x-axis ray
/// becomes e1/2.
inline Instance quasi_reflection() {
  ExplicitFan fan;
  fan.rays = {{Q(1, 2), Q(0)}, {Q(0), Q(1)}};
  fan.cones = {{0, 1}};
  return make_instance(cyclic(2, {1, 0}), fan);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(GNATFAM_FIXTURES) + "/" + name;
}

inline io::Json load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  return io::Json::parse(in);
}

inline std::size_t ray_with_vector(const Instance& inst, const RationalVector& v) {
  for (const auto& r : inst.fan.rays)
    if (r.vector == v) return r.id;
  throw std::runtime_error("no such ray");
}

}  // namespace gnatfam::testing
