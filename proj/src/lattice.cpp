#include "gnatfam/lattice.hpp"

#include "gnatfam/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gnatfam {

Overlattice::Overlattice(const AbelianGroup& g)
    : basis_(overlattice_basis(g.dimension(), g.elements())), cosets_(g.elements()) {
  inverse_ = *linalg::inverse(basis_);
  const auto det = linalg::determinant(basis_);
  index_ = (Rational(1) / det).numerator();
  if (index_ < 0) index_ = -index_;
}

RationalVector Overlattice::coordinates(const RationalVector& v) const {
  return linalg::row_times(v, inverse_);
}

bool Overlattice::contains(const RationalVector& v) const {
  const auto c = coordinates(v);
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integral(q); });
}

bool Overlattice::is_primitive(const RationalVector& v) const {
  const auto c = coordinates(v);
  std::int64_t g = 0;
  for (const auto& q : c) {
    if (!is_integral(q)) return false;
    g = std::gcd(g, q.numerator());
  }
  return g == 1;
}

Overlattice build_lattice(const AbelianGroup& g) { return Overlattice(g); }

const char* to_string(RayKind kind) {
  switch (kind) {
    case RayKind::Unclassified: return "unclassified";
    case RayKind::Exceptional: return "exceptional";
    case RayKind::CoordinateBranch: return "coordinate-branch";
    case RayKind::CoordinatePlain: return "coordinate-plain";
  }
  return "unknown";
}

const char* to_string(FanCheck check) {
  switch (check) {
    case FanCheck::Containment: return "containment";
    case FanCheck::Primitivity: return "primitivity";
    case FanCheck::Smoothness: return "smoothness";
    case FanCheck::Properness: return "properness";
  }
  return "unknown";
}

bool FanReport::passed(FanCheck check) const {
  return std::none_of(failures.begin(), failures.end(),
                      [&](const FanFailure& f) { return f.check == check; });
}

Fan make_fan(std::size_t dimension, std::vector<RationalVector> rays,
             std::vector<std::vector<std::size_t>> cones) {
  for (const auto& r : rays)
    if (r.size() != dimension)
      throw Error(ErrorKind::Input, "ray " + to_string(r) + " has wrong length");

  std::vector<std::size_t> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rays[a] < rays[b]; });
  std::vector<std::size_t> new_id(rays.size());
  Fan fan;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    new_id[order[pos]] = pos;
    if (pos > 0 && rays[order[pos]] == rays[order[pos - 1]])
      throw Error(ErrorKind::Input, "duplicate ray " + to_string(rays[order[pos]]));
    fan.rays.push_back(Ray{rays[order[pos]], pos, RayKind::Unclassified});
  }

  for (auto& cone : cones) {
    if (cone.size() != dimension)
      throw Error(ErrorKind::Input, "cone with " + std::to_string(cone.size()) +
                                        " rays; maximal cones must have exactly " +
                                        std::to_string(dimension));
    for (auto& idx : cone) {
      if (idx >= rays.size())
        throw Error(ErrorKind::Input, "cone index " + std::to_string(idx) + " out of range");
      idx = new_id[idx];
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw Error(ErrorKind::Input, "cone repeats a ray index");
  }
  std::sort(cones.begin(), cones.end());
  if (std::adjacent_find(cones.begin(), cones.end()) != cones.end())
    throw Error(ErrorKind::Input, "duplicate cone");
  fan.max_cones = std::move(cones);
  return fan;
}

Fan minimal_resolution_2d(const Overlattice& lat) {
  if (lat.dimension() != 2)
    throw Error(ErrorKind::DimensionUnsupported,
                "automatic minimal resolution needs n = 2, got n = " +
                    std::to_string(lat.dimension()));

  // Shortest N-points on the two axes bound the compact part of the hull.
  Rational ax(1), ay(1);
  const auto& cosets = lat.coset_representatives();
  for (const auto& c : cosets) {
    if (c[1] == 0 && c[0] > 0) ax = std::min(ax, c[0]);
    if (c[0] == 0 && c[1] > 0) ay = std::min(ay, c[1]);
  }

  std::vector<RationalVector> pts;
  for (const auto& c : cosets)
    for (int dx = 0; dx < 2; ++dx)
      for (int dy = 0; dy < 2; ++dy) {
        RationalVector p{c[0] + dx, c[1] + dy};
        if ((p[0] != 0 || p[1] != 0) && p[0] <= ax && p[1] <= ay) pts.push_back(p);
      }

  // Gift-wrap from (0, ay) to (ax, 0) keeping every lattice point on the chain.
  std::vector<RationalVector> chain{{Rational(0), ay}};
  while (chain.back()[0] != ax) {
    const auto& cur = chain.back();
    const RationalVector* best = nullptr;
    Rational best_slope;
    for (const auto& p : pts) {
      if (p[0] <= cur[0]) continue;
      const Rational slope = (p[1] - cur[1]) / (p[0] - cur[0]);
      if (!best || slope < best_slope || (slope == best_slope && p[0] < (*best)[0])) {
        best = &p;
        best_slope = slope;
      }
    }
    chain.push_back(*best);
  }

  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) cones.push_back({i, i + 1});
  return make_fan(2, std::move(chain), std::move(cones));
}

namespace {

linalg::RationalMatrix cone_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
  linalg::RationalMatrix m;
  for (auto i : cone) m.push_back(fan.rays[i].vector);
  return m;
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Number of cones whose interior contains a generic point of the open
// orthant, or nullopt if every probe lands on a cone boundary.
std::optional<std::size_t> covering_degree(const Fan& fan) {
  const std::size_t n = fan.rays.empty() ? 0 : fan.rays.front().vector.size();
  std::vector<linalg::RationalMatrix> inverses;
  for (const auto& cone : fan.max_cones) inverses.push_back(*linalg::inverse(cone_matrix(fan, cone)));
  for (std::int64_t t : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    RationalVector p(n);
    Rational x(1);
    for (std::size_t i = 0; i < n; ++i, x *= Rational(t, t + 1)) p[i] = x;
    std::size_t count = 0;
    bool degenerate = false;
    for (const auto& inv : inverses) {
      const auto lambda = linalg::row_times(p, inv);
      const bool nonneg = std::all_of(lambda.begin(), lambda.end(), [](auto& q) { return q >= 0; });
      const bool pos = std::all_of(lambda.begin(), lambda.end(), [](auto& q) { return q > 0; });
      if (pos) ++count;
      else if (nonneg) degenerate = true;
    }
    if (!degenerate) return count;
  }
  return std::nullopt;
}

}  // namespace

FanReport validate_fan(const Fan& fan, const Overlattice& lat) {
  FanReport report;
  const std::size_t n = lat.dimension();

  for (const auto& ray : fan.rays) {
    const auto& v = ray.vector;
    if (v.size() != n) throw Error(ErrorKind::Input, "ray has wrong length");
    const bool nonneg = std::all_of(v.begin(), v.end(), [](auto& q) { return q >= 0; });
    const bool nonzero = std::any_of(v.begin(), v.end(), [](auto& q) { return q != 0; });
    if (!nonneg || !nonzero)
      report.failures.push_back({FanCheck::Containment,
                                 "ray " + to_string(v) + " is not in the closed positive orthant",
                                 {ray.id}, std::nullopt});
    if (!lat.contains(v))
      report.failures.push_back(
          {FanCheck::Primitivity, "ray " + to_string(v) + " is not a point of N", {ray.id}, std::nullopt});
    else if (!lat.is_primitive(v))
      report.failures.push_back(
          {FanCheck::Primitivity, "ray " + to_string(v) + " is not primitive in N", {ray.id}, std::nullopt});
  }

  bool cones_ok = true;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    for (auto i : cone)
      if (i >= fan.rays.size()) throw Error(ErrorKind::Input, "cone index out of range");
    if (cone.size() != n) throw Error(ErrorKind::Input, "cone is not simplicial of size n");
    linalg::RationalMatrix coords;
    for (auto i : cone) coords.push_back(lat.coordinates(fan.rays[i].vector));
    const auto det = linalg::determinant(coords);
    if (det == 0) cones_ok = false;
    if (det != 1 && det != -1)
      report.failures.push_back({FanCheck::Smoothness,
                                 "cone determinant in N is " + to_string(det) + ", expected ±1",
                                 cone, c});
  }

  if (fan.max_cones.empty()) {
    report.failures.push_back({FanCheck::Properness, "fan has no maximal cones", {}, std::nullopt});
    return report;
  }

  struct Side {
    std::size_t cone;
    std::size_t opposite;
  };
  std::map<std::vector<std::size_t>, std::vector<Side>> facets;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t k = 0; k < cone.size(); ++k)
        if (k != drop) facet.push_back(cone[k]);
      facets[facet].push_back({c, cone[drop]});
    }
  }

  bool pairing_ok = true;
  for (const auto& [facet, sides] : facets) {
    bool on_boundary = false;
    for (std::size_t i = 0; i < n && !on_boundary; ++i)
      on_boundary = std::all_of(facet.begin(), facet.end(),
                                [&](auto r) { return fan.rays[r].vector[i] == 0; });
    if (sides.size() == 1) {
      if (!on_boundary) {
        pairing_ok = false;
        report.failures.push_back({FanCheck::Properness,
                                   "facet lies in a single cone but not in a coordinate hyperplane",
                                   facet, sides.front().cone});
      }
      continue;
    }
    if (sides.size() > 2 || on_boundary) {
      pairing_ok = false;
      report.failures.push_back({FanCheck::Properness,
                                 "facet shared by " + std::to_string(sides.size()) + " cones",
                                 facet, sides.front().cone});
      continue;
    }
    auto side_sign = [&](std::size_t opposite) {
      auto m = cone_matrix(fan, facet);
      m.push_back(fan.rays[opposite].vector);
      return sign(linalg::determinant(m));
    };
    const int s0 = side_sign(sides[0].opposite);
    const int s1 = side_sign(sides[1].opposite);
    if (s0 == 0 || s1 == 0 || s0 == s1) {
      pairing_ok = false;
      report.failures.push_back({FanCheck::Properness,
                                 "cones sharing a facet overlap instead of lying on opposite sides",
                                 facet, sides[0].cone});
    }
  }

  if (pairing_ok && cones_ok) {
    const auto degree = covering_degree(fan);
    if (degree && *degree != 1)
      report.failures.push_back({FanCheck::Properness,
                                 "cones cover the orthant " + std::to_string(*degree) + " times",
                                 {}, std::nullopt});
  }
  return report;
}

Fan classify_rays(Fan fan, const Overlattice&) {
  for (auto& ray : fan.rays) {
    std::size_t nonzero = 0, axis = 0;
    for (std::size_t i = 0; i < ray.vector.size(); ++i)
      if (ray.vector[i] != 0) {
        ++nonzero;
        axis = i;
      }
    if (nonzero != 1) ray.kind = RayKind::Exceptional;
    else if (ray.vector[axis] == 1) ray.kind = RayKind::CoordinatePlain;
    else ray.kind = RayKind::CoordinateBranch;
  }
  return fan;
}

Instance make_instance(const GroupSpec& group, const FanSpec& fan, const GroupOptions& options) {
  auto g = build_group(group, options);
  Overlattice lat(g);
  Fan f = fan ? make_fan(g.dimension(), fan->rays, fan->cones) : minimal_resolution_2d(lat);
  const auto report = validate_fan(f, lat);
  if (!report.passed()) {
    std::string msg = "fan is not a smooth resolution:";
    for (const auto& failure : report.failures)
      msg += std::string(" [") + to_string(failure.check) + "] " + failure.detail + ";";
    throw Error(ErrorKind::InvalidFan, msg);
  }
  f = classify_rays(std::move(f), lat);
  return Instance{std::move(g), std::move(lat), std::move(f)};
}

}  // namespace gnatfam
