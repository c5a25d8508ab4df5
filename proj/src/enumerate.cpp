#include "gnatfam/enumerate.hpp"

#include "gnatfam/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <thread>

namespace gnatfam {

namespace {

// next[c][i] = index of chi_c * rho(x_i)
std::vector<std::vector<std::size_t>> successor_table(const AbelianGroup& g) {
  const auto& chars = g.characters();
  std::vector<std::vector<std::size_t>> next(chars.size(), std::vector<std::size_t>(g.dimension()));
  for (std::size_t c = 0; c < chars.size(); ++c)
    for (std::size_t i = 0; i < g.dimension(); ++i)
      next[c][i] = g.index_of(char_mul(g, chars[c], g.coordinate_weight(i)));
  return next;
}

std::vector<std::size_t> inverse_table(const AbelianGroup& g) {
  std::vector<std::size_t> inv;
  for (const auto& chi : g.characters()) inv.push_back(g.index_of(char_inv(g, chi)));
  return inv;
}

// Shortest-path distances from chi0 in the Cayley quiver chi -> chi rho(x_i)
// with arrow weight <v_P, e_i>. By translation invariance this also gives
// every pairwise distance: dist(a, b) = from_trivial[b / a].
std::vector<Rational> quiver_distances(const AbelianGroup& g, const Ray& ray,
                                       const std::vector<std::vector<std::size_t>>& next) {
  std::vector<std::optional<Rational>> dist(g.order());
  using Item = std::pair<Rational, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = Rational(0);
  heap.emplace(Rational(0), 0);
  while (!heap.empty()) {
    auto [d, c] = heap.top();
    heap.pop();
    if (d != *dist[c]) continue;
    for (std::size_t i = 0; i < g.dimension(); ++i) {
      const auto nd = d + ray.vector[i];
      auto& slot = dist[next[c][i]];
      if (!slot || nd < *slot) {
        slot = nd;
        heap.emplace(nd, next[c][i]);
      }
    }
  }
  std::vector<Rational> out;
  for (const auto& d : dist) out.push_back(*d);
  return out;
}

bool satisfies_inequalities(const RationalVector& q, const Ray& ray,
                            const std::vector<std::vector<std::size_t>>& next) {
  for (std::size_t c = 0; c < q.size(); ++c)
    for (std::size_t i = 0; i < ray.vector.size(); ++i)
      if (q[c] + ray.vector[i] - q[next[c][i]] < 0) return false;
  return true;
}

// Smallest value >= lo congruent to `residue` mod 1.
Rational first_at_least(const Rational& lo, const Rational& residue) {
  return residue + Rational(-floor(residue - lo));
}

}  // namespace

RaySolutionSet per_ray_solutions(const Instance& inst, std::size_t ray_id) {
  const auto& g = inst.group;
  const auto& ray = inst.fan.rays.at(ray_id);
  const std::size_t k = g.order();
  RaySolutionSet out{ray_id, {}};
  if (ray.kind == RayKind::CoordinatePlain) {
    out.solutions.emplace_back(k, Rational(0));
    return out;
  }

  const auto next = successor_table(g);
  const auto& chars = g.characters();
  const auto dist = quiver_distances(g, ray, next);
  // quotient[a][b] = index of b / a
  std::vector<std::vector<std::size_t>> quotient(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    const auto inv_a = char_inv(g, chars[a]);
    for (std::size_t b = 0; b < k; ++b) quotient[a][b] = g.index_of(char_mul(g, chars[b], inv_a));
  }
  RationalVector residue(k);
  for (std::size_t c = 0; c < k; ++c) residue[c] = char_valuation(ray, chars[c]);

  // Bounds implied by q_chi0 = 0.
  RationalVector lo(k), hi(k);
  for (std::size_t b = 0; b < k; ++b) {
    hi[b] = dist[b];
    lo[b] = -dist[quotient[b][0]];
  }
  lo[0] = hi[0] = 0;

  RationalVector q(k, Rational(0));
  // Bounds are copied per depth so backtracking is a pop.
  std::vector<std::pair<RationalVector, RationalVector>> frames{{lo, hi}};
  auto dfs = [&](auto&& self, std::size_t var) -> void {
    if (var == k) {
      out.solutions.push_back(q);
      return;
    }
    for (auto v = first_at_least(frames.back().first[var], residue[var]); v <= frames.back().second[var]; v += 1) {
      q[var] = v;
      auto nlo = frames.back().first;
      auto nhi = frames.back().second;
      bool feasible = true;
      for (std::size_t b = var + 1; b < k && feasible; ++b) {
        nhi[b] = std::min(nhi[b], v + dist[quotient[var][b]]);
        nlo[b] = std::max(nlo[b], v - dist[quotient[b][var]]);
        feasible = first_at_least(nlo[b], residue[b]) <= nhi[b];
      }
      if (!feasible) continue;
      frames.emplace_back(std::move(nlo), std::move(nhi));
      self(self, var + 1);
      frames.pop_back();
    }
  };
  dfs(dfs, 1);
  return out;
}

RaySolutionSet brute_force_per_ray(const Instance& inst, std::size_t ray_id) {
  const auto& g = inst.group;
  const auto& ray = inst.fan.rays.at(ray_id);
  const auto next = successor_table(g);
  const auto inv = inverse_table(g);
  const auto upper = max_shift_coefficients(g, ray);
  const std::size_t k = g.order();

  std::vector<RationalVector> choices(k);
  choices[0] = {Rational(0)};
  for (std::size_t c = 1; c < k; ++c) {
    const auto res = char_valuation(ray, g.characters()[c]);
    for (auto v = first_at_least(-upper[inv[c]], res); v <= upper[c]; v += 1) choices[c].push_back(v);
  }

  RaySolutionSet out{ray_id, {}};
  if (std::any_of(choices.begin(), choices.end(), [](auto& c) { return c.empty(); })) return out;
  std::vector<std::size_t> pos(k, 0);
  RationalVector q(k);
  for (;;) {
    for (std::size_t c = 0; c < k; ++c) q[c] = choices[c][pos[c]];
    if (satisfies_inequalities(q, ray, next)) out.solutions.push_back(q);
    std::size_t c = k;
    while (c-- > 0) {
      if (++pos[c] < choices[c].size()) break;
      pos[c] = 0;
    }
    if (c == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

FamilyCatalog build_catalog(const Instance& inst, unsigned jobs) {
  const std::size_t rays = inst.fan.rays.size();
  FamilyCatalog catalog;
  catalog.per_ray.resize(rays);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(rays, 1))));

  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t r = cursor++; r < rays; r = cursor++) catalog.per_ray[r] = per_ray_solutions(inst, r);
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  catalog.total_count = 1;
  for (const auto& s : catalog.per_ray) catalog.total_count *= s.solutions.size();
  return catalog;
}

std::uint64_t default_catalog_cap() {
  if (const char* env = std::getenv("GNATFAM_MAX_CATALOG")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
    throw Error(ErrorKind::Input, std::string("GNATFAM_MAX_CATALOG is not a number: ") + env);
  }
  return 1'000'000;
}

ReductorSet assemble_family(const Instance& inst, const FamilyCatalog& catalog,
                            const FamilyIndex& choice) {
  std::vector<QDivisor> ds(inst.group.order());
  for (std::size_t r = 0; r < catalog.per_ray.size(); ++r) {
    const auto& sol = catalog.per_ray[r].solutions[choice[r]];
    for (std::size_t c = 0; c < sol.size(); ++c) ds[c].set(catalog.per_ray[r].ray, sol[c]);
  }
  return ReductorSet(std::move(ds));
}

namespace {

std::uint64_t checked_total(const FamilyCatalog& catalog, std::uint64_t cap) {
  if (catalog.total_count > cap)
    throw Error(ErrorKind::CatalogTooLarge, "catalog has " + catalog.total_count.str() +
                                                " families, above the cap of " + std::to_string(cap));
  return catalog.total_count.convert_to<std::uint64_t>();
}

}  // namespace

void for_each_family(const Instance& inst, const FamilyCatalog& catalog, std::uint64_t cap,
                     const std::function<void(std::uint64_t, const ReductorSet&)>& visit) {
  const auto total = checked_total(catalog, cap);
  const std::size_t rays = catalog.per_ray.size();
  FamilyIndex choice(rays, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    visit(idx, assemble_family(inst, catalog, choice));
    for (std::size_t r = rays; r-- > 0;) {
      if (++choice[r] < catalog.per_ray[r].solutions.size()) break;
      choice[r] = 0;
    }
  }
}

RationalVector shift_coefficients(const AbelianGroup& g, const RationalVector& q,
                                  const Character& lambda) {
  const auto& chars = g.characters();
  const auto offset = q[g.index_of(char_inv(g, lambda))];
  RationalVector out(q.size());
  for (std::size_t c = 0; c < chars.size(); ++c) out[g.index_of(char_mul(g, chars[c], lambda))] = q[c] - offset;
  return out;
}

RationalVector reflect_coefficients(const AbelianGroup& g, const RationalVector& q) {
  const auto& chars = g.characters();
  RationalVector out(q.size());
  for (std::size_t c = 0; c < chars.size(); ++c) out[c] = -q[g.index_of(char_inv(g, chars[c]))];
  return out;
}

std::vector<std::vector<std::vector<std::size_t>>> symmetry_permutations(
    const Instance& inst, const FamilyCatalog& catalog) {
  const auto& g = inst.group;
  std::vector<std::vector<std::vector<std::size_t>>> perms;
  for (const auto& set : catalog.per_ray) {
    std::map<RationalVector, std::size_t> where;
    for (std::size_t s = 0; s < set.solutions.size(); ++s) where.emplace(set.solutions[s], s);
    auto lookup = [&](const RationalVector& q) {
      const auto it = where.find(q);
      if (it == where.end())
        throw Error(ErrorKind::Input, "solution set at ray " + std::to_string(set.ray) +
                                          " is not closed under the symmetries");
      return it->second;
    };
    std::vector<std::vector<std::size_t>> ray_perms;
    for (const auto& lambda : g.characters()) {
      std::vector<std::size_t> p;
      for (const auto& q : set.solutions) p.push_back(lookup(shift_coefficients(g, q, lambda)));
      ray_perms.push_back(std::move(p));
    }
    std::vector<std::size_t> p;
    for (const auto& q : set.solutions) p.push_back(lookup(reflect_coefficients(g, q)));
    ray_perms.push_back(std::move(p));
    perms.push_back(std::move(ray_perms));
  }
  return perms;
}

std::vector<std::vector<std::uint64_t>> orbits(const Instance& inst, const FamilyCatalog& catalog,
                                               std::uint64_t cap) {
  const auto total = checked_total(catalog, cap);
  const auto perms = symmetry_permutations(inst, catalog);
  const std::size_t rays = catalog.per_ray.size();
  const std::size_t generators = inst.group.order() + 1;

  std::vector<std::uint64_t> stride(rays, 1);
  for (std::size_t r = rays; r-- > 1;) stride[r - 1] = stride[r] * catalog.per_ray[r].solutions.size();

  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  FamilyIndex choice(rays, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (std::size_t gen = 0; gen < generators; ++gen) {
      std::uint64_t image = 0;
      for (std::size_t r = 0; r < rays; ++r) image += perms[r][gen][choice[r]] * stride[r];
      auto a = find(idx), b = find(image);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    for (std::size_t r = rays; r-- > 0;) {
      if (++choice[r] < catalog.per_ray[r].solutions.size()) break;
      choice[r] = 0;
    }
  }

  std::map<std::uint64_t, std::vector<std::uint64_t>> groups;
  for (std::uint64_t idx = 0; idx < total; ++idx) groups[find(idx)].push_back(idx);
  std::vector<std::vector<std::uint64_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;  // roots are the minimal members, so map order is by smallest member
}

}  // namespace gnatfam
