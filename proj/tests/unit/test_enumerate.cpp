#include <doctest.h>

#include "gnatfam/enumerate.hpp"
#include "gnatfam/error.hpp"
#include "support.hpp"

#include <set>

using namespace gnatfam;
using namespace gnatfam::testing;

namespace {

std::vector<Instance> small_instances() {
  std::vector<Instance> out;
  for (auto [r, a] : {std::pair<int, int>{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {6, 5}, {7, 3}})
    out.push_back(minimal_instance(r, a));
  out.push_back(quasi_reflection());
  out.push_back(star_3d());
  out.push_back(a1_times_line());
  out.push_back(make_instance(GroupSpec{2, {{2, {1, 0}}, {2, {0, 1}}}},
                              ExplicitFan{{{Q(1, 2), Q(0)}, {Q(0), Q(1, 2)}}, {{0, 1}}}));
  out.push_back(make_instance(trivial_group(2), std::nullopt));
  return out;
}

std::vector<ReductorSet> materialize(const Instance& inst, const FamilyCatalog& cat) {
  std::vector<ReductorSet> out;
  for_each_family(inst, cat, 1'000'000, [&](std::uint64_t i, const ReductorSet& s) {
    CHECK(i == out.size());
    out.push_back(s);
  });
  return out;
}

}  // namespace

TEST_CASE("per-ray solutions for A1") {
  auto a1 = minimal_instance(2, 1);
  auto s = per_ray_solutions(a1, 1);
  CHECK(s.solutions == std::vector<RationalVector>{{Q(0), Q(-1, 2)}, {Q(0), Q(1, 2)}});
}

TEST_CASE("per-ray solutions for A2") {
  auto a2 = minimal_instance(3, 2);
  REQUIRE(a2.fan.rays[1].vector == RationalVector{Q(1, 3), Q(2, 3)});
  // Characters are 1, x, x^2 = weight of y.
  auto s = per_ray_solutions(a2, 1);
  CHECK(s.solutions == std::vector<RationalVector>{
                           {Q(0), Q(-2, 3), Q(-1, 3)}, {Q(0), Q(1, 3), Q(-1, 3)}, {Q(0), Q(1, 3), Q(2, 3)}});
  CHECK(per_ray_solutions(a2, 2).solutions.size() == 3);
}

TEST_CASE("coordinate-plain rays have only the zero solution") {
  for (const auto& inst : small_instances())
    for (const auto& ray : inst.fan.rays)
      if (ray.kind == RayKind::CoordinatePlain) {
        auto s = per_ray_solutions(inst, ray.id);
        REQUIRE(s.solutions.size() == 1);
        for (const auto& q : s.solutions[0]) CHECK(q == Q(0));
      }
}

TEST_CASE("search agrees with the unpruned box filter") {
  for (const auto& inst : small_instances())
    for (const auto& ray : inst.fan.rays) {
      CAPTURE(to_string(ray.vector));
      CHECK(per_ray_solutions(inst, ray.id).solutions == brute_force_per_ray(inst, ray.id).solutions);
    }
}

TEST_CASE("catalog totals") {
  CHECK(build_catalog(make_instance(trivial_group(2), std::nullopt)).total_count == 1);
  CHECK(build_catalog(minimal_instance(2, 1)).total_count == 2);
  CHECK(build_catalog(minimal_instance(3, 2)).total_count == 9);
  CHECK(build_catalog(minimal_instance(12, 11)).total_count ==
        BigCount("4311500661703860387840000"));
}

TEST_CASE("catalog does not depend on the thread count") {
  for (const auto& inst : small_instances()) {
    auto one = build_catalog(inst, 1);
    for (unsigned jobs : {2u, 4u, 16u}) {
      auto many = build_catalog(inst, jobs);
      CHECK(many.total_count == one.total_count);
      for (std::size_t r = 0; r < one.per_ray.size(); ++r)
        CHECK(many.per_ray[r].solutions == one.per_ray[r].solutions);
    }
  }
}

TEST_CASE("materialized families are sound, distinct and include the standard sets") {
  for (const auto& inst : small_instances()) {
    auto cat = build_catalog(inst);
    if (cat.total_count > 1000) continue;
    auto all = materialize(inst, cat);
    CHECK(BigCount(all.size()) == cat.total_count);
    for (const auto& s : all) {
      CHECK(is_normalised(s));
      CHECK(check_reductor(inst, s).empty());
    }
    for (const auto& s : {canonical_set(inst), maxshift_set(inst), minshift_set(inst)})
      CHECK(std::find(all.begin(), all.end(), s) != all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size() && j < i + 8; ++j) {
        CHECK(all[i] != all[j]);
        CHECK_FALSE(linear_equiv(inst, all[i], all[j]));
      }
  }
}

TEST_CASE("catalog order: last ray varies fastest") {
  auto a2 = minimal_instance(3, 2);
  auto cat = build_catalog(a2);
  auto all = materialize(a2, cat);
  CHECK(all[0] == assemble_family(a2, cat, {0, 0, 0, 0}));
  CHECK(all[1] == assemble_family(a2, cat, {0, 0, 1, 0}));
  CHECK(all[3] == assemble_family(a2, cat, {0, 1, 0, 0}));
}

TEST_CASE("cap") {
  auto inst = minimal_instance(6, 5);
  auto cat = build_catalog(inst);
  try {
    for_each_family(inst, cat, 1000, [](std::uint64_t, const ReductorSet&) {});
    FAIL("expected CatalogTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CatalogTooLarge);
  }
}

TEST_CASE("orbits") {
  auto a1 = minimal_instance(2, 1);
  auto o = orbits(a1, build_catalog(a1), 1'000'000);
  CHECK(o == std::vector<std::vector<std::uint64_t>>{{0, 1}});

  auto triv = make_instance(trivial_group(2), std::nullopt);
  CHECK(orbits(triv, build_catalog(triv), 10) == std::vector<std::vector<std::uint64_t>>{{0}});

  for (const auto& inst : small_instances()) {
    auto cat = build_catalog(inst);
    if (cat.total_count > 1000) continue;
    auto all = materialize(inst, cat);
    auto parts = orbits(inst, cat, 1'000'000);
    std::vector<int> owner(all.size(), -1);
    std::size_t covered = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) CHECK(parts[k - 1].front() < parts[k].front());
      for (auto i : parts[k]) {
        CHECK(owner[i] == -1);
        owner[i] = static_cast<int>(k);
        ++covered;
      }
    }
    CHECK(covered == all.size());
    // Every symmetry image lies in the member's own orbit.
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::vector<ReductorSet> images{reflect(inst.group, all[i])};
      for (const auto& l : inst.group.characters()) images.push_back(char_shift(inst.group, all[i], l));
      for (const auto& img : images) {
        auto it = std::find(all.begin(), all.end(), img);
        REQUIRE(it != all.end());
        CHECK(owner[it - all.begin()] == owner[i]);
      }
    }
  }
}

TEST_CASE("shift and reflection act on single rays like on whole sets") {
  auto inst = minimal_instance(5, 2);
  auto cat = build_catalog(inst);
  auto s = assemble_family(inst, cat, {0, 1, 0, 0});
  for (const auto& l : inst.group.characters()) {
    auto shifted = char_shift(inst.group, s, l);
    for (const auto& ray : inst.fan.rays) {
      RationalVector q, expect;
      for (std::size_t c = 0; c < inst.group.order(); ++c) {
        q.push_back(s[c].coefficient(ray.id));
        expect.push_back(shifted[c].coefficient(ray.id));
      }
      CHECK(shift_coefficients(inst.group, q, l) == expect);
    }
  }
}
