#pragma once

#include "gnatfam/lattice.hpp"
#include "gnatfam/reductor.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace gnatfam {

using BigCount = boost::multiprecision::cpp_int;

/// All admissible coefficient vectors (q_chi) at one ray, indexed like
/// `group.characters()`, sorted lexicographically. q_chi0 = 0 always.
struct RaySolutionSet {
  std::size_t ray = 0;
  std::vector<RationalVector> solutions;
};

/// Depth-first search over q_chi = v_P(chi) + t_chi, t_chi in Z, with the
/// difference constraints q_{chi rho(x_i)} <= q_chi + <v_P, e_i> propagated
/// through their shortest-path closure.
RaySolutionSet per_ray_solutions(const Instance& inst, std::size_t ray);

/// Unpruned oracle: filters the whole integer box -M_{chi^-1} <= q_chi <= M_chi.
RaySolutionSet brute_force_per_ray(const Instance& inst, std::size_t ray);

struct FamilyCatalog {
  std::vector<RaySolutionSet> per_ray;
  BigCount total_count = 1;
};

/// Per-ray solution sets (in ray-id order) and their product. `jobs` threads
/// share the rays; the result does not depend on it.
FamilyCatalog build_catalog(const Instance& inst, unsigned jobs = 1);

/// Cap from GNATFAM_MAX_CATALOG if set, otherwise 1'000'000.
std::uint64_t default_catalog_cap();

/// Index of each ray's chosen solution; the catalog enumerates these
/// mixed-radix with the highest ray id varying fastest.
using FamilyIndex = std::vector<std::size_t>;

ReductorSet assemble_family(const Instance& inst, const FamilyCatalog& catalog,
                            const FamilyIndex& choice);

/// Streams every normalised reductor set in catalog order. Throws
/// CatalogTooLarge if the total exceeds `cap`.
void for_each_family(const Instance& inst, const FamilyCatalog& catalog, std::uint64_t cap,
                     const std::function<void(std::uint64_t, const ReductorSet&)>& visit);

/// Symmetry action on one ray's coefficient vectors.
RationalVector shift_coefficients(const AbelianGroup& g, const RationalVector& q,
                                  const Character& lambda);
RationalVector reflect_coefficients(const AbelianGroup& g, const RationalVector& q);

/// For each ray, the permutation of its solution indices induced by the
/// shift by every character (in character order) followed by the reflection.
/// Throws Error(Input) if some image is missing, which would mean the
/// solution set is not closed.
std::vector<std::vector<std::vector<std::size_t>>> symmetry_permutations(
    const Instance& inst, const FamilyCatalog& catalog);

/// Orbits of the catalog under all character shifts and the reflection, as
/// sorted catalog indices; orbits ordered by smallest member.
std::vector<std::vector<std::uint64_t>> orbits(const Instance& inst, const FamilyCatalog& catalog,
                                               std::uint64_t cap);

}  // namespace gnatfam
