#pragma once

#include "gnatfam/group.hpp"
#include "gnatfam/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gnatfam {

/// N = Z^n + sum_{g in G} Z g, the lattice of one-parameter subgroups of the
/// quotient torus.
class Overlattice {
 public:
  explicit Overlattice(const AbelianGroup& g);

  std::size_t dimension() const { return basis_.size(); }
  const linalg::RationalMatrix& basis() const { return basis_; }

  /// [N : Z^n], equal to |G|.
  std::int64_t index() const { return index_; }

  /// Coordinates of `v` in the basis.
  RationalVector coordinates(const RationalVector& v) const;
  bool contains(const RationalVector& v) const;

  /// v in N and v/k not in N for every integer k >= 2.
  bool is_primitive(const RationalVector& v) const;

  /// Representatives of N / Z^n in [0,1)^n (the weight vectors of G).
  const std::vector<RationalVector>& coset_representatives() const { return cosets_; }

 private:
  linalg::RationalMatrix basis_;
  linalg::RationalMatrix inverse_;
  std::vector<RationalVector> cosets_;
  std::int64_t index_ = 1;
};

Overlattice build_lattice(const AbelianGroup& g);

enum class RayKind { Unclassified, Exceptional, CoordinateBranch, CoordinatePlain };

const char* to_string(RayKind kind);

struct Ray {
  RationalVector vector;
  std::size_t id = 0;
  RayKind kind = RayKind::Unclassified;
};

/// Simplicial fan supported on the positive orthant. Ray ids are positions
/// in `rays`, which are kept in lexicographic order of their vectors.
struct Fan {
  std::vector<Ray> rays;
  std::vector<std::vector<std::size_t>> max_cones;
};

/// Sorts rays, remaps cone indices and rejects structurally malformed input
/// (bad lengths, out-of-range or repeated indices, duplicate rays).
Fan make_fan(std::size_t dimension, std::vector<RationalVector> rays,
             std::vector<std::vector<std::size_t>> cones);

/// Hirzebruch–Jung subdivision of the positive quadrant. Throws
/// DimensionUnsupported unless n = 2.
Fan minimal_resolution_2d(const Overlattice& lat);

enum class FanCheck { Containment, Primitivity, Smoothness, Properness };

const char* to_string(FanCheck check);

struct FanFailure {
  FanCheck check;
  std::string detail;
  std::vector<std::size_t> rays;
  std::optional<std::size_t> cone;
};

struct FanReport {
  std::vector<FanFailure> failures;

  bool passed(FanCheck check) const;
  bool passed() const { return failures.empty(); }
};

FanReport validate_fan(const Fan& fan, const Overlattice& lat);

/// Returns `fan` with every ray's kind set.
Fan classify_rays(Fan fan, const Overlattice& lat);

/// A validated group + lattice + classified fan.
struct Instance {
  AbelianGroup group;
  Overlattice lattice;
  Fan fan;
};

struct ExplicitFan {
  std::vector<RationalVector> rays;
  std::vector<std::vector<std::size_t>> cones;
};

/// Either an explicit fan or, when empty, the automatic 2-d minimal resolution.
using FanSpec = std::optional<ExplicitFan>;

/// Builds everything and validates the fan; throws Error(InvalidFan) with a
/// summary of the failed checks when the fan is not a smooth resolution.
Instance make_instance(const GroupSpec& group, const FanSpec& fan,
                       const GroupOptions& options = {});

}  // namespace gnatfam
