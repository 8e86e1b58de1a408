// Finite approximations of the universal homogeneous space: Katetov-style
// one-point extensions, iterated saturation by free amalgamation, and an
// audit of which partial isometries fail to extend.
#pragma once

#include <optional>
#include <vector>

#include "gms/omission.hpp"
#include "gms/space.hpp"

namespace gms {

// An admissible assignment of a nonzero distance from a new point to every
// base point: adjoining the point yields a valid space.
struct OnePointExtension {
  MetricSpace base;
  std::vector<Elem> distances;
};

// Adjoins the extension's point to its base.
MetricSpace adjoin(const OnePointExtension& ext, const std::string& label);

// All admissible assignments, in lexicographic order; with a constraint the
// extended space must stay free of it.
std::vector<OnePointExtension> enumerate_one_point_extensions(
    const MetricSpace& base, const ForbiddenClass* constraint = nullptr);

struct SaturationReport {
  MetricSpace start;
  MetricSpace result;
  int depth = 0;
  std::vector<int> realized_per_level;  // extensions adjoined at each level
  bool budget_exhausted = false;
};

// Repeats `depth` times: for every subspace of the level-start space with at
// most subspace_cap points and every admissible (constraint-respecting)
// one-point extension of it not realized in the current space, adjoin a
// realizing point by free amalgamation over the subspace.  Stops early once
// the point budget is reached.
SaturationReport saturate(const MetricSpace& start, int depth,
                          const ForbiddenClass* constraint, int budget,
                          int subspace_cap = 3);

// Partial isometries with domain at most size_cap that extend to no total
// isometry of the space; empty means homogeneous up to the cap.
std::vector<PartialIsometry> homogeneity_audit(const MetricSpace& space, int size_cap);

}  // namespace gms
