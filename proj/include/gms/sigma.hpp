// The finite system of label tuples violating the generalized triangle
// inequality over a distance set S, and the geodesic-consistency check for
// labeled graphs derived from it.
#pragma once

#include <vector>

#include "gms/graph.hpp"
#include "gms/monoid.hpp"

namespace gms {

// All tuples (r0, r1, ..., rn), n >= 1, with entries in s_set and
// r0 > r1 + ... + rn.  Finite because the submonoid generated by s_set is
// archimedean: no tuple is longer than k, the least k with r0 <= k * min(S).
struct SigmaSystem {
  DistanceMonoid monoid;
  std::vector<Elem> s_set;                  // ascending
  std::vector<std::vector<Elem>> tuples;    // head first, lexicographic order
  int length_bound;                         // the k above, for max(s_set)
};

// Throws std::invalid_argument if s_set is empty, contains zero, or generates
// a non-archimedean submonoid (the tuple set could then be infinite).
SigmaSystem sigma_system(const DistanceMonoid& m, std::vector<Elem> s_set);

// True iff every edge label equals the least path sum between its endpoints,
// i.e. no walk undercuts a parallel edge.  Edge labels must lie in sys.s_set.
bool is_geodesic_consistent(const LabeledGraph& g, const SigmaSystem& sys);

}  // namespace gms
