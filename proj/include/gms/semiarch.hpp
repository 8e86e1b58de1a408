// The recursive witness construction for spaces over semi-archimedean
// monoids: split points into blocks whose internal distances lie below the
// top archimedean class, pad the blocks until they are pairwise isometric,
// solve the block quotient with the archimedean base case, recurse inside one
// block, and replicate.
#pragma once

#include <vector>

#include "gms/witness.hpp"

namespace gms {

// The (R1, R2) split of the generated submonoid of the spectrum (R2 = top
// archimedean class), the induced point partition (a ~ b iff d(a,b) in R1),
// and the quotient space on the classes.  Cross distances between two classes
// are constant; the quotient records them.
struct ClassDecomposition {
  MetricSpace space;
  std::vector<Elem> lower;  // R1 as ambient elements, includes 0
  std::vector<Elem> upper;  // R2 as ambient elements
  std::vector<std::vector<int>> classes;  // point indices, by least member
  MetricSpace quotient;     // one point per class, distances = cross constants

  Elem cross_constant(int i, int j) const { return quotient.dist(i, j); }
};

// Requires a nonempty spectrum generating a semi-archimedean submonoid.
ClassDecomposition class_decomposition(const MetricSpace& space);

struct PaddedSpace {
  MetricSpace space;                  // every class extended to a copy of (A, d0)
  ClassDecomposition decomposition;   // decomposition of the padded space
  std::vector<int> base_embedding;    // original point -> padded point
};

// Extends each class to a copy of the whole space under the metric d0 that
// keeps within-class distances and sets cross-class ones to the largest
// below-top distance in use.  All classes of the result are pairwise
// isometric and the original space embeds isometrically.  Identity when no
// distance lies below the top class.
PaddedSpace pad_classes(const ClassDecomposition& dec);

// Witness construction by recursion on the number of archimedean classes of
// the generated submonoid of the spectrum; one-class inputs are delegated
// entirely to base_case.  The result always passes verify_witness.
WitnessResult semi_archimedean_witness(const MetricSpace& base, const BaseCaseFn& base_case);

}  // namespace gms
