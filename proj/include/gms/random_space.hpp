// Deterministic seeded generation of spaces that stay free of a forbidden
// class, built by free amalgamation of small random pieces.
#pragma once

#include <cstdint>
#include <random>

#include "gms/omission.hpp"

namespace gms {

// mt19937_64 draws with rejection sampling, so identical seeds give identical
// sequences on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform value in [0, n).
  int below(int n);

 private:
  std::mt19937_64 engine_;
};

// Deterministic-under-seed space of exactly n_points points: iterated free
// amalgamation of random f-free pieces of at most 3 points, glued on one
// point, re-verified f-free after every step.  Members of f may have at most
// 3 points; a class with a member of at most one point admits no free spaces
// and is rejected.
MetricSpace random_free_space(const DistanceMonoid& monoid, int n_points,
                              const ForbiddenClass& f, std::uint64_t seed);

}  // namespace gms
