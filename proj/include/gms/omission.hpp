// Machinery for classes of spaces omitting forbidden subspaces: partially
// defined distance patterns, weak embeddings and homomorphisms, path
// extensions of a space over a distance set, odd-perimeter triangle classes,
// parity checking, and witness search constrained to stay free.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gms/witness.hpp"

namespace gms {

// Symmetric, zero-diagonal, partially defined distance assignment.  Defined
// off-diagonal values are nonzero.
class PartialSemimetric {
 public:
  static constexpr Elem kUndefined = -1;

  // delta is row-major with kUndefined for missing pairs; the diagonal must
  // be 0 and defined off-diagonal entries symmetric and nonzero.
  PartialSemimetric(DistanceMonoid monoid, std::vector<std::string> points,
                    std::vector<Elem> delta);

  static PartialSemimetric total(const MetricSpace& space);

  int size() const { return static_cast<int>(points_.size()); }
  const DistanceMonoid& monoid() const { return monoid_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(int i) const { return points_[i]; }
  Elem delta(int i, int j) const { return delta_[i * size() + j]; }
  bool defined(int i, int j) const { return delta(i, j) != kUndefined; }
  const std::vector<Elem>& flat_delta() const { return delta_; }

  // Defined nonzero values, ascending.
  std::vector<Elem> positive_image() const;

  bool operator==(const PartialSemimetric& other) const = default;

 private:
  DistanceMonoid monoid_;
  std::vector<std::string> points_;
  std::vector<Elem> delta_;
};

// Chain pattern x0 - x1 - ... - xn with step labels plus a direct (x0, xn)
// label; the realizability probe for a label tuple (head, steps...).
PartialSemimetric walk_pattern(const DistanceMonoid& m, Elem head,
                               const std::vector<Elem>& steps);

// Injection (resp. arbitrary map) from the pattern into the host matching
// every defined value.  Patterns and hosts must share a monoid.
std::optional<std::vector<int>> weak_embedding_exists(const PartialSemimetric& pattern,
                                                      const MetricSpace& host);
std::optional<std::vector<int>> weak_homomorphism_exists(const PartialSemimetric& pattern,
                                                         const MetricSpace& host);

struct ForbiddenClass {
  std::vector<MetricSpace> members;
  std::vector<Elem> spectrum_bound;  // contains every member's spectrum
};

// True iff no member weakly embeds into the space.
bool is_free(const MetricSpace& space, const ForbiddenClass& f);

// All 3-point spaces over the truncated monoid {0,...,(n+1)/2} whose three
// distances have odd integer sum at most n, up to isometry.  n odd, >= 3.
ForbiddenClass odd_perimeter_triangles(int n);

// A space extended by distance paths: delta agrees with the base where
// defined, and every undefined base pair carries a path whose label sum is
// the base distance.  Path points may revisit base points or each other; the
// flag records whether a family of injective paths also witnesses this
// extension.
struct PathRecord {
  int from, to;               // base pair, from < to
  std::vector<int> vertices;  // starts at from, ends at to
};

struct PathExtension {
  MetricSpace base;
  PartialSemimetric carrier;  // base points first, then fresh ones
  std::vector<PathRecord> paths;
  bool injective_paths;
};

// All path extensions of `base` with values in s_set, up to isomorphism
// fixing the base pointwise.  Requires s_set to cover the base spectrum and
// to generate an archimedean submonoid.  With a dominated spectrum the
// enumeration is exhaustive (and bounded by the path-length argument); a
// non-dominated base needs an explicit size_cap and yields the truncated
// enumeration of extensions with at most that many points.
std::vector<PathExtension> enumerate_path_extensions(const MetricSpace& base,
                                                     std::vector<Elem> s_set,
                                                     std::optional<int> size_cap = std::nullopt);

struct ClosureCounterexample {
  int member;               // index into f.members
  PathExtension extension;  // the realized path extension
  int host;                 // index into hosts
  std::vector<int> hom;     // the weak homomorphism
};

struct ClosureReport {
  bool closed;
  std::optional<ClosureCounterexample> counterexample;
};

// Refutation-style check: hunts for a weak homomorphism from a path extension
// of a member into one of the hosts.  Finding none is evidence, not proof.
ClosureReport check_closed_under_path_extensions(const ForbiddenClass& f,
                                                 const std::vector<MetricSpace>& hosts);

struct ParityReport {
  bool ok;
  std::vector<int> cycle;  // point indices of an odd cycle with sum <= n
};

// True iff every cyclic point sequence of length >= 3 whose integer distance
// sum is at most n has even sum.  The space must live over the truncated
// monoid {0,...,(n+1)/2}; n odd.
ParityReport verify_parity(const MetricSpace& space, int n);

// brute_force_witness over the full monoid spectrum with every candidate
// pruned to stay f-free.  The base must be f-free.
WitnessResult free_witness_search(const MetricSpace& base, const ForbiddenClass& f,
                                  int max_size);

}  // namespace gms
