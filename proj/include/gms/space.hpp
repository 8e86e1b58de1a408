// Finite metric spaces over a distance monoid: validation, free amalgamation,
// partial isometries and isometry search.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gms/monoid.hpp"

namespace gms {

enum class MetricAxiom { Identity, Symmetry, Triangle };

const char* to_string(MetricAxiom axiom);

struct SpaceViolation {
  MetricAxiom axiom;
  std::vector<int> witness;  // point indices
};

class MetricSpace {
 public:
  // Checks zero-diagonal/nonzero off-diagonal, symmetry and the triangle
  // inequality, in that order, reporting the first violation.
  static std::variant<MetricSpace, SpaceViolation> validate(
      DistanceMonoid monoid, std::vector<std::string> points,
      const std::vector<std::vector<Elem>>& dist);

  MetricSpace(DistanceMonoid monoid, std::vector<std::string> points,
              const std::vector<std::vector<Elem>>& dist);

  // Flat row-major matrix variant, also validating.
  MetricSpace(DistanceMonoid monoid, std::vector<std::string> points,
              std::vector<Elem> flat_dist);

  int size() const { return static_cast<int>(points_.size()); }
  const DistanceMonoid& monoid() const { return monoid_; }
  Elem dist(int i, int j) const { return dist_[i * size() + j]; }
  const std::vector<Elem>& flat_dist() const { return dist_; }
  const std::string& point(int i) const { return points_[i]; }
  const std::vector<std::string>& points() const { return points_; }
  int index_of(const std::string& label) const;

  // Distinct nonzero distances, ascending.
  std::vector<Elem> spectrum() const;

  // True iff some monoid element strictly exceeds every distance.
  bool has_dominated_spectrum() const;

  // Subspace on the given point indices, keeping labels.
  MetricSpace restriction(const std::vector<int>& idx) const;

  // Lexicographically least lower-triangle encoding over all point orderings.
  // Spaces are isometric iff their canonical forms (and monoids) agree.
  std::vector<Elem> canonical_form() const;

  bool operator==(const MetricSpace& other) const = default;

 private:
  struct Unchecked {};
  MetricSpace(Unchecked, DistanceMonoid monoid, std::vector<std::string> points,
              std::vector<Elem> flat)
      : monoid_(std::move(monoid)), points_(std::move(points)), dist_(std::move(flat)) {}

  friend MetricSpace unchecked_space(DistanceMonoid, std::vector<std::string>,
                                     std::vector<Elem>);

  DistanceMonoid monoid_;
  std::vector<std::string> points_;
  std::vector<Elem> dist_;
};

// Internal fast path for matrices already known to be valid.
MetricSpace unchecked_space(DistanceMonoid monoid, std::vector<std::string> points,
                            std::vector<Elem> flat_dist);

// A distance-preserving partial injection.  map[i] is the target index of
// source point i, or kUnmapped.
struct PartialIsometry {
  static constexpr int kUnmapped = -1;

  std::vector<int> map;

  int domain_size() const;
  bool is_total() const { return domain_size() == static_cast<int>(map.size()); }
  bool operator==(const PartialIsometry& other) const = default;
  bool operator<(const PartialIsometry& other) const { return map < other.map; }
};

bool is_partial_isometry(const MetricSpace& source, const MetricSpace& target,
                         const PartialIsometry& phi);

// Every distance-preserving partial injection of the space into itself,
// including the empty map, in a fixed deterministic order.  max_domain < 0
// means no bound on domain size.
std::vector<PartialIsometry> enumerate_partial_isometries(const MetricSpace& space,
                                                          int max_domain = -1);

// Glues isometric subspaces of a and b; glue maps a-point indices to b-point
// indices.  Cross distances are the least sums through the glued part.
// Throws std::invalid_argument on an empty or non-isometric glue.
MetricSpace free_amalgamation(const MetricSpace& a, const MetricSpace& b,
                              const std::vector<std::pair<int, int>>& glue);

// Total isometry a -> b as a point mapping, if one exists.
std::optional<std::vector<int>> is_isometric(const MetricSpace& a, const MetricSpace& b);

// Total isometry of the space extending the given partial constraint
// (constraint[i] = forced image or kUnmapped).
std::optional<std::vector<int>> automorphism_extending(const MetricSpace& space,
                                                       const std::vector<int>& constraint);

// Matrix-level core of the automorphism search, used by the witness hunt.
std::optional<std::vector<int>> extend_to_automorphism(int n, const std::vector<Elem>& flat,
                                                       const std::vector<int>& constraint);

// Fresh label not present in `used`, derived from `base`.
std::string uniquify_label(const std::string& base, const std::vector<std::string>& used);

}  // namespace gms
