// Finite distance monoids: totally ordered commutative monoids with a least
// element 0 and monotone addition.  Elements are indices into an ordered
// carrier; the order is positional and addition is a table.
#pragma once

#include <string>
#include <variant>
#include <vector>

namespace gms {

// Index into a monoid carrier.  Index 0 is always the zero element.
using Elem = int;

enum class MonoidAxiom { Order, Identity, Commutativity, Associativity, Monotonicity };

const char* to_string(MonoidAxiom axiom);

// First violated axiom together with the lexicographically first witnessing
// tuple of element indices.
struct MonoidViolation {
  MonoidAxiom axiom;
  std::vector<Elem> witness;
};

class DistanceMonoid {
 public:
  using Table = std::vector<std::vector<Elem>>;

  // Checks the axioms (identity, commutativity, associativity, monotonicity)
  // in that order and reports the first failure.  Throws std::invalid_argument
  // if the table is not square/total or labels are not distinct.
  static std::variant<DistanceMonoid, MonoidViolation> validate(
      std::vector<std::string> labels, Table plus);

  // Validating constructor; throws std::invalid_argument on any violation.
  DistanceMonoid(std::vector<std::string> labels, Table plus);

  int size() const { return static_cast<int>(labels_.size()); }
  Elem zero() const { return 0; }
  Elem max_element() const { return size() - 1; }
  Elem plus(Elem a, Elem b) const { return plus_[a][b]; }
  const std::string& label(Elem e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Table& plus_table() const { return plus_; }

  // Stabilized value of the sequence r, r+r, r+r+r, ...  (its supremum).
  Elem reach(Elem r) const;

  // Structural equality: same labels and same addition table.
  bool operator==(const DistanceMonoid& other) const = default;

 private:
  struct Unchecked {};
  DistanceMonoid(Unchecked, std::vector<std::string> labels, Table plus)
      : labels_(std::move(labels)), plus_(std::move(plus)) {}

  std::vector<std::string> labels_;
  Table plus_;
};

// Carrier {0,...,n} with r+s truncated at n.
DistanceMonoid make_truncated(int n);

// Carrier {0,...,n} with r+s = max(r,s).
DistanceMonoid make_max_chain(int n);

// Partition of the nonzero elements into archimedean classes.  Two nonzero
// elements share a class iff each is bounded by a finite multiple of the
// other.  Classes are order-convex and listed in increasing order.
struct ArchClassPartition {
  std::vector<std::vector<Elem>> classes;

  // Class index of a nonzero element, -1 for the zero element.
  int class_of(Elem e) const;
};

ArchClassPartition archimedean_classes(const DistanceMonoid& m);

// True iff whenever every multiple of r stays below s, r + s = s.
bool is_semi_archimedean(const DistanceMonoid& m);

// A monoid on a sub-carrier plus the inclusion into the original carrier:
// inclusion[i] is the ambient index of sub element i.
struct Submonoid {
  DistanceMonoid monoid;
  std::vector<Elem> inclusion;

  // Ambient index -> sub index, -1 if not in the sub-carrier.
  int index_of(Elem ambient) const;
};

// Smallest sub-carrier containing 0 and the seed, closed under addition.
Submonoid generated_submonoid(const DistanceMonoid& m, std::vector<Elem> seed);

namespace fixtures {

// Two archimedean classes {1,2} < {M,2M}; addition truncated inside each
// class, lower elements absorbed by upper ones.  Semi-archimedean but not
// ultrametric (1+1=2).
DistanceMonoid two_class_semi_archimedean();

// Like the above but 1+M jumps to the top, so the absorption law fails.
DistanceMonoid non_semi_archimedean();

}  // namespace fixtures

}  // namespace gms
