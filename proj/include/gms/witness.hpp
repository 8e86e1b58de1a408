// Extension-property witnesses: a space B containing a base A such that every
// partial isometry of A extends to a total isometry of B, together with the
// extension certificates, plus verification and bounded brute-force search.
#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "gms/space.hpp"

namespace gms {

struct EppaWitness {
  MetricSpace base;
  MetricSpace witness;
  std::vector<int> embedding;  // base point -> witness point
  // Pairs (partial isometry of base, total isometry of witness extending it
  // through the embedding).  May be empty or partial; verification searches
  // for missing entries.
  std::vector<std::pair<PartialIsometry, PartialIsometry>> certificates;
};

struct VerifyReport {
  bool ok;
  std::optional<PartialIsometry> failing;  // first partial isometry with no extension
};

struct SearchExhausted {
  int max_size;
};

using WitnessResult = std::variant<EppaWitness, SearchExhausted>;

// Provides witnesses for the structurally simple bases of a recursive
// construction; second argument restricts the witness spectrum.
using BaseCaseFn =
    std::function<WitnessResult(const MetricSpace& base, const std::vector<Elem>& allowed)>;

// Checks structural invariants (throws std::invalid_argument when the witness
// data itself is malformed), then checks every partial isometry of the base:
// a stored certificate must be a valid extension, a missing one is searched.
VerifyReport verify_witness(const EppaWitness& w);

// Stored certificate for phi, or one found by search; nullopt if none exists.
std::optional<PartialIsometry> extension_certificate(const EppaWitness& w,
                                                     const PartialIsometry& phi);

// Accepts a candidate extension matrix after each completed row; returning
// false prunes the whole branch.  `n` includes the freshly completed point.
using CandidateFilter = std::function<bool(const DistanceMonoid& m, int n,
                                           const std::vector<Elem>& flat)>;

// Smallest extension of `base` (by point count, then lexicographic order of
// the extension matrix) with all distances in `allowed_spectrum`, at most
// max_size points, passing `filter`, in which every partial isometry of the
// base extends to a total isometry.  The base occupies the first indices of
// the result and the embedding is the identity.
WitnessResult brute_force_witness(const MetricSpace& base, int max_size,
                                  std::vector<Elem> allowed_spectrum,
                                  const CandidateFilter& filter = {});

// Certificates are stored eagerly up to this base size and searched on demand
// above it; the table grows factorially with the base.
inline constexpr int kEagerCertificateLimit = 5;

}  // namespace gms
