#include "gms/random_space.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gms {

int SeededRng::below(int n) {
  if (n <= 0) throw std::invalid_argument("below() needs a positive bound");
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % un;
  for (;;) {
    std::uint64_t draw = engine_();
    if (draw < limit) return static_cast<int>(draw % un);
  }
}

namespace {

constexpr int kRetryBound = 10000;

// Random valid f-free piece with the given points, rejection-sampled.
MetricSpace random_piece(const DistanceMonoid& monoid, const std::vector<std::string>& labels,
                         const ForbiddenClass& f, SeededRng& rng) {
  const int k = static_cast<int>(labels.size());
  for (int attempt = 0; attempt < kRetryBound; ++attempt) {
    std::vector<Elem> flat(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        Elem v = 1 + rng.below(monoid.size() - 1);
        flat[i * k + j] = flat[j * k + i] = v;
      }
    auto checked = MetricSpace::validate(
        monoid, labels,
        [&] {
          std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(k));
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) rows[i][j] = flat[i * k + j];
          return rows;
        }());
    if (!std::holds_alternative<MetricSpace>(checked)) continue;
    MetricSpace piece = std::get<MetricSpace>(std::move(checked));
    if (is_free(piece, f)) return piece;
  }
  throw std::runtime_error("piece generation bound exceeded");
}

}  // namespace

MetricSpace random_free_space(const DistanceMonoid& monoid, int n_points,
                              const ForbiddenClass& f, std::uint64_t seed) {
  if (n_points < 1) throw std::invalid_argument("need at least one point");
  if (monoid.size() < 2) throw std::invalid_argument("monoid has no nonzero distances");
  for (const MetricSpace& member : f.members) {
    if (member.size() > 3)
      throw std::invalid_argument("forbidden members may have at most 3 points");
    if (member.size() <= 1)
      throw std::invalid_argument("a forbidden member this small leaves no free spaces");
  }

  SeededRng rng(seed);
  int fresh = 0;
  auto fresh_labels = [&](int count) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back("p" + std::to_string(fresh++));
    return out;
  };

  MetricSpace space = random_piece(monoid, fresh_labels(std::min(3, n_points)), f, rng);
  while (space.size() < n_points) {
    const int piece_size = std::min(3, n_points - space.size() + 1);
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kRetryBound) throw std::runtime_error("generation bound exceeded");
      MetricSpace piece = random_piece(monoid, fresh_labels(piece_size), f, rng);
      int at = rng.below(space.size());
      int pat = rng.below(piece.size());
      MetricSpace glued = free_amalgamation(space, piece, {{at, pat}});
      if (!is_free(glued, f)) continue;
      space = std::move(glued);
      break;
    }
  }
  return space;
}

}  // namespace gms
