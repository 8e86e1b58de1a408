#include "gms/fraisse.hpp"

#include <algorithm>
#include <stdexcept>

namespace gms {

MetricSpace adjoin(const OnePointExtension& ext, const std::string& label) {
  const int n = ext.base.size();
  std::vector<std::string> points = ext.base.points();
  points.push_back(uniquify_label(label, points));
  std::vector<Elem> flat(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * (n + 1) + j] = ext.base.dist(i, j);
  for (int i = 0; i < n; ++i) {
    flat[i * (n + 1) + n] = ext.distances[i];
    flat[n * (n + 1) + i] = ext.distances[i];
  }
  return MetricSpace(ext.base.monoid(), std::move(points), std::move(flat));
}

std::vector<OnePointExtension> enumerate_one_point_extensions(const MetricSpace& base,
                                                              const ForbiddenClass* constraint) {
  const int n = base.size();
  const DistanceMonoid& m = base.monoid();
  std::vector<OnePointExtension> out;
  std::vector<Elem> assignment(n, 1);
  auto admissible = [&]() {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (base.dist(i, j) > m.plus(assignment[i], assignment[j])) return false;
        if (assignment[i] > m.plus(base.dist(i, j), assignment[j])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (!admissible()) return;
      OnePointExtension ext{base, assignment};
      if (constraint && !is_free(adjoin(ext, "z"), *constraint)) return;
      out.push_back(std::move(ext));
      return;
    }
    for (Elem v = 1; v < m.size(); ++v) {
      assignment[i] = v;
      self(self, i + 1);
    }
  };
  if (n == 0) {
    if (m.size() > 0) out.push_back(OnePointExtension{base, {}});
    return out;
  }
  rec(rec, 0);
  return out;
}

namespace {

// A point of `space` realizing the extension over the subspace `subset`.
bool realized(const MetricSpace& space, const std::vector<int>& subset,
              const std::vector<Elem>& distances) {
  for (int p = 0; p < space.size(); ++p) {
    bool ok = true;
    for (size_t t = 0; t < subset.size() && ok; ++t)
      if (space.dist(p, subset[t]) != distances[t]) ok = false;
    if (ok) return true;
  }
  return false;
}

void subsets_up_to(int n, int cap, std::vector<std::vector<int>>& out) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int from) -> void {
    if (!current.empty()) out.push_back(current);
    if (static_cast<int>(current.size()) == cap) return;
    for (int v = from; v < n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

SaturationReport saturate(const MetricSpace& start, int depth, const ForbiddenClass* constraint,
                          int budget, int subspace_cap) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (budget < start.size()) throw std::invalid_argument("budget below the starting size");
  if (constraint && !is_free(start, *constraint))
    throw std::invalid_argument("start is not free of the constraint class");

  SaturationReport report{start, start, depth, {}, false};
  MetricSpace current = start;
  int fresh_counter = 0;
  for (int level = 0; level < depth && !report.budget_exhausted; ++level) {
    const MetricSpace snapshot = current;
    int adjoined = 0;
    std::vector<std::vector<int>> subsets;
    subsets_up_to(snapshot.size(), subspace_cap, subsets);
    for (const auto& subset : subsets) {
      MetricSpace piece_base = snapshot.restriction(subset);
      for (const OnePointExtension& ext :
           enumerate_one_point_extensions(piece_base, constraint)) {
        if (realized(current, subset, ext.distances)) continue;
        if (current.size() >= budget) {
          report.budget_exhausted = true;
          break;
        }
        MetricSpace piece = adjoin(ext, "s" + std::to_string(fresh_counter++));
        std::vector<std::pair<int, int>> glue;
        for (size_t t = 0; t < subset.size(); ++t)
          glue.emplace_back(subset[t], static_cast<int>(t));
        current = free_amalgamation(current, piece, glue);
        if (constraint && !is_free(current, *constraint))
          throw std::logic_error("free amalgamation left the constraint class");
        ++adjoined;
      }
      if (report.budget_exhausted) break;
    }
    report.realized_per_level.push_back(adjoined);
  }
  report.result = std::move(current);
  return report;
}

std::vector<PartialIsometry> homogeneity_audit(const MetricSpace& space, int size_cap) {
  std::vector<PartialIsometry> failures;
  for (const PartialIsometry& phi : enumerate_partial_isometries(space, size_cap))
    if (!automorphism_extending(space, phi.map)) failures.push_back(phi);
  return failures;
}

}  // namespace gms
