#include "gms/sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace gms {

namespace {

void tuple_search(const DistanceMonoid& m, const std::vector<Elem>& s, Elem head, Elem sum,
                  std::vector<Elem>& current, int length_bound,
                  std::vector<std::vector<Elem>>& out) {
  for (Elem e : s) {
    Elem next = current.empty() ? e : m.plus(sum, e);
    if (next >= head) continue;  // sums never decrease, so this branch is dead
    current.push_back(e);
    if (static_cast<int>(current.size()) >= length_bound)
      throw std::logic_error("tuple length bound violated");
    std::vector<Elem> tuple{head};
    tuple.insert(tuple.end(), current.begin(), current.end());
    out.push_back(std::move(tuple));
    tuple_search(m, s, head, next, current, length_bound, out);
    current.pop_back();
  }
}

}  // namespace

SigmaSystem sigma_system(const DistanceMonoid& m, std::vector<Elem> s_set) {
  std::sort(s_set.begin(), s_set.end());
  s_set.erase(std::unique(s_set.begin(), s_set.end()), s_set.end());
  if (s_set.empty()) throw std::invalid_argument("s_set must be nonempty");
  for (Elem e : s_set)
    if (e <= 0 || e >= m.size())
      throw std::invalid_argument("s_set entries must be nonzero monoid elements");

  Submonoid sub = generated_submonoid(m, s_set);
  if (archimedean_classes(sub.monoid).classes.size() > 1)
    throw std::invalid_argument(
        "s_set generates a non-archimedean submonoid; the tuple system may be infinite");

  const Elem smin = s_set.front();
  const Elem smax = s_set.back();
  int k = 1;
  Elem multiple = smin;
  while (multiple < smax) {
    Elem next = m.plus(multiple, smin);
    if (next == multiple)
      throw std::logic_error("multiples of min(S) stabilized below max(S)");
    multiple = next;
    ++k;
  }

  SigmaSystem sys{m, s_set, {}, k};
  std::vector<Elem> current;
  for (Elem head : s_set) tuple_search(m, s_set, head, 0, current, k, sys.tuples);
  std::sort(sys.tuples.begin(), sys.tuples.end());
  return sys;
}

bool is_geodesic_consistent(const LabeledGraph& g, const SigmaSystem& sys) {
  if (g.monoid() != sys.monoid)
    throw std::invalid_argument("graph and tuple system use different monoids");
  for (auto [i, j, label] : g.edges())
    if (!std::binary_search(sys.s_set.begin(), sys.s_set.end(), label))
      throw std::invalid_argument("edge label outside the tuple system's distance set");

  std::vector<bool> done(g.size(), false);
  for (int v = 0; v < g.size(); ++v) {
    if (done[v]) continue;
    MetricSpace comp = path_metric_completion(g, {v});
    std::vector<int> index_in_comp(g.size(), -1);
    for (int p = 0; p < comp.size(); ++p) {
      int orig = -1;
      for (int x = 0; x < g.size(); ++x)
        if (g.vertices()[x] == comp.point(p)) orig = x;
      index_in_comp[orig] = p;
      done[orig] = true;
    }
    for (auto [i, j, label] : g.edges()) {
      if (index_in_comp[i] == -1 || index_in_comp[j] == -1) continue;
      Elem via = comp.dist(index_in_comp[i], index_in_comp[j]);
      if (via != label) return false;
    }
  }
  return true;
}

}  // namespace gms
