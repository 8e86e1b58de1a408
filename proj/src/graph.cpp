#include "gms/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace gms {

LabeledGraph::LabeledGraph(DistanceMonoid monoid, std::vector<std::string> vertices,
                           std::vector<std::tuple<int, int, Elem>> edges)
    : monoid_(std::move(monoid)), vertices_(std::move(vertices)) {
  {
    std::set<std::string> labels(vertices_.begin(), vertices_.end());
    if (static_cast<int>(labels.size()) != size())
      throw std::invalid_argument("vertex labels must be distinct");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [i, j, label] : edges) {
    if (i < 0 || j < 0 || i >= size() || j >= size())
      throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    if (label <= 0 || label >= monoid_.size())
      throw std::invalid_argument("edge label must be a nonzero monoid element");
    if (i > j) std::swap(i, j);
    if (!seen.insert({i, j}).second)
      throw std::invalid_argument("at most one label per vertex pair");
    edges_.emplace_back(i, j, label);
  }
  std::sort(edges_.begin(), edges_.end());
}

MetricSpace truncated_path_metric(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("truncation needs n >= 1");
  const int v = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(v);
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= v || b >= v)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Elem> flat(static_cast<size_t>(v) * v, 0);
  for (int s = 0; s < v; ++s) {
    std::vector<int> hops(v, -1);
    hops[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj[x])
        if (hops[y] == -1) {
          hops[y] = hops[x] + 1;
          queue.push_back(y);
        }
    }
    for (int t = 0; t < v; ++t)
      flat[s * v + t] = (hops[t] == -1) ? n : std::min(n, hops[t]);
  }
  return MetricSpace(make_truncated(n), g.vertices, std::move(flat));
}

MetricSpace path_metric_completion(const LabeledGraph& g, const std::vector<int>& base) {
  if (base.empty()) throw std::invalid_argument("base must be nonempty");
  for (int b : base)
    if (b < 0 || b >= g.size()) throw std::invalid_argument("base vertex out of range");

  std::vector<std::vector<std::pair<int, Elem>>> adj(g.size());
  for (auto [i, j, label] : g.edges()) {
    adj[i].emplace_back(j, label);
    adj[j].emplace_back(i, label);
  }

  // Connected component of the first base vertex.
  std::vector<bool> in_comp(g.size(), false);
  std::deque<int> queue{base[0]};
  in_comp[base[0]] = true;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (auto [y, label] : adj[x])
      if (!in_comp[y]) {
        in_comp[y] = true;
        queue.push_back(y);
      }
  }
  for (int b : base)
    if (!in_comp[b]) throw std::invalid_argument("base spans multiple components");

  std::vector<int> comp;
  for (int x = 0; x < g.size(); ++x)
    if (in_comp[x]) comp.push_back(x);
  std::vector<int> pos(g.size(), -1);
  for (size_t p = 0; p < comp.size(); ++p) pos[comp[p]] = static_cast<int>(p);

  const int n = static_cast<int>(comp.size());
  const DistanceMonoid& m = g.monoid();
  std::vector<Elem> flat(static_cast<size_t>(n) * n, 0);
  // Dijkstra over the monoid order: appending an edge never decreases a path
  // sum, so settling the least frontier value is sound.
  for (int sp = 0; sp < n; ++sp) {
    std::vector<Elem> dist(n, -1);
    std::vector<bool> settled(n, false);
    dist[sp] = 0;
    for (int round = 0; round < n; ++round) {
      int u = -1;
      for (int x = 0; x < n; ++x)
        if (!settled[x] && dist[x] != -1 && (u == -1 || dist[x] < dist[u])) u = x;
      if (u == -1) break;
      settled[u] = true;
      for (auto [y, label] : adj[comp[u]]) {
        int yp = pos[y];
        Elem via = m.plus(dist[u], label);
        if (dist[yp] == -1 || via < dist[yp]) dist[yp] = via;
      }
    }
    for (int t = 0; t < n; ++t) flat[sp * n + t] = dist[t];
  }

  std::vector<std::string> labels(n);
  for (int p = 0; p < n; ++p) labels[p] = g.vertices()[comp[p]];
  return MetricSpace(m, std::move(labels), std::move(flat));
}

}  // namespace gms
