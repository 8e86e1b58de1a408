// Graphs with monoid-labeled edges and the metrics they induce: BFS path
// metrics truncated at n, and shortest-path completion where path weights are
// monoid sums.
#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gms/space.hpp"

namespace gms {

// Plain undirected graph, no labels.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
};

// Undirected graph with one nonzero monoid label per edge.
class LabeledGraph {
 public:
  LabeledGraph(DistanceMonoid monoid, std::vector<std::string> vertices,
               std::vector<std::tuple<int, int, Elem>> edges);

  const DistanceMonoid& monoid() const { return monoid_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::tuple<int, int, Elem>>& edges() const { return edges_; }

 private:
  DistanceMonoid monoid_;
  std::vector<std::string> vertices_;
  std::vector<std::tuple<int, int, Elem>> edges_;  // stored with i < j
};

// Hop distance capped at n; disconnected pairs get n.  The result lives over
// the truncated monoid {0,...,n}.
MetricSpace truncated_path_metric(const Graph& g, int n);

// Least path sum (under the monoid's addition) between vertices of the
// connected component containing `base`.  Throws std::invalid_argument if the
// base vertices do not lie in a single component.
MetricSpace path_metric_completion(const LabeledGraph& g, const std::vector<int>& base);

}  // namespace gms
