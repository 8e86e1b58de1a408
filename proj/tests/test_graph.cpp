#include <doctest.h>

#include <stdexcept>

#include "gms/graph.hpp"

using namespace gms;

TEST_CASE("truncated path metric") {
  SUBCASE("4-cycle at truncation 2") {
    Graph g{{"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    MetricSpace s = truncated_path_metric(g, 2);
    CHECK(s.dist(0, 1) == 1);
    CHECK(s.dist(0, 2) == 2);
    CHECK(s.dist(1, 3) == 2);
  }
  SUBCASE("complete graphs give the edge metric") {
    Graph g{{"a", "b", "c", "d"}, {}};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.edges.emplace_back(i, j);
    MetricSpace s = truncated_path_metric(g, 2);
    CHECK(s.spectrum() == std::vector<Elem>{1});
  }
  SUBCASE("disconnected pairs land on the cap") {
    Graph g{{"a", "b"}, {}};
    MetricSpace s = truncated_path_metric(g, 3);
    CHECK(s.dist(0, 1) == 3);
  }
}

TEST_CASE("path metric completion") {
  DistanceMonoid r2 = make_truncated(2), r3 = make_truncated(3);
  SUBCASE("two unit edges add up") {
    LabeledGraph g(r2, {"x", "m", "y"}, {{0, 1, 1}, {1, 2, 1}});
    MetricSpace s = path_metric_completion(g, {0});
    CHECK(s.size() == 3);
    CHECK(s.dist(s.index_of("x"), s.index_of("y")) == 2);
  }
  SUBCASE("triangle labels are already geodesic") {
    LabeledGraph g(r2, {"a", "b", "c"}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    MetricSpace s = path_metric_completion(g, {0});
    CHECK(s.dist(0, 1) == 1);
    CHECK(s.dist(0, 2) == 1);
    CHECK(s.dist(1, 2) == 1);
  }
  SUBCASE("a cheap detour undercuts a heavy edge") {
    LabeledGraph g(r3, {"x", "y", "m"}, {{0, 1, 3}, {0, 2, 1}, {2, 1, 1}});
    MetricSpace s = path_metric_completion(g, {0});
    CHECK(s.dist(s.index_of("x"), s.index_of("y")) == 2);
  }
  SUBCASE("completion never exceeds a direct edge label") {
    DistanceMonoid r4 = make_truncated(4);
    LabeledGraph g(r4, {"a", "b", "c", "d"},
                   {{0, 1, 2}, {1, 2, 3}, {2, 3, 1}, {0, 3, 4}, {0, 2, 4}});
    MetricSpace s = path_metric_completion(g, {0});
    for (auto [i, j, label] : g.edges()) CHECK(s.dist(i, j) <= label);
  }
  SUBCASE("base across components is rejected") {
    LabeledGraph g(r2, {"a", "b"}, {});
    CHECK_THROWS_AS(path_metric_completion(g, {0, 1}), std::invalid_argument);
  }
  SUBCASE("the restriction to one component works") {
    LabeledGraph g(r2, {"a", "b", "c"}, {{0, 1, 1}});
    MetricSpace s = path_metric_completion(g, {0});
    CHECK(s.size() == 2);
  }
}

TEST_CASE("labeled graph validation") {
  DistanceMonoid r2 = make_truncated(2);
  CHECK_THROWS_AS(LabeledGraph(r2, {"a"}, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LabeledGraph(r2, {"a", "b"}, {{0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(LabeledGraph(r2, {"a", "b"}, {{0, 1, 1}, {1, 0, 2}}),
                  std::invalid_argument);
}
