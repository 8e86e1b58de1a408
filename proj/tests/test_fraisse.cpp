#include <doctest.h>

#include <stdexcept>

#include "gms/fraisse.hpp"
#include "oracles.hpp"

using namespace gms;

namespace {

MetricSpace point_space(const DistanceMonoid& m) {
  return MetricSpace(m, {"a"}, std::vector<Elem>{0});
}

MetricSpace unit_edge(const DistanceMonoid& m) {
  return MetricSpace(m, {"a", "b"}, std::vector<Elem>{0, 1, 1, 0});
}

}  // namespace

TEST_CASE("one-point extensions") {
  DistanceMonoid r2 = make_truncated(2);
  SUBCASE("a single point admits one per nonzero distance") {
    auto exts = enumerate_one_point_extensions(point_space(r2));
    CHECK(exts.size() == 2);
  }
  SUBCASE("a unit edge admits all four assignments") {
    auto exts = enumerate_one_point_extensions(unit_edge(r2));
    REQUIRE(exts.size() == 4);
    for (const auto& ext : exts) CHECK_NOTHROW(adjoin(ext, "z"));
  }
  SUBCASE("forbidding unit triangles removes exactly the (1,1) assignment") {
    ForbiddenClass f3 = odd_perimeter_triangles(3);
    auto exts = enumerate_one_point_extensions(unit_edge(r2), &f3);
    REQUIRE(exts.size() == 3);
    for (const auto& ext : exts)
      CHECK_FALSE((ext.distances[0] == 1 && ext.distances[1] == 1));
  }
  SUBCASE("counts match the grid oracle over small bases and monoids") {
    for (int n = 2; n <= 4; ++n) {
      DistanceMonoid m = make_truncated(n);
      ForbiddenClass f3 = odd_perimeter_triangles(3);
      std::vector<MetricSpace> bases{point_space(m), unit_edge(m)};
      bases.push_back(MetricSpace(m, {"a", "b", "c"},
                                  std::vector<Elem>{0, 1, 1, 1, 0, 1, 1, 1, 0}));
      bases.push_back(MetricSpace(m, {"a", "b", "c"},
                                  std::vector<Elem>{0, 1, 2, 1, 0, 2, 2, 2, 0}));
      bases.push_back(MetricSpace(
          m, {"a", "b", "c", "d"},
          std::vector<Elem>{0, 1, 2, 2, 1, 0, 1, 2, 2, 1, 0, 1, 2, 2, 1, 0}));
      for (const MetricSpace& base : bases) {
        CHECK(static_cast<int>(enumerate_one_point_extensions(base).size()) ==
              oracle::count_one_point_extensions(base, nullptr));
        if (n == 2)
          CHECK(static_cast<int>(enumerate_one_point_extensions(base, &f3).size()) ==
                oracle::count_one_point_extensions(base, &f3));
      }
    }
  }
}

TEST_CASE("saturation") {
  DistanceMonoid r2 = make_truncated(2);
  SUBCASE("a point saturated one level realizes both extensions") {
    SaturationReport report = saturate(point_space(r2), 1, nullptr, 16, 1);
    CHECK(report.result.size() == 3);
    CHECK(report.realized_per_level == std::vector<int>{2});
    CHECK_FALSE(report.budget_exhausted);
  }
  SUBCASE("depth zero is the identity") {
    SaturationReport report = saturate(point_space(r2), 0, nullptr, 16, 2);
    CHECK(report.result == point_space(r2));
  }
  SUBCASE("constrained saturation stays free and realizes what it promises") {
    ForbiddenClass f3 = odd_perimeter_triangles(3);
    SaturationReport one = saturate(point_space(r2), 1, &f3, 64, 2);
    SaturationReport two = saturate(point_space(r2), 2, &f3, 64, 2);
    CHECK(is_free(one.result, f3));
    CHECK(is_free(two.result, f3));
    // Every admissible constrained extension of every small subspace of the
    // previous level is realized one level later.  Levels are monotone, so
    // level-1 indices carry over.
    const MetricSpace& prev = one.result;
    const MetricSpace& result = two.result;
    for (int i = 0; i < prev.size(); ++i)
      for (int j = i; j < prev.size(); ++j) {
        std::vector<int> subset = i == j ? std::vector<int>{i} : std::vector<int>{i, j};
        MetricSpace sub = prev.restriction(subset);
        for (const auto& ext : enumerate_one_point_extensions(sub, &f3)) {
          bool found = false;
          for (int p = 0; p < result.size() && !found; ++p) {
            bool ok = true;
            for (size_t t = 0; t < subset.size() && ok; ++t)
              if (result.dist(p, subset[t]) != ext.distances[t]) ok = false;
            found = ok;
          }
          CHECK(found);
        }
      }
  }
  SUBCASE("levels are monotone: earlier spaces sit at the front") {
    SaturationReport one = saturate(point_space(r2), 1, nullptr, 64, 2);
    SaturationReport two = saturate(point_space(r2), 2, nullptr, 64, 2);
    REQUIRE(two.result.size() >= one.result.size());
    for (int i = 0; i < one.result.size(); ++i)
      for (int j = 0; j < one.result.size(); ++j)
        CHECK(two.result.dist(i, j) == one.result.dist(i, j));
  }
  SUBCASE("budgets cut the run short with a flag") {
    SaturationReport report = saturate(point_space(r2), 3, nullptr, 4, 2);
    CHECK(report.budget_exhausted);
    CHECK(report.result.size() <= 5);
  }
}

TEST_CASE("homogeneity audit") {
  DistanceMonoid r2 = make_truncated(2);
  SUBCASE("the equilateral triple is homogeneous") {
    MetricSpace t(r2, {"a", "b", "c"}, std::vector<Elem>{0, 1, 1, 1, 0, 1, 1, 1, 0});
    CHECK(homogeneity_audit(t, 3).empty());
  }
  SUBCASE("the 2-step path is not, already at domain size 1") {
    MetricSpace path(r2, {"a", "b", "c"}, std::vector<Elem>{0, 1, 2, 1, 0, 1, 2, 1, 0});
    auto failures = homogeneity_audit(path, 1);
    CHECK_FALSE(failures.empty());
    bool endpoint_to_middle = false;
    for (const auto& phi : failures)
      if (phi.map == std::vector<int>{1, PartialIsometry::kUnmapped,
                                      PartialIsometry::kUnmapped})
        endpoint_to_middle = true;
    CHECK(endpoint_to_middle);
  }
  SUBCASE("a single point is homogeneous") {
    CHECK(homogeneity_audit(point_space(r2), 1).empty());
  }
}
