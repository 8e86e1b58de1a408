#include <doctest.h>

#include <stdexcept>

#include <set>

#include "gms/omission.hpp"
#include "gms/random_space.hpp"
#include "oracles.hpp"

using namespace gms;

namespace {

MetricSpace triangle(const DistanceMonoid& m, Elem d01, Elem d02, Elem d12) {
  return MetricSpace(m, {"a", "b", "c"},
                     std::vector<Elem>{0, d01, d02, d01, 0, d12, d02, d12, 0});
}

MetricSpace cycle_space(const DistanceMonoid& r2, int n) {
  std::vector<Elem> flat(static_cast<size_t>(n) * n, 0);
  auto set = [&](int i, int j, Elem v) { flat[i * n + j] = flat[j * n + i] = v; };
  for (int i = 0; i < n; ++i)
    for (int d = 2; d <= n / 2; ++d) set(i, (i + d) % n, 2);
  for (int i = 0; i < n; ++i) set(i, (i + 1) % n, 1);
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back("v" + std::to_string(i));
  return MetricSpace(r2, std::move(pts), std::move(flat));
}

std::vector<Elem> sorted_triangle(const MetricSpace& s) {
  std::vector<Elem> d{s.dist(0, 1), s.dist(0, 2), s.dist(1, 2)};
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("partial semimetric validation") {
  DistanceMonoid r2 = make_truncated(2);
  CHECK_THROWS_AS(PartialSemimetric(r2, {"a"}, {PartialSemimetric::kUndefined}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PartialSemimetric(r2, {"a", "b"},
                                    {0, 1, PartialSemimetric::kUndefined, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PartialSemimetric(r2, {"a", "b"}, {0, 0, 0, 0}), std::invalid_argument);
  PartialSemimetric ok(r2, {"a", "b"},
                       {0, PartialSemimetric::kUndefined, PartialSemimetric::kUndefined, 0});
  CHECK(ok.positive_image().empty());
}

TEST_CASE("weak embeddings") {
  DistanceMonoid r2 = make_truncated(2);
  SUBCASE("one defined pair embeds into any edge") {
    std::vector<Elem> delta(4, PartialSemimetric::kUndefined);
    delta[0] = delta[3] = 0;
    delta[1] = delta[2] = 1;
    PartialSemimetric pattern(r2, {"x", "y"}, delta);
    CHECK(weak_embedding_exists(pattern, triangle(r2, 1, 1, 1)).has_value());
  }
  SUBCASE("no unit triangle inside the 4-cycle") {
    PartialSemimetric pattern = PartialSemimetric::total(triangle(r2, 1, 1, 1));
    CHECK_FALSE(weak_embedding_exists(pattern, cycle_space(r2, 4)).has_value());
  }
  SUBCASE("unconstrained patterns embed wherever there is room") {
    std::vector<Elem> delta(4, PartialSemimetric::kUndefined);
    delta[0] = delta[3] = 0;
    PartialSemimetric pattern(r2, {"x", "y"}, delta);
    MetricSpace edge(r2, {"a", "b"}, std::vector<Elem>{0, 2, 2, 0});
    CHECK(weak_embedding_exists(pattern, edge).has_value());
    MetricSpace point(r2, {"a"}, std::vector<Elem>{0});
    CHECK_FALSE(weak_embedding_exists(pattern, point).has_value());
  }
}

TEST_CASE("weak homomorphisms") {
  DistanceMonoid r2 = make_truncated(2);
  SUBCASE("collapsing the unit triangle into an edge fails") {
    PartialSemimetric pattern = PartialSemimetric::total(triangle(r2, 1, 1, 1));
    MetricSpace edge(r2, {"a", "b"}, std::vector<Elem>{0, 1, 1, 0});
    CHECK_FALSE(weak_homomorphism_exists(pattern, edge).has_value());
  }
  SUBCASE("total metric patterns map identically into themselves") {
    MetricSpace t = triangle(r2, 1, 1, 2);
    CHECK(weak_homomorphism_exists(PartialSemimetric::total(t), t).has_value());
  }
  SUBCASE("triangle-violating walk patterns never land in a metric space") {
    DistanceMonoid m2 = make_max_chain(2);
    PartialSemimetric pattern = walk_pattern(m2, 2, {1, 1});
    MetricSpace host(m2, {"a", "b", "c"}, std::vector<Elem>{0, 1, 2, 1, 0, 2, 2, 2, 0});
    CHECK_FALSE(weak_homomorphism_exists(pattern, host).has_value());
  }
}

TEST_CASE("freeness") {
  DistanceMonoid r2 = make_truncated(2);
  ForbiddenClass f3 = odd_perimeter_triangles(3);
  CHECK(is_free(cycle_space(r2, 5), f3));
  CHECK_FALSE(is_free(triangle(r2, 1, 1, 1), f3));
  CHECK(is_free(triangle(r2, 1, 1, 1), ForbiddenClass{}));
}

TEST_CASE("odd-perimeter triangle classes") {
  SUBCASE("bound 3") {
    ForbiddenClass f = odd_perimeter_triangles(3);
    REQUIRE(f.members.size() == 1);
    CHECK(sorted_triangle(f.members[0]) == std::vector<Elem>{1, 1, 1});
    CHECK(f.spectrum_bound == std::vector<Elem>{1, 2});
  }
  SUBCASE("bound 5") {
    ForbiddenClass f = odd_perimeter_triangles(5);
    REQUIRE(f.members.size() == 2);
    CHECK(sorted_triangle(f.members[0]) == std::vector<Elem>{1, 1, 1});
    CHECK(sorted_triangle(f.members[1]) == std::vector<Elem>{1, 2, 2});
  }
  SUBCASE("members avoid the cap distance and stay dominated") {
    for (int n : {3, 5, 7, 9}) {
      ForbiddenClass f = odd_perimeter_triangles(n);
      const Elem nstar = (n + 1) / 2;
      for (const MetricSpace& member : f.members) {
        CHECK(member.has_dominated_spectrum());
        for (Elem d : member.spectrum()) CHECK(d < nstar);
      }
    }
  }
  CHECK_THROWS_AS(odd_perimeter_triangles(4), std::invalid_argument);
}

TEST_CASE("path extensions of the unit triangle are just itself") {
  DistanceMonoid r2 = make_truncated(2);
  auto exts = enumerate_path_extensions(triangle(r2, 1, 1, 1), {1, 2});
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].carrier.size() == 3);
  CHECK(exts[0].injective_paths);
}

TEST_CASE("a single point extends only to itself") {
  DistanceMonoid r3 = make_truncated(3);
  MetricSpace p(r3, {"a"}, std::vector<Elem>{0});
  auto exts = enumerate_path_extensions(p, {1, 2, 3});
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].carrier.size() == 1);
}

TEST_CASE("every base is a path extension of itself") {
  DistanceMonoid r3 = make_truncated(3);
  for (const MetricSpace& base :
       {triangle(r3, 1, 2, 2), triangle(r3, 2, 2, 2), triangle(r3, 1, 1, 2)}) {
    auto exts = enumerate_path_extensions(base, {1, 2, 3});
    bool has_self = false;
    for (const auto& e : exts)
      if (e.carrier.size() == base.size() &&
          e.carrier == PartialSemimetric::total(base))
        has_self = true;
    CHECK(has_self);
  }
}

TEST_CASE("path extension counts match the generate-and-check oracle") {
  DistanceMonoid r3 = make_truncated(3);
  std::vector<MetricSpace> bases{triangle(r3, 1, 1, 1), triangle(r3, 1, 1, 2),
                                 triangle(r3, 1, 2, 2), triangle(r3, 2, 2, 2)};
  bases.push_back(MetricSpace(r3, {"a", "b"}, std::vector<Elem>{0, 1, 1, 0}));
  bases.push_back(MetricSpace(r3, {"a", "b"}, std::vector<Elem>{0, 2, 2, 0}));
  bases.push_back(MetricSpace(r3, {"a"}, std::vector<Elem>{0}));
  for (const MetricSpace& base : bases) {
    auto exts = enumerate_path_extensions(base, {1, 2, 3});
    // Same bound derivation as the library: steps < k, k minimal with
    // dominator <= k * min(S).
    Elem max_d = 0;
    for (int i = 0; i < base.size(); ++i)
      for (int j = 0; j < base.size(); ++j) max_d = std::max(max_d, base.dist(i, j));
    const int k = max_d + 1;  // min(S) = 1 over a truncated monoid
    const int step_cap = k - 1;
    const int pairs = base.size() * (base.size() - 1) / 2;
    int count = oracle::count_path_extensions(base, {1, 2, 3},
                                              std::max(0, step_cap - 1) * pairs, step_cap);
    CHECK(static_cast<int>(exts.size()) == count);
    // Lemma-style carrier bound, strict.
    for (const auto& e : exts)
      CHECK(e.carrier.size() < base.size() + k * base.size() * base.size());
  }
}

TEST_CASE("path extensions demand a dominated or capped base") {
  DistanceMonoid r2 = make_truncated(2);
  MetricSpace base = triangle(r2, 1, 1, 2);
  CHECK_THROWS_AS(enumerate_path_extensions(base, {1, 2}), std::invalid_argument);
  auto capped = enumerate_path_extensions(base, {1, 2}, 4);
  CHECK(capped.size() > 1);
  for (const auto& e : capped) CHECK(e.carrier.size() <= 4);
}

TEST_CASE("path extensions reject non-archimedean label sets") {
  DistanceMonoid m2 = make_max_chain(2);
  MetricSpace base(m2, {"a", "b"}, std::vector<Elem>{0, 1, 1, 0});
  CHECK_THROWS_AS(enumerate_path_extensions(base, {1, 2}, 4), std::invalid_argument);
}

TEST_CASE("closure check refutes the lone even path-distance triangle") {
  DistanceMonoid r2 = make_truncated(2);
  ForbiddenClass f{{triangle(r2, 1, 1, 2)}, {1, 2}};
  std::vector<MetricSpace> hosts{cycle_space(r2, 5)};
  ClosureReport report = check_closed_under_path_extensions(f, hosts);
  REQUIRE_FALSE(report.closed);
  REQUIRE(report.counterexample.has_value());
  CHECK(report.counterexample->member == 0);
  CHECK(report.counterexample->host == 0);
  // The recorded map really is a weak homomorphism.
  const PathExtension& ext = report.counterexample->extension;
  const std::vector<int>& hom = report.counterexample->hom;
  for (int i = 0; i < ext.carrier.size(); ++i)
    for (int j = 0; j < ext.carrier.size(); ++j)
      if (ext.carrier.defined(i, j))
        CHECK(hosts[0].dist(hom[i], hom[j]) == ext.carrier.delta(i, j));
}

TEST_CASE("closure check passes for the odd-perimeter class on random free hosts") {
  DistanceMonoid r3 = make_truncated(3);
  ForbiddenClass f5 = odd_perimeter_triangles(5);
  std::vector<MetricSpace> hosts;
  for (std::uint64_t seed = 1; seed <= 50; ++seed)
    hosts.push_back(random_free_space(r3, 3 + seed % 5, f5, seed));
  ClosureReport report = check_closed_under_path_extensions(f5, hosts);
  CHECK(report.closed);
}

TEST_CASE("empty forbidden classes are trivially closed") {
  CHECK(check_closed_under_path_extensions(ForbiddenClass{}, {}).closed);
}

TEST_CASE("parity verification") {
  DistanceMonoid r3 = make_truncated(3);
  SUBCASE("two points cannot build an odd cycle") {
    MetricSpace s(r3, {"a", "b"}, std::vector<Elem>{0, 2, 2, 0});
    CHECK(verify_parity(s, 5).ok);
  }
  SUBCASE("an embedded odd triangle is found") {
    MetricSpace s = triangle(r3, 1, 2, 2);
    ParityReport report = verify_parity(s, 5);
    REQUIRE_FALSE(report.ok);
    REQUIRE(report.cycle.size() >= 3);
    int sum = 0;
    for (size_t i = 0; i < report.cycle.size(); ++i)
      sum += s.dist(report.cycle[i], report.cycle[(i + 1) % report.cycle.size()]);
    CHECK(sum <= 5);
    CHECK(sum % 2 == 1);
  }
  SUBCASE("free spaces pass and are monotone under subspaces") {
    ForbiddenClass f5 = odd_perimeter_triangles(5);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      MetricSpace s = random_free_space(r3, 5, f5, seed);
      CHECK(verify_parity(s, 5).ok);
      CHECK(verify_parity(s.restriction({0, 1, 2}), 5).ok);
    }
  }
  SUBCASE("the same holds for the other odd bounds") {
    for (int n : {3, 7}) {
      DistanceMonoid m = make_truncated((n + 1) / 2);
      ForbiddenClass f = odd_perimeter_triangles(n);
      for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        MetricSpace s = random_free_space(m, 4 + seed % 4, f, seed);
        CHECK(verify_parity(s, n).ok);
      }
    }
  }
  SUBCASE("wrong monoid is rejected") {
    DistanceMonoid r2 = make_truncated(2);
    CHECK_THROWS_AS(verify_parity(triangle(r2, 1, 1, 1), 5), std::invalid_argument);
  }
}

TEST_CASE("free amalgamation preserves freeness from odd triangles") {
  DistanceMonoid r2 = make_truncated(2);
  ForbiddenClass f3 = odd_perimeter_triangles(3);
  std::vector<MetricSpace> pieces;
  for (Elem a = 1; a <= 2; ++a)
    for (Elem b = a; b <= 2; ++b)
      for (Elem c = b; c <= 2; ++c) {
        auto checked = MetricSpace::validate(r2, {"a", "b", "c"},
                                             {{0, a, b}, {a, 0, c}, {b, c, 0}});
        if (!std::holds_alternative<MetricSpace>(checked)) continue;
        MetricSpace t = std::get<MetricSpace>(std::move(checked));
        if (is_free(t, f3)) pieces.push_back(std::move(t));
      }
  for (const MetricSpace& a : pieces)
    for (const MetricSpace& b : pieces)
      for (int za = 0; za < a.size(); ++za)
        for (int zb = 0; zb < b.size(); ++zb)
          CHECK(is_free(free_amalgamation(a, b, {{za, zb}}), f3));
}

TEST_CASE("free witness search") {
  DistanceMonoid r2 = make_truncated(2);
  ForbiddenClass f3 = odd_perimeter_triangles(3);
  SUBCASE("a unit edge is its own triangle-free witness") {
    MetricSpace edge(r2, {"a", "b"}, std::vector<Elem>{0, 1, 1, 0});
    WitnessResult res = free_witness_search(edge, f3, 6);
    REQUIRE(std::holds_alternative<EppaWitness>(res));
    CHECK(std::get<EppaWitness>(res).witness == edge);
  }
  SUBCASE("the 2-step path gets a triangle-free witness within 5") {
    MetricSpace base = triangle(r2, 1, 2, 1);
    WitnessResult res = free_witness_search(base, f3, 9);
    REQUIRE(std::holds_alternative<EppaWitness>(res));
    const EppaWitness& w = std::get<EppaWitness>(res);
    CHECK(w.witness.size() <= 5);
    CHECK(is_free(w.witness, f3));
    CHECK(verify_witness(w).ok);
  }
  SUBCASE("bases inside the class are rejected") {
    CHECK_THROWS_AS(free_witness_search(triangle(r2, 1, 1, 1), f3, 6),
                    std::invalid_argument);
  }
}
