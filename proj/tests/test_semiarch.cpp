#include <doctest.h>

#include <stdexcept>

#include <set>

#include "gms/semiarch.hpp"

using namespace gms;

namespace {

BaseCaseFn brute(int margin = 6) {
  return [margin](const MetricSpace& base, const std::vector<Elem>& allowed) {
    return brute_force_witness(base, base.size() + margin, allowed);
  };
}

// Three points, two of them close: the stock two-level example.
MetricSpace two_level(const DistanceMonoid& m, Elem low, Elem high) {
  return MetricSpace(m, {"p", "q", "r"},
                     std::vector<Elem>{0, low, high, low, 0, high, high, high, 0});
}

}  // namespace

TEST_CASE("class decomposition of the two-level space") {
  DistanceMonoid m2 = make_max_chain(2);
  ClassDecomposition dec = class_decomposition(two_level(m2, 1, 2));
  REQUIRE(dec.classes.size() == 2);
  CHECK(dec.classes[0] == std::vector<int>{0, 1});
  CHECK(dec.classes[1] == std::vector<int>{2});
  CHECK(dec.cross_constant(0, 1) == 2);
  CHECK(dec.lower == std::vector<Elem>{0, 1});
  CHECK(dec.upper == std::vector<Elem>{2});
  CHECK(dec.quotient.size() == 2);
}

TEST_CASE("distances confined to the top class split into singletons") {
  DistanceMonoid m2 = make_max_chain(2);
  MetricSpace s(m2, {"p", "q", "r"}, std::vector<Elem>{0, 2, 2, 2, 0, 2, 2, 2, 0});
  ClassDecomposition dec = class_decomposition(s);
  CHECK(dec.classes.size() == 3);
  CHECK(dec.quotient.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(dec.quotient.dist(i, j) == s.dist(i, j));
}

TEST_CASE("decomposition requires a usable spectrum") {
  DistanceMonoid m2 = make_max_chain(2);
  MetricSpace p(m2, {"p"}, std::vector<Elem>{0});
  CHECK_THROWS_AS(class_decomposition(p), std::invalid_argument);
  DistanceMonoid bad = fixtures::non_semi_archimedean();
  MetricSpace s(bad, {"p", "q", "r"}, std::vector<Elem>{0, 1, 3, 1, 0, 3, 3, 3, 0});
  CHECK_THROWS_AS(class_decomposition(s), std::invalid_argument);
}

TEST_CASE("padding makes the classes pairwise isometric copies") {
  DistanceMonoid m2 = make_max_chain(2);
  ClassDecomposition dec = class_decomposition(two_level(m2, 1, 2));
  PaddedSpace pad = pad_classes(dec);
  CHECK(pad.space.size() == 6);
  REQUIRE(pad.decomposition.classes.size() == 2);
  // Within both blocks the flattened metric is all-1s; across, the constant 2.
  MetricSpace block0 = pad.space.restriction(pad.decomposition.classes[0]);
  MetricSpace block1 = pad.space.restriction(pad.decomposition.classes[1]);
  CHECK(block0.spectrum() == std::vector<Elem>{1});
  CHECK(block1.spectrum() == std::vector<Elem>{1});
  CHECK(is_isometric(block0, block1).has_value());
  for (int p : pad.decomposition.classes[0])
    for (int q : pad.decomposition.classes[1]) CHECK(pad.space.dist(p, q) == 2);
  // The original space embeds.
  for (int p = 0; p < dec.space.size(); ++p)
    for (int q = 0; q < dec.space.size(); ++q)
      CHECK(pad.space.dist(pad.base_embedding[p], pad.base_embedding[q]) ==
            dec.space.dist(p, q));
}

TEST_CASE("padding is the identity without below-top distances") {
  DistanceMonoid m2 = make_max_chain(2);
  MetricSpace s(m2, {"p", "q"}, std::vector<Elem>{0, 2, 2, 0});
  ClassDecomposition dec = class_decomposition(s);
  PaddedSpace pad = pad_classes(dec);
  CHECK(pad.space == s);
}

TEST_CASE("two-level witness construction") {
  DistanceMonoid m2 = make_max_chain(2);
  MetricSpace base = two_level(m2, 1, 2);
  WitnessResult res = semi_archimedean_witness(base, brute());
  REQUIRE(std::holds_alternative<EppaWitness>(res));
  const EppaWitness& w = std::get<EppaWitness>(res);
  CHECK(w.witness.size() == 6);
  CHECK(verify_witness(w).ok);
  // Spectrum stays inside the closure of the base spectrum.
  std::set<Elem> allowed{1, 2};
  for (Elem e : w.witness.spectrum()) CHECK(allowed.count(e));
}

TEST_CASE("archimedean inputs delegate to the base case") {
  DistanceMonoid r3 = make_truncated(3);
  MetricSpace base(r3, {"a", "b", "c"}, std::vector<Elem>{0, 1, 2, 1, 0, 2, 2, 2, 0});
  WitnessResult via_sa = semi_archimedean_witness(base, brute());
  WitnessResult direct = brute()(base, {1, 2, 3});
  REQUIRE(std::holds_alternative<EppaWitness>(via_sa));
  REQUIRE(std::holds_alternative<EppaWitness>(direct));
  CHECK(std::get<EppaWitness>(via_sa).witness == std::get<EppaWitness>(direct).witness);
  CHECK(std::get<EppaWitness>(via_sa).embedding == std::get<EppaWitness>(direct).embedding);
}

TEST_CASE("three-level ultrametric space recurses twice and verifies") {
  DistanceMonoid m3 = make_max_chain(3);
  MetricSpace base(m3, {"a", "b", "c", "e"},
                   std::vector<Elem>{0, 1, 2, 3, 1, 0, 2, 3, 2, 2, 0, 3, 3, 3, 3, 0});
  WitnessResult res = semi_archimedean_witness(base, brute());
  REQUIRE(std::holds_alternative<EppaWitness>(res));
  const EppaWitness& w = std::get<EppaWitness>(res);
  CHECK(verify_witness(w).ok);
  CHECK(w.witness.size() >= base.size());
}

TEST_CASE("a quotient needing a proper extension forces extra blocks") {
  // Three classes whose cross constants form a 2-step path in the top class:
  // the block quotient has no self-witness, so the construction must add
  // copy blocks beyond the original classes.
  DistanceMonoid m = fixtures::two_class_semi_archimedean();
  const Elem M = 3, MM = 4;
  MetricSpace base(m, {"a1", "a2", "b", "c"},
                   std::vector<Elem>{0, 1, M, MM, 1, 0, M, MM, M, M, 0, M, MM, MM, M, 0});
  ClassDecomposition dec = class_decomposition(base);
  REQUIRE(dec.classes.size() == 3);
  WitnessResult res = semi_archimedean_witness(base, brute());
  REQUIRE(std::holds_alternative<EppaWitness>(res));
  const EppaWitness& w = std::get<EppaWitness>(res);
  // The quotient witness needs at least 4 points, each carrying a block of 4.
  CHECK(w.witness.size() >= 16);
  CHECK(verify_witness(w).ok);
  // The witness spectrum stays inside the closure of the base spectrum.
  Submonoid closure = generated_submonoid(m, base.spectrum());
  for (Elem e : w.witness.spectrum()) CHECK(closure.index_of(e) >= 0);
}

TEST_CASE("two-class table monoid fixture goes through the construction") {
  DistanceMonoid m = fixtures::two_class_semi_archimedean();
  // d(p,q)=1 in the lower class, r at distance M from both.
  MetricSpace base(m, {"p", "q", "r"}, std::vector<Elem>{0, 1, 3, 1, 0, 3, 3, 3, 0});
  WitnessResult res = semi_archimedean_witness(base, brute());
  REQUIRE(std::holds_alternative<EppaWitness>(res));
  CHECK(verify_witness(std::get<EppaWitness>(res)).ok);
}

TEST_CASE("single points and edges go straight through") {
  DistanceMonoid m2 = make_max_chain(2);
  MetricSpace p(m2, {"a"}, std::vector<Elem>{0});
  WitnessResult res = semi_archimedean_witness(p, brute());
  REQUIRE(std::holds_alternative<EppaWitness>(res));
  CHECK(std::get<EppaWitness>(res).witness.size() == 1);

  MetricSpace edge(m2, {"a", "b"}, std::vector<Elem>{0, 1, 1, 0});
  WitnessResult res2 = semi_archimedean_witness(edge, brute());
  REQUIRE(std::holds_alternative<EppaWitness>(res2));
  CHECK(verify_witness(std::get<EppaWitness>(res2)).ok);
}

TEST_CASE("all small ultrametric spaces over the 2-chain get verified witnesses") {
  DistanceMonoid m2 = make_max_chain(2);
  std::set<std::vector<Elem>> seen;
  for (int n = 1; n <= 3; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<std::vector<Elem>> dist(n, std::vector<Elem>(n, 0));
      int t = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          dist[i][j] = dist[j][i] = 1 + ((mask >> t++) & 1);
        }
      std::vector<std::string> pts;
      for (int i = 0; i < n; ++i) pts.push_back(std::string(1, char('a' + i)));
      auto checked = MetricSpace::validate(m2, pts, dist);
      if (!std::holds_alternative<MetricSpace>(checked)) continue;
      MetricSpace s = std::get<MetricSpace>(std::move(checked));
      if (!seen.insert(s.canonical_form()).second) continue;
      WitnessResult res = semi_archimedean_witness(s, brute());
      REQUIRE(std::holds_alternative<EppaWitness>(res));
      CHECK(verify_witness(std::get<EppaWitness>(res)).ok);
    }
  }
}
