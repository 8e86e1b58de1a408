#include "gms/monoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gms {

const char* to_string(MonoidAxiom axiom) {
  switch (axiom) {
    case MonoidAxiom::Order: return "order";
    case MonoidAxiom::Identity: return "identity";
    case MonoidAxiom::Commutativity: return "commutativity";
    case MonoidAxiom::Associativity: return "associativity";
    case MonoidAxiom::Monotonicity: return "monotonicity";
  }
  return "?";
}

namespace {

void check_shape(const std::vector<std::string>& labels, const DistanceMonoid::Table& plus) {
  const auto n = labels.size();
  if (plus.size() != n)
    throw std::invalid_argument("plus table must be square over the carrier");
  for (const auto& row : plus) {
    if (row.size() != n)
      throw std::invalid_argument("plus table must be square over the carrier");
    for (Elem e : row)
      if (e < 0 || static_cast<size_t>(e) >= n)
        throw std::invalid_argument("plus table entry out of range");
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != n) throw std::invalid_argument("carrier labels must be distinct");
}

}  // namespace

std::variant<DistanceMonoid, MonoidViolation> DistanceMonoid::validate(
    std::vector<std::string> labels, Table plus) {
  check_shape(labels, plus);
  const int n = static_cast<int>(labels.size());
  if (n == 0) return MonoidViolation{MonoidAxiom::Order, {}};
  for (Elem i = 0; i < n; ++i) {
    if (plus[0][i] != i) return MonoidViolation{MonoidAxiom::Identity, {0, i}};
    if (plus[i][0] != i) return MonoidViolation{MonoidAxiom::Identity, {i, 0}};
  }
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (plus[i][j] != plus[j][i])
        return MonoidViolation{MonoidAxiom::Commutativity, {i, j}};
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      for (Elem k = 0; k < n; ++k)
        if (plus[plus[i][j]][k] != plus[i][plus[j][k]])
          return MonoidViolation{MonoidAxiom::Associativity, {i, j, k}};
  for (Elem r = 0; r < n; ++r)
    for (Elem s = r; s < n; ++s)
      for (Elem t = 0; t < n; ++t)
        for (Elem u = t; u < n; ++u)
          if (plus[r][t] > plus[s][u])
            return MonoidViolation{MonoidAxiom::Monotonicity, {r, s, t, u}};
  return DistanceMonoid(Unchecked{}, std::move(labels), std::move(plus));
}

DistanceMonoid::DistanceMonoid(std::vector<std::string> labels, Table plus) {
  auto checked = validate(std::move(labels), std::move(plus));
  if (auto* bad = std::get_if<MonoidViolation>(&checked))
    throw std::invalid_argument(std::string("monoid axiom violated: ") + to_string(bad->axiom));
  *this = std::get<DistanceMonoid>(std::move(checked));
}

Elem DistanceMonoid::reach(Elem r) const {
  Elem x = r;
  for (;;) {
    Elem next = plus(x, r);
    if (next == x) return x;
    x = next;
  }
}

DistanceMonoid make_truncated(int n) {
  if (n < 1) throw std::invalid_argument("truncated monoid needs n >= 1");
  std::vector<std::string> labels;
  DistanceMonoid::Table plus(n + 1, std::vector<Elem>(n + 1));
  for (int i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j <= n; ++j) plus[i][j] = std::min(n, i + j);
  }
  return DistanceMonoid(std::move(labels), std::move(plus));
}

DistanceMonoid make_max_chain(int n) {
  if (n < 1) throw std::invalid_argument("max-chain monoid needs n >= 1");
  std::vector<std::string> labels;
  DistanceMonoid::Table plus(n + 1, std::vector<Elem>(n + 1));
  for (int i = 0; i <= n; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j <= n; ++j) plus[i][j] = std::max(i, j);
  }
  return DistanceMonoid(std::move(labels), std::move(plus));
}

int ArchClassPartition::class_of(Elem e) const {
  for (size_t c = 0; c < classes.size(); ++c)
    for (Elem x : classes[c])
      if (x == e) return static_cast<int>(c);
  return -1;
}

ArchClassPartition archimedean_classes(const DistanceMonoid& m) {
  ArchClassPartition part;
  const int n = m.size();
  if (n <= 1) return part;
  // Classes are order-convex, so it is enough to test adjacent elements:
  // e and e+1 share a class iff e+1 is bounded by some multiple of e.
  std::vector<Elem> current{1};
  for (Elem e = 2; e < n; ++e) {
    if (e <= m.reach(e - 1)) {
      current.push_back(e);
    } else {
      part.classes.push_back(std::move(current));
      current = {e};
    }
  }
  part.classes.push_back(std::move(current));
  return part;
}

bool is_semi_archimedean(const DistanceMonoid& m) {
  for (Elem r = 1; r < m.size(); ++r)
    for (Elem s = 1; s < m.size(); ++s)
      if (m.reach(r) < s && m.plus(r, s) != s) return false;
  return true;
}

int Submonoid::index_of(Elem ambient) const {
  auto it = std::lower_bound(inclusion.begin(), inclusion.end(), ambient);
  if (it == inclusion.end() || *it != ambient) return -1;
  return static_cast<int>(it - inclusion.begin());
}

Submonoid generated_submonoid(const DistanceMonoid& m, std::vector<Elem> seed) {
  for (Elem e : seed)
    if (e < 0 || e >= m.size()) throw std::invalid_argument("seed element out of range");
  std::set<Elem> carrier{0};
  carrier.insert(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> snapshot(carrier.begin(), carrier.end());
    for (Elem a : snapshot)
      for (Elem b : snapshot)
        if (carrier.insert(m.plus(a, b)).second) grew = true;
  }
  std::vector<Elem> inclusion(carrier.begin(), carrier.end());
  const int k = static_cast<int>(inclusion.size());
  std::vector<std::string> labels(k);
  DistanceMonoid::Table plus(k, std::vector<Elem>(k));
  auto sub_index = [&](Elem ambient) {
    return static_cast<int>(std::lower_bound(inclusion.begin(), inclusion.end(), ambient) -
                            inclusion.begin());
  };
  for (int i = 0; i < k; ++i) {
    labels[i] = m.label(inclusion[i]);
    for (int j = 0; j < k; ++j) plus[i][j] = sub_index(m.plus(inclusion[i], inclusion[j]));
  }
  return Submonoid{DistanceMonoid(std::move(labels), std::move(plus)), std::move(inclusion)};
}

namespace fixtures {

DistanceMonoid two_class_semi_archimedean() {
  return DistanceMonoid({"0", "1", "2", "M", "2M"},
                        {{0, 1, 2, 3, 4},
                         {1, 2, 2, 3, 4},
                         {2, 2, 2, 3, 4},
                         {3, 3, 3, 4, 4},
                         {4, 4, 4, 4, 4}});
}

DistanceMonoid non_semi_archimedean() {
  return DistanceMonoid({"0", "1", "2", "M", "T"},
                        {{0, 1, 2, 3, 4},
                         {1, 2, 2, 4, 4},
                         {2, 2, 2, 4, 4},
                         {3, 4, 4, 4, 4},
                         {4, 4, 4, 4, 4}});
}

}  // namespace fixtures

}  // namespace gms
