#include "gms/space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gms {

const char* to_string(MetricAxiom axiom) {
  switch (axiom) {
    case MetricAxiom::Identity: return "identity";
    case MetricAxiom::Symmetry: return "symmetry";
    case MetricAxiom::Triangle: return "triangle";
  }
  return "?";
}

std::variant<MetricSpace, SpaceViolation> MetricSpace::validate(
    DistanceMonoid monoid, std::vector<std::string> points,
    const std::vector<std::vector<Elem>>& dist) {
  const int n = static_cast<int>(points.size());
  if (static_cast<int>(dist.size()) != n)
    throw std::invalid_argument("distance matrix must be square over the points");
  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[i].size()) != n)
      throw std::invalid_argument("distance matrix must be square over the points");
    for (int j = 0; j < n; ++j) {
      if (dist[i][j] < 0 || dist[i][j] >= monoid.size())
        throw std::invalid_argument("distance entry out of monoid range");
      flat[i * n + j] = dist[i][j];
    }
  }
  {
    std::set<std::string> seen(points.begin(), points.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("point labels must be distinct");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((flat[i * n + j] == 0) != (i == j))
        return SpaceViolation{MetricAxiom::Identity, {i, j}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (flat[i * n + j] != flat[j * n + i])
        return SpaceViolation{MetricAxiom::Symmetry, {i, j}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (flat[a * n + c] > monoid.plus(flat[a * n + b], flat[b * n + c]))
          return SpaceViolation{MetricAxiom::Triangle, {a, b, c}};
  return MetricSpace(Unchecked{}, std::move(monoid), std::move(points), std::move(flat));
}

namespace {

MetricSpace take_or_throw(std::variant<MetricSpace, SpaceViolation> checked) {
  if (auto* bad = std::get_if<SpaceViolation>(&checked))
    throw std::invalid_argument(std::string("metric axiom violated: ") + to_string(bad->axiom));
  return std::get<MetricSpace>(std::move(checked));
}

}  // namespace

namespace {

std::vector<std::vector<Elem>> unflatten(int n, const std::vector<Elem>& flat) {
  if (static_cast<int>(flat.size()) != n * n)
    throw std::invalid_argument("flat distance matrix has wrong size");
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = flat[i * n + j];
  return rows;
}

std::variant<MetricSpace, SpaceViolation> validate_flat(DistanceMonoid monoid,
                                                        std::vector<std::string> points,
                                                        const std::vector<Elem>& flat) {
  const int n = static_cast<int>(points.size());
  return MetricSpace::validate(std::move(monoid), std::move(points), unflatten(n, flat));
}

}  // namespace

MetricSpace::MetricSpace(DistanceMonoid monoid, std::vector<std::string> points,
                         const std::vector<std::vector<Elem>>& dist)
    : MetricSpace(take_or_throw(validate(std::move(monoid), std::move(points), dist))) {}

MetricSpace::MetricSpace(DistanceMonoid monoid, std::vector<std::string> points,
                         std::vector<Elem> flat_dist)
    : MetricSpace(take_or_throw(
          validate_flat(std::move(monoid), std::move(points), flat_dist))) {}

MetricSpace unchecked_space(DistanceMonoid monoid, std::vector<std::string> points,
                            std::vector<Elem> flat_dist) {
  return MetricSpace(MetricSpace::Unchecked{}, std::move(monoid), std::move(points),
                     std::move(flat_dist));
}

int MetricSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (points_[i] == label) return i;
  return -1;
}

std::vector<Elem> MetricSpace::spectrum() const {
  std::set<Elem> s;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) s.insert(dist(i, j));
  return {s.begin(), s.end()};
}

bool MetricSpace::has_dominated_spectrum() const {
  if (size() == 0) return true;
  Elem max_d = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) max_d = std::max(max_d, dist(i, j));
  return monoid_.max_element() > max_d;
}

MetricSpace MetricSpace::restriction(const std::vector<int>& idx) const {
  const int k = static_cast<int>(idx.size());
  std::vector<std::string> pts(k);
  std::vector<Elem> flat(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    pts[i] = points_[idx[i]];
    for (int j = 0; j < k; ++j) flat[i * k + j] = dist(idx[i], idx[j]);
  }
  return unchecked_space(monoid_, std::move(pts), std::move(flat));
}

namespace {

// Lower-triangle encoding of the matrix under a point ordering.
void encode_row(const MetricSpace& s, const std::vector<int>& order, int pos,
                std::vector<Elem>& out) {
  for (int j = 0; j < pos; ++j) out.push_back(s.dist(order[pos], order[j]));
}

void canonical_search(const MetricSpace& s, std::vector<int>& order, std::vector<bool>& used,
                      std::vector<Elem>& encoding, std::vector<Elem>& best, bool& have_best) {
  const int n = s.size();
  const int pos = static_cast<int>(order.size());
  if (pos == n) {
    if (!have_best || encoding < best) {
      best = encoding;
      have_best = true;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    const size_t mark = encoding.size();
    order.push_back(v);
    encode_row(s, order, pos, encoding);
    // Prune only when the whole prefix already exceeds the best encoding.
    bool viable = true;
    if (have_best) {
      for (size_t t = 0; t < encoding.size(); ++t) {
        if (encoding[t] != best[t]) {
          viable = encoding[t] < best[t];
          break;
        }
      }
    }
    if (viable) {
      used[v] = true;
      canonical_search(s, order, used, encoding, best, have_best);
      used[v] = false;
    }
    encoding.resize(mark);
    order.pop_back();
  }
}

}  // namespace

std::vector<Elem> MetricSpace::canonical_form() const {
  std::vector<int> order;
  std::vector<bool> used(size(), false);
  std::vector<Elem> encoding, best;
  bool have_best = false;
  canonical_search(*this, order, used, encoding, best, have_best);
  return best;
}

int PartialIsometry::domain_size() const {
  int k = 0;
  for (int v : map)
    if (v != kUnmapped) ++k;
  return k;
}

bool is_partial_isometry(const MetricSpace& source, const MetricSpace& target,
                         const PartialIsometry& phi) {
  if (static_cast<int>(phi.map.size()) != source.size()) return false;
  if (source.monoid() != target.monoid()) return false;
  std::vector<bool> hit(target.size(), false);
  for (int i = 0; i < source.size(); ++i) {
    int v = phi.map[i];
    if (v == PartialIsometry::kUnmapped) continue;
    if (v < 0 || v >= target.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (int i = 0; i < source.size(); ++i) {
    if (phi.map[i] == PartialIsometry::kUnmapped) continue;
    for (int j = 0; j < source.size(); ++j) {
      if (phi.map[j] == PartialIsometry::kUnmapped) continue;
      if (source.dist(i, j) != target.dist(phi.map[i], phi.map[j])) return false;
    }
  }
  return true;
}

namespace {

void partial_isometry_search(const MetricSpace& s, int i, std::vector<int>& map,
                             std::vector<bool>& used, int max_domain, int domain,
                             std::vector<PartialIsometry>& out) {
  const int n = s.size();
  if (i == n) {
    out.push_back(PartialIsometry{map});
    return;
  }
  map[i] = PartialIsometry::kUnmapped;
  partial_isometry_search(s, i + 1, map, used, max_domain, domain, out);
  if (max_domain >= 0 && domain >= max_domain) return;
  for (int t = 0; t < n; ++t) {
    if (used[t]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      if (map[j] != PartialIsometry::kUnmapped && s.dist(i, j) != s.dist(t, map[j])) ok = false;
    if (!ok) continue;
    map[i] = t;
    used[t] = true;
    partial_isometry_search(s, i + 1, map, used, max_domain, domain + 1, out);
    used[t] = false;
    map[i] = PartialIsometry::kUnmapped;
  }
}

}  // namespace

std::vector<PartialIsometry> enumerate_partial_isometries(const MetricSpace& space,
                                                          int max_domain) {
  std::vector<PartialIsometry> out;
  std::vector<int> map(space.size(), PartialIsometry::kUnmapped);
  std::vector<bool> used(space.size(), false);
  partial_isometry_search(space, 0, map, used, max_domain, 0, out);
  return out;
}

MetricSpace free_amalgamation(const MetricSpace& a, const MetricSpace& b,
                              const std::vector<std::pair<int, int>>& glue) {
  if (a.monoid() != b.monoid())
    throw std::invalid_argument("free amalgamation needs a common monoid");
  if (glue.empty()) throw std::invalid_argument("free amalgamation needs a nonempty glue");
  std::vector<int> a_to_b(a.size(), -1), b_to_a(b.size(), -1);
  for (auto [ia, ib] : glue) {
    if (ia < 0 || ia >= a.size() || ib < 0 || ib >= b.size())
      throw std::invalid_argument("glue index out of range");
    if (a_to_b[ia] != -1 || b_to_a[ib] != -1)
      throw std::invalid_argument("glue must identify points injectively");
    a_to_b[ia] = ib;
    b_to_a[ib] = ia;
  }
  for (auto [ia, ib] : glue)
    for (auto [ja, jb] : glue)
      if (a.dist(ia, ja) != b.dist(ib, jb))
        throw std::invalid_argument("glue does not identify isometric subspaces");

  std::vector<std::string> points = a.points();
  std::vector<int> b_pos(b.size(), -1);
  for (int ib = 0; ib < b.size(); ++ib) {
    if (b_to_a[ib] != -1) {
      b_pos[ib] = b_to_a[ib];
    } else {
      std::string lbl = uniquify_label(b.point(ib), points);
      b_pos[ib] = static_cast<int>(points.size());
      points.push_back(std::move(lbl));
    }
  }
  const int n = static_cast<int>(points.size());
  std::vector<Elem> flat(static_cast<size_t>(n) * n, 0);
  auto set_d = [&](int i, int j, Elem v) { flat[i * n + j] = flat[j * n + i] = v; };
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) set_d(i, j, a.dist(i, j));
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j) set_d(b_pos[i], b_pos[j], b.dist(i, j));
  for (int ia = 0; ia < a.size(); ++ia) {
    if (a_to_b[ia] != -1) continue;
    for (int ib = 0; ib < b.size(); ++ib) {
      if (b_to_a[ib] != -1) continue;
      Elem best = -1;
      for (auto [za, zb] : glue) {
        Elem via = a.monoid().plus(a.dist(ia, za), b.dist(zb, ib));
        if (best == -1 || via < best) best = via;
      }
      set_d(ia, b_pos[ib], best);
    }
  }
  // The least-sum cross distances always yield a metric; revalidate anyway.
  return MetricSpace(a.monoid(), std::move(points), std::move(flat));
}

std::optional<std::vector<int>> extend_to_automorphism(int n, const std::vector<Elem>& flat,
                                                       const std::vector<int>& constraint) {
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto d = [&](int i, int j) { return flat[i * n + j]; };
  // Constrained entries must themselves be consistent.
  for (int i = 0; i < n; ++i) {
    int v = constraint[i];
    if (v == PartialIsometry::kUnmapped) continue;
    if (v < 0 || v >= n || used[v]) return std::nullopt;
    for (int j = 0; j < n; ++j)
      if (map[j] != -1 && d(i, j) != d(v, map[j])) return std::nullopt;
    map[i] = v;
    used[v] = true;
  }
  std::vector<int> free_pos;
  for (int i = 0; i < n; ++i)
    if (map[i] == -1) free_pos.push_back(i);

  std::vector<size_t> choice(free_pos.size(), 0);
  size_t depth = 0;
  while (true) {
    if (depth == free_pos.size()) return map;
    int i = free_pos[depth];
    bool advanced = false;
    for (size_t& t = choice[depth]; t < static_cast<size_t>(n); ++t) {
      int cand = static_cast<int>(t);
      if (used[cand]) continue;
      bool ok = true;
      for (int j = 0; j < n && ok; ++j)
        if (map[j] != -1 && d(i, j) != d(cand, map[j])) ok = false;
      if (!ok) continue;
      map[i] = cand;
      used[cand] = true;
      ++t;
      ++depth;
      if (depth < free_pos.size()) choice[depth] = 0;
      advanced = true;
      break;
    }
    if (!advanced) {
      if (depth == 0) return std::nullopt;
      --depth;
      int prev = free_pos[depth];
      used[map[prev]] = false;
      map[prev] = -1;
    }
  }
}

std::optional<std::vector<int>> automorphism_extending(const MetricSpace& space,
                                                       const std::vector<int>& constraint) {
  return extend_to_automorphism(space.size(), space.flat_dist(), constraint);
}

std::optional<std::vector<int>> is_isometric(const MetricSpace& a, const MetricSpace& b) {
  if (a.monoid() != b.monoid() || a.size() != b.size()) return std::nullopt;
  std::vector<Elem> sa, sb;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) {
      sa.push_back(a.dist(i, j));
      sb.push_back(b.dist(i, j));
    }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  const int n = a.size();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (a.dist(i, j) != b.dist(t, map[j])) ok = false;
      if (!ok) continue;
      map[i] = t;
      used[t] = true;
      if (self(self, i + 1)) return true;
      used[t] = false;
      map[i] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

std::string uniquify_label(const std::string& base, const std::vector<std::string>& used) {
  auto taken = [&](const std::string& s) {
    return std::find(used.begin(), used.end(), s) != used.end();
  };
  if (!taken(base)) return base;
  std::string cand = base + "'";
  while (taken(cand)) cand += "'";
  return cand;
}

}  // namespace gms
