#include "gms/omission.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gms {

PartialSemimetric::PartialSemimetric(DistanceMonoid monoid, std::vector<std::string> points,
                                     std::vector<Elem> values)
    : monoid_(std::move(monoid)), points_(std::move(points)), delta_(std::move(values)) {
  const int n = size();
  if (static_cast<int>(delta_.size()) != n * n)
    throw std::invalid_argument("delta matrix has wrong size");
  {
    std::set<std::string> seen(points_.begin(), points_.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("point labels must be distinct");
  }
  for (int i = 0; i < n; ++i) {
    if (delta(i, i) != 0) throw std::invalid_argument("diagonal must be defined and zero");
    for (int j = 0; j < n; ++j) {
      Elem v = delta(i, j);
      if (v != kUndefined && (v < 0 || v >= monoid_.size()))
        throw std::invalid_argument("delta entry out of monoid range");
      if (v != delta(j, i))
        throw std::invalid_argument("delta must be symmetric, including undefinedness");
      if (i != j && v == 0)
        throw std::invalid_argument("defined off-diagonal values must be nonzero");
    }
  }
}

PartialSemimetric PartialSemimetric::total(const MetricSpace& space) {
  return PartialSemimetric(space.monoid(), space.points(), space.flat_dist());
}

std::vector<Elem> PartialSemimetric::positive_image() const {
  std::set<Elem> s;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (defined(i, j)) s.insert(delta(i, j));
  return {s.begin(), s.end()};
}

PartialSemimetric walk_pattern(const DistanceMonoid& m, Elem head,
                               const std::vector<Elem>& steps) {
  const int n = static_cast<int>(steps.size()) + 1;
  std::vector<std::string> points(n);
  std::vector<Elem> delta(static_cast<size_t>(n) * n, PartialSemimetric::kUndefined);
  for (int i = 0; i < n; ++i) {
    points[i] = "x" + std::to_string(i);
    delta[i * n + i] = 0;
  }
  auto set = [&](int i, int j, Elem v) { delta[i * n + j] = delta[j * n + i] = v; };
  for (size_t i = 0; i < steps.size(); ++i)
    set(static_cast<int>(i), static_cast<int>(i) + 1, steps[i]);
  set(0, n - 1, head);
  return PartialSemimetric(m, std::move(points), std::move(delta));
}

namespace {

std::optional<std::vector<int>> pattern_map_search(const PartialSemimetric& pattern,
                                                   const MetricSpace& host, bool injective) {
  if (pattern.monoid() != host.monoid())
    throw std::invalid_argument("pattern and host must share a monoid");
  const int n = pattern.size(), h = host.size();
  std::vector<int> map(n, -1);
  std::vector<bool> used(h, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int t = 0; t < h; ++t) {
      if (injective && used[t]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pattern.defined(i, j) && host.dist(t, map[j]) != pattern.delta(i, j)) ok = false;
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

}  // namespace

std::optional<std::vector<int>> weak_embedding_exists(const PartialSemimetric& pattern,
                                                      const MetricSpace& host) {
  return pattern_map_search(pattern, host, true);
}

std::optional<std::vector<int>> weak_homomorphism_exists(const PartialSemimetric& pattern,
                                                         const MetricSpace& host) {
  return pattern_map_search(pattern, host, false);
}

bool is_free(const MetricSpace& space, const ForbiddenClass& f) {
  for (const MetricSpace& member : f.members)
    if (weak_embedding_exists(PartialSemimetric::total(member), space)) return false;
  return true;
}

ForbiddenClass odd_perimeter_triangles(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("need an odd bound n >= 3");
  const int nstar = (n + 1) / 2;
  DistanceMonoid m = make_truncated(nstar);
  ForbiddenClass f;
  for (Elem a = 1; a <= nstar; ++a)
    for (Elem b = a; b <= nstar; ++b)
      for (Elem c = b; c <= nstar; ++c) {
        const int perimeter = a + b + c;
        if (perimeter > n || perimeter % 2 == 0) continue;
        if (c > a + b) continue;  // not a metric triangle
        f.members.push_back(
            MetricSpace(m, {"t0", "t1", "t2"}, std::vector<Elem>{0, a, b, a, 0, c, b, c, 0}));
      }
  for (Elem e = 1; e <= nstar; ++e) f.spectrum_bound.push_back(e);
  return f;
}

namespace {

// Path-first enumeration: pick which base pairs stay undefined, grow a
// distance path for each (walks may pass through base points, reuse fresh
// points, or mint new ones), then optionally sprinkle extra defined pairs on
// fresh-touching slots.  Results are deduplicated by a canonical form that
// fixes the base pointwise and permutes fresh points.
struct ExtensionEnumerator {
  const MetricSpace& base;
  const DistanceMonoid& m;
  std::vector<Elem> s;  // ascending
  int max_points;       // total carrier cap
  int step_cap;         // per-path step bound
  bool with_extras;     // also enumerate defined pairs beyond path steps

  int a = 0;                  // base size
  int n = 0;                  // current carrier size
  int cap_n = 0;              // matrix stride
  std::vector<Elem> delta{};  // cap_n x cap_n working matrix
  std::vector<std::pair<int, int>> undefined_pairs{};  // pathed base pairs
  std::vector<PathRecord> family{};
  std::map<std::vector<Elem>, PathExtension> out{};  // canonical key -> extension

  Elem& at(int i, int j) { return delta[i * cap_n + j]; }
  Elem get(int i, int j) const { return delta[i * cap_n + j]; }

  void set_pair(int i, int j, Elem v) {
    at(i, j) = v;
    at(j, i) = v;
  }

  std::vector<Elem> canonical_key() const;
  void record();
  void enumerate_extras(size_t idx, const std::vector<std::pair<int, int>>& free_pairs);
  void paths(size_t pair_idx);
  void walk(size_t pair_idx, int current, Elem sum, int steps, std::vector<int>& path);
  void run();
  bool injective_family_exists(const PartialSemimetric& carrier) const;
};

std::vector<Elem> ExtensionEnumerator::canonical_key() const {
  std::vector<int> perm;
  for (int p = a; p < n; ++p) perm.push_back(p);
  std::vector<Elem> best;
  bool have = false;
  do {
    std::vector<int> order(n);
    for (int i = 0; i < a; ++i) order[i] = i;
    for (size_t i = 0; i < perm.size(); ++i) order[a + i] = perm[i];
    std::vector<Elem> enc;
    enc.push_back(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) enc.push_back(get(order[i], order[j]));
    if (!have || enc < best) {
      best = std::move(enc);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void ExtensionEnumerator::record() {
  std::vector<Elem> key = canonical_key();
  if (out.count(key)) return;
  std::vector<std::string> labels = base.points();
  for (int p = a; p < n; ++p)
    labels.push_back(uniquify_label("q" + std::to_string(p - a + 1), labels));
  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * n + j] = get(i, j);
  PartialSemimetric carrier(m, std::move(labels), std::move(flat));
  bool injective = injective_family_exists(carrier);
  out.emplace(std::move(key), PathExtension{base, std::move(carrier), family, injective});
}

void ExtensionEnumerator::enumerate_extras(size_t idx,
                                           const std::vector<std::pair<int, int>>& free_pairs) {
  if (idx == free_pairs.size()) {
    record();
    return;
  }
  auto [i, j] = free_pairs[idx];
  enumerate_extras(idx + 1, free_pairs);  // leave the pair undefined
  for (Elem v : s) {
    set_pair(i, j, v);
    enumerate_extras(idx + 1, free_pairs);
  }
  set_pair(i, j, PartialSemimetric::kUndefined);
}

void ExtensionEnumerator::paths(size_t pair_idx) {
  if (pair_idx == undefined_pairs.size()) {
    if (!with_extras) {
      record();
      return;
    }
    std::vector<std::pair<int, int>> free_pairs;
    for (int i = 0; i < n; ++i)
      for (int j = std::max(i + 1, a); j < n; ++j)
        if (get(i, j) == PartialSemimetric::kUndefined) free_pairs.emplace_back(i, j);
    enumerate_extras(0, free_pairs);
    return;
  }
  auto [from, to] = undefined_pairs[pair_idx];
  std::vector<int> path{from};
  walk(pair_idx, from, 0, 0, path);
}

void ExtensionEnumerator::walk(size_t pair_idx, int current, Elem sum, int steps,
                               std::vector<int>& path) {
  auto [from, to] = undefined_pairs[pair_idx];
  const Elem target = base.dist(from, to);
  if (current == to && steps > 0 && sum == target) {
    family.push_back(PathRecord{from, to, path});
    paths(pair_idx + 1);
    family.pop_back();
  }
  if (steps >= step_cap) return;
  const int grow_limit = n < max_points ? n + 1 : n;
  for (int next = 0; next < grow_limit; ++next) {
    if (next == current) continue;  // stutter steps never change the carrier
    const bool grow = next == n;
    if (grow) {
      for (int q = 0; q <= n; ++q) at(n, q) = at(q, n) = PartialSemimetric::kUndefined;
      at(n, n) = 0;
      ++n;
    }
    const Elem existing = get(current, next);
    if (existing == PartialSemimetric::kUndefined && current < a && next < a) {
      // Pathed base pairs must stay undefined.
      if (grow) --n;
      continue;
    }
    const bool choose = existing == PartialSemimetric::kUndefined;
    for (Elem label : s) {
      if (!choose && label != existing) continue;
      Elem next_sum = steps == 0 ? label : m.plus(sum, label);
      if (next_sum > target) {
        if (!choose) break;
        continue;  // sums never decrease
      }
      if (choose) set_pair(current, next, label);
      path.push_back(next);
      walk(pair_idx, next, next_sum, steps + 1, path);
      path.pop_back();
      if (choose) set_pair(current, next, PartialSemimetric::kUndefined);
      if (!choose) break;
    }
    if (grow) --n;
  }
}

void ExtensionEnumerator::run() {
  std::vector<std::pair<int, int>> base_pairs;
  for (int i = 0; i < a; ++i)
    for (int j = i + 1; j < a; ++j) base_pairs.emplace_back(i, j);
  const size_t npairs = base_pairs.size();
  for (size_t mask = 0; mask < (size_t{1} << npairs); ++mask) {
    n = a;
    delta.assign(static_cast<size_t>(cap_n) * cap_n, PartialSemimetric::kUndefined);
    for (int i = 0; i < a; ++i) at(i, i) = 0;
    undefined_pairs.clear();
    for (size_t t = 0; t < npairs; ++t) {
      auto [i, j] = base_pairs[t];
      if (mask & (size_t{1} << t))
        undefined_pairs.emplace_back(i, j);
      else
        set_pair(i, j, base.dist(i, j));
    }
    family.clear();
    paths(0);
  }
}

bool ExtensionEnumerator::injective_family_exists(const PartialSemimetric& carrier) const {
  const int size = carrier.size();
  // All injective exact-sum paths through defined pairs, per pathed pair.
  std::vector<std::vector<std::vector<int>>> options(undefined_pairs.size());
  for (size_t t = 0; t < undefined_pairs.size(); ++t) {
    auto [from, to] = undefined_pairs[t];
    const Elem target = base.dist(from, to);
    std::vector<int> path{from};
    std::vector<bool> on_path(size, false);
    on_path[from] = true;
    auto rec = [&](auto&& self, int current, Elem sum, int steps) -> void {
      if (current == to && steps > 0 && sum == target) options[t].push_back(path);
      for (int next = 0; next < size; ++next) {
        if (on_path[next] || !carrier.defined(current, next) || next == current) continue;
        Elem label = carrier.delta(current, next);
        Elem next_sum = steps == 0 ? label : m.plus(sum, label);
        if (next_sum > target) continue;
        on_path[next] = true;
        path.push_back(next);
        self(self, next, next_sum, steps + 1);
        path.pop_back();
        on_path[next] = false;
      }
    };
    rec(rec, from, 0, 0);
    if (options[t].empty()) return false;
  }
  // One path per pair must jointly cover every fresh point.
  std::vector<bool> covered(size, false);
  auto cover = [&](auto&& self, size_t t) -> bool {
    if (t == options.size()) {
      for (int p = a; p < size; ++p)
        if (!covered[p]) return false;
      return true;
    }
    for (const auto& path : options[t]) {
      std::vector<int> newly;
      for (int v : path)
        if (!covered[v]) {
          covered[v] = true;
          newly.push_back(v);
        }
      if (self(self, t + 1)) return true;
      for (int v : newly) covered[v] = false;
    }
    return false;
  };
  return cover(cover, 0);
}

std::vector<PathExtension> enumerate_extensions_impl(const MetricSpace& base,
                                                     std::vector<Elem> s_set,
                                                     std::optional<int> size_cap,
                                                     bool with_extras) {
  std::sort(s_set.begin(), s_set.end());
  s_set.erase(std::unique(s_set.begin(), s_set.end()), s_set.end());
  for (Elem e : s_set)
    if (e <= 0 || e >= base.monoid().size())
      throw std::invalid_argument("s_set entries must be nonzero monoid elements");
  for (Elem e : base.spectrum())
    if (!std::binary_search(s_set.begin(), s_set.end(), e))
      throw std::invalid_argument("s_set must contain the base spectrum");

  const DistanceMonoid& m = base.monoid();
  Submonoid sub = generated_submonoid(m, s_set);
  if (archimedean_classes(sub.monoid).classes.size() > 1)
    throw std::invalid_argument("s_set generates a non-archimedean submonoid");

  if (s_set.empty())  // no labels: only a base without pairs gets here
    return {PathExtension{base, PartialSemimetric::total(base), {}, true}};

  const int a = base.size();
  int step_cap, max_points;
  if (base.has_dominated_spectrum()) {
    Elem max_d = 0;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j) max_d = std::max(max_d, base.dist(i, j));
    const Elem dominator = max_d + 1;  // least element above every distance
    const Elem smin = s_set.front();
    int k = 1;
    Elem multiple = smin;
    while (multiple < dominator) {
      Elem next = m.plus(multiple, smin);
      if (next == multiple) throw std::logic_error("multiples stabilized below the dominator");
      multiple = next;
      ++k;
    }
    step_cap = k - 1;
    max_points = a + std::max(0, step_cap - 1) * (a * (a - 1) / 2);
    if (size_cap) max_points = std::min(max_points, *size_cap);
  } else if (size_cap) {
    // Truncated enumeration: carriers of at most size_cap points, paths of at
    // most size_cap - |base| + 1 steps.
    max_points = std::max(*size_cap, a);
    step_cap = std::max(1, max_points - a + 1);
  } else {
    throw std::invalid_argument(
        "base spectrum is not dominated; pass a size cap for a truncated enumeration");
  }

  ExtensionEnumerator en{base, m, s_set, max_points, step_cap, with_extras};
  en.a = a;
  en.cap_n = std::max(max_points, std::max(a, 1));
  en.run();

  std::vector<PathExtension> result;
  result.reserve(en.out.size());
  for (auto& [key, ext] : en.out) result.push_back(std::move(ext));
  return result;  // map order: carrier size, then canonical encoding
}

}  // namespace

std::vector<PathExtension> enumerate_path_extensions(const MetricSpace& base,
                                                     std::vector<Elem> s_set,
                                                     std::optional<int> size_cap) {
  return enumerate_extensions_impl(base, std::move(s_set), size_cap, true);
}

ClosureReport check_closed_under_path_extensions(const ForbiddenClass& f,
                                                 const std::vector<MetricSpace>& hosts) {
  for (size_t mi = 0; mi < f.members.size(); ++mi) {
    const MetricSpace& member = f.members[mi];
    std::optional<int> cap;
    if (!member.has_dominated_spectrum())
      cap = member.size() + 2;  // truncated falsifier for saturating spectra
    // Extra defined pairs only constrain homomorphisms further, so searching
    // the step-minimal extensions is enough to refute closure.
    auto extensions = enumerate_extensions_impl(member, f.spectrum_bound, cap, false);
    for (const PathExtension& ext : extensions)
      for (size_t hi = 0; hi < hosts.size(); ++hi)
        if (auto hom = weak_homomorphism_exists(ext.carrier, hosts[hi]))
          return {false,
                  ClosureCounterexample{static_cast<int>(mi), ext, static_cast<int>(hi), *hom}};
  }
  return {true, std::nullopt};
}

ParityReport verify_parity(const MetricSpace& space, int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("need an odd bound n >= 3");
  const int nstar = (n + 1) / 2;
  if (space.monoid() != make_truncated(nstar))
    throw std::invalid_argument("space must live over the truncated monoid {0,...,(n+1)/2}");

  const int sz = space.size();
  std::vector<int> cycle;
  // Cyclic sequences with consecutive points distinct; dropping stutters never
  // changes a sum, so this is exhaustive over all non-injective cycles.  Each
  // step adds at least 1, so length is bounded by n.
  auto rec = [&](auto&& self, int anchor, int current, int sum, int len) -> bool {
    if (len >= 3 && current != anchor) {
      int closing = space.dist(current, anchor);
      if (sum + closing <= n && (sum + closing) % 2 == 1) return true;
    }
    if (len >= n) return false;
    for (int next = 0; next < sz; ++next) {
      if (next == current) continue;
      int step = space.dist(current, next);
      if (sum + step >= n) continue;  // closing still needs >= 1
      cycle.push_back(next);
      if (self(self, anchor, next, sum + step, len + 1)) return true;
      cycle.pop_back();
    }
    return false;
  };
  for (int anchor = 0; anchor < sz; ++anchor) {
    cycle = {anchor};
    if (rec(rec, anchor, anchor, 0, 1)) return {false, cycle};
  }
  return {true, {}};
}

WitnessResult free_witness_search(const MetricSpace& base, const ForbiddenClass& f,
                                  int max_size) {
  if (!is_free(base, f)) throw std::invalid_argument("base is not free of the forbidden class");
  std::vector<Elem> allowed;
  for (Elem e = 1; e < base.monoid().size(); ++e) allowed.push_back(e);
  // A member embedding into a partial candidate embeds into every completion,
  // so pruning on prefixes is sound.
  CandidateFilter filter = [&f](const DistanceMonoid&, int n, const std::vector<Elem>& flat) {
    for (const MetricSpace& member : f.members) {
      const int k = member.size();
      if (k > n) continue;
      std::vector<int> map(k, -1);
      std::vector<bool> used(n, false);
      auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (int t = 0; t < n; ++t) {
          if (used[t]) continue;
          bool ok = true;
          for (int j = 0; j < i && ok; ++j)
            if (member.dist(i, j) != flat[t * n + map[j]]) ok = false;
          if (!ok) continue;
          map[i] = t;
          used[t] = true;
          if (self(self, i + 1)) return true;
          used[t] = false;
        }
        return false;
      };
      if (rec(rec, 0)) return false;  // member embeds: prune
    }
    return true;
  };
  WitnessResult result = brute_force_witness(base, max_size, allowed, filter);
  if (auto* w = std::get_if<EppaWitness>(&result))
    if (!is_free(w->witness, f)) throw std::logic_error("search produced a non-free witness");
  return result;
}

}  // namespace gms
