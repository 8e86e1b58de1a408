#include "gms/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace gms {

namespace {

// Translates a partial isometry of the base into a constraint on witness
// points through the embedding.
std::vector<int> witness_constraint(const EppaWitness& w, const PartialIsometry& phi) {
  std::vector<int> constraint(w.witness.size(), PartialIsometry::kUnmapped);
  for (int i = 0; i < w.base.size(); ++i)
    if (phi.map[i] != PartialIsometry::kUnmapped)
      constraint[w.embedding[i]] = w.embedding[phi.map[i]];
  return constraint;
}

bool certificate_valid(const EppaWitness& w, const PartialIsometry& phi,
                       const PartialIsometry& total) {
  if (!total.is_total() || static_cast<int>(total.map.size()) != w.witness.size()) return false;
  if (!is_partial_isometry(w.witness, w.witness, total)) return false;
  for (int i = 0; i < w.base.size(); ++i)
    if (phi.map[i] != PartialIsometry::kUnmapped &&
        total.map[w.embedding[i]] != w.embedding[phi.map[i]])
      return false;
  return true;
}

void check_witness_shape(const EppaWitness& w) {
  if (w.base.monoid() != w.witness.monoid())
    throw std::invalid_argument("base and witness must share a monoid");
  if (static_cast<int>(w.embedding.size()) != w.base.size())
    throw std::invalid_argument("embedding must cover the base");
  std::vector<bool> hit(w.witness.size(), false);
  for (int i = 0; i < w.base.size(); ++i) {
    int v = w.embedding[i];
    if (v < 0 || v >= w.witness.size() || hit[v])
      throw std::invalid_argument("embedding must be injective into the witness");
    hit[v] = true;
  }
  for (int i = 0; i < w.base.size(); ++i)
    for (int j = 0; j < w.base.size(); ++j)
      if (w.base.dist(i, j) != w.witness.dist(w.embedding[i], w.embedding[j]))
        throw std::invalid_argument("embedding is not distance-preserving");
}

}  // namespace

std::optional<PartialIsometry> extension_certificate(const EppaWitness& w,
                                                     const PartialIsometry& phi) {
  for (const auto& [stored_phi, total] : w.certificates)
    if (stored_phi == phi) return total;
  auto found = extend_to_automorphism(w.witness.size(), w.witness.flat_dist(),
                                      witness_constraint(w, phi));
  if (!found) return std::nullopt;
  return PartialIsometry{*found};
}

VerifyReport verify_witness(const EppaWitness& w) {
  check_witness_shape(w);
  std::vector<std::pair<PartialIsometry, PartialIsometry>> table = w.certificates;
  std::sort(table.begin(), table.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const PartialIsometry& phi : enumerate_partial_isometries(w.base)) {
    auto it = std::lower_bound(table.begin(), table.end(), phi,
                               [](const auto& entry, const PartialIsometry& key) {
                                 return entry.first < key;
                               });
    if (it != table.end() && it->first == phi) {
      if (!certificate_valid(w, phi, it->second)) return {false, phi};
      continue;
    }
    auto found = extend_to_automorphism(w.witness.size(), w.witness.flat_dist(),
                                        witness_constraint(w, phi));
    if (!found) return {false, phi};
  }
  return {true, std::nullopt};
}

namespace {

struct SearchState {
  const MetricSpace& base;
  const DistanceMonoid& monoid;
  std::vector<Elem> allowed;  // ascending
  const CandidateFilter& filter;
  const std::vector<PartialIsometry>& phis;
  int target_size = 0;
  std::vector<Elem> flat{};  // target_size x target_size, filled up to the frontier
  std::optional<EppaWitness> found{};
};

Elem entry(const SearchState& st, int i, int j) { return st.flat[i * st.target_size + j]; }

void set_entry(SearchState& st, int i, int j, Elem v) {
  st.flat[i * st.target_size + j] = v;
  st.flat[j * st.target_size + i] = v;
}

bool triangles_ok(const SearchState& st, int k, int j) {
  // All triangle orientations through the fresh entry (k, j) against entries
  // already present in row k.
  for (int i = 0; i < j; ++i) {
    Elem dij = entry(st, i, j), dik = entry(st, i, k), djk = entry(st, j, k);
    if (dij > st.monoid.plus(dik, djk)) return false;
    if (dik > st.monoid.plus(dij, djk)) return false;
    if (djk > st.monoid.plus(dij, dik)) return false;
  }
  return true;
}

bool candidate_has_extensions(SearchState& st, int n) {
  std::vector<Elem> sub(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sub[i * n + j] = entry(st, i, j);
  std::vector<std::pair<PartialIsometry, PartialIsometry>> certs;
  const int a = st.base.size();
  for (const PartialIsometry& phi : st.phis) {
    std::vector<int> constraint(n, PartialIsometry::kUnmapped);
    for (int i = 0; i < a; ++i)
      if (phi.map[i] != PartialIsometry::kUnmapped) constraint[i] = phi.map[i];
    auto total = extend_to_automorphism(n, sub, constraint);
    if (!total) return false;
    if (a <= kEagerCertificateLimit) certs.emplace_back(phi, PartialIsometry{*total});
  }
  std::vector<std::string> labels = st.base.points();
  for (int i = a; i < n; ++i)
    labels.push_back(uniquify_label("w" + std::to_string(i - a), labels));
  std::vector<int> embedding(a);
  for (int i = 0; i < a; ++i) embedding[i] = i;
  st.found = EppaWitness{st.base, MetricSpace(st.monoid, std::move(labels), std::move(sub)),
                         std::move(embedding), std::move(certs)};
  return true;
}

// Assigns row k (entries to points 0..k-1), then recurses to the next point.
// Rows are tried in ascending lexicographic order, so the first hit is the
// least extension matrix of its size.  `tight` tracks whether row k's
// base-facing prefix still equals row k-1's: fresh points are
// interchangeable, so their base-facing rows are kept lexicographically
// nondecreasing.
bool assign_row(SearchState& st, int n, int k, int j, bool tight) {
  if (j == k) {
    if (st.filter) {
      std::vector<Elem> sub(static_cast<size_t>(k + 1) * (k + 1));
      for (int i = 0; i <= k; ++i)
        for (int l = 0; l <= k; ++l) sub[i * (k + 1) + l] = entry(st, i, l);
      if (!st.filter(st.monoid, k + 1, sub)) return false;
    }
    if (k + 1 == n) return candidate_has_extensions(st, n);
    return assign_row(st, n, k + 1, 0, true);
  }
  const int a = st.base.size();
  const bool constrained = k > a && j < a;
  for (Elem v : st.allowed) {
    if (constrained && tight && v < entry(st, k - 1, j)) continue;
    const bool next_tight = constrained ? (tight && v == entry(st, k - 1, j)) : tight;
    set_entry(st, k, j, v);
    if (triangles_ok(st, k, j) && assign_row(st, n, k, j + 1, next_tight)) return true;
  }
  return false;
}

}  // namespace

WitnessResult brute_force_witness(const MetricSpace& base, int max_size,
                                  std::vector<Elem> allowed_spectrum,
                                  const CandidateFilter& filter) {
  std::sort(allowed_spectrum.begin(), allowed_spectrum.end());
  allowed_spectrum.erase(std::unique(allowed_spectrum.begin(), allowed_spectrum.end()),
                         allowed_spectrum.end());
  for (Elem e : allowed_spectrum)
    if (e <= 0 || e >= base.monoid().size())
      throw std::invalid_argument("allowed spectrum must consist of nonzero monoid elements");
  for (Elem e : base.spectrum())
    if (!std::binary_search(allowed_spectrum.begin(), allowed_spectrum.end(), e))
      throw std::invalid_argument("allowed spectrum must contain the base spectrum");

  auto phis = enumerate_partial_isometries(base);
  const int a = base.size();
  for (int n = std::max(a, 0); n <= max_size; ++n) {
    SearchState st{base, base.monoid(), allowed_spectrum, filter, phis};
    st.target_size = n;
    st.flat.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j) st.flat[i * n + j] = base.dist(i, j);
    bool ok;
    if (a == n) {
      ok = (!st.filter || st.filter(st.monoid, n, st.flat)) && candidate_has_extensions(st, n);
    } else {
      ok = assign_row(st, n, a, 0, true);
    }
    if (ok) return std::move(*st.found);
  }
  return SearchExhausted{max_size};
}

}  // namespace gms
