#include "gms/semiarch.hpp"

#include <algorithm>
#include <stdexcept>

namespace gms {

namespace {

std::vector<Elem> nonzero_ambient(const Submonoid& sub) {
  std::vector<Elem> out;
  for (size_t i = 1; i < sub.inclusion.size(); ++i) out.push_back(sub.inclusion[i]);
  return out;
}

}  // namespace

ClassDecomposition class_decomposition(const MetricSpace& space) {
  std::vector<Elem> spec = space.spectrum();
  if (spec.empty())
    throw std::invalid_argument("class decomposition needs at least one nonzero distance");
  Submonoid sub = generated_submonoid(space.monoid(), spec);
  if (!is_semi_archimedean(sub.monoid))
    throw std::invalid_argument("spectrum generates a non-semi-archimedean submonoid");
  ArchClassPartition part = archimedean_classes(sub.monoid);

  std::vector<Elem> lower{0}, upper;
  const int top = static_cast<int>(part.classes.size()) - 1;
  for (int c = 0; c <= top; ++c)
    for (Elem e : part.classes[c])
      (c == top ? upper : lower).push_back(sub.inclusion[e]);

  auto in_upper = [&](Elem ambient) {
    return std::find(upper.begin(), upper.end(), ambient) != upper.end();
  };

  const int n = space.size();
  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> classes;
  for (int p = 0; p < n; ++p) {
    if (class_of[p] != -1) continue;
    int c = static_cast<int>(classes.size());
    classes.push_back({p});
    class_of[p] = c;
    for (int q = p + 1; q < n; ++q)
      if (class_of[q] == -1 && !in_upper(space.dist(p, q))) {
        class_of[q] = c;
        classes[c].push_back(q);
      }
  }
  // The relation "distance below the top class" must be an equivalence.
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if ((class_of[p] == class_of[q]) == in_upper(space.dist(p, q)))
        throw std::logic_error("below-top relation is not an equivalence");

  const int m = static_cast<int>(classes.size());
  std::vector<Elem> rho(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Elem s = space.dist(classes[i][0], classes[j][0]);
      for (int p : classes[i])
        for (int q : classes[j])
          if (space.dist(p, q) != s)
            throw std::logic_error("cross-class distances are not constant");
      rho[i * m + j] = rho[j * m + i] = s;
    }
  std::vector<std::string> qlabels(m);
  for (int i = 0; i < m; ++i) qlabels[i] = "c" + std::to_string(i);
  MetricSpace quotient(space.monoid(), std::move(qlabels), std::move(rho));
  return ClassDecomposition{space, std::move(lower), std::move(upper), std::move(classes),
                            std::move(quotient)};
}

PaddedSpace pad_classes(const ClassDecomposition& dec) {
  const MetricSpace& A = dec.space;
  const int n = A.size();
  const int m = static_cast<int>(dec.classes.size());

  std::vector<int> class_of(n, -1);
  for (int c = 0; c < m; ++c)
    for (int p : dec.classes[c]) class_of[p] = c;

  Elem s = -1;  // largest below-top distance in use
  for (Elem e : A.spectrum())
    if (std::find(dec.lower.begin(), dec.lower.end(), e) != dec.lower.end()) s = std::max(s, e);
  if (s == -1) {
    std::vector<int> identity(n);
    for (int p = 0; p < n; ++p) identity[p] = p;
    return PaddedSpace{A, dec, std::move(identity)};
  }

  // d0 keeps within-class distances and flattens cross-class ones to s.
  std::vector<Elem> d0(static_cast<size_t>(n) * n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (p != q) d0[p * n + q] = class_of[p] == class_of[q] ? A.dist(p, q) : s;

  // Block c is a full copy of (A, d0); slot p of block c is the original
  // point p when p belongs to class c, and a fresh point otherwise.
  const int total = m * n;
  std::vector<std::string> labels(total);
  std::vector<std::string> used = A.points();  // originals stay reserved
  for (int c = 0; c < m; ++c)
    for (int p = 0; p < n; ++p) {
      if (class_of[p] == c) {
        labels[c * n + p] = A.point(p);
      } else {
        std::string fresh = uniquify_label(A.point(p) + "@" + std::to_string(c), used);
        used.push_back(fresh);
        labels[c * n + p] = fresh;
      }
    }
  std::vector<Elem> flat(static_cast<size_t>(total) * total, 0);
  auto idx = [&](int c, int p) { return c * n + p; };
  for (int c = 0; c < m; ++c)
    for (int c2 = 0; c2 < m; ++c2)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (c == c2) {
            flat[idx(c, p) * total + idx(c2, q)] = d0[p * n + q];
          } else {
            flat[idx(c, p) * total + idx(c2, q)] = dec.cross_constant(c, c2);
          }
        }
  MetricSpace padded(A.monoid(), std::move(labels), std::move(flat));

  std::vector<int> base_embedding(n);
  for (int p = 0; p < n; ++p) base_embedding[p] = idx(class_of[p], p);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (padded.dist(base_embedding[p], base_embedding[q]) != A.dist(p, q))
        throw std::logic_error("padding does not embed the original space");

  ClassDecomposition padded_dec = class_decomposition(padded);
  if (static_cast<int>(padded_dec.classes.size()) != m)
    throw std::logic_error("padding changed the number of classes");
  return PaddedSpace{std::move(padded), std::move(padded_dec), std::move(base_embedding)};
}

WitnessResult semi_archimedean_witness(const MetricSpace& base, const BaseCaseFn& base_case) {
  Submonoid closure = generated_submonoid(base.monoid(), base.spectrum());
  if (!is_semi_archimedean(closure.monoid))
    throw std::invalid_argument("spectrum generates a non-semi-archimedean submonoid");
  ArchClassPartition part = archimedean_classes(closure.monoid);
  if (part.classes.size() <= 1) return base_case(base, nonzero_ambient(closure));

  ClassDecomposition dec = class_decomposition(base);
  PaddedSpace pad = pad_classes(dec);
  const MetricSpace& Astar = pad.space;
  const int m = static_cast<int>(pad.decomposition.classes.size());
  const int block_size = Astar.size() / m;

  // Quotient witness over the top class.
  WitnessResult quot_res = base_case(pad.decomposition.quotient, pad.decomposition.upper);
  if (std::holds_alternative<SearchExhausted>(quot_res)) return quot_res;
  EppaWitness quot = std::get<EppaWitness>(std::move(quot_res));
  const int mstar = quot.witness.size();

  // Recursive witness for the first block; every block is a copy of it.
  std::vector<int> first_block(block_size);
  for (int p = 0; p < block_size; ++p) first_block[p] = p;
  MetricSpace block_space = Astar.restriction(first_block);
  WitnessResult rec_res = semi_archimedean_witness(block_space, base_case);
  if (std::holds_alternative<SearchExhausted>(rec_res)) return rec_res;
  EppaWitness rec = std::get<EppaWitness>(std::move(rec_res));
  const MetricSpace& B1 = rec.witness;
  const int b = B1.size();

  // Assemble B: one copy of B1 per quotient-witness point, cross distances
  // from the quotient witness.  Slot p of block v corresponds to B1 point p.
  std::vector<int> block_of_class(m);
  for (int i = 0; i < m; ++i) block_of_class[i] = quot.embedding[i];
  std::vector<int> class_of_block(mstar, -1);
  for (int i = 0; i < m; ++i) class_of_block[block_of_class[i]] = i;

  const int total = mstar * b;
  std::vector<std::string> labels(total);
  std::vector<std::string> used = Astar.points();  // embedded labels stay reserved
  for (int v = 0; v < mstar; ++v) {
    const int cls = class_of_block[v];
    std::vector<int> slot_point(b, -1);
    if (cls != -1)
      for (int p = 0; p < block_size; ++p) slot_point[rec.embedding[p]] = cls * block_size + p;
    for (int q = 0; q < b; ++q) {
      if (slot_point[q] != -1) {
        labels[v * b + q] = Astar.point(slot_point[q]);
      } else {
        std::string fresh = uniquify_label(B1.point(q) + "#" + std::to_string(v), used);
        used.push_back(fresh);
        labels[v * b + q] = fresh;
      }
    }
  }
  std::vector<Elem> flat(static_cast<size_t>(total) * total, 0);
  for (int v = 0; v < mstar; ++v)
    for (int w = 0; w < mstar; ++w)
      for (int p = 0; p < b; ++p)
        for (int q = 0; q < b; ++q)
          flat[(v * b + p) * static_cast<size_t>(total) + (w * b + q)] =
              v == w ? B1.dist(p, q) : quot.witness.dist(v, w);
  MetricSpace big(base.monoid(), std::move(labels), std::move(flat));

  std::vector<int> embedding(base.size());
  std::vector<int> class_of_point(base.size(), -1);
  for (int c = 0; c < m; ++c)
    for (int p : dec.classes[c])
      class_of_point[p] = c;
  for (int p = 0; p < base.size(); ++p) {
    int padded_index = pad.base_embedding[p];
    int cls = padded_index / block_size;
    int slot = padded_index % block_size;
    embedding[p] = block_of_class[cls] * b + rec.embedding[slot];
  }

  EppaWitness result{base, std::move(big), std::move(embedding), {}};

  if (base.size() <= kEagerCertificateLimit) {
    for (const PartialIsometry& phi : enumerate_partial_isometries(base)) {
      // Classes touched by the domain map to well-defined image classes.
      std::vector<int> f(m, PartialIsometry::kUnmapped);
      for (int p = 0; p < base.size(); ++p) {
        if (phi.map[p] == PartialIsometry::kUnmapped) continue;
        int ci = class_of_point[p], cj = class_of_point[phi.map[p]];
        if (f[ci] == PartialIsometry::kUnmapped)
          f[ci] = cj;
        else if (f[ci] != cj)
          throw std::logic_error("partial isometry maps one class into two");
      }
      PartialIsometry f_phi{f};
      if (!is_partial_isometry(dec.quotient, dec.quotient, f_phi))
        throw std::logic_error("induced class map is not a partial isometry of the quotient");
      auto fstar = extension_certificate(quot, f_phi);
      if (!fstar) throw std::logic_error("quotient witness lacks an extension certificate");

      // Per-block maps: inside touched blocks conjugate the restriction of
      // phi into the first block and extend there; untouched blocks shift by
      // the slot-identity copy maps.
      std::vector<int> total_map(static_cast<size_t>(mstar) * b, -1);
      for (int v = 0; v < mstar; ++v) {
        const int w = fstar->map[v];
        const int cls = class_of_block[v];
        bool touched = false;
        std::vector<int> chi(block_size, PartialIsometry::kUnmapped);
        if (cls != -1 && f[cls] != PartialIsometry::kUnmapped) {
          touched = true;
          for (int p : dec.classes[cls])
            if (phi.map[p] != PartialIsometry::kUnmapped) {
              int slot = pad.base_embedding[p] % block_size;
              int image_slot = pad.base_embedding[phi.map[p]] % block_size;
              chi[slot] = image_slot;
            }
        }
        if (touched) {
          auto chi_hat = extension_certificate(rec, PartialIsometry{chi});
          if (!chi_hat) throw std::logic_error("block witness lacks an extension certificate");
          for (int q = 0; q < b; ++q) total_map[v * b + q] = w * b + chi_hat->map[q];
        } else {
          for (int q = 0; q < b; ++q) total_map[v * b + q] = w * b + q;
        }
      }
      result.certificates.emplace_back(phi, PartialIsometry{std::move(total_map)});
    }
  }

  VerifyReport report = verify_witness(result);
  if (!report.ok) throw std::logic_error("assembled witness failed verification");
  return result;
}

}  // namespace gms
