#include "gms/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace gms {

using nlohmann::json;

namespace {

int positive_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<int>() < 1)
    throw std::invalid_argument(std::string("expected a positive integer field '") + key + "'");
  return j[key].get<int>();
}

int label_index(const std::vector<std::string>& labels, const std::string& label) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown point label '" + label + "'");
}

}  // namespace

json monoid_to_json(const DistanceMonoid& m) {
  const int n = m.size() - 1;
  if (n >= 1) {
    if (m == make_truncated(n)) return json{{"kind", "truncated"}, {"n", n}};
    if (m == make_max_chain(n)) return json{{"kind", "max_chain"}, {"n", n}};
  }
  return json{{"kind", "table"}, {"labels", m.labels()}, {"plus", m.plus_table()}};
}

DistanceMonoid monoid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("monoid JSON needs a 'kind' field");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "truncated") return make_truncated(positive_int(j, "n"));
  if (kind == "max_chain") return make_max_chain(positive_int(j, "n"));
  if (kind == "table") {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    auto plus = j.at("plus").get<DistanceMonoid::Table>();
    return DistanceMonoid(std::move(labels), std::move(plus));
  }
  throw std::invalid_argument("unknown monoid kind '" + kind + "'");
}

json monoid_violation_to_json(const MonoidViolation& v, const std::vector<std::string>& labels) {
  json witness = json::array();
  for (Elem e : v.witness) witness.push_back(labels[e]);
  return json{{"axiom", to_string(v.axiom)}, {"witness", witness}};
}

json space_violation_to_json(const SpaceViolation& v, const std::vector<std::string>& points) {
  json witness = json::array();
  for (int p : v.witness) witness.push_back(points[p]);
  return json{{"axiom", to_string(v.axiom)}, {"witness", witness}};
}

json space_to_json(const MetricSpace& s) {
  json dist = json::array();
  for (int i = 0; i < s.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.size(); ++j) row.push_back(s.dist(i, j));
    dist.push_back(std::move(row));
  }
  return json{{"monoid", monoid_to_json(s.monoid())}, {"points", s.points()}, {"dist", dist}};
}

MetricSpace space_from_json(const json& j) {
  DistanceMonoid m = monoid_from_json(j.at("monoid"));
  auto points = j.at("points").get<std::vector<std::string>>();
  auto dist = j.at("dist").get<std::vector<std::vector<Elem>>>();
  return MetricSpace(std::move(m), std::move(points), dist);
}

json labeled_graph_to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (auto [i, j, label] : g.edges())
    edges.push_back(json::array({g.vertices()[i], g.vertices()[j], label}));
  return json{
      {"monoid", monoid_to_json(g.monoid())}, {"vertices", g.vertices()}, {"edges", edges}};
}

LabeledGraph labeled_graph_from_json(const json& j) {
  DistanceMonoid m = monoid_from_json(j.at("monoid"));
  auto vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::tuple<int, int, Elem>> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("edges must be [from, to, labelIndex] triples");
    edges.emplace_back(label_index(vertices, e[0].get<std::string>()),
                       label_index(vertices, e[1].get<std::string>()), e[2].get<Elem>());
  }
  return LabeledGraph(std::move(m), std::move(vertices), std::move(edges));
}

json partial_map_to_json(const PartialIsometry& phi, const std::vector<std::string>& source,
                         const std::vector<std::string>& target) {
  json out = json::object();
  for (size_t i = 0; i < phi.map.size(); ++i)
    if (phi.map[i] != PartialIsometry::kUnmapped) out[source[i]] = target[phi.map[i]];
  return out;
}

PartialIsometry partial_map_from_json(const json& j, const std::vector<std::string>& source,
                                      const std::vector<std::string>& target) {
  PartialIsometry phi{std::vector<int>(source.size(), PartialIsometry::kUnmapped)};
  for (auto it = j.begin(); it != j.end(); ++it)
    phi.map[label_index(source, it.key())] = label_index(target, it.value().get<std::string>());
  return phi;
}

json witness_to_json(const EppaWitness& w) {
  json embedding = json::object();
  for (int i = 0; i < w.base.size(); ++i)
    embedding[w.base.point(i)] = w.witness.point(w.embedding[i]);
  json certificates = json::array();
  for (const auto& [phi, total] : w.certificates)
    certificates.push_back(
        json{{"partial", partial_map_to_json(phi, w.base.points(), w.base.points())},
             {"total", partial_map_to_json(total, w.witness.points(), w.witness.points())}});
  return json{{"base", space_to_json(w.base)},
              {"witness", space_to_json(w.witness)},
              {"embedding", embedding},
              {"certificates", certificates}};
}

EppaWitness witness_from_json(const json& j) {
  EppaWitness w{space_from_json(j.at("base")), space_from_json(j.at("witness")), {}, {}};
  const json& embedding = j.at("embedding");
  w.embedding.assign(w.base.size(), -1);
  for (int i = 0; i < w.base.size(); ++i) {
    const std::string& label = w.base.point(i);
    if (!embedding.contains(label))
      throw std::invalid_argument("embedding misses base point '" + label + "'");
    w.embedding[i] = label_index(w.witness.points(), embedding[label].get<std::string>());
  }
  if (j.contains("certificates"))
    for (const json& c : j.at("certificates"))
      w.certificates.emplace_back(
          partial_map_from_json(c.at("partial"), w.base.points(), w.base.points()),
          partial_map_from_json(c.at("total"), w.witness.points(), w.witness.points()));
  return w;
}

json forbidden_class_to_json(const ForbiddenClass& f) {
  json members = json::array();
  for (const MetricSpace& s : f.members) members.push_back(space_to_json(s));
  return json{{"members", members}, {"spectrum_bound", f.spectrum_bound}};
}

ForbiddenClass forbidden_class_from_json(const json& j) {
  ForbiddenClass f;
  for (const json& s : j.at("members")) f.members.push_back(space_from_json(s));
  f.spectrum_bound = j.at("spectrum_bound").get<std::vector<Elem>>();
  return f;
}

json sigma_system_to_json(const SigmaSystem& sys) {
  return json{{"monoid", monoid_to_json(sys.monoid)},
              {"s_set", sys.s_set},
              {"tuples", sys.tuples},
              {"length_bound", sys.length_bound}};
}

SigmaSystem sigma_system_from_json(const json& j) {
  SigmaSystem sys{monoid_from_json(j.at("monoid")), j.at("s_set").get<std::vector<Elem>>(),
                  j.at("tuples").get<std::vector<std::vector<Elem>>>(),
                  j.at("length_bound").get<int>()};
  return sys;
}

json path_extension_to_json(const PathExtension& e) {
  json delta = json::array();
  const PartialSemimetric& c = e.carrier;
  for (int i = 0; i < c.size(); ++i)
    for (int j = i + 1; j < c.size(); ++j)
      if (c.defined(i, j)) delta.push_back(json::array({c.point(i), c.point(j), c.delta(i, j)}));
  json paths = json::object();
  for (const PathRecord& p : e.paths) {
    json vertices = json::array();
    for (int v : p.vertices) vertices.push_back(c.point(v));
    paths[c.point(p.from) + "|" + c.point(p.to)] = vertices;
  }
  return json{{"base", space_to_json(e.base)},
              {"points", c.points()},
              {"delta", delta},
              {"paths", paths},
              {"injective_paths", e.injective_paths}};
}

PathExtension path_extension_from_json(const json& j) {
  MetricSpace base = space_from_json(j.at("base"));
  auto points = j.at("points").get<std::vector<std::string>>();
  const int n = static_cast<int>(points.size());
  std::vector<Elem> delta(static_cast<size_t>(n) * n, PartialSemimetric::kUndefined);
  for (int i = 0; i < n; ++i) delta[i * n + i] = 0;
  for (const json& t : j.at("delta")) {
    int a = label_index(points, t[0].get<std::string>());
    int b = label_index(points, t[1].get<std::string>());
    delta[a * n + b] = delta[b * n + a] = t[2].get<Elem>();
  }
  PartialSemimetric carrier(base.monoid(), points, std::move(delta));
  std::vector<PathRecord> paths;
  const json& jp = j.at("paths");
  for (auto it = jp.begin(); it != jp.end(); ++it) {
    PathRecord rec;
    std::vector<int> vertices;
    for (const json& v : it.value()) vertices.push_back(label_index(points, v.get<std::string>()));
    rec.vertices = std::move(vertices);
    rec.from = rec.vertices.front();
    rec.to = rec.vertices.back();
    paths.push_back(std::move(rec));
  }
  return PathExtension{std::move(base), std::move(carrier), std::move(paths),
                       j.value("injective_paths", false)};
}

json saturation_report_to_json(const SaturationReport& r) {
  return json{{"start", space_to_json(r.start)},
              {"result", space_to_json(r.result)},
              {"depth", r.depth},
              {"realized_per_level", r.realized_per_level},
              {"budget_exhausted", r.budget_exhausted}};
}

SaturationReport saturation_report_from_json(const json& j) {
  SaturationReport r{space_from_json(j.at("start")), space_from_json(j.at("result")),
                     j.at("depth").get<int>(),
                     j.at("realized_per_level").get<std::vector<int>>(),
                     j.at("budget_exhausted").get<bool>()};
  return r;
}

std::string space_to_dot(const MetricSpace& s, bool omit_max) {
  std::ostringstream out;
  out << "graph space {\n";
  for (int i = 0; i < s.size(); ++i) out << "  \"" << s.point(i) << "\";\n";
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j) {
      if (omit_max && s.dist(i, j) == s.monoid().max_element()) continue;
      out << "  \"" << s.point(i) << "\" -- \"" << s.point(j) << "\" [label=\""
          << s.monoid().label(s.dist(i, j)) << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace gms
