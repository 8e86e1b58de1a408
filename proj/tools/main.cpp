// Command-line front end for scripted experiments: validation, amalgamation,
// witness searches, path-extension enumeration, parity checks and universal
// space approximation.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gms/json_io.hpp"
#include "gms/random_space.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitExhausted = 2;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
  if (!path) return;
  std::ofstream out(*path);
  if (!out) throw std::invalid_argument("cannot write '" + *path + "'");
  out << text;
}

void write_json(const std::optional<std::string>& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

void emit_error(const json& details) { std::cerr << details.dump() << "\n"; }

struct ExhaustedError {
  int max_size;
};

int default_max_size(const std::optional<int>& flag, int base_size, int margin) {
  return flag ? *flag : base_size + margin;
}

gms::BaseCaseFn brute_base_case(const std::optional<int>& max_size_flag, int margin) {
  return [max_size_flag, margin](const gms::MetricSpace& base,
                                 const std::vector<gms::Elem>& allowed) {
    return gms::brute_force_witness(base, default_max_size(max_size_flag, base.size(), margin),
                                    allowed);
  };
}

gms::EppaWitness expect_witness(gms::WitnessResult result) {
  if (auto* exhausted = std::get_if<gms::SearchExhausted>(&result))
    throw ExhaustedError{exhausted->max_size};
  return std::get<gms::EppaWitness>(std::move(result));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized metric spaces over distance monoids: extension-property "
               "witnesses, omitted-subspace classes, and universal space approximations"};
  app.require_subcommand(1);

  std::optional<std::string> out_path, dot_path;
  std::string file_a, file_b, file_glue, file_space, file_monoid, file_forbidden, file_witness;
  std::optional<int> max_size_flag;
  int margin = 6;
  std::vector<gms::Elem> s_values;
  std::optional<int> size_cap;
  int odd_n = 3, depth = 1, budget = 64, subspace_cap = 3, audit_cap = 2, points = 5;
  std::uint64_t seed = 1;

  auto* monoid_check = app.add_subcommand("monoid-check", "validate a distance monoid");
  monoid_check->add_option("--file", file_monoid, "monoid JSON")->required();
  monoid_check->add_option("--out", out_path, "write the normalized monoid JSON");

  auto* space_check = app.add_subcommand("space-check", "validate a metric space");
  space_check->add_option("--file", file_space, "space JSON")->required();
  space_check->add_option("--out", out_path, "write the normalized space JSON");
  space_check->add_option("--dot", dot_path, "write a DOT rendering");
  bool omit_max = false;
  space_check->add_flag("--omit-max", omit_max, "drop pairs at the monoid maximum from DOT");

  auto* amalgamate = app.add_subcommand("amalgamate", "free amalgamation over a glued subspace");
  amalgamate->add_option("--a", file_a, "first space JSON")->required();
  amalgamate->add_option("--b", file_b, "second space JSON")->required();
  amalgamate->add_option("--glue", file_glue, "JSON {\"pairs\":[[\"x\",\"y\"],...]}")->required();
  amalgamate->add_option("--out", out_path, "write the amalgam");

  auto* sigma = app.add_subcommand("sigma", "tuples violating the generalized triangle bound");
  sigma->add_option("--monoid", file_monoid, "monoid JSON")->required();
  sigma->add_option("--s", s_values, "distance set (element indices)")->required();
  sigma->add_option("--out", out_path, "write the tuple system");

  auto* witness = app.add_subcommand("witness", "brute-force extension-property witness");
  witness->add_option("--space", file_space, "base space JSON")->required();
  witness->add_option("--max-size", max_size_flag, "largest witness size (default |A|+6)");
  witness->add_option("--spectrum", s_values, "allowed witness distances (default: all)");
  witness->add_option("--out", out_path, "write the witness");

  auto* witness_sa = app.add_subcommand(
      "witness-sa", "witness via the semi-archimedean class construction");
  witness_sa->add_option("--space", file_space, "base space JSON")->required();
  witness_sa->add_option("--max-size", max_size_flag,
                         "size bound handed to each inner brute-force call");
  witness_sa->add_option("--margin", margin, "slack over the base size for inner calls");
  witness_sa->add_option("--out", out_path, "write the witness");

  auto* witness_free = app.add_subcommand("witness-free",
                                          "witness staying free of a forbidden class");
  witness_free->add_option("--space", file_space, "base space JSON")->required();
  witness_free->add_option("--forbidden", file_forbidden, "forbidden class JSON")->required();
  witness_free->add_option("--max-size", max_size_flag, "largest witness size (default |A|+6)");
  witness_free->add_option("--out", out_path, "write the witness");

  auto* verify = app.add_subcommand("verify", "verify a witness file");
  verify->add_option("--witness", file_witness, "witness JSON")->required();

  auto* path_ext = app.add_subcommand("path-extensions",
                                      "enumerate path extensions over a distance set");
  path_ext->add_option("--space", file_space, "base space JSON")->required();
  path_ext->add_option("--s", s_values, "distance set (element indices)")->required();
  path_ext->add_option("--cap", size_cap, "carrier size cap");
  path_ext->add_option("--out", out_path, "write the extension list");

  auto* parity = app.add_subcommand("parity", "check that short cycles have even length sums");
  parity->add_option("--space", file_space, "space JSON")->required();
  parity->add_option("--n", odd_n, "odd perimeter bound")->required();
  parity->add_option("--out", out_path, "write the verdict JSON");

  auto* forbidden_odd = app.add_subcommand("forbidden-odd",
                                           "triangles of odd perimeter bounded by n");
  forbidden_odd->add_option("--n", odd_n, "odd perimeter bound")->required();
  forbidden_odd->add_option("--out", out_path, "write the forbidden class");

  auto* saturate_cmd = app.add_subcommand("saturate",
                                          "realize one-point extensions level by level");
  saturate_cmd->add_option("--space", file_space, "start space JSON")->required();
  saturate_cmd->add_option("--depth", depth, "number of levels");
  saturate_cmd->add_option("--forbidden", file_forbidden, "forbidden class JSON");
  saturate_cmd->add_option("--budget", budget, "point budget");
  saturate_cmd->add_option("--subspace-cap", subspace_cap, "largest subspace to extend");
  saturate_cmd->add_option("--out", out_path, "write the saturation report");

  auto* audit = app.add_subcommand("audit", "partial isometries with no total extension");
  audit->add_option("--space", file_space, "space JSON")->required();
  audit->add_option("--cap", audit_cap, "largest domain size");
  audit->add_option("--out", out_path, "write the failing maps");

  auto* random_cmd = app.add_subcommand("random-space",
                                        "seeded random space free of a forbidden class");
  random_cmd->add_option("--monoid", file_monoid, "monoid JSON")->required();
  random_cmd->add_option("--forbidden", file_forbidden, "forbidden class JSON");
  random_cmd->add_option("--points", points, "number of points");
  random_cmd->add_option("--seed", seed, "RNG seed");
  random_cmd->add_option("--out", out_path, "write the space");

  CLI11_PARSE(app, argc, argv);

  try {
    if (monoid_check->parsed()) {
      const json j = read_json(file_monoid);
      if (j.is_object() && j.value("kind", "") == "table") {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        auto plus = j.at("plus").get<gms::DistanceMonoid::Table>();
        auto checked = gms::DistanceMonoid::validate(labels, std::move(plus));
        if (auto* bad = std::get_if<gms::MonoidViolation>(&checked)) {
          emit_error(gms::monoid_violation_to_json(*bad, labels));
          return kExitInvalid;
        }
        const auto& m = std::get<gms::DistanceMonoid>(checked);
        std::cout << "monoid OK: " << m.size() << " elements\n";
        write_json(out_path, gms::monoid_to_json(m));
      } else {
        gms::DistanceMonoid m = gms::monoid_from_json(j);
        std::cout << "monoid OK: " << m.size() << " elements\n";
        write_json(out_path, gms::monoid_to_json(m));
      }
    } else if (space_check->parsed()) {
      const json j = read_json(file_space);
      gms::DistanceMonoid m = gms::monoid_from_json(j.at("monoid"));
      auto pts = j.at("points").get<std::vector<std::string>>();
      auto dist = j.at("dist").get<std::vector<std::vector<gms::Elem>>>();
      auto checked = gms::MetricSpace::validate(std::move(m), pts, dist);
      if (auto* bad = std::get_if<gms::SpaceViolation>(&checked)) {
        emit_error(gms::space_violation_to_json(*bad, pts));
        return kExitInvalid;
      }
      const auto& s = std::get<gms::MetricSpace>(checked);
      std::cout << "space OK: " << s.size() << " points, spectrum size "
                << s.spectrum().size() << "\n";
      write_json(out_path, gms::space_to_json(s));
      write_text(dot_path, gms::space_to_dot(s, omit_max));
    } else if (amalgamate->parsed()) {
      gms::MetricSpace a = gms::space_from_json(read_json(file_a));
      gms::MetricSpace b = gms::space_from_json(read_json(file_b));
      std::vector<std::pair<int, int>> glue;
      const json glue_doc = read_json(file_glue);
      for (const json& pair : glue_doc.at("pairs")) {
        int ia = a.index_of(pair[0].get<std::string>());
        int ib = b.index_of(pair[1].get<std::string>());
        if (ia < 0 || ib < 0) throw std::invalid_argument("glue names an unknown point");
        glue.emplace_back(ia, ib);
      }
      gms::MetricSpace c = gms::free_amalgamation(a, b, glue);
      std::cout << "amalgam: " << c.size() << " points\n";
      write_json(out_path, gms::space_to_json(c));
    } else if (sigma->parsed()) {
      gms::DistanceMonoid m = gms::monoid_from_json(read_json(file_monoid));
      gms::SigmaSystem sys = gms::sigma_system(m, s_values);
      std::cout << "sigma system: " << sys.tuples.size() << " tuples, length bound "
                << sys.length_bound << "\n";
      write_json(out_path, gms::sigma_system_to_json(sys));
    } else if (witness->parsed()) {
      gms::MetricSpace base = gms::space_from_json(read_json(file_space));
      std::vector<gms::Elem> allowed = s_values;
      if (allowed.empty())
        for (gms::Elem e = 1; e < base.monoid().size(); ++e) allowed.push_back(e);
      gms::EppaWitness w = expect_witness(gms::brute_force_witness(
          base, default_max_size(max_size_flag, base.size(), margin), allowed));
      std::cout << "witness: " << w.witness.size() << " points, "
                << w.certificates.size() << " certificates\n";
      write_json(out_path, gms::witness_to_json(w));
    } else if (witness_sa->parsed()) {
      gms::MetricSpace base = gms::space_from_json(read_json(file_space));
      gms::EppaWitness w = expect_witness(
          gms::semi_archimedean_witness(base, brute_base_case(max_size_flag, margin)));
      std::cout << "witness: " << w.witness.size() << " points, "
                << w.certificates.size() << " certificates\n";
      write_json(out_path, gms::witness_to_json(w));
    } else if (witness_free->parsed()) {
      gms::MetricSpace base = gms::space_from_json(read_json(file_space));
      gms::ForbiddenClass f = gms::forbidden_class_from_json(read_json(file_forbidden));
      gms::EppaWitness w = expect_witness(gms::free_witness_search(
          base, f, default_max_size(max_size_flag, base.size(), margin)));
      std::cout << "witness: " << w.witness.size() << " points, free of " << f.members.size()
                << " forbidden members\n";
      write_json(out_path, gms::witness_to_json(w));
    } else if (verify->parsed()) {
      gms::EppaWitness w = gms::witness_from_json(read_json(file_witness));
      gms::VerifyReport report = gms::verify_witness(w);
      if (!report.ok) {
        emit_error(json{{"error", "witness verification failed"},
                        {"failing", gms::partial_map_to_json(*report.failing, w.base.points(),
                                                             w.base.points())}});
        return kExitInvalid;
      }
      std::cout << "witness verified: " << w.witness.size() << " points\n";
    } else if (path_ext->parsed()) {
      gms::MetricSpace base = gms::space_from_json(read_json(file_space));
      auto extensions = gms::enumerate_path_extensions(base, s_values, size_cap);
      std::cout << "path extensions: " << extensions.size() << "\n";
      json list = json::array();
      for (const auto& e : extensions) list.push_back(gms::path_extension_to_json(e));
      write_json(out_path, list);
    } else if (parity->parsed()) {
      gms::MetricSpace s = gms::space_from_json(read_json(file_space));
      gms::ParityReport report = gms::verify_parity(s, odd_n);
      json verdict{{"parity", report.ok}};
      if (!report.ok) {
        json cycle = json::array();
        for (int p : report.cycle) cycle.push_back(s.point(p));
        verdict["cycle"] = cycle;
      }
      std::cout << (report.ok ? "parity OK" : "parity violated: " + verdict["cycle"].dump())
                << "\n";
      write_json(out_path, verdict);
    } else if (forbidden_odd->parsed()) {
      gms::ForbiddenClass f = gms::odd_perimeter_triangles(odd_n);
      std::cout << "forbidden class: " << f.members.size() << " triangles\n";
      write_json(out_path, gms::forbidden_class_to_json(f));
    } else if (saturate_cmd->parsed()) {
      gms::MetricSpace start = gms::space_from_json(read_json(file_space));
      std::optional<gms::ForbiddenClass> f;
      if (!file_forbidden.empty())
        f = gms::forbidden_class_from_json(read_json(file_forbidden));
      gms::SaturationReport report =
          gms::saturate(start, depth, f ? &*f : nullptr, budget, subspace_cap);
      std::cout << "saturation: " << report.result.size() << " points after " << report.depth
                << " levels" << (report.budget_exhausted ? " (budget exhausted)" : "") << "\n";
      write_json(out_path, gms::saturation_report_to_json(report));
    } else if (audit->parsed()) {
      gms::MetricSpace s = gms::space_from_json(read_json(file_space));
      auto failures = gms::homogeneity_audit(s, audit_cap);
      std::cout << "non-extendable partial isometries: " << failures.size() << "\n";
      json list = json::array();
      for (const auto& phi : failures)
        list.push_back(gms::partial_map_to_json(phi, s.points(), s.points()));
      write_json(out_path, list);
    } else if (random_cmd->parsed()) {
      gms::DistanceMonoid m = gms::monoid_from_json(read_json(file_monoid));
      gms::ForbiddenClass f;
      if (!file_forbidden.empty()) f = gms::forbidden_class_from_json(read_json(file_forbidden));
      gms::MetricSpace s = gms::random_free_space(m, points, f, seed);
      std::cout << "random space: " << s.size() << " points\n";
      write_json(out_path, gms::space_to_json(s));
    }
  } catch (const ExhaustedError& e) {
    emit_error(json{{"error", "search exhausted"}, {"max_size", e.max_size}});
    return kExitExhausted;
  } catch (const json::exception& e) {
    emit_error(json{{"error", e.what()}});
    return kExitInvalid;
  } catch (const std::exception& e) {
    emit_error(json{{"error", e.what()}});
    return kExitInvalid;
  }
  return kExitOk;
}
