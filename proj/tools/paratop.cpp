#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paratop/suite.hpp"

namespace {

using namespace paratop;

// Exit codes: 0 = success / true / pass, 1 = false / fail (counterexample on
// stdout), 2 = input or format error (diagnostic on stderr).
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kBadInput = 2;

std::string joined(PointSet s) {
  std::string out;
  for (int m : s.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(m);
  }
  return out;
}

TopoModel load_model(const std::string& path) {
  return model_from_json(load_json_file(path));
}

int cmd_eval(const std::string& model_path, const std::string& formula) {
  TopoModel m = load_model(model_path);
  Formula phi = parse_formula(formula);
  PointSet ext = m.extension(phi);
  std::cout << joined(ext) << "\n"
            << "global: " << (m.globally_true(phi) ? "true" : "false") << "\n";
  return kTrue;
}

int cmd_sat(const std::string& model_path, int point, const std::string& formula) {
  TopoModel m = load_model(model_path);
  if (point < 0 || point >= m.point_count())
    throw Error("point " + std::to_string(point) + " out of range");
  bool ok = m.satisfies(point, parse_formula(formula));
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? kTrue : kFalse;
}

int cmd_gluts(const std::string& model_path, const std::string& formula) {
  TopoModel m = load_model(model_path);
  PointSet g = m.glut_points(parse_formula(formula));
  std::cout << joined(g) << "\n";
  return g.empty() ? kFalse : kTrue;
}

int cmd_gaps(const std::string& model_path, const std::string& formula) {
  TopoModel m = load_model(model_path);
  PointSet g = m.gap_points(parse_formula(formula));
  std::cout << joined(g) << "\n";
  return g.empty() ? kFalse : kTrue;
}

int cmd_connected(const std::string& model_path) {
  TopoModel m = load_model(model_path);
  bool ok = m.space().is_connected();
  std::cout << (ok ? "connected" : "disconnected") << "\n";
  return ok ? kTrue : kFalse;
}

int cmd_components(const std::string& model_path) {
  TopoModel m = load_model(model_path);
  for (PointSet c : m.space().connected_components()) std::cout << joined(c) << "\n";
  return kTrue;
}

int cmd_homeo(const std::string& path_a, const std::string& path_b, bool all) {
  TopoModel a = load_model(path_a), b = load_model(path_b);
  std::vector<PointMap> maps =
      enumerate_homeomorphisms(a.space(), b.space(), all ? kDefaultMapSpaceCap : 1);
  if (maps.empty()) {
    std::cout << "not homeomorphic\n";
    return kFalse;
  }
  for (const PointMap& f : maps) std::cout << map_to_json(f).dump() << "\n";
  return kTrue;
}

int cmd_bisim(const std::string& path_a, const std::string& path_b) {
  TopoModel a = load_model(path_a), b = load_model(path_b);
  PointRelation z = greatest_topo_bisimulation(a, b);
  for (auto [w, w2] : z.pairs()) std::cout << w << " " << w2 << "\n";
  return z.pairs().empty() ? kFalse : kTrue;
}

int cmd_to_kripke(const std::string& model_path) {
  std::cout << kripke_to_json(topo_to_kripke(load_model(model_path))).dump(2) << "\n";
  return kTrue;
}

int cmd_from_kripke(const std::string& kripke_path) {
  KripkeToTopoResult r = kripke_to_topo(kripke_from_json(load_json_file(kripke_path)));
  if (!r.relation_was_preorder)
    std::cerr << "note: relation closed to a preorder first\n";
  std::cout << model_to_json(r.model).dump(2) << "\n";
  return kTrue;
}

int cmd_homotopic(const std::string& model_path, const std::string& map_a,
                  const std::string& map_b) {
  TopoModel m = load_model(model_path);
  PointMap f = map_from_json(load_json_file(map_a), m.point_count());
  PointMap g = map_from_json(load_json_file(map_b), m.point_count());
  auto fence = are_homotopic(f, g, m.space(), m.space());
  if (!fence) {
    std::cout << "not homotopic\n";
    return kFalse;
  }
  for (const PointMap& h : fence->maps) std::cout << map_to_json(h).dump() << "\n";
  return kTrue;
}

int cmd_props(const GenConfig& cfg, bool json_output) {
  std::vector<CheckResult> results = run_property_suite(cfg);
  if (json_output)
    std::cout << report_to_json(results).dump(2) << "\n";
  else
    std::cout << render_report(results);
  return suite_passed(results) ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for modal logics over finite topological spaces"};
  app.require_subcommand(1);

  std::string model_path, other_path, formula, map_a, map_b;
  int point = 0;
  bool all_homeos = false, json_output = false;
  paratop::GenConfig cfg;

  auto* eval = app.add_subcommand("eval", "Extension and global truth of a formula");
  eval->add_option("model", model_path)->required();
  eval->add_option("formula", formula)->required();

  auto* sat = app.add_subcommand("sat", "Does a point satisfy a formula");
  sat->add_option("model", model_path)->required();
  sat->add_option("point", point)->required();
  sat->add_option("formula", formula)->required();

  auto* gluts = app.add_subcommand("gluts", "Points satisfying a formula and its negation");
  gluts->add_option("model", model_path)->required();
  gluts->add_option("formula", formula)->required();

  auto* gaps = app.add_subcommand("gaps", "Points satisfying neither a formula nor its negation");
  gaps->add_option("model", model_path)->required();
  gaps->add_option("formula", formula)->required();

  auto* connected = app.add_subcommand("connected", "Is the space connected");
  connected->add_option("model", model_path)->required();

  auto* components = app.add_subcommand("components", "Connected components");
  components->add_option("model", model_path)->required();

  auto* homeo = app.add_subcommand("homeo", "Find homeomorphisms between two models' spaces");
  homeo->add_option("model_a", model_path)->required();
  homeo->add_option("model_b", other_path)->required();
  homeo->add_flag("--all", all_homeos, "Enumerate all homeomorphisms");

  auto* bisim = app.add_subcommand("bisim", "Greatest topo-bisimulation between two models");
  bisim->add_option("model_a", model_path)->required();
  bisim->add_option("model_b", other_path)->required();

  auto* to_kripke = app.add_subcommand("to-kripke", "Translate a model to Kripke form");
  to_kripke->add_option("model", model_path)->required();

  auto* from_kripke = app.add_subcommand("from-kripke", "Translate a Kripke model to a space");
  from_kripke->add_option("kripke", model_path)->required();

  auto* homotopic = app.add_subcommand("homotopic", "Are two self-maps homotopic");
  homotopic->add_option("model", model_path)->required();
  homotopic->add_option("map_a", map_a)->required();
  homotopic->add_option("map_b", map_b)->required();

  auto* props = app.add_subcommand("props", "Run the property suite");
  props->add_option("--seed", cfg.seed);
  props->add_option("--runs", cfg.run_count);
  props->add_option("--points", cfg.max_points);
  props->add_option("--depth", cfg.depth_cap);
  props->add_flag("--json", json_output, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kTrue : kBadInput;
  }

  try {
    if (eval->parsed()) return cmd_eval(model_path, formula);
    if (sat->parsed()) return cmd_sat(model_path, point, formula);
    if (gluts->parsed()) return cmd_gluts(model_path, formula);
    if (gaps->parsed()) return cmd_gaps(model_path, formula);
    if (connected->parsed()) return cmd_connected(model_path);
    if (components->parsed()) return cmd_components(model_path);
    if (homeo->parsed()) return cmd_homeo(model_path, other_path, all_homeos);
    if (bisim->parsed()) return cmd_bisim(model_path, other_path);
    if (to_kripke->parsed()) return cmd_to_kripke(model_path);
    if (from_kripke->parsed()) return cmd_from_kripke(model_path);
    if (homotopic->parsed()) return cmd_homotopic(model_path, map_a, map_b);
    if (props->parsed()) return cmd_props(cfg, json_output);
  } catch (const paratop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
