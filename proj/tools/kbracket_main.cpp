#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kbracket/statesums.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw kb::error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  std::string pd_file, graph_file;
  std::string method = "direct";
  std::string format = "text";
  std::string verify_format = "json";
  int outer_face = -1;
  int q = 0;
  bool timings = false;
  kb::Caps caps;

  std::optional<int> outer() const {
    return outer_face >= 0 ? std::optional<int>(outer_face) : std::nullopt;
  }
};

void add_caps(CLI::App* cmd, Options& opt) {
  cmd->add_option("--cap-edges", opt.caps.edges, "subset enumeration cap");
  cmd->add_option("--cap-crossings", opt.caps.crossings, "state enumeration cap");
  cmd->add_option("--cap-nodes", opt.caps.nodes, "arrow covering cap");
}

void emit_poly(const kb::Laurent& p, const Options& opt, const std::string& key) {
  if (opt.format == "json") {
    nlohmann::json j;
    j[key] = p.str();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
}

kb::Laurent bracket_by_method(const kb::LinkDiagram& d, const Options& opt) {
  if (opt.method == "direct") return kb::bracket_direct(d, opt.caps.crossings);
  if (d.num_crossings() == 0) {
    // every route degenerates to the empty state on a crossingless diagram
    kb::StateSumReport r = kb::verify_all(d, "diagram", opt.caps, opt.outer());
    for (const kb::RouteResult& route : r.routes)
      if (route.name == opt.method) return route.value;
    throw kb::error("unknown method: " + opt.method);
  }
  kb::TaitGraph t = kb::tait_graph(d, kb::checkerboard(d, opt.outer()));
  if (opt.method == "potts") return kb::bracket_potts(t, opt.caps.edges);
  if (opt.method == "ribbon") return kb::bracket_ribbon(t, opt.caps.edges);
  if (opt.method == "br") return kb::bracket_via_br(t, opt.caps.edges);
  if (opt.method == "smoothing")
    return kb::bracket_surface(kb::surface_diagram(t), opt.caps.nodes);
  if (opt.method == "vertex") return kb::bracket_vertex(t, opt.caps.nodes);
  throw kb::error("unknown method: " + opt.method);
}

int run(int argc, char** argv) {
  CLI::App app{"Kauffman bracket and Jones polynomial by six independent state sums"};
  app.require_subcommand(1);
  Options opt;

  auto* bracket = app.add_subcommand("bracket", "bracket of a PD diagram");
  bracket->add_option("--pd", opt.pd_file, "PD file ('-' for stdin)")->required();
  bracket->add_option("--method", opt.method,
                      "direct|potts|ribbon|br|smoothing|vertex");
  bracket->add_option("--outer-face", opt.outer_face, "outer face id");
  bracket->add_option("--format", opt.format, "text|json");
  add_caps(bracket, opt);

  auto* verify = app.add_subcommand("verify", "run all six routes and compare");
  verify->add_option("--pd", opt.pd_file, "PD file")->required();
  verify->add_option("--outer-face", opt.outer_face, "outer face id");
  verify->add_option("--format", opt.verify_format, "text|json");
  verify->add_flag("--timings", opt.timings, "include per-route timings");
  add_caps(verify, opt);

  auto* jones = app.add_subcommand("jones", "writhe-normalized bracket");
  jones->add_option("--pd", opt.pd_file, "PD file")->required();
  jones->add_option("--format", opt.format, "text|json");
  add_caps(jones, opt);

  auto* tait = app.add_subcommand("tait", "signed Tait graph of a diagram");
  tait->add_option("--pd", opt.pd_file, "PD file")->required();
  tait->add_option("--outer-face", opt.outer_face, "outer face id");

  auto* unsign_cmd = app.add_subcommand("unsign", "unsigned ribbon graph of a signed graph");
  unsign_cmd->add_option("--graph", opt.graph_file, "signed graph JSON")->required();

  auto* medial_cmd = app.add_subcommand("medial", "medial graph of a ribbon graph");
  medial_cmd->add_option("--graph", opt.graph_file, "map JSON")->required();

  auto* br = app.add_subcommand("br", "ribbon-graph polynomial (x = X-1, Y, Z)");
  br->add_option("--graph", opt.graph_file, "map JSON")->required();
  br->add_option("--format", opt.format, "text|json");
  add_caps(br, opt);

  auto* potts = app.add_subcommand("potts", "Fortuin-Kasteleyn state sum");
  potts->add_option("--graph", opt.graph_file, "map JSON")->required();
  potts->add_option("--q", opt.q, "substitute an integer for q");
  potts->add_option("--format", opt.format, "text|json");
  add_caps(potts, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (bracket->parsed()) {
      kb::LinkDiagram d = kb::parse_pd(read_input(opt.pd_file));
      emit_poly(bracket_by_method(d, opt), opt, "bracket");
    } else if (verify->parsed()) {
      kb::LinkDiagram d = kb::parse_pd(read_input(opt.pd_file));
      kb::StateSumReport r = kb::verify_all(d, opt.pd_file, opt.caps, opt.outer());
      std::cout << (opt.verify_format == "text" ? kb::report_to_text(r, opt.timings)
                                                  : kb::report_to_json(r, opt.timings) + "\n");
      if (!r.agree) {
        std::cerr << "error: state-sum routes disagree\n";
        return 2;
      }
    } else if (jones->parsed()) {
      kb::LinkDiagram d = kb::parse_pd(read_input(opt.pd_file));
      emit_poly(kb::jones(d, kb::orient(d), opt.caps.crossings), opt, "jones");
    } else if (tait->parsed()) {
      kb::LinkDiagram d = kb::parse_pd(read_input(opt.pd_file));
      kb::TaitGraph t = kb::tait_graph(d, kb::checkerboard(d, opt.outer()));
      std::cout << kb::signed_graph_to_json(t.graph) << "\n";
    } else if (unsign_cmd->parsed()) {
      kb::SignedPlaneGraph g = kb::signed_graph_from_json(read_input(opt.graph_file));
      std::cout << kb::map_to_json(kb::unsign(g).map) << "\n";
    } else if (medial_cmd->parsed()) {
      kb::CombinatorialMap m = kb::map_from_json(read_input(opt.graph_file));
      kb::MedialGraph med = kb::medial(m);
      nlohmann::json j;
      j["nodes"] = med.num_nodes();
      j["strands"] = nlohmann::json::array();
      for (int s = 0; s < med.num_strands(); ++s)
        j["strands"].push_back({med.strand_ends(s)[0], med.strand_ends(s)[1]});
      j["pairing_a"] = nlohmann::json::array();
      j["pairing_b"] = nlohmann::json::array();
      for (int v = 0; v < med.num_nodes(); ++v) {
        const auto& ns = med.node_slots(v);
        j["pairing_a"].push_back({{ns[0], med.pair_slot(ns[0], false)},
                                  {ns[2], med.pair_slot(ns[2], false)}});
        j["pairing_b"].push_back({{ns[0], med.pair_slot(ns[0], true)},
                                  {ns[2], med.pair_slot(ns[2], true)}});
      }
      std::cout << j.dump() << "\n";
    } else if (br->parsed()) {
      kb::CombinatorialMap m = kb::map_from_json(read_input(opt.graph_file));
      emit_poly(kb::br_polynomial(m, opt.caps.edges), opt, "br");
    } else if (potts->parsed()) {
      kb::CombinatorialMap m = kb::map_from_json(read_input(opt.graph_file));
      kb::EdgeWeights w = kb::EdgeWeights::symbolic(m);
      kb::Laurent q = kb::Laurent::variable(w.vars, "q");
      kb::Laurent z = kb::z_fk(m, w, q, opt.caps.edges);
      if (opt.q > 0)
        z = kb::substitute(z, {{"q", kb::Laurent::constant(w.vars, opt.q)}}, w.vars);
      emit_poly(z, opt, "potts");
    }
  } catch (const kb::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
