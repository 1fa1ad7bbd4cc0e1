#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kbracket/statesums.hpp"

namespace py = pybind11;

namespace {

kb::Caps make_caps(int edges, int crossings, int nodes) {
  kb::Caps c;
  c.edges = edges;
  c.crossings = crossings;
  c.nodes = nodes;
  return c;
}

std::string bracket(const std::string& pd, const std::string& method, int cap_edges,
                    int cap_crossings, int cap_nodes) {
  kb::LinkDiagram d = kb::parse_pd(pd);
  kb::Caps caps = make_caps(cap_edges, cap_crossings, cap_nodes);
  if (method == "direct") return kb::bracket_direct(d, caps.crossings).str();
  kb::StateSumReport r = kb::verify_all(d, "diagram", caps);
  for (const kb::RouteResult& route : r.routes)
    if (route.name == method) return route.value.str();
  throw kb::error("unknown method: " + method);
}

py::dict verify(const std::string& pd, int cap_edges, int cap_crossings, int cap_nodes) {
  kb::LinkDiagram d = kb::parse_pd(pd);
  kb::StateSumReport r =
      kb::verify_all(d, "diagram", make_caps(cap_edges, cap_crossings, cap_nodes));
  py::dict routes;
  for (const kb::RouteResult& route : r.routes)
    routes[py::str(route.name)] = route.value.str();
  py::dict out;
  out["routes"] = routes;
  out["agree"] = r.agree;
  return out;
}

std::string jones(const std::string& pd) {
  kb::LinkDiagram d = kb::parse_pd(pd);
  return kb::jones(d, kb::orient(d)).str();
}

std::string tait(const std::string& pd) {
  kb::LinkDiagram d = kb::parse_pd(pd);
  return kb::signed_graph_to_json(kb::tait_graph(d, kb::checkerboard(d)).graph);
}

std::string unsign(const std::string& graph_json) {
  return kb::map_to_json(kb::unsign(kb::signed_graph_from_json(graph_json)).map);
}

std::string br_polynomial(const std::string& graph_json) {
  return kb::br_polynomial(kb::map_from_json(graph_json)).str();
}

std::string fk_polynomial(const std::string& graph_json) {
  kb::CombinatorialMap m = kb::map_from_json(graph_json);
  kb::EdgeWeights w = kb::EdgeWeights::symbolic(m);
  return kb::z_fk(m, w, kb::Laurent::variable(w.vars, "q")).str();
}

}  // namespace

PYBIND11_MODULE(kbracket, m) {
  m.doc() = "Kauffman bracket and Jones polynomial by six independent state sums";

  py::register_exception<kb::error>(m, "KbracketError");

  m.def("bracket", &bracket, py::arg("pd"), py::arg("method") = "direct",
        py::arg("cap_edges") = kb::kDefaultEdgeCap,
        py::arg("cap_crossings") = kb::kDefaultCrossingCap,
        py::arg("cap_nodes") = kb::kDefaultNodeCap,
        "Kauffman bracket of a PD diagram as canonical polynomial text");
  m.def("verify", &verify, py::arg("pd"), py::arg("cap_edges") = kb::kDefaultEdgeCap,
        py::arg("cap_crossings") = kb::kDefaultCrossingCap,
        py::arg("cap_nodes") = kb::kDefaultNodeCap,
        "Run all six bracket routes; returns {'routes': {...}, 'agree': bool}");
  m.def("jones", &jones, py::arg("pd"),
        "Jones polynomial (writhe-normalized bracket) in the A variable");
  m.def("tait", &tait, py::arg("pd"), "Signed Tait graph as map JSON");
  m.def("unsign", &unsign, py::arg("graph_json"),
        "Unsigned ribbon graph of a signed plane graph, as map JSON");
  m.def("br_polynomial", &br_polynomial, py::arg("graph_json"),
        "Ribbon-graph polynomial (x = X-1, Y, Z) of a map");
  m.def("fk_polynomial", &fk_polynomial, py::arg("graph_json"),
        "Fortuin-Kasteleyn subset expansion with symbolic q and edge weights");
}
