#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kbracket/knotio.hpp"
#include "kbracket/statesums.hpp"

namespace kbtest {

inline std::string data_path(const std::string& rel) {
#ifdef KB_DATA_DIR
  return std::string(KB_DATA_DIR) + "/" + rel;
#else
  return "data/" + rel;
#endif
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw kb::error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline kb::LinkDiagram load_diagram(const std::string& name) {
  return kb::parse_pd(slurp(data_path("diagrams/" + name + ".pd")));
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "unknot0",       "kink_pos", "kink_neg",     "unknot2",
      "hopf",          "unlink2",  "trefoil_left", "trefoil_right",
      "figure_eight",  "cinquefoil", "granny",     "square",
      "granny3"};
  return names;
}

// ---- deterministic random structures -------------------------------------

/// Arbitrary orientable map: random endpoints, darts spliced at random
/// positions into the vertex rotations. Any genus.
inline kb::CombinatorialMap random_map(std::mt19937& rng, int num_vertices, int num_edges,
                                       bool force_connected = false) {
  std::vector<std::vector<int>> cycles(num_vertices);
  auto pick_vertex = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  auto insert_dart = [&](int v, int dart) {
    auto& cyc = cycles[v];
    int pos = std::uniform_int_distribution<int>(0, static_cast<int>(cyc.size()))(rng);
    cyc.insert(cyc.begin() + pos, dart);
  };
  std::vector<int> alpha(2 * num_edges);
  for (int e = 0; e < num_edges; ++e) {
    int u, v;
    if (force_connected && num_vertices > 1 && e < num_vertices - 1) {
      u = e + 1;
      v = pick_vertex(e);  // spanning-tree edge to an earlier vertex
    } else {
      u = pick_vertex(num_vertices - 1);
      v = pick_vertex(num_vertices - 1);
    }
    insert_dart(u, 2 * e);
    insert_dart(v, 2 * e + 1);
    alpha[2 * e] = 2 * e + 1;
    alpha[2 * e + 1] = 2 * e;
  }
  return kb::CombinatorialMap(std::move(cycles), std::move(alpha));
}

/// Plane map: grows edge by edge, re-drawing any insertion that would raise
/// the genus. Connected when force_connected and num_vertices > 0.
inline kb::SignedPlaneGraph random_plane_graph(std::mt19937& rng, int num_vertices,
                                               int num_edges, bool force_connected = false) {
  struct Edge {
    int u, v;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> cycles(num_vertices);
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };

  auto build = [&](const std::vector<std::vector<int>>& cyc) {
    std::vector<int> alpha(2 * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      alpha[2 * e] = static_cast<int>(2 * e + 1);
      alpha[2 * e + 1] = static_cast<int>(2 * e);
    }
    return kb::CombinatorialMap(cyc, alpha);
  };

  for (int e = 0; e < num_edges; ++e) {
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      int u, v;
      if (force_connected && num_vertices > 1 && e < num_vertices - 1) {
        u = e + 1;
        v = pick(e);
      } else {
        u = pick(num_vertices - 1);
        v = pick(num_vertices - 1);
      }
      auto trial = cycles;
      int dart_u = 2 * e, dart_v = 2 * e + 1;
      trial[u].insert(trial[u].begin() + pick(static_cast<int>(trial[u].size())), dart_u);
      trial[v].insert(trial[v].begin() + pick(static_cast<int>(trial[v].size())), dart_v);
      edges.push_back({u, v});
      kb::CombinatorialMap m = build(trial);
      if (kb::genus(m, m.full_edge_set()) == 0) {
        cycles = std::move(trial);
        placed = true;
      } else {
        edges.pop_back();
      }
    }
    if (!placed) break;  // accept a smaller map
  }
  kb::CombinatorialMap m = build(cycles);
  std::vector<kb::Sign> signs;
  for (int e = 0; e < m.num_edges(); ++e)
    signs.push_back(pick(1) ? kb::Sign::plus : kb::Sign::minus);
  return kb::SignedPlaneGraph(std::move(m), std::move(signs));
}

inline kb::Laurent random_laurent(std::mt19937& rng, kb::VarsPtr vars, int max_terms = 5,
                                  int max_exp = 3, int max_coeff = 9,
                                  std::optional<int> min_exp = {}) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(min_exp.value_or(-max_exp), max_exp);
  std::uniform_int_distribution<int> coeffd(-max_coeff, max_coeff);
  kb::Laurent p(vars);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    kb::Exponents e(vars->size());
    for (auto& x : e) x = expd(rng);
    p.add_term(e, coeffd(rng));
  }
  return p;
}

// Small named maps used across the suites.

/// One vertex, one untwisted loop.
inline kb::CombinatorialMap planar_loop_map() {
  return kb::CombinatorialMap({{0, 1}}, {1, 0});
}

/// Two vertices joined by one edge.
inline kb::CombinatorialMap bridge_map() {
  return kb::CombinatorialMap({{0}, {1}}, {1, 0});
}

/// One vertex, two interleaved loops; the smallest genus-1 map.
inline kb::CombinatorialMap torus_map() {
  return kb::CombinatorialMap({{0, 2, 1, 3}}, {1, 0, 3, 2});
}

inline kb::TaitGraph as_tait(kb::SignedPlaneGraph g) {
  std::vector<int> provenance(g.map.num_edges());
  for (std::size_t i = 0; i < provenance.size(); ++i) provenance[i] = static_cast<int>(i);
  return {std::move(g), std::move(provenance)};
}

}  // namespace kbtest
