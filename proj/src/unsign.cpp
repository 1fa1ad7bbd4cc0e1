#include "kbracket/unsign.hpp"

namespace kb {

FattenedGraph fatten(const SignedPlaneGraph& g) { return {g.map, g.signs}; }

CombinatorialMap unsign_core(const CombinatorialMap& m, EdgeSet positive) {
  m.check_edge_set(positive);
  const int nd = m.num_darts();
  // Corners 2d (clockwise side of dart d) and 2d+1 (counterclockwise side).
  // The walk follows the boundary of the subgraph spanned by positive edges:
  // along the disc to the next attachment, across the ribbon side at a
  // positive edge, straight past the corner at a negative one.
  auto next = [&](int corner) {
    if (corner & 1) return 2 * m.sigma(corner / 2);  // post(d) -> pre(sigma(d))
    int d = corner / 2;
    bool pos = (positive >> m.edge_of(d)) & 1;
    return pos ? 2 * m.alpha(d) + 1 : corner + 1;  // pre(d) -> post(alpha(d)) or post(d)
  };

  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(2 * nd, 0);
  for (int start = 0; start < 2 * nd; ++start) {
    if (seen[start]) continue;
    std::vector<int> slots;
    int x = start;
    do {
      seen[x] = 1;
      if (!(x & 1)) {
        // Leaving corner pre(d) attaches one slot of d's edge, for both the
        // ribbon-side crossing and the pass-through.
        int d = x / 2;
        int e = m.edge_of(d);
        slots.push_back(2 * e + (d == m.edge_darts(e)[0] ? 0 : 1));
      }
      x = next(x);
    } while (x != start);
    cycles.push_back(std::move(slots));
  }
  for (const auto& cyc : m.vertex_cycles())
    if (cyc.empty()) cycles.emplace_back();  // isolated vertices stay isolated discs

  std::vector<int> alpha(2 * m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e) {
    alpha[2 * e] = 2 * e + 1;
    alpha[2 * e + 1] = 2 * e;
  }
  return CombinatorialMap(std::move(cycles), std::move(alpha));
}

UnsignedRibbonGraph unsign(const SignedPlaneGraph& g) {
  return {unsign_core(g.map, g.positive_edges())};
}

EdgeSet subgraph_correspondence(const SignedPlaneGraph& g, EdgeSet a) {
  g.map.check_edge_set(a);
  return a ^ g.positive_edges();
}

}  // namespace kb
