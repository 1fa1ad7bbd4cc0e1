// Systematic sweep over every small map: all rotations of one- and two-vertex
// maps with up to three edges, all sign patterns. Small enough to be cheap,
// rich enough to hit every loop, parallel-edge and interleaving configuration.

#include "doctest.h"

#include <algorithm>

#include "kbracket/statesums.hpp"
#include "support.hpp"

using kb::CombinatorialMap;
using kb::EdgeSet;
using kb::Laurent;
using kb::SignedPlaneGraph;

namespace {

std::vector<int> matched_alpha(int edges) {
  std::vector<int> alpha(2 * edges);
  for (int e = 0; e < edges; ++e) {
    alpha[2 * e] = 2 * e + 1;
    alpha[2 * e + 1] = 2 * e;
  }
  return alpha;
}

// Every cyclic order of `darts`: first element pinned, rest permuted.
void each_cyclic_order(std::vector<int> darts,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (darts.size() <= 2) {
    fn(darts);
    return;
  }
  std::vector<int> rest(darts.begin() + 1, darts.end());
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> cyc = {darts[0]};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    fn(cyc);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<CombinatorialMap> all_one_vertex_maps(int edges) {
  std::vector<CombinatorialMap> maps;
  std::vector<int> darts(2 * edges);
  for (int d = 0; d < 2 * edges; ++d) darts[d] = d;
  each_cyclic_order(darts, [&](const std::vector<int>& cyc) {
    maps.emplace_back(std::vector<std::vector<int>>{cyc}, matched_alpha(edges));
  });
  return maps;
}

std::vector<CombinatorialMap> all_two_vertex_maps(int edges) {
  std::vector<CombinatorialMap> maps;
  const int nd = 2 * edges;
  for (int split = 0; split < (1 << nd); ++split) {
    std::vector<int> first, second;
    for (int d = 0; d < nd; ++d) (split >> d & 1 ? first : second).push_back(d);
    each_cyclic_order(first, [&](const std::vector<int>& c1) {
      each_cyclic_order(second, [&](const std::vector<int>& c2) {
        maps.emplace_back(std::vector<std::vector<int>>{c1, c2}, matched_alpha(edges));
      });
    });
  }
  return maps;
}

std::vector<CombinatorialMap> battery() {
  std::vector<CombinatorialMap> maps;
  for (int e = 1; e <= 3; ++e)
    for (auto& m : all_one_vertex_maps(e)) maps.push_back(std::move(m));
  for (int e = 1; e <= 2; ++e)
    for (auto& m : all_two_vertex_maps(e)) maps.push_back(std::move(m));
  return maps;
}

/// A^{|E|+2-2|V|} R(F; -A^4, A^-2 delta, 1/delta).
Laurent kauffman_point(const CombinatorialMap& f) {
  Laurent delta = kb::bracket_delta();
  kb::VarsPtr vars = kb::bracket_vars();
  Laurent x_val(vars);
  x_val.add_term({4}, -1);
  x_val.add_term({0}, -1);
  Laurent y_val = Laurent::monomial(vars, {-2}, 1) * delta;
  Laurent value = kb::substitute(kb::br_polynomial(f),
                                 {{"x", x_val}, {"Y", y_val}, {"Z", kb::Inverse{delta}}},
                                 vars);
  return Laurent::monomial(vars, {f.num_edges() + 2 - 2 * f.num_vertices()}, 1) * value;
}

}  // namespace

TEST_CASE("every small map satisfies the euler relation and Z-parity") {
  for (const CombinatorialMap& m : battery()) {
    for (EdgeSet a : kb::SubsetRange(m)) {
      auto rp = kb::components_rank_nullity(m, a);
      int bd = kb::boundary_components(m, a);
      int g = kb::genus(m, a);
      CHECK(m.num_vertices() - std::popcount(a) + bd == 2 * rp.components - 2 * g);
      CHECK(rp.components - bd + rp.nullity == 2 * g);
    }
    CHECK_NOTHROW(kb::tutte_check(m));
  }
}

TEST_CASE("every small signed plane map transfers boundaries and expansions") {
  Laurent u = Laurent::variable(kb::uq_vars(), "u");
  for (const CombinatorialMap& m : battery()) {
    if (kb::genus(m, m.full_edge_set()) != 0) continue;
    for (EdgeSet signs = 0; signs < (EdgeSet(1) << m.num_edges()); ++signs) {
      std::vector<kb::Sign> sv;
      for (int e = 0; e < m.num_edges(); ++e)
        sv.push_back(signs >> e & 1 ? kb::Sign::plus : kb::Sign::minus);
      SignedPlaneGraph g(m, sv);
      CombinatorialMap r = kb::unsign(g).map;

      CHECK(r.num_vertices() == kb::boundary_components(m, g.positive_edges()));
      for (EdgeSet a : kb::SubsetRange(m))
        CHECK(kb::boundary_components(m, a) ==
              kb::boundary_components(r, kb::subgraph_correspondence(g, a)));

      CHECK(kb::z_fk(m, kb::EdgeWeights::constrained(g), u.pow(2)) == kb::prop31_rhs(g));

      if (kb::is_connected(r) && r.num_edges() >= 1) {
        CHECK(kb::smoothing_sum(g) == kb::prop31_rhs(g));
        kb::MedialGraph med = kb::medial(r);
        for (EdgeSet a : kb::SubsetRange(r)) {
          kb::SmoothingResult sr = kb::smooth(med, static_cast<kb::Smoothing>(a));
          CHECK(sr.cycles == kb::boundary_components(r, a));
          CHECK(sr.b_count == std::popcount(a));
        }
      }
    }
  }
}

TEST_CASE("every small connected map matches the surface bracket at the kauffman point") {
  for (const CombinatorialMap& m : battery()) {
    if (!kb::is_connected(m)) continue;
    kb::SurfaceDiagram sd = kb::surface_diagram_of(m);
    CHECK(kb::bracket_surface(sd) == kauffman_point(m));
  }
}

TEST_CASE("every small connected map resolves coverings consistently") {
  kb::VarsPtr tv = kb::make_vars({"t", "r"});
  Laurent t = Laurent::variable(tv, "t");
  Laurent r = Laurent::variable(tv, "r");
  Laurent binom = t + t.pow(-1);
  for (const CombinatorialMap& m : battery()) {
    if (!kb::is_connected(m) || m.num_edges() > 2) continue;
    kb::MedialGraph med = kb::medial(m);
    Laurent by_smoothings(tv);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << med.num_nodes()); ++s) {
      kb::SmoothingResult sr = kb::smooth(med, static_cast<kb::Smoothing>(s));
      by_smoothings += r.pow(sr.b_count) * binom.pow(sr.cycles);
    }
    for (const kb::CycleWeightFn& weight :
         {kb::CycleWeightFn(kb::canonical_cycle_weight),
          kb::CycleWeightFn(kb::alternative_cycle_weight)}) {
      Laurent by_coverings(tv);
      for (kb::ArrowCovering a : kb::arrow_coverings(med))
        by_coverings += kb::w_eval(kb::rho(med, a), t, r, weight);
      CHECK(by_coverings == by_smoothings);
    }
  }
}
