#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kbracket/cmap.hpp"
#include "kbracket/knotio.hpp"
#include "kbracket/laurent.hpp"
#include "kbracket/medial.hpp"
#include "kbracket/unsign.hpp"

namespace kb {

struct Caps {
  int edges = kDefaultEdgeCap;
  int crossings = kDefaultCrossingCap;
  int nodes = kDefaultNodeCap;
};

/// {"u", "x"}: u carries half-integer powers of q (q = u^2), x is the
/// negative-edge weight in the constrained regime.
VarsPtr uq_vars();
/// {"t", "x"}: the vertex-model ring.
VarsPtr vm_vars();
/// {"x", "Y", "Z"} with x standing for X-1.
VarsPtr br_vars();
/// {"q", "w0", ..., "w<m-1>"}: symbolic q with one weight variable per edge.
VarsPtr fk_vars(int num_edges);

/// Per-edge weights, all living in one variable set.
struct EdgeWeights {
  VarsPtr vars;
  std::vector<Laurent> w;

  /// w_e = w<e> in fk_vars.
  static EdgeWeights symbolic(const CombinatorialMap& m);
  /// Constrained regime in uq_vars: w_+ = u x^-1 and w_- = u x, so that
  /// w_+ w_- = u^2 = q.
  static EdgeWeights constrained(const SignedPlaneGraph& g);
};

/// Brute-force sum over all q^{|V|} vertex colourings of
/// prod_e [1 + w_e * (colours at e's ends agree)].
Laurent z_potts_coloring(const CombinatorialMap& g, const EdgeWeights& w, int q,
                         long long colouring_cap = 1 << 20);

/// Subset expansion sum_{A} q^{k(A)} prod_{e in A} w_e with symbolic q.
Laurent z_fk(const CombinatorialMap& g, const EdgeWeights& w, const Laurent& q,
             int cap = kDefaultEdgeCap);

/// u^{|V|} x^{-|E_+|} sum over subsets of the unsigned ribbon graph of
/// u^{boundary} x^{|subset|}.
Laurent prop31_rhs(const SignedPlaneGraph& g, int cap = kDefaultEdgeCap);

/// Same value computed over smoothings of the medial graph,
/// u^{|V|} x^{-|E_+|} sum_s u^{p(s)} x^{B(s)}.
Laurent smoothing_sum(const SignedPlaneGraph& g, int cap = kDefaultEdgeCap);

/// (t+t^-1)^{|V|} x^{-|E_+|} sum over arrow coverings of W(rho(a)); equals
/// smoothing_sum under u -> t+t^-1.
Laurent vertex_model_sum(const SignedPlaneGraph& g, int node_cap = kDefaultNodeCap,
                         const CycleWeightFn& weight = canonical_cycle_weight);

/// Kauffman bracket from the Tait graph's signed subset expansion:
/// delta^{-|V|-1} A^{|E_-|-|E_+|} sum_A (delta^2)^{k(A)} prod_{e in A}
/// delta A^{2 b_e}.
Laurent bracket_potts(const TaitGraph& t, int cap = kDefaultEdgeCap);

/// Bracket from the unsigned ribbon graph:
/// delta^{-1} A^{|E|} sum_A delta^{boundary(A)} A^{-2|A|}.
Laurent bracket_ribbon(const TaitGraph& t, int cap = kDefaultEdgeCap);

/// Subset expansion sum_A x^{r(F)-r(A)} Y^{n(A)} Z^{2 genus(A)} in br_vars.
Laurent br_polynomial(const CombinatorialMap& f, int cap = kDefaultEdgeCap);

/// Direct two-variable expansion sum_A x^{r(F)-r(A)} (Y-1)^{n(A)}, computed
/// without boundary tracing.
Laurent tutte_direct(const CombinatorialMap& f, int cap = kDefaultEdgeCap);

/// Checks br_polynomial at Y -> Y-1, Z -> 1 against tutte_direct and returns
/// the Tutte polynomial; a mismatch throws.
Laurent tutte_check(const CombinatorialMap& f, int cap = kDefaultEdgeCap);

/// Bracket as A^{|E|+2-2|V(R)|} times the ribbon-graph polynomial of the
/// unsigning R at x = -A^4-1, Y = A^-2 delta, Z = 1/delta. The 1/delta powers
/// are cleared across the whole sum and divided out exactly once.
Laurent bracket_via_br(const TaitGraph& t, int cap = kDefaultEdgeCap);

/// The medial graph of the unsigning read as an alternating diagram on its
/// surface: one crossing per node, A/B smoothings given by the two pairings.
struct SurfaceDiagram {
  MedialGraph medial;
  int surface_genus;
  int num_crossings;
};

SurfaceDiagram surface_diagram(const TaitGraph& t);

/// Same reading for an arbitrary connected ribbon graph.
SurfaceDiagram surface_diagram_of(const CombinatorialMap& ribbon);

/// sum over all smoothings of A^{#A-choices - #B-choices} delta^{p(s)-1}.
Laurent bracket_surface(const SurfaceDiagram& sd, int node_cap = kDefaultNodeCap);

/// Bracket from the arrow-covering expansion with t = -A^2 and B-resolution
/// weight A^-2: delta^-1 A^{N} sum_a W(rho(a)).
Laurent bracket_vertex(const TaitGraph& t, int node_cap = kDefaultNodeCap,
                       const CycleWeightFn& weight = canonical_cycle_weight);

struct RouteResult {
  std::string name;
  Laurent value;
  double millis = 0.0;
};

struct StateSumReport {
  std::string diagram;
  std::vector<RouteResult> routes;
  bool agree = false;
};

/// Runs all six routes and reports per-route values and their agreement.
StateSumReport verify_all(const LinkDiagram& d, const std::string& name = "diagram",
                          const Caps& caps = {}, std::optional<int> outer = {});

std::string report_to_json(const StateSumReport& r, bool include_timings = false);
std::string report_to_text(const StateSumReport& r, bool include_timings = false);

}  // namespace kb
