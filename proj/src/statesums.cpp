#include "kbracket/statesums.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace kb {

VarsPtr uq_vars() {
  static VarsPtr v = make_vars({"u", "x"});
  return v;
}

VarsPtr vm_vars() {
  static VarsPtr v = make_vars({"t", "x"});
  return v;
}

VarsPtr br_vars() {
  static VarsPtr v = make_vars({"x", "Y", "Z"});
  return v;
}

VarsPtr fk_vars(int num_edges) {
  std::vector<std::string> names = {"q"};
  for (int e = 0; e < num_edges; ++e) names.push_back("w" + std::to_string(e));
  return make_vars(names);
}

EdgeWeights EdgeWeights::symbolic(const CombinatorialMap& m) {
  EdgeWeights ew;
  ew.vars = fk_vars(m.num_edges());
  for (int e = 0; e < m.num_edges(); ++e)
    ew.w.push_back(Laurent::variable(ew.vars, static_cast<std::size_t>(e + 1)));
  return ew;
}

EdgeWeights EdgeWeights::constrained(const SignedPlaneGraph& g) {
  EdgeWeights ew;
  ew.vars = uq_vars();
  for (int e = 0; e < g.map.num_edges(); ++e) {
    int xe = g.signs[e] == Sign::plus ? -1 : +1;
    ew.w.push_back(Laurent::monomial(ew.vars, {1, xe}, 1));
  }
  return ew;
}

Laurent z_potts_coloring(const CombinatorialMap& g, const EdgeWeights& w, int q,
                         long long colouring_cap) {
  if (q < 1) throw error("q must be a positive integer");
  if (static_cast<int>(w.w.size()) != g.num_edges())
    throw error("one weight per edge required");
  const int nv = g.num_vertices();
  double states = std::pow(static_cast<double>(q), nv);
  if (states > static_cast<double>(colouring_cap))
    throw error("colouring count exceeds the cap");

  std::vector<Laurent> edge_factor;
  for (const Laurent& we : w.w)
    edge_factor.push_back(Laurent::constant(w.vars, 1) + we);

  Laurent total(w.vars);
  std::vector<int> colour(nv, 0);
  for (;;) {
    Laurent term = Laurent::constant(w.vars, 1);
    for (int e = 0; e < g.num_edges(); ++e) {
      int v1 = g.vertex_of(g.edge_darts(e)[0]);
      int v2 = g.vertex_of(g.edge_darts(e)[1]);
      if (colour[v1] == colour[v2]) term *= edge_factor[e];
    }
    total += term;
    int i = 0;
    while (i < nv && ++colour[i] == q) colour[i++] = 0;
    if (i == nv) break;
  }
  return total;
}

Laurent z_fk(const CombinatorialMap& g, const EdgeWeights& w, const Laurent& q, int cap) {
  if (static_cast<int>(w.w.size()) != g.num_edges())
    throw error("one weight per edge required");
  std::vector<Laurent> q_pow = {Laurent::constant(q.vars_ptr(), 1)};
  for (int i = 0; i < g.num_vertices(); ++i) q_pow.push_back(q_pow.back() * q);

  Laurent total(w.vars);
  for (EdgeSet a : SubsetRange(g, cap)) {
    Laurent term = q_pow[components_rank_nullity(g, a).components];
    for (int e = 0; e < g.num_edges(); ++e)
      if (a >> e & 1) term *= w.w[e];
    total += term;
  }
  return total;
}

namespace {

Laurent u_x_prefactor(const SignedPlaneGraph& g) {
  int e_plus = 0;
  for (Sign s : g.signs)
    if (s == Sign::plus) ++e_plus;
  return Laurent::monomial(uq_vars(), {g.map.num_vertices(), -e_plus}, 1);
}

}  // namespace

Laurent prop31_rhs(const SignedPlaneGraph& g, int cap) {
  CombinatorialMap r = unsign(g).map;
  Laurent sum(uq_vars());
  for (EdgeSet a : SubsetRange(r, cap))
    sum.add_term({boundary_components(r, a), static_cast<int>(std::popcount(a))}, 1);
  return u_x_prefactor(g) * sum;
}

Laurent smoothing_sum(const SignedPlaneGraph& g, int cap) {
  CombinatorialMap r = unsign(g).map;
  if (r.num_edges() > cap) throw error("edge count exceeds the subset enumeration cap");
  MedialGraph m = medial(r);
  Laurent sum(uq_vars());
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << m.num_nodes()); ++s) {
    SmoothingResult sr = smooth(m, static_cast<Smoothing>(s));
    sum.add_term({sr.cycles, sr.b_count}, 1);
  }
  return u_x_prefactor(g) * sum;
}

Laurent vertex_model_sum(const SignedPlaneGraph& g, int node_cap,
                         const CycleWeightFn& weight) {
  CombinatorialMap r = unsign(g).map;
  MedialGraph m = medial(r);
  Laurent t = Laurent::variable(vm_vars(), "t");
  Laurent rw = Laurent::variable(vm_vars(), "x");
  Laurent sum(vm_vars());
  for (ArrowCovering a : arrow_coverings(m, node_cap))
    sum += w_eval(rho(m, a), t, rw, weight);

  int e_plus = 0;
  for (Sign s : g.signs)
    if (s == Sign::plus) ++e_plus;
  Laurent t_binom = t + t.pow(-1);
  return t_binom.pow(g.map.num_vertices()) *
         Laurent::monomial(vm_vars(), {0, -e_plus}, 1) * sum;
}

Laurent bracket_potts(const TaitGraph& t, int cap) {
  const CombinatorialMap& m = t.graph.map;
  VarsPtr vars = bracket_vars();
  Laurent delta = bracket_delta();
  std::vector<Laurent> dpow = {Laurent::constant(vars, 1)};
  for (int i = 0; i < 2 * m.num_vertices() + m.num_edges() + 2; ++i)
    dpow.push_back(dpow.back() * delta);

  EdgeSet plus = t.graph.positive_edges();
  Laurent sum(vars);
  for (EdgeSet a : SubsetRange(m, cap)) {
    int k = components_rank_nullity(m, a).components;
    int edges = std::popcount(a);
    int n_plus = std::popcount(a & plus);
    int a_exp = 2 * (2 * n_plus - edges);  // 2(n_+ - n_-)
    for (const auto& [e, c] : dpow[2 * k + edges].terms())
      sum.add_term({e[0] + a_exp}, c);
  }
  int e_plus = std::popcount(plus);
  int e_minus = m.num_edges() - e_plus;
  Laurent pref = Laurent::monomial(vars, {e_minus - e_plus}, 1);
  return (pref * sum).divide_exact(dpow[m.num_vertices() + 1]);
}

Laurent bracket_ribbon(const TaitGraph& t, int cap) {
  CombinatorialMap r = unsign(t.graph).map;
  VarsPtr vars = bracket_vars();
  Laurent delta = bracket_delta();
  std::vector<Laurent> dpow = {Laurent::constant(vars, 1)};
  for (int i = 0; i < r.num_vertices() + r.num_edges() + 2; ++i)
    dpow.push_back(dpow.back() * delta);

  Laurent sum(vars);
  for (EdgeSet a : SubsetRange(r, cap)) {
    int bd = boundary_components(r, a);
    int a_exp = -2 * static_cast<int>(std::popcount(a));
    for (const auto& [e, c] : dpow[bd].terms()) sum.add_term({e[0] + a_exp}, c);
  }
  Laurent pref = Laurent::monomial(vars, {r.num_edges()}, 1);
  return (pref * sum).divide_exact(delta);
}

Laurent br_polynomial(const CombinatorialMap& f, int cap) {
  Laurent total(br_vars());
  int r_full = components_rank_nullity(f, f.full_edge_set()).rank;
  for (EdgeSet a : SubsetRange(f, cap)) {
    RankProfile rp = components_rank_nullity(f, a);
    int zexp = 2 * genus(f, a);
    total.add_term({r_full - rp.rank, rp.nullity, zexp}, 1);
  }
  return total;
}

Laurent tutte_direct(const CombinatorialMap& f, int cap) {
  VarsPtr vars = make_vars({"x", "Y"});
  Laurent y_minus_1 = Laurent::variable(vars, "Y") - Laurent::constant(vars, 1);
  std::vector<Laurent> ypow = {Laurent::constant(vars, 1)};
  for (int i = 0; i < f.num_edges(); ++i) ypow.push_back(ypow.back() * y_minus_1);

  Laurent total(vars);
  int r_full = components_rank_nullity(f, f.full_edge_set()).rank;
  for (EdgeSet a : SubsetRange(f, cap)) {
    RankProfile rp = components_rank_nullity(f, a);
    total += Laurent::monomial(vars, {r_full - rp.rank, 0}, 1) * ypow[rp.nullity];
  }
  return total;
}

Laurent tutte_check(const CombinatorialMap& f, int cap) {
  VarsPtr vars = make_vars({"x", "Y"});
  Laurent specialized = substitute(
      br_polynomial(f, cap),
      {{"Y", Laurent::variable(vars, "Y") - Laurent::constant(vars, 1)},
       {"Z", Laurent::constant(vars, 1)}},
      vars);
  Laurent direct = tutte_direct(f, cap);
  if (specialized != direct)
    throw error("ribbon-graph polynomial does not specialize to the Tutte polynomial");
  return direct;
}

Laurent bracket_via_br(const TaitGraph& t, int cap) {
  CombinatorialMap r = unsign(t.graph).map;
  if (!is_connected(r)) throw error("unsigned ribbon graph must be connected");
  Laurent br = br_polynomial(r, cap);

  VarsPtr vars = bracket_vars();
  Laurent delta = bracket_delta();
  Laurent x_val(vars);  // -A^4 - 1
  x_val.add_term({4}, -1);
  x_val.add_term({0}, -1);
  Laurent y_val = Laurent::monomial(vars, {-2}, 1) * delta;
  Laurent value = substitute(br, {{"x", x_val}, {"Y", y_val}, {"Z", Inverse{delta}}}, vars);
  int shift = r.num_edges() + 2 - 2 * r.num_vertices();
  return Laurent::monomial(vars, {shift}, 1) * value;
}

SurfaceDiagram surface_diagram_of(const CombinatorialMap& r) {
  if (!is_connected(r)) throw error("unsigned ribbon graph must be connected");
  int g = genus(r, r.full_edge_set());
  MedialGraph m = medial(r);
  int n = m.num_nodes();
  return {std::move(m), g, n};
}

SurfaceDiagram surface_diagram(const TaitGraph& t) {
  return surface_diagram_of(unsign(t.graph).map);
}

Laurent bracket_surface(const SurfaceDiagram& sd, int node_cap) {
  const MedialGraph& m = sd.medial;
  if (m.num_nodes() > node_cap) throw error("node count exceeds the smoothing cap");
  VarsPtr vars = bracket_vars();
  Laurent delta = bracket_delta();
  std::vector<Laurent> dpow = {Laurent::constant(vars, 1)};
  for (int i = 0; i < m.num_strands(); ++i) dpow.push_back(dpow.back() * delta);

  Laurent total(vars);
  const int n = m.num_nodes();
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
    SmoothingResult sr = smooth(m, static_cast<Smoothing>(s));
    int a_exp = n - 2 * sr.b_count;
    for (const auto& [e, c] : dpow[sr.cycles - 1].terms()) total.add_term({e[0] + a_exp}, c);
  }
  return total;
}

Laurent bracket_vertex(const TaitGraph& t, int node_cap, const CycleWeightFn& weight) {
  CombinatorialMap r = unsign(t.graph).map;
  MedialGraph m = medial(r);
  VarsPtr vars = bracket_vars();
  Laurent tw = Laurent::monomial(vars, {2}, -1);   // -A^2
  Laurent rw = Laurent::monomial(vars, {-2}, 1);   // A^-2
  Laurent sum(vars);
  for (ArrowCovering a : arrow_coverings(m, node_cap))
    sum += w_eval(rho(m, a), tw, rw, weight);
  Laurent pref = Laurent::monomial(vars, {m.num_nodes()}, 1);
  return (pref * sum).divide_exact(bracket_delta());
}

namespace {

Laurent delta_power(int n) {
  return n >= 0 ? bracket_delta().pow(n)
                : Laurent::constant(bracket_vars(), 1).divide_exact(bracket_delta().pow(-n));
}

template <typename F>
RouteResult timed_route(const std::string& name, F&& f) {
  auto start = std::chrono::steady_clock::now();
  Laurent value;
  try {
    value = f();
  } catch (const error& e) {
    throw error("route " + name + ": " + e.what());
  }
  auto stop = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return {name, std::move(value), ms};
}

}  // namespace

StateSumReport verify_all(const LinkDiagram& d, const std::string& name, const Caps& caps,
                          std::optional<int> outer) {
  StateSumReport report;
  report.diagram = name;

  const bool crossingless = d.num_crossings() == 0;
  report.routes.push_back(
      timed_route("direct", [&] { return bracket_direct(d, caps.crossings); }));

  TaitGraph t = crossingless ? tait_graph(d, CheckerboardColouring{})
                             : tait_graph(d, checkerboard(d, outer));
  report.routes.push_back(timed_route("potts", [&] { return bracket_potts(t, caps.edges); }));
  report.routes.push_back(
      timed_route("ribbon", [&] { return bracket_ribbon(t, caps.edges); }));
  report.routes.push_back(timed_route("br", [&] {
    // Each crossingless circle is an isolated disc; only the one-circle case
    // is a connected ribbon graph, the rest have the empty state sum only.
    if (crossingless && d.free_loops > 1) return delta_power(d.free_loops - 1);
    return bracket_via_br(t, caps.edges);
  }));
  report.routes.push_back(timed_route("smoothing", [&] {
    if (crossingless) return delta_power(d.free_loops - 1);
    return bracket_surface(surface_diagram(t), caps.nodes);
  }));
  report.routes.push_back(timed_route("vertex", [&] {
    if (crossingless) return delta_power(d.free_loops - 1);
    return bracket_vertex(t, caps.nodes);
  }));

  report.agree = true;
  for (const RouteResult& r : report.routes)
    if (r.value != report.routes.front().value) report.agree = false;
  return report;
}

std::string report_to_json(const StateSumReport& r, bool include_timings) {
  nlohmann::json j;
  j["diagram"] = r.diagram;
  j["agree"] = r.agree;
  for (const RouteResult& route : r.routes) j["routes"][route.name] = route.value.str();
  if (include_timings)
    for (const RouteResult& route : r.routes) j["timings_ms"][route.name] = route.millis;
  return j.dump(2);
}

std::string report_to_text(const StateSumReport& r, bool include_timings) {
  std::ostringstream os;
  os << "diagram: " << r.diagram << "\n";
  for (const RouteResult& route : r.routes) {
    os << "  " << route.name << ": " << route.value.str();
    if (include_timings) os << "   (" << route.millis << " ms)";
    os << "\n";
  }
  os << "agree: " << (r.agree ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace kb
