#include "kbracket/medial.hpp"

#include <algorithm>

namespace kb {

MedialGraph::MedialGraph(const CombinatorialMap& ribbon) {
  if (ribbon.num_edges() == 0) throw error("medial graph requires at least one edge");
  if (!is_connected(ribbon))
    throw error("medial graph requires a connected map; compute per component");
  num_nodes_ = ribbon.num_edges();
  const int nd = ribbon.num_darts();
  // Slot 2d is the clockwise corner of dart d, slot 2d+1 the counterclockwise
  // one. Strand d runs from corner 2d+1 to corner 2*sigma(d).
  strand_ends_.resize(nd);
  node_of_slot_.resize(2 * nd);
  strand_at_slot_.assign(2 * nd, -1);
  for (int d = 0; d < nd; ++d) {
    strand_ends_[d] = {2 * d + 1, 2 * ribbon.sigma(d)};
    node_of_slot_[2 * d] = ribbon.edge_of(d);
    node_of_slot_[2 * d + 1] = ribbon.edge_of(d);
  }
  for (int s = 0; s < nd; ++s) {
    for (int end : strand_ends_[s]) {
      if (strand_at_slot_[end] != -1) throw error("slot touched by two strands");
      strand_at_slot_[end] = s;
    }
  }
  node_slots_.resize(num_nodes_);
  for (int e = 0; e < num_nodes_; ++e) {
    auto [d0, d1] = ribbon.edge_darts(e);
    node_slots_[e] = {2 * d0, 2 * d0 + 1, 2 * d1, 2 * d1 + 1};
  }
}

int MedialGraph::pair_slot(int slot, bool b_pairing) const {
  const auto& ns = node_slots_[node_of_slot_[slot]];
  // ns = {pre(d0), post(d0), pre(d1), post(d1)}.
  int i = static_cast<int>(std::find(ns.begin(), ns.end(), slot) - ns.begin());
  static constexpr int kPairA[4] = {1, 0, 3, 2};
  static constexpr int kPairB[4] = {3, 2, 1, 0};
  return ns[b_pairing ? kPairB[i] : kPairA[i]];
}

MedialGraph medial(const CombinatorialMap& ribbon) {
  MedialGraph m(ribbon);
  // The all-A resolution must trace the discs and the all-B resolution the
  // boundary of the whole map; anything else means broken bookkeeping.
  if (smooth(m, 0).cycles != ribbon.num_vertices())
    throw error("medial construction failed the disc-count check");
  Smoothing all_b = static_cast<Smoothing>((std::uint64_t(1) << m.num_nodes()) - 1);
  if (smooth(m, all_b).cycles != boundary_components(ribbon, ribbon.full_edge_set()))
    throw error("medial construction failed the boundary-count check");
  return m;
}

std::vector<OrientedCycle> smoothing_cycles(const MedialGraph& m, Smoothing s) {
  if (m.num_nodes() < 32) {
    Smoothing all = static_cast<Smoothing>((std::uint64_t(1) << m.num_nodes()) - 1);
    if (s & ~all) throw error("smoothing has more choices than nodes");
  }
  std::vector<OrientedCycle> cycles;
  std::vector<char> visited(m.num_strands(), 0);
  for (int start = 0; start < m.num_strands(); ++start) {
    if (visited[start]) continue;
    OrientedCycle cyc;
    int strand = start;
    bool fwd = true;
    do {
      visited[strand] = 1;
      cyc.strands.push_back(strand);
      cyc.forward.push_back(fwd);
      int arrive = m.strand_ends(strand)[fwd ? 1 : 0];
      bool b = (s >> m.node_of_slot(arrive)) & 1;
      int depart = m.pair_slot(arrive, b);
      strand = m.strand_at_slot(depart);
      fwd = (m.strand_ends(strand)[0] == depart);
    } while (!(strand == start && fwd));
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

SmoothingResult smooth(const MedialGraph& m, Smoothing s) {
  int b = 0;
  for (int v = 0; v < m.num_nodes(); ++v)
    if (s >> v & 1) ++b;
  return {static_cast<int>(smoothing_cycles(m, s).size()), b};
}

std::vector<ArrowCovering> arrow_coverings(const MedialGraph& m, int cap) {
  if (m.num_nodes() > cap) throw error("node count exceeds the arrow covering cap");
  const int ns = m.num_strands();
  std::vector<int> in_count(m.num_nodes(), 0), out_count(m.num_nodes(), 0);
  std::vector<ArrowCovering> result;
  ArrowCovering current = 0;

  auto apply = [&](int strand, bool reversed, int delta) {
    int head = m.strand_ends(strand)[reversed ? 0 : 1];
    int tail = m.strand_ends(strand)[reversed ? 1 : 0];
    in_count[m.node_of_slot(head)] += delta;
    out_count[m.node_of_slot(tail)] += delta;
  };
  std::function<void(int)> rec = [&](int strand) {
    if (strand == ns) {
      result.push_back(current);
      return;
    }
    for (int rev = 0; rev <= 1; ++rev) {
      apply(strand, rev, +1);
      bool ok = true;
      for (int end : m.strand_ends(strand)) {
        int node = m.node_of_slot(end);
        if (in_count[node] > 2 || out_count[node] > 2) ok = false;
      }
      if (ok) {
        if (rev) current |= ArrowCovering(1) << strand;
        rec(strand + 1);
        if (rev) current &= ~(ArrowCovering(1) << strand);
      }
      apply(strand, rev, -1);
    }
  };
  rec(0);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<ArrowCovering> coverings_of_smoothing(const MedialGraph& m, Smoothing s) {
  std::vector<OrientedCycle> cycles = smoothing_cycles(m, s);
  std::vector<ArrowCovering> result;
  const std::size_t p = cycles.size();
  for (std::uint64_t choice = 0; choice < (std::uint64_t(1) << p); ++choice) {
    ArrowCovering mask = 0;
    for (std::size_t i = 0; i < p; ++i) {
      bool flip = (choice >> i) & 1;
      const OrientedCycle& c = cycles[i];
      for (std::size_t j = 0; j < c.strands.size(); ++j) {
        bool reversed = c.forward[j] == flip;
        if (reversed) mask |= ArrowCovering(1) << c.strands[j];
      }
    }
    result.push_back(mask);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<ResolvedState> rho(const MedialGraph& m, ArrowCovering a) {
  // A slot is incoming when its strand's arrow points into it.
  auto incoming = [&](int slot) {
    int s = m.strand_at_slot(slot);
    bool reversed = (a >> s) & 1;
    return m.strand_ends(s)[reversed ? 0 : 1] == slot;
  };
  auto consistent = [&](int node, bool b_pairing) {
    for (int slot : m.node_slots(node)) {
      if (m.pair_slot(slot, b_pairing) == slot) throw error("degenerate pairing");
      if (incoming(slot) == incoming(m.pair_slot(slot, b_pairing))) return false;
    }
    return true;
  };

  Smoothing forced = 0;
  std::vector<int> free_nodes;
  for (int v = 0; v < m.num_nodes(); ++v) {
    bool ok_a = consistent(v, false), ok_b = consistent(v, true);
    if (!ok_a && !ok_b) throw error("arrow covering consistent with neither pairing");
    if (ok_a && ok_b)
      free_nodes.push_back(v);
    else if (ok_b)
      forced |= Smoothing(1) << v;
  }

  std::vector<ResolvedState> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << free_nodes.size()); ++pick) {
    Smoothing s = forced;
    for (std::size_t i = 0; i < free_nodes.size(); ++i)
      if (pick >> i & 1) s |= Smoothing(1) << free_nodes[i];

    // Directed cycle walk along the arrows.
    std::vector<OrientedCycle> cycles;
    std::vector<char> visited(m.num_strands(), 0);
    int b_count = 0;
    for (int v = 0; v < m.num_nodes(); ++v)
      if (s >> v & 1) ++b_count;
    for (int start = 0; start < m.num_strands(); ++start) {
      if (visited[start]) continue;
      OrientedCycle cyc;
      int strand = start;
      do {
        visited[strand] = 1;
        bool reversed = (a >> strand) & 1;
        cyc.strands.push_back(strand);
        cyc.forward.push_back(!reversed);
        int arrive = m.strand_ends(strand)[reversed ? 0 : 1];
        bool b = (s >> m.node_of_slot(arrive)) & 1;
        int depart = m.pair_slot(arrive, b);
        strand = m.strand_at_slot(depart);
      } while (strand != start);
      cycles.push_back(std::move(cyc));
    }
    out.push_back({s, a, std::move(cycles), b_count});
  }
  return out;
}

int canonical_cycle_weight(const OrientedCycle& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.strands.size(); ++i)
    if (c.strands[i] < c.strands[best]) best = i;
  return c.forward[best] ? +1 : -1;
}

int alternative_cycle_weight(const OrientedCycle& c) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.strands.size(); ++i)
    if (c.strands[i] > c.strands[best]) best = i;
  return c.forward[best] ? +1 : -1;
}

Laurent w_eval(const std::vector<ResolvedState>& states, const Laurent& t, const Laurent& r,
               const CycleWeightFn& weight) {
  Laurent t_inv = t.pow(-1);
  Laurent total(t.vars_ptr());
  for (const ResolvedState& st : states) {
    Laurent term = r.pow(st.b_count);
    for (const OrientedCycle& c : st.cycles) term *= (weight(c) > 0 ? t : t_inv);
    total += term;
  }
  return total;
}

}  // namespace kb
