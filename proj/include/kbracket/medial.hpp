#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kbracket/cmap.hpp"
#include "kbracket/laurent.hpp"

namespace kb {

constexpr int kDefaultNodeCap = 16;

/// Choices per node packed as a bitmask, bit set = B-smoothing.
using Smoothing = std::uint32_t;
/// Orientation per strand packed as a bitmask, bit set = strand reversed
/// against its stored direction.
using ArrowCovering = std::uint64_t;

/// 4-valent graph with one node per ribbon of the source map. A node's four
/// slots are the corners flanking the ribbon's two attachments; strands run
/// between consecutive attachments along the discs (one strand per dart of
/// the source). pairing_a reconnects each attachment's own corners (the
/// resolution that keeps discs apart), pairing_b runs along the ribbon sides.
class MedialGraph {
 public:
  explicit MedialGraph(const CombinatorialMap& ribbon);

  int num_nodes() const { return num_nodes_; }
  int num_strands() const { return static_cast<int>(strand_ends_.size()); }
  int num_slots() const { return 2 * num_strands(); }

  int node_of_slot(int slot) const { return node_of_slot_[slot]; }
  int strand_at_slot(int slot) const { return strand_at_slot_[slot]; }
  /// Stored direction: tail = element 0, head = element 1.
  const std::array<int, 2>& strand_ends(int strand) const { return strand_ends_[strand]; }
  const std::array<int, 4>& node_slots(int node) const { return node_slots_[node]; }

  /// Partner of `slot` under the A- or B-pairing of its node.
  int pair_slot(int slot, bool b_pairing) const;

 private:
  int num_nodes_;
  std::vector<std::array<int, 2>> strand_ends_;
  std::vector<int> node_of_slot_, strand_at_slot_;
  std::vector<std::array<int, 4>> node_slots_;
};

/// Requires a connected map with at least one edge; disconnected inputs must
/// be processed per component.
MedialGraph medial(const CombinatorialMap& ribbon);

/// A closed strand walk: strands in traversal order with their directions.
struct OrientedCycle {
  std::vector<int> strands;
  std::vector<bool> forward;
};

struct SmoothingResult {
  int cycles;   // p(s)
  int b_count;  // number of B-choices
};

SmoothingResult smooth(const MedialGraph& m, Smoothing s);

/// Cycles of a smoothing, each walked once in an arbitrary direction.
std::vector<OrientedCycle> smoothing_cycles(const MedialGraph& m, Smoothing s);

/// All orientations with two arrows in and two out at every node, in
/// increasing bitmask order.
std::vector<ArrowCovering> arrow_coverings(const MedialGraph& m, int cap = kDefaultNodeCap);

/// The 2^{p(s)} orientations of a smoothing's cycles, as strand bitmasks.
std::vector<ArrowCovering> coverings_of_smoothing(const MedialGraph& m, Smoothing s);

/// One summand of the resolution of an arrow covering: a smoothing choice
/// consistent with the arrows together with the directed cycles it produces.
/// Its weight is r^{b_count}.
struct ResolvedState {
  Smoothing smoothing;
  ArrowCovering arrows;
  std::vector<OrientedCycle> cycles;
  int b_count;
};

/// Resolves every node of an arrow covering into each pairing consistent with
/// the arrows (a pairing is consistent when each pair joins one incoming and
/// one outgoing strand) and expands the product over nodes.
std::vector<ResolvedState> rho(const MedialGraph& m, ArrowCovering a);

/// Antisymmetric +-1 weight on directed cycles.
using CycleWeightFn = std::function<int(const OrientedCycle&)>;

/// +1 iff the cycle traverses its minimum strand id forwards.
int canonical_cycle_weight(const OrientedCycle& c);
/// A second antisymmetric rule (maximum strand id), used to check that state
/// sums do not depend on the choice.
int alternative_cycle_weight(const OrientedCycle& c);

/// Sum of r^{b_count} * prod_cycles t^{weight(cycle)} over resolved states.
/// `t` must be invertible.
Laurent w_eval(const std::vector<ResolvedState>& states, const Laurent& t, const Laurent& r,
               const CycleWeightFn& weight = canonical_cycle_weight);

}  // namespace kb
