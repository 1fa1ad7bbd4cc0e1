#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kbracket/laurent.hpp"

namespace kb {

/// Edge subsets are bitmasks over edge indices; subset enumeration is capped.
using EdgeSet = std::uint32_t;
constexpr int kDefaultEdgeCap = 24;

/// Dart-based rotation system: alpha is a fixed-point-free involution pairing
/// the two darts of each edge, sigma's orbits are the counterclockwise dart
/// orders at vertices. Vertices with no darts are carried as a count so that
/// boundary tracing sees their discs. Edge i is the i-th alpha orbit in
/// min-dart order. Immutable after construction.
class CombinatorialMap {
 public:
  /// `vertex_cycles` lists the sigma orbit of each vertex (may be empty for an
  /// isolated vertex); `alpha` maps each dart to its partner.
  CombinatorialMap(std::vector<std::vector<int>> vertex_cycles, std::vector<int> alpha);

  int num_darts() const { return static_cast<int>(alpha_.size()); }
  int num_edges() const { return static_cast<int>(edge_darts_.size()); }
  int num_vertices() const { return static_cast<int>(vertex_cycles_.size()); }

  int sigma(int dart) const { return sigma_.at(dart); }
  int alpha(int dart) const { return alpha_.at(dart); }
  int edge_of(int dart) const { return edge_of_.at(dart); }
  int vertex_of(int dart) const { return vertex_of_.at(dart); }
  const std::array<int, 2>& edge_darts(int edge) const { return edge_darts_.at(edge); }
  const std::vector<std::vector<int>>& vertex_cycles() const { return vertex_cycles_; }

  EdgeSet full_edge_set() const;
  void check_edge_set(EdgeSet a) const;

  bool operator==(const CombinatorialMap& other) const;

 private:
  std::vector<std::vector<int>> vertex_cycles_;
  std::vector<int> sigma_, alpha_, edge_of_, vertex_of_;
  std::vector<std::array<int, 2>> edge_darts_;
};

struct RankProfile {
  int components;  // k(A), isolated vertices included
  int rank;        // |V| - k(A)
  int nullity;     // |A| - rank
};

RankProfile components_rank_nullity(const CombinatorialMap& m, EdgeSet a);

/// Boundary circles of the spanning ribbon subgraph (V, A): orbits of the
/// face walk restricted to darts of A, plus one circle per vertex with no
/// incident dart in A.
int boundary_components(const CombinatorialMap& m, EdgeSet a);

/// Genus of (V, A) from 2k - |V| + |A| - boundary = 2g. A parity failure or
/// negative value means the tracing is broken and throws.
int genus(const CombinatorialMap& m, EdgeSet a);

bool is_connected(const CombinatorialMap& m);

/// All 2^|E| spanning edge subsets in increasing bitmask order.
class SubsetRange {
 public:
  explicit SubsetRange(const CombinatorialMap& m, int cap = kDefaultEdgeCap);
  struct iterator {
    std::uint64_t value;
    EdgeSet operator*() const { return static_cast<EdgeSet>(value); }
    iterator& operator++() {
      ++value;
      return *this;
    }
    bool operator!=(const iterator& o) const { return value != o.value; }
  };
  iterator begin() const { return {0}; }
  iterator end() const { return {std::uint64_t(1) << num_edges_}; }

 private:
  int num_edges_;
};

enum class Sign : std::int8_t { plus = +1, minus = -1 };

/// An edge-signed map whose every connected component embeds in the sphere.
struct SignedPlaneGraph {
  CombinatorialMap map;
  std::vector<Sign> signs;  // indexed by edge

  SignedPlaneGraph(CombinatorialMap m, std::vector<Sign> s);

  EdgeSet positive_edges() const;
  EdgeSet negative_edges() const;
};

/// JSON serialization, {"sigma": [[...], ...], "alpha": [[d,d'], ...]} with an
/// optional "signs" array indexed by position in the alpha list.
CombinatorialMap map_from_json(const std::string& text);
SignedPlaneGraph signed_graph_from_json(const std::string& text);
std::string map_to_json(const CombinatorialMap& m);
std::string signed_graph_to_json(const SignedPlaneGraph& g);

}  // namespace kb
