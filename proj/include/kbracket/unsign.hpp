#pragma once

#include "kbracket/cmap.hpp"

namespace kb {

/// The input map retagged as a ribbon graph, signs carried along unchanged.
struct FattenedGraph {
  CombinatorialMap map;
  std::vector<Sign> signs;
};

FattenedGraph fatten(const SignedPlaneGraph& g);

/// Unsigned ribbon graph produced from a signed graph; edge i corresponds to
/// edge i of the input.
struct UnsignedRibbonGraph {
  CombinatorialMap map;
};

/// Rebuilds the map around the boundary of the spanning subgraph carried by
/// the positive edges: each boundary circle becomes a disc, and every edge
/// reattaches at the two slots the walk passes for it. The defining property,
/// exercised exhaustively by the tests, is that boundary counts transform by
/// A -> A xor positive_edges.
UnsignedRibbonGraph unsign(const SignedPlaneGraph& g);

/// Same construction on an arbitrary orientable map (no planarity check);
/// `positive` marks the edges whose ribbons the walk runs along.
CombinatorialMap unsign_core(const CombinatorialMap& m, EdgeSet positive);

/// S_A = (A xor E_+) under the edge correspondence.
EdgeSet subgraph_correspondence(const SignedPlaneGraph& g, EdgeSet a);

}  // namespace kb
