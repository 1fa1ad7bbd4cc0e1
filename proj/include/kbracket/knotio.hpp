#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kbracket/cmap.hpp"
#include "kbracket/laurent.hpp"

namespace kb {

constexpr int kDefaultCrossingCap = 20;

/// One crossing: arc labels in counterclockwise rotation, positions 0 and 2
/// carrying the under-strand.
struct Crossing {
  std::array<int, 4> arcs;
};

/// A planar link diagram. Crossingless unknot components are carried as a
/// plain count and may not be mixed with crossings in one diagram.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;

  int num_crossings() const { return static_cast<int>(crossings.size()); }
  int dart(int crossing, int pos) const { return 4 * crossing + pos; }
  int arc_at(int dart) const { return crossings[dart / 4].arcs[dart % 4]; }
};

/// `X a b c d` per crossing, `O` per crossingless unknot component; `#`
/// starts a comment. Rejects malformed codes with the violated invariant
/// named in the message.
LinkDiagram parse_pd(const std::string& text);
std::string format_pd(const LinkDiagram& d);

/// The underlying 4-valent map: dart 4c+p, counterclockwise sigma at each
/// crossing, alpha pairing the two occurrences of each arc.
CombinatorialMap diagram_map(const LinkDiagram& d);

/// Faces are the orbits of the face walk, numbered in discovery order from
/// dart 0; face_of_corner(c,p) locates the quadrant between positions p and
/// p+1 of crossing c.
struct FaceStructure {
  std::vector<int> face_of_dart;
  int num_faces = 0;

  int face_of_corner(int crossing, int pos) const {
    return face_of_dart[4 * crossing + (pos + 1) % 4];
  }
};

FaceStructure trace_faces(const LinkDiagram& d);

struct CheckerboardColouring {
  FaceStructure faces;
  std::vector<bool> black;  // per face
  int outer_face = 0;       // always white
};

/// Proper 2-colouring with the designated outer face white; the default outer
/// face is the one containing dart 0's left side.
CheckerboardColouring checkerboard(const LinkDiagram& d, std::optional<int> outer = {});

struct TaitGraph {
  SignedPlaneGraph graph;
  std::vector<int> crossing_of_edge;
};

/// One vertex per black face, one signed edge per crossing, rotation induced
/// by the order in which a black face's boundary walk meets its crossings.
/// A crossing is positive exactly when its black quadrants are the pair that
/// the A-smoothing joins.
TaitGraph tait_graph(const LinkDiagram& d, const CheckerboardColouring& c);

/// Kauffman bracket by brute-force enumeration of all 2^n smoothing states,
/// counting state circles with union-find on arc ends. This is the reference
/// value every other computation is checked against.
Laurent bracket_direct(const LinkDiagram& d, int cap = kDefaultCrossingCap);

/// Arc directions, one per link component. head_slot[arc] is the dart index
/// at which the arc runs into its crossing.
struct Orientation {
  std::vector<int> arc_labels;
  std::vector<int> head_slot;          // parallel to arc_labels
  std::vector<std::vector<int>> components;  // arc labels per component
};

/// Canonical orientation, optionally reversing selected components.
Orientation orient(const LinkDiagram& d, const std::vector<bool>& reverse = {});

int writhe(const LinkDiagram& d, const Orientation& o);

/// (-A^3)^{-writhe} times the bracket.
Laurent jones(const LinkDiagram& d, const Orientation& o, int cap = kDefaultCrossingCap);

VarsPtr bracket_vars();

/// -A^2 - A^-2, the loop weight.
Laurent bracket_delta();

}  // namespace kb
