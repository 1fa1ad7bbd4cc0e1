#include "kbracket/knotio.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kb {

VarsPtr bracket_vars() {
  static VarsPtr vars = make_vars({"A"});
  return vars;
}

Laurent bracket_delta() {
  Laurent d(bracket_vars());
  d.add_term({2}, -1);
  d.add_term({-2}, -1);
  return d;
}

LinkDiagram parse_pd(const std::string& text) {
  LinkDiagram d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "O") {
      std::string extra;
      if (ls >> extra) throw error("line " + std::to_string(lineno) + ": O takes no arguments");
      ++d.free_loops;
    } else if (tag == "X") {
      Crossing c{};
      for (int i = 0; i < 4; ++i)
        if (!(ls >> c.arcs[i]) || c.arcs[i] <= 0)
          throw error("line " + std::to_string(lineno) +
                      ": expected four positive arc labels after X");
      std::string extra;
      if (ls >> extra) throw error("line " + std::to_string(lineno) + ": trailing tokens");
      d.crossings.push_back(c);
    } else {
      throw error("line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  if (d.crossings.empty() && d.free_loops == 0) throw error("empty PD input");
  if (!d.crossings.empty() && d.free_loops > 0)
    throw error("crossingless components may not be mixed with crossings");
  if (!d.crossings.empty()) {
    std::map<int, int> count;
    for (const auto& c : d.crossings)
      for (int a : c.arcs) ++count[a];
    for (const auto& [arc, n] : count)
      if (n != 2)
        throw error("arc " + std::to_string(arc) + " occurs " + std::to_string(n) +
                    " times; every arc must occur exactly twice");
    CombinatorialMap m = diagram_map(d);
    if (!is_connected(m)) throw error("diagram is not connected");
    if (genus(m, m.full_edge_set()) != 0) throw error("diagram is not planar (genus > 0)");
  }
  return d;
}

std::string format_pd(const LinkDiagram& d) {
  std::ostringstream os;
  for (int i = 0; i < d.free_loops; ++i) os << "O\n";
  for (const auto& c : d.crossings)
    os << "X " << c.arcs[0] << " " << c.arcs[1] << " " << c.arcs[2] << " " << c.arcs[3]
       << "\n";
  return os.str();
}

CombinatorialMap diagram_map(const LinkDiagram& d) {
  const int n = d.num_crossings();
  std::vector<std::vector<int>> cycles(n);
  for (int c = 0; c < n; ++c) cycles[c] = {4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3};
  std::map<int, std::vector<int>> by_arc;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) by_arc[d.crossings[c].arcs[p]].push_back(4 * c + p);
  std::vector<int> alpha(4 * n, -1);
  for (const auto& [arc, darts] : by_arc) {
    if (darts.size() != 2)
      throw error("arc " + std::to_string(arc) + " does not occur exactly twice");
    alpha[darts[0]] = darts[1];
    alpha[darts[1]] = darts[0];
  }
  return CombinatorialMap(std::move(cycles), std::move(alpha));
}

FaceStructure trace_faces(const LinkDiagram& d) {
  CombinatorialMap m = diagram_map(d);
  FaceStructure f;
  f.face_of_dart.assign(m.num_darts(), -1);
  for (int start = 0; start < m.num_darts(); ++start) {
    if (f.face_of_dart[start] != -1) continue;
    int id = f.num_faces++;
    int x = start;
    do {
      f.face_of_dart[x] = id;
      x = m.sigma(m.alpha(x));
    } while (x != start);
  }
  return f;
}

CheckerboardColouring checkerboard(const LinkDiagram& d, std::optional<int> outer) {
  if (d.num_crossings() == 0)
    throw error("checkerboard colouring requires at least one crossing");
  CheckerboardColouring col;
  col.faces = trace_faces(d);
  const int nf = col.faces.num_faces;
  col.outer_face = outer.value_or(0);
  if (col.outer_face < 0 || col.outer_face >= nf) throw error("outer face id out of range");
  CombinatorialMap m = diagram_map(d);
  std::vector<int> colour(nf, -1);
  colour[col.outer_face] = 0;
  std::vector<int> queue = {col.outer_face};
  std::vector<std::vector<int>> adj(nf);
  for (int x = 0; x < m.num_darts(); ++x) {
    int fa = col.faces.face_of_dart[x];
    int fb = col.faces.face_of_dart[m.alpha(x)];
    adj[fa].push_back(fb);
  }
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (int g : adj[f]) {
      if (colour[g] == -1) {
        colour[g] = 1 - colour[f];
        queue.push_back(g);
      } else if (colour[g] == colour[f]) {
        throw error("face adjacency is not 2-colourable");
      }
    }
  }
  for (int f = 0; f < nf; ++f)
    if (colour[f] == -1) throw error("face adjacency is not connected");
  col.black.resize(nf);
  for (int f = 0; f < nf; ++f) col.black[f] = colour[f] == 1;
  return col;
}

TaitGraph tait_graph(const LinkDiagram& d, const CheckerboardColouring& c) {
  const int n = d.num_crossings();
  if (n == 0) {
    // A crossingless diagram: one isolated vertex per black region.
    CombinatorialMap m(std::vector<std::vector<int>>(d.free_loops), {});
    return {SignedPlaneGraph(std::move(m), {}), {}};
  }

  // Black quadrants of each crossing form one diagonal; the diagonal the
  // A-smoothing joins gives a positive edge.
  std::vector<std::array<int, 2>> black_pos(n);
  std::vector<Sign> sign_of_crossing(n);
  for (int cr = 0; cr < n; ++cr) {
    bool b0 = c.black[c.faces.face_of_corner(cr, 0)];
    bool b1 = c.black[c.faces.face_of_corner(cr, 1)];
    bool b2 = c.black[c.faces.face_of_corner(cr, 2)];
    bool b3 = c.black[c.faces.face_of_corner(cr, 3)];
    if (b0 == b1 || b1 == b2 || b2 == b3)
      throw error("quadrant colours do not alternate around a crossing");
    if (b1 && b3) {
      black_pos[cr] = {1, 3};
      sign_of_crossing[cr] = Sign::plus;
    } else {
      black_pos[cr] = {0, 2};
      sign_of_crossing[cr] = Sign::minus;
    }
  }

  std::vector<int> black_face_index(c.faces.num_faces, -1);
  std::vector<std::vector<int>> tait_cycles;
  for (int f = 0; f < c.faces.num_faces; ++f)
    if (c.black[f]) {
      black_face_index[f] = static_cast<int>(tait_cycles.size());
      tait_cycles.emplace_back();
    }

  // Walk each face orbit once; the black corners met along the walk give the
  // rotation at the corresponding Tait vertex. Tait darts are 2c and 2c+1 for
  // the lower and higher black position of crossing c.
  CombinatorialMap m = diagram_map(d);
  std::vector<char> dart_seen(m.num_darts(), 0);
  for (int start = 0; start < m.num_darts(); ++start) {
    if (dart_seen[start]) continue;
    int face = c.faces.face_of_dart[start];
    int x = start;
    do {
      dart_seen[x] = 1;
      int corner_dart = m.alpha(x);
      int cr = corner_dart / 4, pos = corner_dart % 4;
      if (c.black[c.faces.face_of_corner(cr, pos)]) {
        if (black_face_index[face] < 0) throw error("black corner on a white face");
        int td = 2 * cr + (pos == black_pos[cr][0] ? 0 : 1);
        tait_cycles[black_face_index[face]].push_back(td);
      }
      x = m.sigma(m.alpha(x));
    } while (x != start);
  }

  std::vector<int> alpha(2 * n);
  for (int cr = 0; cr < n; ++cr) {
    alpha[2 * cr] = 2 * cr + 1;
    alpha[2 * cr + 1] = 2 * cr;
  }
  CombinatorialMap tm(std::move(tait_cycles), std::move(alpha));
  // Edge i has darts {2i, 2i+1}, so edge indices coincide with crossings.
  std::vector<int> provenance(n);
  std::iota(provenance.begin(), provenance.end(), 0);
  return {SignedPlaneGraph(std::move(tm), std::move(sign_of_crossing)),
          std::move(provenance)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Laurent bracket_direct(const LinkDiagram& d, int cap) {
  const int n = d.num_crossings();
  if (n > cap) throw error("crossing count exceeds the state enumeration cap");
  VarsPtr vars = bracket_vars();
  Laurent delta = bracket_delta();
  std::vector<Laurent> delta_pow = {Laurent::constant(vars, 1)};
  for (int i = 0; i < n + d.free_loops + 1; ++i) delta_pow.push_back(delta_pow.back() * delta);

  CombinatorialMap m = n > 0 ? diagram_map(d) : CombinatorialMap({}, {});
  Laurent result(vars);
  for (std::uint64_t state = 0; state < (std::uint64_t(1) << n); ++state) {
    UnionFind uf(4 * n);
    for (int dart = 0; dart < 4 * n; ++dart) uf.unite(dart, m.alpha(dart));
    int beta = 0;
    for (int c = 0; c < n; ++c) {
      if (state >> c & 1) {
        ++beta;  // B-smoothing joins positions (0,3) and (1,2)
        uf.unite(4 * c + 0, 4 * c + 3);
        uf.unite(4 * c + 1, 4 * c + 2);
      } else {  // A-smoothing joins positions (0,1) and (2,3)
        uf.unite(4 * c + 0, 4 * c + 1);
        uf.unite(4 * c + 2, 4 * c + 3);
      }
    }
    int circles = d.free_loops;
    for (int dart = 0; dart < 4 * n; ++dart)
      if (uf.find(dart) == dart) ++circles;
    int a_exp = n - 2 * beta;
    for (const auto& [e, coeff] : delta_pow[circles - 1].terms())
      result.add_term({e[0] + a_exp}, coeff);
  }
  return result;
}

Orientation orient(const LinkDiagram& d, const std::vector<bool>& reverse) {
  Orientation o;
  std::map<int, std::vector<int>> slots_of_arc;
  for (int c = 0; c < d.num_crossings(); ++c)
    for (int p = 0; p < 4; ++p) slots_of_arc[d.crossings[c].arcs[p]].push_back(4 * c + p);
  for (const auto& [arc, slots] : slots_of_arc) o.arc_labels.push_back(arc);
  auto arc_index = [&](int arc) {
    return static_cast<std::size_t>(
        std::lower_bound(o.arc_labels.begin(), o.arc_labels.end(), arc) -
        o.arc_labels.begin());
  };
  o.head_slot.assign(o.arc_labels.size(), -1);

  std::vector<char> done(o.arc_labels.size(), 0);
  for (std::size_t i = 0; i < o.arc_labels.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> component;
    // Direct the seed arc towards its higher-numbered slot, then follow the
    // strand through crossings (position p continues at p+2).
    int arc = o.arc_labels[i];
    const auto& ss = slots_of_arc[arc];
    int head = std::max(ss[0], ss[1]);
    for (;;) {
      std::size_t ai = arc_index(arc);
      if (done[ai]) {
        if (o.head_slot[ai] != head) throw error("inconsistent orientation");
        break;
      }
      done[ai] = 1;
      o.head_slot[ai] = head;
      component.push_back(arc);
      int out_slot = 4 * (head / 4) + (head % 4 + 2) % 4;
      arc = d.arc_at(out_slot);
      const auto& ns = slots_of_arc[arc];
      head = (ns[0] == out_slot) ? ns[1] : ns[0];
      if (ns[0] == ns[1]) throw error("arc with coincident endpoints");
    }
    o.components.push_back(std::move(component));
  }
  if (!reverse.empty()) {
    if (reverse.size() != o.components.size())
      throw error("one reversal flag per component required");
    for (std::size_t ci = 0; ci < o.components.size(); ++ci) {
      if (!reverse[ci]) continue;
      for (int arc : o.components[ci]) {
        std::size_t ai = arc_index(arc);
        const auto& ss = slots_of_arc[arc];
        o.head_slot[ai] = (o.head_slot[ai] == ss[0]) ? ss[1] : ss[0];
      }
    }
  }
  return o;
}

int writhe(const LinkDiagram& d, const Orientation& o) {
  auto arc_index = [&](int arc) {
    return static_cast<std::size_t>(
        std::lower_bound(o.arc_labels.begin(), o.arc_labels.end(), arc) -
        o.arc_labels.begin());
  };
  int w = 0;
  for (int c = 0; c < d.num_crossings(); ++c) {
    auto enters_at = [&](int pos) {
      int slot = 4 * c + pos;
      return o.head_slot[arc_index(d.crossings[c].arcs[pos])] == slot;
    };
    int under_in = enters_at(0) ? 0 : 2;
    int over_in = enters_at(1) ? 1 : 3;
    if (enters_at(0) == enters_at(2) || enters_at(1) == enters_at(3))
      throw error("inconsistent orientation at a crossing");
    w += ((over_in - under_in + 4) % 4 == 1) ? -1 : +1;
  }
  return w;
}

Laurent jones(const LinkDiagram& d, const Orientation& o, int cap) {
  int w = writhe(d, o);
  Laurent bracket = bracket_direct(d, cap);
  Laurent factor = Laurent::monomial(bracket_vars(), {-3 * w}, (w % 2 == 0) ? 1 : -1);
  return factor * bracket;
}

}  // namespace kb
