#include "kbracket/cmap.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace kb {

CombinatorialMap::CombinatorialMap(std::vector<std::vector<int>> vertex_cycles,
                                   std::vector<int> alpha)
    : vertex_cycles_(std::move(vertex_cycles)), alpha_(std::move(alpha)) {
  const int nd = static_cast<int>(alpha_.size());
  if (nd % 2 != 0) throw error("odd number of darts");
  sigma_.assign(nd, -1);
  vertex_of_.assign(nd, -1);
  for (std::size_t v = 0; v < vertex_cycles_.size(); ++v) {
    const auto& cyc = vertex_cycles_[v];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int d = cyc[i];
      if (d < 0 || d >= nd) throw error("dart index out of range in sigma");
      if (sigma_[d] != -1 || vertex_of_[d] != -1)
        throw error("sigma is not a permutation: dart listed twice");
      sigma_[d] = cyc[(i + 1) % cyc.size()];
      vertex_of_[d] = static_cast<int>(v);
    }
  }
  for (int d = 0; d < nd; ++d)
    if (sigma_[d] == -1) throw error("sigma is not a permutation: dart missing");
  for (int d = 0; d < nd; ++d) {
    int a = alpha_[d];
    if (a < 0 || a >= nd) throw error("dart index out of range in alpha");
    if (a == d) throw error("alpha has a fixed point");
    if (alpha_[a] != d) throw error("alpha is not an involution");
  }
  edge_of_.assign(nd, -1);
  for (int d = 0; d < nd; ++d) {
    if (edge_of_[d] != -1) continue;
    int e = static_cast<int>(edge_darts_.size());
    edge_of_[d] = e;
    edge_of_[alpha_[d]] = e;
    edge_darts_.push_back({d, alpha_[d]});
  }
  if (num_edges() > 31) throw error("too many edges for bitmask edge sets");
}

EdgeSet CombinatorialMap::full_edge_set() const {
  return num_edges() == 0 ? 0 : static_cast<EdgeSet>((std::uint64_t(1) << num_edges()) - 1);
}

void CombinatorialMap::check_edge_set(EdgeSet a) const {
  if (a & ~full_edge_set()) throw error("edge index out of range in edge set");
}

bool CombinatorialMap::operator==(const CombinatorialMap& other) const {
  // Equality of the permutation pair plus the isolated-vertex count; the
  // order in which vertices or cycle entries were listed is presentation.
  return sigma_ == other.sigma_ && alpha_ == other.alpha_ &&
         num_vertices() == other.num_vertices();
}

RankProfile components_rank_nullity(const CombinatorialMap& m, EdgeSet a) {
  m.check_edge_set(a);
  std::vector<int> parent(m.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int k = m.num_vertices();
  int edge_count = 0;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (!(a >> e & 1)) continue;
    ++edge_count;
    int u = find(m.vertex_of(m.edge_darts(e)[0]));
    int v = find(m.vertex_of(m.edge_darts(e)[1]));
    if (u != v) {
      parent[u] = v;
      --k;
    }
  }
  int rank = m.num_vertices() - k;
  return {k, rank, edge_count - rank};
}

int boundary_components(const CombinatorialMap& m, EdgeSet a) {
  m.check_edge_set(a);
  auto in_a = [&](int d) { return (a >> m.edge_of(d)) & 1; };
  // sigma restricted to darts of A: skip absent edges around the vertex.
  auto sigma_a = [&](int d) {
    int x = m.sigma(d);
    while (!in_a(x)) x = m.sigma(x);
    return x;
  };
  std::vector<char> seen(m.num_darts(), 0);
  int circles = 0;
  for (int d = 0; d < m.num_darts(); ++d) {
    if (!in_a(d) || seen[d]) continue;
    ++circles;
    int x = d;
    do {
      seen[x] = 1;
      x = sigma_a(m.alpha(x));
    } while (x != d);
  }
  std::vector<char> touched(m.num_vertices(), 0);
  for (int d = 0; d < m.num_darts(); ++d)
    if (in_a(d)) touched[m.vertex_of(d)] = 1;
  for (int v = 0; v < m.num_vertices(); ++v)
    if (!touched[v]) ++circles;
  return circles;
}

int genus(const CombinatorialMap& m, EdgeSet a) {
  RankProfile rp = components_rank_nullity(m, a);
  int edges = 0;
  for (int e = 0; e < m.num_edges(); ++e)
    if (a >> e & 1) ++edges;
  int doubled = 2 * rp.components - m.num_vertices() + edges - boundary_components(m, a);
  if (doubled < 0 || doubled % 2 != 0)
    throw error("boundary tracing produced an impossible genus");
  return doubled / 2;
}

bool is_connected(const CombinatorialMap& m) {
  return components_rank_nullity(m, m.full_edge_set()).components <= 1;
}

SubsetRange::SubsetRange(const CombinatorialMap& m, int cap) : num_edges_(m.num_edges()) {
  if (num_edges_ > cap) throw error("edge count exceeds the subset enumeration cap");
}

SignedPlaneGraph::SignedPlaneGraph(CombinatorialMap m, std::vector<Sign> s)
    : map(std::move(m)), signs(std::move(s)) {
  if (static_cast<int>(signs.size()) != map.num_edges())
    throw error("one sign per edge required");
  if (genus(map, map.full_edge_set()) != 0)
    throw error("signed plane graph must have genus 0");
}

EdgeSet SignedPlaneGraph::positive_edges() const {
  EdgeSet s = 0;
  for (std::size_t e = 0; e < signs.size(); ++e)
    if (signs[e] == Sign::plus) s |= EdgeSet(1) << e;
  return s;
}

EdgeSet SignedPlaneGraph::negative_edges() const {
  return positive_edges() ^ map.full_edge_set();
}

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw error("malformed JSON");
  return j;
}

CombinatorialMap map_from_parsed(const json& j, std::vector<Sign>* signs_out) {
  if (!j.is_object() || !j.contains("sigma") || !j.contains("alpha"))
    throw error("map JSON requires \"sigma\" and \"alpha\"");
  std::vector<std::vector<int>> cycles;
  for (const auto& cyc : j.at("sigma")) cycles.push_back(cyc.get<std::vector<int>>());
  std::vector<std::array<int, 2>> pairs;
  for (const auto& pr : j.at("alpha")) {
    auto v = pr.get<std::vector<int>>();
    if (v.size() != 2) throw error("alpha entries must be dart pairs");
    pairs.push_back({v[0], v[1]});
  }
  std::vector<int> alpha(pairs.size() * 2, -1);
  for (const auto& [d, dd] : pairs) {
    if (d < 0 || dd < 0 || d >= static_cast<int>(alpha.size()) ||
        dd >= static_cast<int>(alpha.size()))
      throw error("dart index out of range in alpha");
    if (alpha[d] != -1 || alpha[dd] != -1) throw error("dart paired twice in alpha");
    alpha[d] = dd;
    alpha[dd] = d;
  }
  CombinatorialMap m(std::move(cycles), std::move(alpha));
  if (signs_out) {
    if (!j.contains("signs")) throw error("signed graph JSON requires \"signs\"");
    const auto& sj = j.at("signs");
    if (sj.size() != pairs.size()) throw error("one sign per alpha pair required");
    // Signs are indexed by position in the alpha list; translate to the
    // canonical edge numbering.
    signs_out->assign(pairs.size(), Sign::plus);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::string s = sj[i].get<std::string>();
      Sign sign;
      if (s == "+")
        sign = Sign::plus;
      else if (s == "-")
        sign = Sign::minus;
      else
        throw error("signs must be \"+\" or \"-\"");
      (*signs_out)[m.edge_of(pairs[i][0])] = sign;
    }
  }
  return m;
}

json map_to_parsed(const CombinatorialMap& m, const std::vector<Sign>* signs) {
  json j;
  j["sigma"] = json::array();
  for (const auto& cyc : m.vertex_cycles()) j["sigma"].push_back(cyc);
  j["alpha"] = json::array();
  for (int e = 0; e < m.num_edges(); ++e) {
    const auto& d = m.edge_darts(e);
    j["alpha"].push_back({d[0], d[1]});
  }
  if (signs) {
    j["signs"] = json::array();
    for (int e = 0; e < m.num_edges(); ++e)
      j["signs"].push_back((*signs)[e] == Sign::plus ? "+" : "-");
  }
  return j;
}

}  // namespace

CombinatorialMap map_from_json(const std::string& text) {
  return map_from_parsed(parse_json(text), nullptr);
}

SignedPlaneGraph signed_graph_from_json(const std::string& text) {
  std::vector<Sign> signs;
  CombinatorialMap m = map_from_parsed(parse_json(text), &signs);
  return SignedPlaneGraph(std::move(m), std::move(signs));
}

std::string map_to_json(const CombinatorialMap& m) {
  return map_to_parsed(m, nullptr).dump();
}

std::string signed_graph_to_json(const SignedPlaneGraph& g) {
  return map_to_parsed(g.map, &g.signs).dump();
}

}  // namespace kb
