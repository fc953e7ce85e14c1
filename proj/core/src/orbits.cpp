#include "kmlat/error.hpp"
#include "kmlat/tree_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace kmlat {

namespace {

struct ElementLess {
  static auto flat(const UWord& u) {
    std::vector<std::tuple<int, std::int64_t, std::int64_t, Elem>> v;
    for (const auto& s : u.syllables)
      for (const auto& [r, c] : s.coords) v.emplace_back(s.side, r.k1, r.k2, c);
    return v;
  }
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    if (a.edge != b.edge) return a.edge < b.edge;
    if (a.b.h != b.b.h) return a.b.h < b.b.h;
    return flat(a.b.u) < flat(b.b.u);
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Dense orbit ids in order of first appearance.
int label_orbits(UnionFind& uf, std::vector<int>& out) {
  std::map<int, int> ids;
  out.resize(uf.parent.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const int root = uf.find(static_cast<int>(k));
    auto it = ids.try_emplace(root, static_cast<int>(ids.size())).first;
    out[k] = it->second;
  }
  return static_cast<int>(ids.size());
}

} // namespace

std::vector<GroupElement> enumerate_group(const GroupContext& ctx, const std::vector<GroupWord>& gens,
                                          std::size_t word_bound, Budget& budget) {
  std::set<GroupElement, ElementLess> seen{group_identity(ctx)};
  std::vector<GroupElement> frontier{group_identity(ctx)};
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        GroupElement h = left_mul(ctx, s, g, budget);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    if (!next.empty() && depth + 1 > word_bound)
      throw Error(errc::exploration_truncated, "group not closed after words of length " +
                                                   std::to_string(word_bound) + " (" +
                                                   std::to_string(seen.size()) + " elements so far)");
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

OrbitReport orbit_and_stabilizers(const GroupContext& ctx, const std::vector<GroupWord>& gens, int R,
                                  std::size_t word_bound, Budget& budget) {
  const auto group = enumerate_group(ctx, gens, word_bound, budget);
  OrbitReport rep;
  rep.radius = R;
  rep.word_bound = word_bound;
  rep.group_order = group.size();
  rep.edges = ball(ctx.field.q(), R);
  rep.vertices = ball_vertices(ctx.field.q(), R);

  std::map<Edge, int> edge_idx;
  for (std::size_t k = 0; k < rep.edges.size(); ++k) edge_idx[rep.edges[k]] = static_cast<int>(k);
  std::map<Vertex, int> vertex_idx;
  for (std::size_t k = 0; k < rep.vertices.size(); ++k) vertex_idx[rep.vertices[k]] = static_cast<int>(k);

  UnionFind ue(rep.edges.size()), uv(rep.vertices.size());
  rep.edge_stabilizer.assign(rep.edges.size(), 0);
  rep.vertex_stabilizer.assign(rep.vertices.size(), 0);

  for (const auto& g : group) {
    const GroupWord w = to_word(ctx, g);
    for (std::size_t k = 0; k < rep.edges.size(); ++k) {
      const Edge img = act(ctx, w, rep.edges[k], budget);
      if (img == rep.edges[k]) ++rep.edge_stabilizer[k];
      if (auto it = edge_idx.find(img); it != edge_idx.end()) ue.unite(static_cast<int>(k), it->second);
    }
    for (std::size_t k = 0; k < rep.vertices.size(); ++k) {
      const Vertex img = vertex_of(act(ctx, w, rep.vertices[k].edge, budget), rep.vertices[k].type);
      if (img == rep.vertices[k]) ++rep.vertex_stabilizer[k];
      if (auto it = vertex_idx.find(img); it != vertex_idx.end()) uv.unite(static_cast<int>(k), it->second);
    }
  }
  rep.edge_orbits = label_orbits(ue, rep.edge_orbit);
  rep.vertex_orbits = label_orbits(uv, rep.vertex_orbit);
  return rep;
}

std::uint64_t OrbitReport::vertex_stabilizer_of(const Vertex& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw std::out_of_range("vertex outside the explored ball");
  return vertex_stabilizer[static_cast<std::size_t>(it - vertices.begin())];
}

std::uint64_t OrbitReport::edge_stabilizer_of(const Edge& e) const {
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw std::out_of_range("edge outside the explored ball");
  return edge_stabilizer[static_cast<std::size_t>(it - edges.begin())];
}

} // namespace kmlat
