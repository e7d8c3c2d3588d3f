#ifndef HURWITZ_GRAPH_HPP
#define HURWITZ_GRAPH_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

/// A connected 1-3-valent graph with the enhancement data: an orientation of
/// every edge, a cyclic order of the darts at each vertex, a spanning tree and
/// a basepoint.
///
/// Darts (half-edges) are the primitive objects; `pairing` is a fixed-point
/// free involution whose orbits are the edges. Edges are numbered by
/// increasing smaller dart. `next` rotates the darts around their vertex.
/// `source_dart[e]` is the dart of e at its source vertex. Loops and
/// multi-edges are allowed.
class EnhancedGraph {
 public:
  EnhancedGraph(std::vector<int> pairing, std::vector<int> vertex, std::vector<int> next, std::vector<int> source_dart,
                std::vector<int> tree_edges, int basepoint)
      : pairing_(std::move(pairing)),
        vertex_(std::move(vertex)),
        next_(std::move(next)),
        source_dart_(std::move(source_dart)),
        basepoint_(basepoint) {
    const int n = static_cast<int>(pairing_.size());
    if (n == 0 || n % 2) throw InvalidGraph("dart count must be positive and even");
    if (static_cast<int>(vertex_.size()) != n || static_cast<int>(next_.size()) != n) {
      throw InvalidGraph("pairing, vertex and next must have one entry per dart");
    }
    edge_of_.assign(n, -1);
    for (int d = 0; d < n; ++d) {
      const int p = pairing_[d];
      if (p < 0 || p >= n || p == d || pairing_[p] != d) throw InvalidGraph("pairing is not a fixed-point free involution");
      if (d < p) {
        edge_of_[d] = edge_of_[p] = static_cast<int>(edge_darts_.size());
        edge_darts_.push_back({d, p});
      }
    }
    int max_vertex = -1;
    for (int v : vertex_) {
      if (v < 0) throw InvalidGraph("negative vertex id");
      max_vertex = std::max(max_vertex, v);
    }
    vertex_darts_.assign(max_vertex + 1, {});
    for (int d = 0; d < n; ++d) vertex_darts_[vertex_[d]].push_back(d);
    for (int v = 0; v <= max_vertex; ++v) {
      auto& ds = vertex_darts_[v];
      if (ds.empty()) throw InvalidGraph("vertex " + std::to_string(v) + " has no darts");
      if (ds.size() != 1 && ds.size() != 3) throw InvalidGraph("vertex " + std::to_string(v) + " has valence " + std::to_string(ds.size()));
      // reorder to the rotation starting at the least dart
      std::vector<int> cyc{ds.front()};
      for (int d = next_.at(ds.front()); d != ds.front(); d = next_.at(d)) {
        if (d < 0 || d >= n || vertex_[d] != v || cyc.size() > ds.size()) {
          throw InvalidGraph("next does not rotate the darts of vertex " + std::to_string(v));
        }
        cyc.push_back(d);
      }
      if (cyc.size() != ds.size()) throw InvalidGraph("next does not rotate the darts of vertex " + std::to_string(v));
      ds = std::move(cyc);
    }
    if (source_dart_.size() != edge_darts_.size()) throw InvalidGraph("source_dart needs one entry per edge");
    for (int e = 0; e < edges(); ++e) {
      if (source_dart_[e] != edge_darts_[e][0] && source_dart_[e] != edge_darts_[e][1]) {
        throw InvalidGraph("source_dart of edge " + std::to_string(e) + " is not one of its darts");
      }
    }
    bool has_inner = false;
    for (int v = 0; v < vertices(); ++v) has_inner |= valence(v) == 3;
    if (!has_inner) throw InvalidGraph("graph has no 3-valent vertex");
    if (basepoint_ < 0 || basepoint_ >= vertices()) throw InvalidGraph("basepoint is not a vertex");

    // connectivity
    std::vector<bool> seen(vertices(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int d : vertex_darts_[queue[h]]) {
        int w = vertex_[pairing_[d]];
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    if (static_cast<int>(queue.size()) != vertices()) throw Disconnected("graph is not connected");

    // spanning tree
    in_tree_.assign(edges(), false);
    for (int e : tree_edges) {
      if (e < 0 || e >= edges() || in_tree_[e]) throw InvalidGraph("bad or repeated tree edge id");
      in_tree_[e] = true;
    }
    if (static_cast<int>(tree_edges.size()) != vertices() - 1) throw InvalidGraph("tree must have |V|-1 edges");
    std::vector<int> parent(vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e : tree_edges) {
      int a = find(vertex_[edge_darts_[e][0]]), b = find(vertex_[edge_darts_[e][1]]);
      if (a == b) throw InvalidGraph("tree edges contain a cycle");
      parent[a] = b;
    }
  }

  int darts() const { return static_cast<int>(pairing_.size()); }
  int edges() const { return static_cast<int>(edge_darts_.size()); }
  int vertices() const { return static_cast<int>(vertex_darts_.size()); }
  int basepoint() const { return basepoint_; }

  int pair(int dart) const { return pairing_[dart]; }
  int vertex_of(int dart) const { return vertex_[dart]; }
  int next(int dart) const { return next_[dart]; }
  int edge_of(int dart) const { return edge_of_[dart]; }
  const std::array<int, 2>& edge_darts(int e) const { return edge_darts_[e]; }
  int source_dart(int e) const { return source_dart_[e]; }
  bool is_source(int dart) const { return source_dart_[edge_of_[dart]] == dart; }
  int source_vertex(int e) const { return vertex_[source_dart_[e]]; }
  int target_vertex(int e) const { return vertex_[pairing_[source_dart_[e]]]; }
  bool in_tree(int e) const { return in_tree_[e]; }
  std::vector<int> tree_edges() const {
    std::vector<int> out;
    for (int e = 0; e < edges(); ++e)
      if (in_tree_[e]) out.push_back(e);
    return out;
  }

  /// Darts at v in rotation order, starting at the least dart.
  const std::vector<int>& darts_at(int v) const { return vertex_darts_[v]; }
  int valence(int v) const { return static_cast<int>(vertex_darts_[v].size()); }
  bool is_end(int v) const { return valence(v) == 1; }
  bool is_loop(int e) const { return vertex_[edge_darts_[e][0]] == vertex_[edge_darts_[e][1]]; }
  bool is_leaf(int e) const { return is_end(vertex_[edge_darts_[e][0]]) || is_end(vertex_[edge_darts_[e][1]]); }

  /// Leaf edges in increasing id order.
  std::vector<int> leaves() const {
    std::vector<int> out;
    for (int e = 0; e < edges(); ++e)
      if (is_leaf(e)) out.push_back(e);
    return out;
  }
  std::vector<int> inner_edges() const {
    std::vector<int> out;
    for (int e = 0; e < edges(); ++e)
      if (!is_leaf(e)) out.push_back(e);
    return out;
  }
  std::vector<int> inner_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertices(); ++v)
      if (!is_end(v)) out.push_back(v);
    return out;
  }
  /// The dart of a leaf edge at its inner (3-valent) vertex.
  int leaf_inner_dart(int e) const {
    const auto& ds = edge_darts_[e];
    return is_end(vertex_[ds[0]]) ? ds[1] : ds[0];
  }

  /// First Betti number |E| - |V| + 1.
  int genus() const { return edges() - vertices() + 1; }

  const std::vector<int>& pairing() const { return pairing_; }
  const std::vector<int>& vertex_map() const { return vertex_; }
  const std::vector<int>& next_map() const { return next_; }
  const std::vector<int>& source_darts() const { return source_dart_; }

  friend bool operator==(const EnhancedGraph& a, const EnhancedGraph& b) {
    return a.pairing_ == b.pairing_ && a.vertex_ == b.vertex_ && a.next_ == b.next_ &&
           a.source_dart_ == b.source_dart_ && a.in_tree_ == b.in_tree_ && a.basepoint_ == b.basepoint_;
  }

 private:
  std::vector<int> pairing_;
  std::vector<int> vertex_;
  std::vector<int> next_;
  std::vector<int> source_dart_;
  int basepoint_;
  std::vector<int> edge_of_;
  std::vector<std::array<int, 2>> edge_darts_;
  std::vector<std::vector<int>> vertex_darts_;
  std::vector<bool> in_tree_;
};

inline int genus(const EnhancedGraph& g) { return g.genus(); }

/// Spanning tree by Kruskal over the edges in the given priority order.
inline std::vector<int> spanning_tree(int vertices, const std::vector<std::array<int, 2>>& endpoints,
                                      const std::vector<int>& priority) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> tree;
  for (int e : priority) {
    int a = find(endpoints[e][0]), b = find(endpoints[e][1]);
    if (a == b) continue;
    parent[a] = b;
    tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

/// Edge-list construction helper. Edge e gets darts 2e (source side) and
/// 2e+1 (target side); the rotation at each vertex is the attachment order.
class GraphBuilder {
 public:
  int add_vertex() {
    rotation_.emplace_back();
    return static_cast<int>(rotation_.size()) - 1;
  }

  int add_edge(int from, int to) {
    const int e = static_cast<int>(ends_.size());
    ends_.push_back({from, to});
    rotation_.at(from).push_back(2 * e);
    rotation_.at(to).push_back(2 * e + 1);
    return e;
  }

  /// Inserts a new vertex m in the middle of edge e = (x, y): e becomes (x, m)
  /// and a new edge (m, y) takes e's slot in the rotation at y. Returns m.
  int subdivide(int e) {
    const int m = add_vertex();
    const int y = ends_.at(e)[1];
    const int f = static_cast<int>(ends_.size());
    ends_.push_back({m, y});
    auto& rot_y = rotation_[y];
    *std::find(rot_y.begin(), rot_y.end(), 2 * e + 1) = 2 * f + 1;
    ends_[e][1] = m;
    rotation_[m].push_back(2 * e + 1);
    rotation_[m].push_back(2 * f);
    return m;
  }

  int edges() const { return static_cast<int>(ends_.size()); }
  int vertices() const { return static_cast<int>(rotation_.size()); }
  const std::array<int, 2>& ends(int e) const { return ends_.at(e); }
  std::vector<std::vector<int>>& rotation() { return rotation_; }

  /// Finalizes with a BFS-priority spanning tree (lowest edge ids first) unless
  /// `tree` is given.
  EnhancedGraph build(int basepoint = -1, std::vector<int> tree = {}) const {
    const int n = 2 * edges();
    std::vector<int> pairing(n), vertex(n), next(n), source(edges());
    for (int e = 0; e < edges(); ++e) {
      pairing[2 * e] = 2 * e + 1;
      pairing[2 * e + 1] = 2 * e;
      vertex[2 * e] = ends_[e][0];
      vertex[2 * e + 1] = ends_[e][1];
      source[e] = 2 * e;
    }
    for (const auto& rot : rotation_) {
      for (std::size_t i = 0; i < rot.size(); ++i) next[rot[i]] = rot[(i + 1) % rot.size()];
    }
    if (tree.empty() && vertices() > 1) {
      std::vector<int> order(edges());
      std::iota(order.begin(), order.end(), 0);
      tree = spanning_tree(vertices(), ends_, order);
    }
    if (basepoint < 0) {
      basepoint = 0;
      while (basepoint < vertices() && rotation_[basepoint].size() != 3) ++basepoint;
      if (basepoint == vertices()) basepoint = 0;
    }
    return EnhancedGraph(std::move(pairing), std::move(vertex), std::move(next), std::move(source), std::move(tree),
                         basepoint);
  }

 private:
  std::vector<std::array<int, 2>> ends_;
  std::vector<std::vector<int>> rotation_;
};

}  // namespace hurwitz

#endif  // HURWITZ_GRAPH_HPP
