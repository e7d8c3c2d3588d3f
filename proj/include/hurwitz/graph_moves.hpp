#ifndef HURWITZ_GRAPH_MOVES_HPP
#define HURWITZ_GRAPH_MOVES_HPP

#include <random>
#include <string>
#include <vector>

#include "hurwitz/graph.hpp"

namespace hurwitz {

/// One of the enhanced-graph transformations that leave boundary counts
/// unchanged.
struct Move {
  enum class Kind { FlipEdge, ReverseRotation, RechooseTree, Ihx };

  Kind kind = Kind::FlipEdge;
  int edge = -1;           // FlipEdge, Ihx
  int vertex = -1;         // ReverseRotation
  std::vector<int> tree;   // RechooseTree
  int slot_u = 0;          // Ihx: which non-contracted dart moves off the source-side vertex (0 or 1)
  int slot_w = 0;          // Ihx: which one moves off the other vertex

  static Move flip(int e) { return {Kind::FlipEdge, e, -1, {}, 0, 0}; }
  static Move reverse_rotation(int v) { return {Kind::ReverseRotation, -1, v, {}, 0, 0}; }
  static Move rechoose_tree(std::vector<int> tree) { return {Kind::RechooseTree, -1, -1, std::move(tree), 0, 0}; }
  static Move ihx(int e, int slot_u = 1, int slot_w = 0) { return {Kind::Ihx, e, -1, {}, slot_u, slot_w}; }

  std::string describe() const {
    switch (kind) {
      case Kind::FlipEdge: return "flip(" + std::to_string(edge) + ")";
      case Kind::ReverseRotation: return "reverse_rotation(" + std::to_string(vertex) + ")";
      case Kind::RechooseTree: {
        std::string s = "tree(";
        for (std::size_t i = 0; i < tree.size(); ++i) s += (i ? "," : "") + std::to_string(tree[i]);
        return s + ")";
      }
      case Kind::Ihx: return "ihx(" + std::to_string(edge) + "," + std::to_string(slot_u) + "," + std::to_string(slot_w) + ")";
    }
    return "?";
  }
};

namespace detail {

inline std::vector<std::array<int, 2>> edge_endpoints(const std::vector<int>& pairing, const std::vector<int>& vertex) {
  std::vector<std::array<int, 2>> out;
  for (int d = 0; d < static_cast<int>(pairing.size()); ++d) {
    if (d < pairing[d]) out.push_back({vertex[d], vertex[pairing[d]]});
  }
  return out;
}

inline int count_vertices(const std::vector<int>& vertex) {
  int m = 0;
  for (int v : vertex) m = std::max(m, v + 1);
  return m;
}

}  // namespace detail

inline EnhancedGraph apply_move(const EnhancedGraph& g, const Move& move) {
  std::vector<int> pairing = g.pairing(), vertex = g.vertex_map(), next = g.next_map(), source = g.source_darts();
  std::vector<int> tree = g.tree_edges();
  switch (move.kind) {
    case Move::Kind::FlipEdge: {
      if (move.edge < 0 || move.edge >= g.edges()) throw MoveNotApplicable("flip: no edge " + std::to_string(move.edge));
      source[move.edge] = g.pair(source[move.edge]);
      break;
    }
    case Move::Kind::ReverseRotation: {
      if (move.vertex < 0 || move.vertex >= g.vertices() || g.is_end(move.vertex)) {
        throw MoveNotApplicable("reverse_rotation needs a 3-valent vertex");
      }
      const auto& ds = g.darts_at(move.vertex);
      next[ds[0]] = ds[2];
      next[ds[2]] = ds[1];
      next[ds[1]] = ds[0];
      break;
    }
    case Move::Kind::RechooseTree: {
      try {
        return EnhancedGraph(pairing, vertex, next, source, move.tree, g.basepoint());
      } catch (const InvalidGraph& err) {
        throw MoveNotApplicable(std::string("tree re-choice: ") + err.what());
      }
    }
    case Move::Kind::Ihx: {
      const int e = move.edge;
      if (e < 0 || e >= g.edges() || g.is_leaf(e) || g.is_loop(e)) {
        throw MoveNotApplicable("ihx needs an inner edge joining two distinct 3-valent vertices");
      }
      if ((move.slot_u != 0 && move.slot_u != 1) || (move.slot_w != 0 && move.slot_w != 1)) {
        throw MoveNotApplicable("ihx slots must be 0 or 1");
      }
      const int du = g.source_dart(e), dw = g.pair(du);
      const int u = g.vertex_of(du), w = g.vertex_of(dw);
      std::vector<int> rot_u{du, g.next(du), g.next(g.next(du))};
      std::vector<int> rot_w{dw, g.next(dw), g.next(g.next(dw))};
      const int a = rot_u[1 + move.slot_u], b = rot_w[1 + move.slot_w];
      rot_u[1 + move.slot_u] = b;
      rot_w[1 + move.slot_w] = a;
      vertex[a] = w;
      vertex[b] = u;
      for (const auto* rot : {&rot_u, &rot_w}) {
        for (int i = 0; i < 3; ++i) next[(*rot)[i]] = (*rot)[(i + 1) % 3];
      }
      // keep the old tree where it is still a spanning tree, else extend greedily from it
      auto ends = detail::edge_endpoints(pairing, vertex);
      std::vector<int> priority = tree;
      for (int f = 0; f < g.edges(); ++f)
        if (!g.in_tree(f)) priority.push_back(f);
      tree = spanning_tree(detail::count_vertices(vertex), ends, priority);
      break;
    }
  }
  return EnhancedGraph(std::move(pairing), std::move(vertex), std::move(next), std::move(source), std::move(tree),
                       g.basepoint());
}

/// A uniformly shuffled Kruskal spanning tree.
template <class Rng>
std::vector<int> random_spanning_tree(const EnhancedGraph& g, Rng& rng) {
  std::vector<int> order(g.edges());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return spanning_tree(g.vertices(), detail::edge_endpoints(g.pairing(), g.vertex_map()), order);
}

/// Every move applicable to g (tree re-choices excluded, they are unbounded).
inline std::vector<Move> applicable_moves(const EnhancedGraph& g) {
  std::vector<Move> out;
  for (int e = 0; e < g.edges(); ++e) out.push_back(Move::flip(e));
  for (int v : g.inner_vertices()) out.push_back(Move::reverse_rotation(v));
  for (int e : g.inner_edges()) {
    if (g.is_loop(e)) continue;
    for (int su = 0; su < 2; ++su)
      for (int sw = 0; sw < 2; ++sw) out.push_back(Move::ihx(e, su, sw));
  }
  return out;
}

}  // namespace hurwitz

#endif  // HURWITZ_GRAPH_MOVES_HPP
