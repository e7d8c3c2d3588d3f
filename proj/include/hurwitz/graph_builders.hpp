#ifndef HURWITZ_GRAPH_BUILDERS_HPP
#define HURWITZ_GRAPH_BUILDERS_HPP

#include <random>
#include <string>

#include "hurwitz/graph_moves.hpp"

namespace hurwitz {

namespace detail {

/// Subdivides e and hangs a new leaf (oriented towards its end) off the new vertex.
inline int add_leaf(GraphBuilder& b, int e) {
  const int m = b.subdivide(e);
  const int end = b.add_vertex();
  return b.add_edge(m, end);
}

/// Subdivides e1 and e2 (possibly the same edge) and joins the new vertices.
inline void add_handle(GraphBuilder& b, int e1, int e2) {
  const int m1 = b.subdivide(e1);
  const int m2 = b.subdivide(e2);
  b.add_edge(m1, m2);
}

inline void require_hyperbolic(int genus, int leaves) {
  if (genus < 0 || leaves < 0 || 2 - 2 * genus - leaves >= 0) {
    throw InvalidInput("need 2 - 2g - n < 0, got g=" + std::to_string(genus) + " n=" + std::to_string(leaves));
  }
}

/// Base graph for (g, n) before extra handles and leaves: tripod, tadpole or theta.
inline GraphBuilder base_graph(int genus, int leaves) {
  GraphBuilder b;
  if (genus == 0) {
    const int c = b.add_vertex();
    for (int i = 0; i < 3; ++i) b.add_edge(c, b.add_vertex());
  } else if (leaves >= 1) {
    const int v = b.add_vertex();
    b.add_edge(v, v);
    b.add_edge(v, b.add_vertex());
  } else {
    const int x = b.add_vertex(), y = b.add_vertex();
    for (int i = 0; i < 3; ++i) b.add_edge(x, y);
  }
  return b;
}

inline void base_counts(int genus, int leaves, int& g0, int& n0) {
  if (genus == 0) {
    g0 = 0;
    n0 = 3;
  } else if (leaves >= 1) {
    g0 = 1;
    n0 = 1;
  } else {
    g0 = 2;
    n0 = 0;
  }
}

}  // namespace detail

/// One inner vertex with three leaves, each oriented towards its end.
inline EnhancedGraph tripod() { return detail::base_graph(0, 3).build(); }

/// Two vertices joined by three parallel edges (genus 2, no leaves).
inline EnhancedGraph theta_graph() { return detail::base_graph(2, 0).build(); }

/// A loop and a leaf at one vertex (genus 1, one leaf).
inline EnhancedGraph tadpole() { return detail::base_graph(1, 1).build(); }

/// Deterministic graph of genus g with n leaves: the base graph with handles
/// and leaves attached to edge 0.
inline EnhancedGraph canonical_graph(int genus, int leaves) {
  detail::require_hyperbolic(genus, leaves);
  int g0, n0;
  detail::base_counts(genus, leaves, g0, n0);
  GraphBuilder b = detail::base_graph(genus, leaves);
  for (int i = g0; i < genus; ++i) detail::add_handle(b, 0, 0);
  for (int i = n0; i < leaves; ++i) detail::add_leaf(b, 0);
  return b.build();
}

/// Genus-0 chain with r >= 1 inner vertices: leaf 0 at the first vertex, one
/// extra leaf at each vertex, and a final leaf at the last vertex. Every leaf
/// is oriented towards its end. Returns the graph and the leaf edges in chain
/// order (first, r middle leaves, last).
inline std::pair<EnhancedGraph, std::vector<int>> chain_graph(int r) {
  if (r < 1) throw InvalidInput("chain graph needs at least one inner vertex");
  GraphBuilder b;
  std::vector<int> inner;
  for (int i = 0; i < r; ++i) inner.push_back(b.add_vertex());
  std::vector<int> leaves;
  leaves.push_back(b.add_edge(inner[0], b.add_vertex()));
  for (int i = 0; i < r; ++i) {
    leaves.push_back(b.add_edge(inner[i], b.add_vertex()));
    if (i + 1 < r) b.add_edge(inner[i], inner[i + 1]);
  }
  leaves.push_back(b.add_edge(inner[r - 1], b.add_vertex()));
  return {b.build(inner[0]), leaves};
}

/// Random enhanced graph of genus g with n leaves: handles and leaves are
/// attached at random edges, then orientations, rotations, spanning tree and
/// basepoint are randomised.
template <class Rng>
EnhancedGraph random_graph(int genus, int leaves, Rng& rng) {
  detail::require_hyperbolic(genus, leaves);
  int g0, n0;
  detail::base_counts(genus, leaves, g0, n0);
  GraphBuilder b = detail::base_graph(genus, leaves);
  auto pick_edge = [&]() { return std::uniform_int_distribution<int>(0, b.edges() - 1)(rng); };
  int handles = genus - g0, extra_leaves = leaves - n0;
  while (handles + extra_leaves > 0) {
    const bool handle = extra_leaves == 0 || (handles > 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 0);
    if (handle) {
      const int e1 = pick_edge();
      detail::add_handle(b, e1, pick_edge());
      --handles;
    } else {
      detail::add_leaf(b, pick_edge());
      --extra_leaves;
    }
  }
  EnhancedGraph g = b.build();
  std::bernoulli_distribution coin(0.5);
  for (int e = 0; e < g.edges(); ++e)
    if (coin(rng)) g = apply_move(g, Move::flip(e));
  for (int v : g.inner_vertices())
    if (coin(rng)) g = apply_move(g, Move::reverse_rotation(v));
  g = apply_move(g, Move::rechoose_tree(random_spanning_tree(g, rng)));
  auto inner = g.inner_vertices();
  const int base = inner[std::uniform_int_distribution<std::size_t>(0, inner.size() - 1)(rng)];
  return EnhancedGraph(g.pairing(), g.vertex_map(), g.next_map(), g.source_darts(), g.tree_edges(), base);
}

}  // namespace hurwitz

#endif  // HURWITZ_GRAPH_BUILDERS_HPP
