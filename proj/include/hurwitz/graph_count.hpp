#ifndef HURWITZ_GRAPH_COUNT_HPP
#define HURWITZ_GRAPH_COUNT_HPP

#include <map>
#include <vector>

#include "hurwitz/class_algebra.hpp"
#include "hurwitz/graph.hpp"
#include "hurwitz/graph_moves.hpp"
#include "hurwitz/work_cap.hpp"

namespace hurwitz {

/// Class per edge id.
using Coloring = std::vector<int>;
/// Class per leaf edge id.
using BoundaryCondition = std::map<int, int>;

namespace detail {

/// Class seen from the vertex of `dart`: c(e) at the source, its inverse at the sink.
inline int oriented_class(const EnhancedGraph& g, const ClassAlgebra& ctx, int dart, int c) {
  return g.is_source(dart) ? c : ctx.class_table().inverse(c);
}

inline std::int64_t vertex_trace(const EnhancedGraph& g, const ClassAlgebra& ctx, int v, const Coloring& c) {
  const auto& ds = g.darts_at(v);
  return ctx.trace3(oriented_class(g, ctx, ds[0], c[g.edge_of(ds[0])]),
                    oriented_class(g, ctx, ds[1], c[g.edge_of(ds[1])]),
                    oriented_class(g, ctx, ds[2], c[g.edge_of(ds[2])]));
}

inline Integer int_pow(std::int64_t base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace detail

/// |G|^g * prod_{inner v} tr(prod_{e at v} f_{c_v(e)}) / prod_{inner e} tr(f_{c(e)} f_{c(e)^-1}),
/// the number of homomorphisms whose edge generators lie in the colouring's
/// classes. Vertex traces are taken in rotation order from the least dart.
inline Rational count_colored(const EnhancedGraph& g, const Coloring& c, const ClassAlgebra& ctx) {
  if (static_cast<int>(c.size()) != g.edges()) throw InvalidInput("colouring must assign a class to every edge");
  for (int x : c)
    if (x < 0 || x >= ctx.classes()) throw InvalidInput("colouring uses an invalid class id");
  Integer num = detail::int_pow(ctx.order(), g.genus()), den = 1;
  for (int v : g.inner_vertices()) {
    const std::int64_t t = detail::vertex_trace(g, ctx, v, c);
    if (t == 0) return 0;
    num *= t;
  }
  for (int e : g.inner_edges()) den *= static_cast<std::int64_t>(ctx.class_table().size(c[e]));
  return Rational(num, den);
}

inline void validate_boundary(const EnhancedGraph& g, const BoundaryCondition& m, const ClassAlgebra& ctx) {
  auto leaves = g.leaves();
  if (m.size() != leaves.size()) throw InvalidInput("boundary condition must be defined exactly on the leaves");
  for (int e : leaves) {
    auto it = m.find(e);
    if (it == m.end()) throw InvalidInput("boundary condition misses leaf edge " + std::to_string(e));
    if (it->second < 0 || it->second >= ctx.classes()) throw InvalidInput("boundary condition uses an invalid class id");
  }
}

/// Sum of count_colored over all colourings extending the boundary condition,
/// i.e. the number of homomorphisms with the prescribed leaf classes.
/// Inner edges are coloured in BFS order from the basepoint; a branch is cut
/// as soon as a fully coloured vertex has zero trace.
inline Rational count_boundary(const EnhancedGraph& g, const BoundaryCondition& m, const ClassAlgebra& ctx,
                               const WorkCap& cap = {}) {
  validate_boundary(g, m, ctx);
  const int k = ctx.classes();
  std::vector<int> inner;
  {
    std::vector<bool> seen_v(g.vertices(), false), seen_e(g.edges(), false);
    std::vector<int> queue{g.basepoint()};
    seen_v[g.basepoint()] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int d : g.darts_at(queue[h])) {
        const int e = g.edge_of(d);
        if (!seen_e[e] && !g.is_leaf(e)) {
          seen_e[e] = true;
          inner.push_back(e);
        }
        const int w = g.vertex_of(g.pair(d));
        if (!seen_v[w]) {
          seen_v[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < inner.size(); ++i) work = saturating_mul(work, static_cast<std::uint64_t>(k));
  cap.require(work, "boundary colouring sum");

  // position in `inner` after which each inner vertex is fully coloured
  std::vector<int> position(g.edges(), -1);
  for (std::size_t i = 0; i < inner.size(); ++i) position[inner[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> ready(inner.size() + 1);
  for (int v : g.inner_vertices()) {
    int last = -1;
    for (int d : g.darts_at(v)) last = std::max(last, position[g.edge_of(d)]);
    ready[last + 1].push_back(v);
  }

  Coloring c(g.edges(), -1);
  for (auto [e, cls] : m) c[e] = cls;

  Rational total = 0;
  auto rec = [&](auto&& self, std::size_t depth, const Integer& traces, const Integer& sizes) -> void {
    Integer t = traces;
    for (int v : ready[depth]) {
      const std::int64_t vt = detail::vertex_trace(g, ctx, v, c);
      if (vt == 0) return;
      t *= vt;
    }
    if (depth == inner.size()) {
      total += Rational(t, sizes);
      return;
    }
    const int e = inner[depth];
    for (int cls = 0; cls < k; ++cls) {
      c[e] = cls;
      self(self, depth + 1, t, sizes * static_cast<std::int64_t>(ctx.class_table().size(cls)));
    }
    c[e] = -1;
  };
  rec(rec, 0, Integer(1), Integer(1));
  return total * detail::int_pow(ctx.order(), g.genus());
}

/// The boundary condition describing the same surface after `move`: a leaf
/// class is read along the leaf's orientation, so flipping a leaf inverts it.
/// Every other move keeps edge ids and orientations of leaves.
inline BoundaryCondition transport_boundary(const EnhancedGraph& g, const Move& move, const BoundaryCondition& m,
                                            const ClassAlgebra& ctx) {
  BoundaryCondition out = m;
  if (move.kind == Move::Kind::FlipEdge && g.is_leaf(move.edge)) {
    auto it = out.find(move.edge);
    if (it != out.end()) it->second = ctx.class_table().inverse(it->second);
  }
  return out;
}

/// Leaf classes as seen by the surface relation prod [a_i, b_i] prod c_j = 1:
/// M(e) when the inner vertex of the leaf is its source, else the inverse class.
/// Ordered by leaf edge id.
inline std::vector<int> surface_classes(const EnhancedGraph& g, const BoundaryCondition& m, const ClassAlgebra& ctx) {
  validate_boundary(g, m, ctx);
  std::vector<int> out;
  for (int e : g.leaves()) out.push_back(detail::oriented_class(g, ctx, g.leaf_inner_dart(e), m.at(e)));
  return out;
}

/// #{(a_1, b_1, ..., a_g, b_g, c_1, ..., c_n) : prod [a_i, b_i] prod c_j = 1, c_j in classes[j]}
/// with [a, b] = a b a^-1 b^-1.
inline Integer count_homs_surface(int genus, const std::vector<int>& classes, const ClassAlgebra& ctx,
                                  const WorkCap& cap = {}) {
  if (genus < 0) throw InvalidInput("genus must be non-negative");
  const FiniteGroup& grp = ctx.group();
  const ClassTable& ct = ctx.class_table();
  for (int c : classes)
    if (c < 0 || c >= ctx.classes()) throw InvalidInput("invalid class id");
  std::uint64_t work = 1;
  for (int i = 0; i < 2 * genus; ++i) work = saturating_mul(work, grp.order());
  for (std::size_t j = 0; j + 1 < classes.size(); ++j) work = saturating_mul(work, ct.size(classes[j]));
  cap.require(work, "surface homomorphism count");

  const int n = static_cast<int>(grp.order());
  std::uint64_t hits = 0;
  auto boundary = [&](auto&& self, std::size_t j, int prefix) -> void {
    if (classes.empty()) {
      if (prefix == grp.identity()) ++hits;
      return;
    }
    if (j + 1 == classes.size()) {
      if (ct.class_of(grp.inv(prefix)) == classes[j]) ++hits;
      return;
    }
    for (int c : ct[classes[j]].members) self(self, j + 1, grp.mul(prefix, c));
  };
  auto handles = [&](auto&& self, int i, int prefix) -> void {
    if (i == genus) {
      boundary(boundary, 0, prefix);
      return;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int comm = grp.mul(grp.mul(a, b), grp.mul(grp.inv(a), grp.inv(b)));
        self(self, i + 1, grp.mul(prefix, comm));
      }
  };
  handles(handles, 0, grp.identity());
  return Integer(hits);
}

}  // namespace hurwitz

#endif  // HURWITZ_GRAPH_COUNT_HPP
