#ifndef HURWITZ_PRESENTATION_HPP
#define HURWITZ_PRESENTATION_HPP

#include <string>
#include <vector>

#include "hurwitz/class_algebra.hpp"
#include "hurwitz/graph.hpp"
#include "hurwitz/work_cap.hpp"

namespace hurwitz {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Presentation of the fundamental group of the punctured surface built from
/// an enhanced graph: a generator p_e per edge, g_e per edge outside the
/// spanning tree, and one relator per 3-valent vertex.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<int> edge_generator;   // p_e index per edge
  std::vector<int> cycle_generator;  // g_e index per edge, -1 for tree edges
  std::vector<int> leaf_edges;       // leaf edge ids, increasing
  std::vector<int> relator_vertex;   // inner vertex of each relator

  /// Indices of the p_e generators of the leaves, in leaf_edges order.
  std::vector<int> leaf_generators() const {
    std::vector<int> out;
    for (int e : leaf_edges) out.push_back(edge_generator[e]);
    return out;
  }

  std::string word_string(const Word& w) const {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ' ';
      s += generators[w[i].generator];
      if (w[i].exponent < 0) s += "^-1";
    }
    return s;
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : " ") + generators[i];
    s += " |";
    for (std::size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : " ") + word_string(relators[i]);
    return s + " >";
  }
};

/// Builds the presentation. Conventions:
///  * circles are traversed positively from the source side of an edge and
///    negatively from the sink side;
///  * the relator of vertex v starts at the dart of the tree edge leading to
///    the basepoint (at the basepoint itself: the least dart) and follows the
///    rotation;
///  * for an edge e outside the tree, the sink-side occurrence is conjugated:
///    g_e^-1 p_e^-1 g_e, while the source side contributes p_e.
inline Presentation presentation(const EnhancedGraph& g) {
  Presentation p;
  p.edge_generator.assign(g.edges(), -1);
  p.cycle_generator.assign(g.edges(), -1);
  for (int e = 0; e < g.edges(); ++e) {
    p.edge_generator[e] = static_cast<int>(p.generators.size());
    p.generators.push_back("p_" + std::to_string(e));
  }
  for (int e = 0; e < g.edges(); ++e) {
    if (g.in_tree(e)) continue;
    p.cycle_generator[e] = static_cast<int>(p.generators.size());
    p.generators.push_back("g_" + std::to_string(e));
  }
  p.leaf_edges = g.leaves();

  // parent dart of every vertex in the tree rooted at the basepoint
  std::vector<int> parent_dart(g.vertices(), -1);
  {
    std::vector<bool> seen(g.vertices(), false);
    std::vector<int> queue{g.basepoint()};
    seen[g.basepoint()] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int d : g.darts_at(queue[h])) {
        if (!g.in_tree(g.edge_of(d))) continue;
        const int back = g.pair(d);
        const int w = g.vertex_of(back);
        if (seen[w]) continue;
        seen[w] = true;
        parent_dart[w] = back;
        queue.push_back(w);
      }
    }
  }

  for (int v : g.inner_vertices()) {
    const int start = v == g.basepoint() ? g.darts_at(v).front() : parent_dart[v];
    Word w;
    int d = start;
    do {
      const int e = g.edge_of(d);
      const int pe = p.edge_generator[e];
      if (g.in_tree(e) || g.is_source(d)) {
        w.push_back({pe, g.is_source(d) ? 1 : -1});
      } else {
        const int ge = p.cycle_generator[e];
        w.push_back({ge, -1});
        w.push_back({pe, -1});
        w.push_back({ge, 1});
      }
      d = g.next(d);
    } while (d != start);
    p.relators.push_back(std::move(w));
    p.relator_vertex.push_back(v);
  }
  return p;
}

/// Number of assignments of group elements to the generators satisfying
/// every relator, with each leaf generator restricted to its class
/// (`leaf_classes[i]` for leaf_edges[i]; -1 leaves it free).
///
/// Generators are placed one at a time. Where a relator's last unplaced
/// generator occurs in it exactly once and is unconstrained, its value is
/// solved from the relator instead of enumerated.
inline Integer count_homs_presentation(const Presentation& p, const std::vector<int>& leaf_classes,
                                       const ClassAlgebra& ctx, const WorkCap& cap = {}) {
  const FiniteGroup& grp = ctx.group();
  const ClassTable& ct = ctx.class_table();
  const int m = static_cast<int>(p.generators.size());
  if (leaf_classes.size() != p.leaf_edges.size()) throw InvalidInput("need one leaf constraint per leaf");
  std::vector<int> constraint(m, -1);
  for (std::size_t i = 0; i < leaf_classes.size(); ++i) {
    if (leaf_classes[i] >= ctx.classes()) throw InvalidInput("invalid class id in leaf constraints");
    constraint[p.edge_generator[p.leaf_edges[i]]] = leaf_classes[i];
  }

  // plan the placement order
  std::vector<int> order, solved_by(m, -1), position(m, -1);
  auto place = [&](int gen, int relator) {
    position[gen] = static_cast<int>(order.size());
    order.push_back(gen);
    solved_by[gen] = relator;
  };
  std::vector<bool> handled(p.relators.size(), false);
  for (std::size_t round = 0; round < p.relators.size(); ++round) {
    int best = -1;
    std::size_t best_unplaced = 0;
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      if (handled[r]) continue;
      std::vector<int> un;
      for (const auto& l : p.relators[r])
        if (position[l.generator] < 0 && std::find(un.begin(), un.end(), l.generator) == un.end()) un.push_back(l.generator);
      if (best < 0 || un.size() < best_unplaced) {
        best = static_cast<int>(r);
        best_unplaced = un.size();
      }
    }
    handled[best] = true;
    const Word& w = p.relators[best];
    std::vector<int> un;
    for (const auto& l : w)
      if (position[l.generator] < 0 && std::find(un.begin(), un.end(), l.generator) == un.end()) un.push_back(l.generator);
    int solve = -1;
    for (int gen : un) {
      int occurrences = 0;
      for (const auto& l : w) occurrences += l.generator == gen;
      if (occurrences == 1 && constraint[gen] < 0) solve = gen;
    }
    for (int gen : un)
      if (gen != solve) place(gen, -1);
    if (solve >= 0) place(solve, best);
  }
  for (int gen = 0; gen < m; ++gen)
    if (position[gen] < 0) place(gen, -1);

  std::uint64_t work = 1;
  for (int gen : order) {
    if (solved_by[gen] >= 0) continue;
    work = saturating_mul(work, constraint[gen] < 0 ? grp.order() : ct.size(constraint[gen]));
  }
  cap.require(work, "presentation homomorphism count");

  // relators to verify once the generator at each position is placed
  std::vector<std::vector<int>> checks(m);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    int last = -1;
    for (const auto& l : p.relators[r]) last = std::max(last, position[l.generator]);
    if (last >= 0 && solved_by[order[last]] != static_cast<int>(r)) checks[last].push_back(static_cast<int>(r));
  }

  std::vector<int> value(m, -1);
  auto eval = [&](const Word& w, std::size_t from, std::size_t to) {
    int x = grp.identity();
    for (std::size_t i = from; i < to; ++i) {
      const int v = value[w[i].generator];
      x = grp.mul(x, w[i].exponent > 0 ? v : grp.inv(v));
    }
    return x;
  };
  std::vector<int> all(grp.order());
  std::iota(all.begin(), all.end(), 0);

  std::uint64_t hits = 0;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      ++hits;
      return;
    }
    const int gen = order[pos];
    auto accept = [&]() {
      for (int r : checks[pos])
        if (eval(p.relators[r], 0, p.relators[r].size()) != grp.identity()) return;
      self(self, pos + 1);
    };
    if (const int r = solved_by[gen]; r >= 0) {
      const Word& w = p.relators[r];
      std::size_t at = 0;
      while (w[at].generator != gen) ++at;
      // L x^e R = 1  =>  x^e = L^-1 R^-1
      const int xe = grp.mul(grp.inv(eval(w, 0, at)), grp.inv(eval(w, at + 1, w.size())));
      value[gen] = w[at].exponent > 0 ? xe : grp.inv(xe);
      accept();
    } else {
      const auto& domain = constraint[gen] < 0 ? all : ct[constraint[gen]].members;
      for (int x : domain) {
        value[gen] = x;
        accept();
      }
    }
    value[gen] = -1;
  };
  rec(rec, 0);
  return Integer(hits);
}

}  // namespace hurwitz

#endif  // HURWITZ_PRESENTATION_HPP
