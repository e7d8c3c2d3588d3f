// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "hurwitz/hurwitz_all.hpp"
#include "support/oracles.hpp"

using namespace hurwitz;

namespace {

using Table = std::vector<std::vector<std::string>>;

// Reference tables for tau = transpositions, classes in the order
// (11),(2) / (111),(12),(3) / (1111),(112),(22),(13),(4).
const Table kA2 = {{"1", "-b"}, {"-b", "1"}};
const Table kInv2 = {{"1/(1-b^2)", "b/(1-b^2)"}, {"b/(1-b^2)", "1/(1-b^2)"}};

const Table kA3 = {{"1", "-3b", "0"}, {"-3b", "3", "-6b"}, {"0", "-6b", "2"}};
const Table kInv3 = {{"(6b^2-1)/(9b^2-1)", "-b/(9b^2-1)", "-(3b^2)/(9b^2-1)"},
                     {"-b/(9b^2-1)", "-1/(27b^2-3)", "-b/(9b^2-1)"},
                     {"-(3b^2)/(9b^2-1)", "-b/(9b^2-1)", "(3b^2-1)/(9b^2-1)"}};

const Table kA4 = {{"1", "-6b", "0", "0", "0"},
                   {"-6b", "6", "-6b", "-24b", "0"},
                   {"0", "-6b", "3", "0", "-12b"},
                   {"0", "-24b", "0", "8", "-24b"},
                   {"0", "0", "-12b", "-24b", "6"}};
const Table kInv4 = {
    {"(24b^4-34b^2+1)/(144b^4-40b^2+1)", "-(20b^3-b)/(144b^4-40b^2+1)", "(24b^4+2b^2)/(144b^4-40b^2+1)",
     "-(3b^2)/(36b^2-1)", "(16b^3)/(144b^4-40b^2+1)"},
    {"-(20b^3-b)/(144b^4-40b^2+1)", "-(20b^2-1)/(864b^4-240b^2+6)", "(12b^3+b)/(432b^4-120b^2+3)", "-b/(72b^2-2)",
     "(8b^2)/(432b^4-120b^2+3)"},
    {"(24b^4+2b^2)/(144b^4-40b^2+1)", "(12b^3+b)/(432b^4-120b^2+3)", "(72b^4-30b^2+1)/(432b^4-120b^2+3)",
     "-(3b^2)/(36b^2-1)", "-(24b^3-2b)/(432b^4-120b^2+3)"},
    {"-(3b^2)/(36b^2-1)", "-b/(72b^2-2)", "-(3b^2)/(36b^2-1)", "(12b^2-1)/(288b^2-8)", "-b/(72b^2-2)"},
    {"(16b^3)/(144b^4-40b^2+1)", "(8b^2)/(432b^4-120b^2+3)", "-(24b^3-2b)/(432b^4-120b+3)", "-b/(72b^2-2)",
     "-(20b^2-1)/(864b^4-240b^2+6)"}};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

AlgebraPtr sym(int d) { return ClassAlgebra::of(symmetric_group(d)); }

int transpositions(const ClassAlgebra& a, int d) {
  std::vector<int> parts(d - 2, 1);
  parts.push_back(2);
  return a.class_table().require(Partition(parts).to_string());
}

std::string cell(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

Outcome matrix_reproduction() {
  Outcome o;
  const std::vector<std::pair<int, const Table*>> cases{{2, &kA2}, {3, &kA3}, {4, &kA4}};
  for (const auto& [d, table] : cases) {
    auto a = sym(d);
    RatMatrix built = build_A(*a, transpositions(*a, d)).a;
    RatMatrix printed = oracle::matrix(*table);
    for (int i = 0; i < built.rows(); ++i)
      for (int j = 0; j < built.cols(); ++j)
        if (!(built(i, j) == printed(i, j))) o.fail("d=" + std::to_string(d) + " entry " + cell(i, j));
  }
  if (o.pass) o.detail = "d=2,3,4 entry-for-entry";
  return o;
}

Outcome inverse_correctness() {
  Outcome o;
  for (int d = 2; d <= 5; ++d) {
    auto a = sym(d);
    HurwitzEngine engine(a, transpositions(*a, d));
    if (!(engine.matrix().a * engine.inverse() == RatMatrix::identity(a->classes()))) o.fail("A A^-1 != I for d=" + std::to_string(d));
  }
  std::vector<std::string> notes;
  {
    auto a = sym(2);
    RatMatrix inv = HurwitzEngine(a, transpositions(*a, 2)).inverse();
    if (!(inv == oracle::matrix(kInv2))) o.fail("d=2 inverse differs from the printed one");
  }
  {
    auto a = sym(3);
    RatMatrix inv = HurwitzEngine(a, transpositions(*a, 3)).inverse();
    RatMatrix printed = oracle::matrix(kInv3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == 2 && j == 2) {
          if (!(inv(i, j) == RatFunc(Rational(1, 2)) * printed(i, j))) o.fail("d=3 (3,3) is not half the printed entry");
          if (inv(i, j) == printed(i, j)) o.fail("d=3 (3,3) unexpectedly equals the printed entry");
        } else if (!(inv(i, j) == printed(i, j))) {
          o.fail("d=3 inverse entry " + cell(i, j));
        }
      }
    notes.push_back("d=3 (3,3) computed = printed/2");
  }
  {
    auto a = sym(4);
    RatMatrix inv = HurwitzEngine(a, transpositions(*a, 4)).inverse();
    RatMatrix printed = oracle::matrix(kInv4);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (i == 4 && j == 2) {
          if (inv(i, j) == printed(i, j)) o.fail("d=4 (5,3) unexpectedly equals the printed entry");
          if (!(inv(i, j) == oracle::entry("-(24b^3-2b)/(432b^4-120b^2+3)"))) o.fail("d=4 (5,3) differs beyond the denominator typo");
        } else if (!(inv(i, j) == printed(i, j))) {
          o.fail("d=4 inverse entry " + cell(i, j));
        }
      }
    notes.push_back("d=4 (5,3) printed denominator 432b^4-120b+3 read as 432b^4-120b^2+3");
  }
  if (o.pass) {
    o.detail = "A A^-1 = I for d=2..5; d=2 equal";
    for (const auto& n : notes) o.detail += "; " + n;
  }
  return o;
}

Outcome headline_function() {
  Outcome o;
  auto a = sym(4);
  const int full = a->class_table().require("4");
  const int tau = transpositions(*a, 4);
  RatFunc gf = hurwitz_gf(a, full, full, tau);
  if (!(gf == RatFunc(Rational(6 * 6, 24)) * oracle::entry("(1-20b^2)/(864b^4-240b^2+6)"))) o.fail("generating function differs");
  HurwitzResult r = hurwitz_series(a, full, full, tau, 21);
  for (int k = 0; k <= 10; ++k) {
    Rational expected = Rational(boost::multiprecision::pow(Integer(36), k), 8) +
                        (k == 0 ? Rational(1, 8) : Rational(boost::multiprecision::pow(Integer(4), k - 1), 2));
    if (r.coeffs[2 * k] != expected) o.fail("coefficient of b^" + std::to_string(2 * k));
    if (r.coeffs[2 * k + 1] != 0) o.fail("odd coefficient b^" + std::to_string(2 * k + 1));
  }
  if (o.pass) o.detail = "gf equal; b^{2k} coefficients match 36^k/8 + 4^(k-1)/2 for k <= 10";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int compared = 0, skipped = 0;
  for (int d = 2; d <= 4; ++d) {
    auto a = sym(d);
    const int tau = transpositions(*a, d);
    HurwitzEngine engine(a, tau);
    const ClassTable& ct = a->class_table();
    for (int mu = 0; mu < a->classes(); ++mu)
      for (int nu = 0; nu < a->classes(); ++nu) {
        HurwitzResult r = engine.series(mu, nu, 4);
        for (int i = 0; i <= 4; ++i) {
          std::uint64_t tuples = ct.size(mu);
          for (int t = 0; t < i; ++t) tuples *= ct.size(tau);
          if (d == 4 && tuples > 10'000'000) {
            ++skipped;
            continue;
          }
          ++compared;
          if (brute_force_count(*a, mu, nu, tau, i) != r.raw_counts[i]) {
            o.fail("d=" + std::to_string(d) + " " + ct[mu].label + "/" + ct[nu].label + " r=" + std::to_string(i));
          }
        }
      }
  }
  if (o.pass) o.detail = std::to_string(compared) + " coefficients equal brute force (" + std::to_string(skipped) + " over 1e7 tuples)";
  return o;
}

Outcome one_part_identity() {
  Outcome o;
  for (int d = 2; d <= 5; ++d) {
    auto a = sym(d);
    const int full = a->class_table().require(std::to_string(d));
    HurwitzResult r = hurwitz_series(a, full, full, transpositions(*a, d), 8);
    std::vector<Rational> closed = one_part_coeffs(d, 8);
    for (int i = 0; i <= 8; ++i)
      if (r.coeffs[i] != closed[i]) o.fail("d=" + std::to_string(d) + " r=" + std::to_string(i));
  }
  if (o.pass) o.detail = "d=2..5, r <= 8";
  return o;
}

Outcome ode_identity() {
  Outcome o;
  int pairs = 0;
  for (int d = 2; d <= 4; ++d) {
    auto a = sym(d);
    HurwitzEngine engine(a, transpositions(*a, d));
    for (int mu = 0; mu < a->classes(); ++mu)
      for (int nu = 0; nu < a->classes(); ++nu) {
        ++pairs;
        if (!ode_check(engine, mu, nu).holds) o.fail("d=" + std::to_string(d) + " pair " + cell(mu, nu));
      }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, exact";
  return o;
}

Outcome graph_counts() {
  Outcome o;
  auto s2 = sym(2);
  auto uniform = [](const EnhancedGraph& g, int cls) {
    BoundaryCondition m;
    for (int e : g.leaves()) m[e] = cls;
    return m;
  };
  const int odd = s2->class_table().require("2");
  if (count_boundary(canonical_graph(2, 1), uniform(canonical_graph(2, 1), odd), *s2) != 0) o.fail("S_2 genus 2 one leaf is not 0");
  if (count_boundary(canonical_graph(2, 2), uniform(canonical_graph(2, 2), odd), *s2) != 16) o.fail("S_2 genus 2 two leaves is not 16");
  int instances = 0;
  for (int d = 2; d <= 3; ++d) {
    auto a = sym(d);
    for (int g = 0; g <= 2; ++g)
      for (int n = 0; n <= 3; ++n) {
        if (2 - 2 * g - n >= 0) continue;
        EnhancedGraph graph = canonical_graph(g, n);
        std::vector<int> leaves = graph.leaves();
        std::vector<int> classes(n, 0);
        while (true) {
          BoundaryCondition m;
          for (int i = 0; i < n; ++i) m[leaves[i]] = classes[i];
          const Rational count = count_boundary(graph, m, *a);
          const Integer surface = count_homs_surface(g, surface_classes(graph, m, *a), *a);
          ++instances;
          if (count != Rational(surface)) {
            o.fail("S_" + std::to_string(d) + " g=" + std::to_string(g) + " n=" + std::to_string(n));
          }
          int i = 0;
          while (i < n && ++classes[i] == a->classes()) classes[i++] = 0;
          if (i == n) break;
        }
      }
  }
  if (o.pass) o.detail = "0 and 16 reproduced; " + std::to_string(instances) + " S_2/S_3 instances equal the surface count";
  return o;
}

Outcome move_invariance() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  int instances = 0, moves = 0;
  auto s2 = sym(2), s3 = sym(3);
  while (instances < 50) {
    const auto& a = instances % 2 == 0 ? s2 : s3;
    const int g = static_cast<int>(rng() % 3);
    const int n = static_cast<int>(rng() % 4);
    if (2 - 2 * g - n >= 0) continue;
    EnhancedGraph graph = random_graph(g, n, rng);
    BoundaryCondition m;
    for (int e : graph.leaves()) m[e] = static_cast<int>(rng() % a->classes());
    const Rational count = count_boundary(graph, m, *a);
    for (const Move& mv : applicable_moves(graph)) {
      ++moves;
      if (count_boundary(apply_move(graph, mv), transport_boundary(graph, mv, m, *a), *a) != count) {
        o.fail("instance " + std::to_string(instances) + " " + mv.describe());
      }
    }
    ++instances;
  }
  if (o.pass) o.detail = std::to_string(instances) + " instances, " + std::to_string(moves) + " moves, seed 20240601";
  return o;
}

Outcome presentation_sanity() {
  Outcome o;
  std::mt19937_64 rng(7);
  auto s2 = sym(2);
  int graphs = 0;
  while (graphs < 20) {
    const int g = 1 + static_cast<int>(rng() % 2);
    const int n = 1 + static_cast<int>(rng() % 2);
    Presentation p = presentation(random_graph(g, n, rng));
    ++graphs;
    if (static_cast<int>(p.generators.size()) != 4 * g - 3 + 2 * n) o.fail("generator count at g=" + std::to_string(g));
    if (static_cast<int>(p.relators.size()) != 2 * g - 2 + n) o.fail("relator count at g=" + std::to_string(g));
    const Integer count = count_homs_presentation(p, std::vector<int>(p.leaf_edges.size(), -1), *s2);
    if (count != (Integer(1) << (2 * g + n - 1))) o.fail("S_2 count " + count.str() + " at g=" + std::to_string(g) + " n=" + std::to_string(n));
  }
  if (o.pass) {
    // Closed surfaces are not free: S_2, genus 2 gives 16 rather than 2^3.
    const Presentation closed = presentation(canonical_graph(2, 0));
    const Integer c = count_homs_presentation(closed, {}, *s2);
    o.detail = std::to_string(graphs) + " graphs (genus 1-2, 1-2 leaves, seed 7); note n=0 is excluded, closed genus 2 gives " +
               c.str() + " not 8";
  }
  return o;
}

Outcome algebra_identities() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (int d = 2; d <= 4; ++d) {
    auto a = sym(d);
    const int k = a->classes();
    const auto& sc = a->constants();
    const ClassTable& ct = a->class_table();
    auto oracle_sc = oracle::structure_constants_by_convolution(a->group(), ct);
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        for (int z = 0; z < k; ++z)
          if (sc(x, y, z) != oracle_sc[x][y][z]) o.fail("structure constant mismatch in S_" + std::to_string(d));
    for (int round = 0; round < 40; ++round) {
      ClassVector u = ClassVector::zero(k), v = ClassVector::zero(k), w = ClassVector::zero(k);
      for (int i = 0; i < k; ++i) {
        u.coeffs[i] = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
        v.coeffs[i] = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
        w.coeffs[i] = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
      }
      if (!(convolve(convolve(u, v, sc), w, sc) == convolve(u, convolve(v, w, sc), sc))) o.fail("associativity in S_" + std::to_string(d));
      if (!(convolve(u, v, sc) == convolve(v, u, sc))) o.fail("commutativity in S_" + std::to_string(d));
    }
    for (int m1 = 0; m1 < k; ++m1)
      for (int m2 = 0; m2 < k; ++m2)
        for (int m3 = 0; m3 < k; ++m3)
          for (int m4 = 0; m4 < k; ++m4) {
            std::array<int, 4> m{m1, m2, m3, m4};
            const Rational whole = trace_product({m1, m2, m3, m4}, sc);
            std::array<int, 4> p{0, 1, 2, 3};
            do {
              Rational split = 0;
              for (int nu = 0; nu < k; ++nu)
                split += trace_product({m[p[0]], m[p[1]], nu}, sc) * trace_product({m[p[2]], m[p[3]], ct.inverse(nu)}, sc) /
                         trace_product({nu, ct.inverse(nu)}, sc);
              if (split != whole) o.fail("four-trace expansion in S_" + std::to_string(d));
            } while (std::next_permutation(p.begin(), p.end()));
          }
  }
  if (o.pass) o.detail = "S_2, S_3, S_4: structure constants, associativity, commutativity, four-trace expansion";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"matrix reproduction", matrix_reproduction},   {"inverse correctness", inverse_correctness},
      {"headline generating function", headline_function}, {"oracle equivalence", oracle_equivalence},
      {"one-part identity", one_part_identity},       {"ODE identity", ode_identity},
      {"graph counts", graph_counts},                 {"move invariance", move_invariance},
      {"presentation sanity", presentation_sanity},   {"algebra identities", algebra_identities},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed in " << seconds << " s" << std::endl;
  return failures == 0 ? 0 : 1;
}
