#ifndef HURWITZ_TOOLS_CLI_APP_HPP
#define HURWITZ_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/hurwitz_all.hpp"

namespace hurwitz::cli {

constexpr std::uint64_t kDefaultSeed = 20240601;

/// A bad flag value. Exit code 2, like parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupSource {
  int sym = 0;
  std::string file;
};

struct Options {
  GroupSource group;
  std::string mu, nu, tau;
  int order = 8;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t work_cap = 0;
  bool structure_constants = false;
  bool inverse = false;
  int max_r = 4;
  std::string graph_file;
  int genus = -1;
  int leaves = -1;
  std::string boundary;
  bool oracles = false;
};

struct Loaded {
  AlgebraPtr algebra;
  std::optional<int> degree;
};

inline WorkCap resolve_work_cap(const CLI::App& sub, const Options& o) {
  WorkCap cap;
  if (sub.count("--work-cap")) {
    cap.limit = o.work_cap;
  } else if (const char* env = std::getenv("HURWITZ_WORK_CAP"); env && *env) {
    try {
      std::size_t used = 0;
      cap.limit = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError("HURWITZ_WORK_CAP: '" + std::string(env) + "' is not a non-negative integer");
    }
  }
  return cap;
}

inline Loaded load_group(const CLI::App& sub, const Options& o) {
  const bool sym = sub.count("--sym") > 0, file = sub.count("--group") > 0;
  if (sym == file) throw UsageError("exactly one of --sym or --group is required");
  if (sym) {
    if (o.group.sym < 1) throw UsageError("--sym: degree must be at least 1");
    return {ClassAlgebra::of(symmetric_group(o.group.sym)), o.group.sym};
  }
  json::GroupData data = json::group_from_json(json::read_file(o.group.file));
  return {ClassAlgebra::of(std::move(data.group), std::move(data.classes)), std::nullopt};
}

inline int resolve_class(const ClassAlgebra& ctx, const std::string& flag, const std::string& label) {
  if (label.empty()) throw UsageError(flag + " is required");
  try {
    return ctx.class_table().require(label);
  } catch (const InvalidInput& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline void require_format(const std::string& format, bool latex_ok, const std::string& command) {
  if (format == "latex" && !latex_ok) throw UsageError("--format latex is not supported by '" + command + "'");
}

inline std::string element_string(const FiniteGroup& g, int x) {
  if (!g.permutations().empty()) return g.permutations()[x].cycle_string();
  return std::to_string(x);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// ---------------------------------------------------------------- classes

inline void cmd_classes(const CLI::App& sub, const Options& o, std::ostream& out) {
  require_format(o.format, false, "classes");
  Loaded l = load_group(sub, o);
  const ClassAlgebra& ctx = *l.algebra;
  const ClassTable& ct = ctx.class_table();
  if (o.format == "json") {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : ct.classes()) {
      classes.push_back({{"id", c.id},
                         {"label", c.label},
                         {"size", c.size()},
                         {"inverse", c.inverse_class_id},
                         {"representative", element_string(ctx.group(), c.representative)}});
    }
    nlohmann::json j = {{"order", ctx.order()}, {"classes", classes}};
    if (o.structure_constants) j["structure_constants"] = json::structure_constants_to_json(ctx.constants());
    out << j.dump(2) << "\n";
    return;
  }
  out << "order: " << ctx.order() << "\n";
  std::vector<std::vector<std::string>> rows{{"id", "label", "size", "inverse", "representative"}};
  for (const auto& c : ct.classes()) {
    rows.push_back({std::to_string(c.id), c.label, std::to_string(c.size()), ct[c.inverse_class_id].label,
                    element_string(ctx.group(), c.representative)});
  }
  out << aligned_table(rows);
  if (o.structure_constants) {
    out << "structure constants f_mu f_nu = sum c f_lambda (nonzero only):\n";
    std::vector<std::vector<std::string>> sc{{"mu", "nu", "lambda", "c"}};
    for (int a = 0; a < ctx.classes(); ++a)
      for (int b = 0; b < ctx.classes(); ++b)
        for (int c = 0; c < ctx.classes(); ++c)
          if (std::int64_t v = ctx.constants()(a, b, c))
            sc.push_back({ct[a].label, ct[b].label, ct[c].label, std::to_string(v)});
    out << aligned_table(sc);
  }
}

// ----------------------------------------------------------------- matrix

inline void print_matrix(std::ostream& out, const ClassTable& ct, const RatMatrix& m) {
  std::vector<std::vector<std::string>> rows{{""}};
  for (const auto& c : ct.classes()) rows[0].push_back(c.label);
  for (int i = 0; i < m.rows(); ++i) {
    rows.push_back({ct[i].label});
    for (int j = 0; j < m.cols(); ++j) rows.back().push_back(ratfunc_string(m(i, j)));
  }
  out << aligned_table(rows);
}

inline nlohmann::json matrix_json(const RatMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json::ratfunc_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void cmd_matrix(const CLI::App& sub, const Options& o, std::ostream& out) {
  Loaded l = load_group(sub, o);
  const ClassAlgebra& ctx = *l.algebra;
  const int tau = resolve_class(ctx, "--tau", o.tau);
  HurwitzEngine engine(l.algebra, tau);
  const ClassTable& ct = ctx.class_table();
  if (o.format == "json") {
    nlohmann::json j = {{"classes", ct.labels()}, {"tau", ct[tau].label}, {"matrix", matrix_json(engine.matrix().a)}};
    if (o.inverse) j["inverse"] = matrix_json(engine.inverse());
    out << j.dump(2) << "\n";
  } else if (o.format == "latex") {
    out << "% A_tau, tau = " << ct[tau].label << "\n" << matrix_latex(engine.matrix().a);
    if (o.inverse) out << "% inverse\n" << matrix_latex(engine.inverse());
  } else {
    out << "tau: " << ct[tau].label << "\nA:\n";
    print_matrix(out, ct, engine.matrix().a);
    if (o.inverse) {
      out << "inverse:\n";
      print_matrix(out, ct, engine.inverse());
    }
  }
}

// ---------------------------------------------------------------- hurwitz

inline void cmd_hurwitz(const CLI::App& sub, const Options& o, std::ostream& out) {
  Loaded l = load_group(sub, o);
  const ClassAlgebra& ctx = *l.algebra;
  const int mu = resolve_class(ctx, "--mu", o.mu);
  const int nu = resolve_class(ctx, "--nu", o.nu);
  const int tau = resolve_class(ctx, "--tau", o.tau);
  if (o.order < 0) throw UsageError("--order must be non-negative");
  HurwitzResult r = hurwitz_series(l.algebra, mu, nu, tau, o.order);
  const ClassTable& ct = ctx.class_table();
  if (o.format == "json") {
    out << json::hurwitz_result_to_json(r, ct[mu].label, ct[nu].label, ct[tau].label).dump(2) << "\n";
    return;
  }
  if (o.format == "latex") {
    out << "h^{" << ct[tau].label << "}_{" << ct[mu].label << "," << ct[nu].label << "}(\\beta) = "
        << ratfunc_latex(r.gf) << "\n";
  } else {
    out << "mu: " << ct[mu].label << "  nu: " << ct[nu].label << "  tau: " << ct[tau].label << "\n";
    out << "gf: " << ratfunc_string(r.gf) << "\n";
  }
  std::vector<std::vector<std::string>> rows{{"r", "coeff", "count"}};
  for (int i = 0; i <= o.order; ++i) rows.push_back({std::to_string(i), to_string(r.coeffs[i]), r.raw_counts[i].str()});
  out << aligned_table(rows);
}

// --------------------------------------------------------------- one-part

inline void cmd_one_part(const CLI::App& sub, const Options& o, std::ostream& out) {
  require_format(o.format, false, "one-part");
  if (!sub.count("--sym")) throw UsageError("--sym is required");
  if (o.group.sym < 1) throw UsageError("--sym: degree must be at least 1");
  if (o.order < 0) throw UsageError("--order must be non-negative");
  std::vector<Rational> c = one_part_coeffs(o.group.sym, o.order);
  if (o.format == "json") {
    out << nlohmann::json{{"degree", o.group.sym}, {"coeffs", json::rationals(c)}}.dump(2) << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows{{"r", "coeff"}};
  for (int r = 0; r <= o.order; ++r) rows.push_back({std::to_string(r), to_string(c[r])});
  out << "degree: " << o.group.sym << "\n" << aligned_table(rows);
}

// ----------------------------------------------------------------- verify

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out_ << (ok ? "ok    " : "FAIL  ") << name;
    if (!detail.empty()) out_ << " (" << detail << ")";
    out_ << "\n";
    if (!ok) ++failures_;
  }
  void skip(const std::string& name, const std::string& why) { out_ << "skip  " << name << " (" << why << ")\n"; }
  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

inline void verify_algebra(const ClassAlgebra& ctx, Report& rep) {
  const int k = ctx.classes();
  const auto& sc = ctx.constants();
  bool assoc = true, comm = true, trace_ok = true;
  for (int a = 0; a < k; ++a) {
    ClassVector fa = ClassVector::basis(k, a);
    for (int b = 0; b < k; ++b) {
      ClassVector fb = ClassVector::basis(k, b);
      ClassVector ab = convolve(fa, fb, sc);
      comm = comm && ab == convolve(fb, fa, sc);
      for (int c = 0; c < k; ++c) {
        ClassVector fc = ClassVector::basis(k, c);
        assoc = assoc && convolve(ab, fc, sc) == convolve(fa, convolve(fb, fc, sc), sc);
        trace_ok = trace_ok && trace_product({a, b, c}, sc) == Rational(ctx.trace3(a, b, c));
      }
    }
  }
  rep.check("class algebra is associative", assoc);
  rep.check("class algebra is commutative", comm);
  rep.check("triple traces match convolution", trace_ok);
}

inline void verify_engine(const AlgebraPtr& ctx, int tau, const Options& o, const WorkCap& cap, Report& rep) {
  const int k = ctx->classes();
  HurwitzEngine engine(ctx, tau);
  const RatMatrix& a = engine.matrix().a;
  rep.check("A * A^-1 = I", a * engine.inverse() == RatMatrix::identity(k));
  if (k <= 8) rep.check("Bareiss inverse equals adjugate inverse", engine.inverse() == mat_inverse(a, InverseMethod::Adjugate));

  SeriesMatrix neumann = neumann_inverse(engine.matrix().diag, engine.matrix().b, o.max_r);
  bool series_ok = true;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) series_ok = series_ok && series_expand(engine.inverse()(i, j), o.max_r) == neumann[i][j];
  rep.check("Neumann series matches A^-1 to order " + std::to_string(o.max_r), series_ok);

  bool integral = true, symmetric = true, oracle = true;
  int compared = 0, skipped = 0;
  std::string first_bad;
  for (int mu = 0; mu < k; ++mu) {
    for (int nu = 0; nu < k; ++nu) {
      const int mu_inv = ctx->class_table().inverse(mu);
      symmetric = symmetric && engine.gf(mu, nu) == engine.gf(ctx->class_table().inverse(nu), mu_inv);
      HurwitzResult r;
      try {
        r = engine.series(mu, nu, o.max_r);
      } catch (const IntegralityViolation&) {
        integral = false;
        continue;
      }
      for (int i = 0; i <= o.max_r; ++i) {
        try {
          Integer brute = brute_force_count(*ctx, mu_inv, nu, tau, i, cap);
          ++compared;
          if (brute != r.raw_counts[i]) {
            oracle = false;
            if (first_bad.empty()) first_bad = ctx->class_table()[mu].label + " / " + ctx->class_table()[nu].label + " r=" + std::to_string(i);
          }
        } catch (const WorkCapExceeded&) {
          ++skipped;
        }
      }
    }
  }
  rep.check("|G| [b^r] h is a non-negative integer", integral);
  rep.check("h_{mu,nu} = h_{nu^-1,mu^-1}", symmetric);
  std::string detail = std::to_string(compared) + " compared";
  if (skipped) detail += ", " + std::to_string(skipped) + " over work cap";
  if (!first_bad.empty()) detail += ", first mismatch " + first_bad;
  rep.check("brute-force tuple counts (first class inverted), r <= " + std::to_string(o.max_r), oracle, detail);

  bool ode = true;
  for (int mu = 0; mu < k; ++mu)
    for (int nu = 0; nu < k; ++nu) ode = ode && ode_check(engine, mu, nu).holds;
  rep.check("h + b h' = |G| sum h h / |lambda|", ode);
}

inline void verify_one_part(const AlgebraPtr& ctx, int d, int tau, const Options& o, Report& rep) {
  const int full = ctx->class_table().require(std::to_string(d));
  HurwitzResult r = hurwitz_series(ctx, full, full, tau, o.max_r);
  std::vector<Rational> expected = one_part_coeffs(d, o.max_r);
  bool ok = true;
  for (int i = 0; i <= o.max_r; ++i) ok = ok && r.coeffs[i] == expected[i];
  rep.check("one-part closed form, r <= " + std::to_string(o.max_r), ok);
}

inline void verify_graphs(const AlgebraPtr& ctx, std::mt19937_64& rng, const WorkCap& cap, Report& rep) {
  const int k = ctx->classes();
  bool counts = true, moves = true;
  int instances = 0, moves_tried = 0;
  for (int t = 0; t < 4; ++t) {
    const int genus = static_cast<int>(rng() % 2);
    const int leaves = genus == 0 ? 3 : 1 + static_cast<int>(rng() % 2);
    EnhancedGraph g = random_graph(genus, leaves, rng);
    BoundaryCondition m;
    for (int e : g.leaves()) m[e] = static_cast<int>(rng() % k);
    try {
      Rational direct = count_boundary(g, m, *ctx, cap);
      Integer surface = count_homs_surface(genus, surface_classes(g, m, *ctx), *ctx, cap);
      Presentation p = presentation(g);
      std::vector<int> leaf_classes;
      for (int e : p.leaf_edges) leaf_classes.push_back(m.at(e));
      Integer pres = count_homs_presentation(p, leaf_classes, *ctx, cap);
      counts = counts && direct == Rational(surface) && surface == pres;
      for (const Move& mv : applicable_moves(g)) {
        moves = moves && count_boundary(apply_move(g, mv), transport_boundary(g, mv, m, *ctx), *ctx, cap) == direct;
        ++moves_tried;
      }
      ++instances;
    } catch (const WorkCapExceeded&) {
    }
  }
  rep.check("graph count = surface count = presentation count", counts, std::to_string(instances) + " graphs");
  rep.check("graph count invariant under moves", moves, std::to_string(moves_tried) + " moves");
}

inline bool cmd_verify(const CLI::App& sub, const Options& o, std::ostream& out) {
  require_format(o.format, false, "verify");
  if (o.format == "json") throw UsageError("--format json is not supported by 'verify'");
  if (o.max_r < 0) throw UsageError("--max-r must be non-negative");
  Loaded l = load_group(sub, o);
  const WorkCap cap = resolve_work_cap(sub, o);
  const ClassAlgebra& ctx = *l.algebra;
  int tau;
  if (!o.tau.empty()) {
    tau = resolve_class(ctx, "--tau", o.tau);
  } else if (l.degree && *l.degree >= 2) {
    std::vector<int> parts(*l.degree - 2, 1);
    parts.push_back(2);
    tau = ctx.class_table().require(Partition(parts).to_string());
  } else {
    throw UsageError("--tau is required unless --sym d with d >= 2 is given");
  }
  out << "seed: " << o.seed << "\n";
  out << "group order " << ctx.order() << ", " << ctx.classes() << " classes, tau = " << ctx.class_table()[tau].label << "\n";
  std::mt19937_64 rng(o.seed);
  Report rep(out);
  verify_algebra(ctx, rep);
  verify_engine(l.algebra, tau, o, cap, rep);
  if (l.degree && *l.degree >= 2 && ctx.class_table()[tau].cycle_type &&
      ctx.class_table()[tau].cycle_type->largest() == 2 && ctx.class_table()[tau].cycle_type->length() == *l.degree - 1) {
    verify_one_part(l.algebra, *l.degree, tau, o, rep);
  } else {
    rep.skip("one-part closed form", "needs --sym d and tau = transpositions");
  }
  if (ctx.order() <= 24) {
    verify_graphs(l.algebra, rng, cap, rep);
  } else {
    rep.skip("graph counts", "group order above 24");
  }
  if (rep.failures() == 0) {
    out << "all checks passed\n";
    return true;
  }
  out << rep.failures() << (rep.failures() == 1 ? " check failed\n" : " checks failed\n");
  return false;
}

// ------------------------------------------------------- graph-count / present

struct GraphInput {
  json::GraphFile file;
  bool random = false;
};

inline GraphInput load_graph(const CLI::App& sub, const Options& o, int leaves_hint) {
  if (sub.count("--graph")) {
    if (sub.count("--genus")) throw UsageError("--graph and --genus are mutually exclusive");
    return {json::graph_from_json(json::read_file(o.graph_file)), false};
  }
  if (!sub.count("--genus")) throw UsageError("one of --graph or --genus is required");
  if (o.genus < 0) throw UsageError("--genus must be non-negative");
  if (2 - 2 * o.genus - leaves_hint >= 0) {
    throw UsageError("--genus " + std::to_string(o.genus) + " with " + std::to_string(leaves_hint) +
                     " leaves has no pants decomposition (need 2g - 2 + n > 0)");
  }
  if (sub.count("--seed")) {
    std::mt19937_64 rng(o.seed);
    return {{random_graph(o.genus, leaves_hint, rng), {}}, true};
  }
  return {{canonical_graph(o.genus, leaves_hint), {}}, false};
}

inline void cmd_graph_count(const CLI::App& sub, const Options& o, std::ostream& out) {
  require_format(o.format, false, "graph-count");
  Loaded l = load_group(sub, o);
  const ClassAlgebra& ctx = *l.algebra;
  const WorkCap cap = resolve_work_cap(sub, o);
  std::vector<std::string> labels;
  if (sub.count("--boundary")) {
    labels = split(o.boundary, ';');
  } else if (sub.count("--genus")) {
    throw UsageError("--boundary is required with --genus");
  }
  GraphInput in = load_graph(sub, o, static_cast<int>(labels.size()));
  if (!labels.empty()) {
    std::vector<int> leaves = in.file.graph.leaves();
    if (sub.count("--graph") && leaves.size() != labels.size()) {
      throw UsageError("--boundary: " + std::to_string(labels.size()) + " labels for " + std::to_string(leaves.size()) + " leaves");
    }
    in.file.boundary.clear();
    for (std::size_t i = 0; i < leaves.size(); ++i) in.file.boundary[leaves[i]] = labels[i];
  }
  BoundaryCondition m;
  for (const auto& [e, label] : in.file.boundary) m[e] = resolve_class(ctx, "boundary of edge " + std::to_string(e), label);
  const EnhancedGraph& g = in.file.graph;
  Rational count = count_boundary(g, m, ctx, cap);

  std::optional<Integer> surface, pres;
  if (o.oracles) {
    surface = count_homs_surface(g.genus(), surface_classes(g, m, ctx), ctx, cap);
    Presentation p = presentation(g);
    std::vector<int> leaf_classes;
    for (int e : p.leaf_edges) leaf_classes.push_back(m.at(e));
    pres = count_homs_presentation(p, leaf_classes, ctx, cap);
  }
  if (o.format == "json") {
    nlohmann::json j = {{"genus", g.genus()}, {"leaves", g.leaves().size()}, {"count", to_string(count)}};
    if (in.random) j["seed"] = o.seed;
    nlohmann::json b = nlohmann::json::object();
    for (const auto& [e, label] : in.file.boundary) b[std::to_string(e)] = ctx.class_table()[m.at(e)].label;
    j["boundary"] = b;
    if (o.oracles) {
      j["surface_count"] = json::integer_to_json(*surface);
      j["presentation_count"] = json::integer_to_json(*pres);
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (in.random) out << "seed: " << o.seed << "\n";
  out << "genus: " << g.genus() << "  leaves: " << g.leaves().size() << "  edges: " << g.edges() << "\n";
  out << "boundary:";
  for (const auto& [e, label] : in.file.boundary) out << " e" << e << "=" << ctx.class_table()[m.at(e)].label;
  out << "\ncount: " << to_string(count) << "\n";
  if (o.oracles) out << "surface count: " << surface->str() << "\npresentation count: " << pres->str() << "\n";
}

inline void cmd_present(const CLI::App& sub, const Options& o, std::ostream& out) {
  require_format(o.format, false, "present");
  if (sub.count("--genus") && !sub.count("--leaves")) throw UsageError("--leaves is required with --genus");
  GraphInput in = load_graph(sub, o, o.leaves);
  Presentation p = presentation(in.file.graph);
  if (o.format == "json") {
    nlohmann::json j = {{"graph", json::graph_to_json(in.file.graph, in.file.boundary)},
                        {"presentation", json::presentation_to_json(p)}};
    if (in.random) j["seed"] = o.seed;
    out << j.dump(2) << "\n";
    return;
  }
  if (in.random) out << "seed: " << o.seed << "\n";
  out << "generators: " << p.generators.size() << "  relators: " << p.relators.size() << "\n";
  out << p.to_string() << "\n";
}

// -------------------------------------------------------------------- run

inline void add_group_flags(CLI::App* sub, Options& o) {
  sub->add_option("--sym", o.group.sym, "symmetric group S_d of this degree");
  sub->add_option("--group", o.group.file, "group file (JSON generators or Cayley table)");
}

inline void add_format_flag(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact generating functions for Hurwitz-type counts in finite groups", "hurwitz"};
  app.require_subcommand(1);

  auto* classes = app.add_subcommand("classes", "conjugacy classes and structure constants");
  add_group_flags(classes, o);
  add_format_flag(classes, o);
  classes->add_flag("--structure-constants", o.structure_constants, "also print the structure constants");

  auto* matrix = app.add_subcommand("matrix", "the matrix A_tau(b) = D - b B");
  add_group_flags(matrix, o);
  add_format_flag(matrix, o);
  matrix->add_option("--tau", o.tau, "class of the simple branch points")->required();
  matrix->add_flag("--inverse", o.inverse, "also print the inverse");

  auto* hurwitz = app.add_subcommand("hurwitz", "generating function h_{mu,nu}(b) and its coefficients");
  add_group_flags(hurwitz, o);
  add_format_flag(hurwitz, o);
  hurwitz->add_option("--mu", o.mu, "first class")->required();
  hurwitz->add_option("--nu", o.nu, "second class")->required();
  hurwitz->add_option("--tau", o.tau, "branch point class")->required();
  hurwitz->add_option("--order", o.order, "number of series coefficients minus one");

  auto* one_part = app.add_subcommand("one-part", "closed-form one-part coefficients");
  one_part->add_option("--sym", o.group.sym, "degree d");
  add_format_flag(one_part, o);
  one_part->add_option("--order", o.order, "largest r");

  auto* verify = app.add_subcommand("verify", "run the consistency checks for a group");
  add_group_flags(verify, o);
  add_format_flag(verify, o);
  verify->add_option("--tau", o.tau, "branch point class (default: transpositions)");
  verify->add_option("--max-r", o.max_r, "largest r for series and brute-force checks");
  verify->add_option("--seed", o.seed, "seed for random graphs");
  verify->add_option("--work-cap", o.work_cap, "enumeration budget");

  auto* graph_count = app.add_subcommand("graph-count", "bundle count for an enhanced graph with boundary classes");
  add_group_flags(graph_count, o);
  add_format_flag(graph_count, o);
  graph_count->add_option("--graph", o.graph_file, "graph file");
  graph_count->add_option("--genus", o.genus, "build a graph of this genus");
  graph_count->add_option("--boundary", o.boundary, "leaf classes separated by ';'");
  graph_count->add_option("--seed", o.seed, "use a random graph from this seed");
  graph_count->add_flag("--oracles", o.oracles, "also count through the surface relation and the presentation");
  graph_count->add_option("--work-cap", o.work_cap, "enumeration budget");

  auto* present = app.add_subcommand("present", "fundamental group presentation of an enhanced graph");
  add_format_flag(present, o);
  present->add_option("--graph", o.graph_file, "graph file");
  present->add_option("--genus", o.genus, "build a graph of this genus");
  present->add_option("--leaves", o.leaves, "number of leaves");
  present->add_option("--seed", o.seed, "use a random graph from this seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    bool ok = true;
    if (*classes) cmd_classes(*classes, o, out);
    if (*matrix) cmd_matrix(*matrix, o, out);
    if (*hurwitz) cmd_hurwitz(*hurwitz, o, out);
    if (*one_part) cmd_one_part(*one_part, o, out);
    if (*verify) ok = cmd_verify(*verify, o, out);
    if (*graph_count) cmd_graph_count(*graph_count, o, out);
    if (*present) cmd_present(*present, o, out);
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hurwitz"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hurwitz::cli

#endif  // HURWITZ_TOOLS_CLI_APP_HPP
