#ifndef HURWITZ_JSON_IO_HPP
#define HURWITZ_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <string>

#include "hurwitz/class_algebra.hpp"
#include "hurwitz/graph.hpp"
#include "hurwitz/graph_count.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/presentation.hpp"

namespace hurwitz::json {

using nlohmann::json;

inline json rationals(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

/// {"num": ["c0", "c1", ...], "den": [...]}, rationals as "p/q" strings.
inline json ratfunc_to_json(const RatFunc& f) {
  return {{"num", rationals(f.num().coeffs())}, {"den", rationals(f.den().coeffs())}};
}

inline RatFunc ratfunc_from_json(const json& j) {
  auto poly = [](const json& arr) {
    if (!arr.is_array()) throw InvalidInput("rational function coefficients must be an array");
    std::vector<Rational> c;
    for (const auto& x : arr) {
      if (x.is_string()) {
        c.push_back(parse_rational(x.get<std::string>()));
      } else if (x.is_number_integer()) {
        c.emplace_back(x.get<long long>());
      } else {
        throw InvalidInput("coefficient must be a \"p/q\" string or an integer");
      }
    }
    return Poly(std::move(c));
  };
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw InvalidInput("rational function needs num and den");
  return RatFunc(poly(j["num"]), poly(j["den"]));
}

/// Raw counts are emitted as JSON integers when they fit in 64 bits,
/// otherwise as decimal strings.
inline json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

struct GroupData {
  FiniteGroup group;
  ClassTable classes;
};

/// {"generators": [[1,0,2], ...]} or {"cayley": [[...], ...]}.
inline GroupData group_from_json(const json& j, const GroupLimits& limits = {}) {
  if (!j.is_object()) throw InvalidInput("group file must be a JSON object");
  if (j.contains("generators") == j.contains("cayley")) {
    throw InvalidInput("group file needs exactly one of \"generators\" or \"cayley\"");
  }
  try {
    if (j.contains("generators")) {
      std::vector<Permutation> gens;
      for (const auto& g : j.at("generators")) gens.emplace_back(g.get<std::vector<int>>());
      FiniteGroup grp = enumerate_group(gens, limits);
      ClassTable ct = conjugacy_classes(grp);
      return {std::move(grp), std::move(ct)};
    }
    auto table = j.at("cayley").get<std::vector<std::vector<int>>>();
    if (table.size() > limits.order_cap) throw OrderCapExceeded("Cayley table order exceeds cap");
    FiniteGroup grp = load_cayley_table(table);
    ClassTable ct = conjugacy_classes(grp);
    return {std::move(grp), std::move(ct)};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed group file: ") + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// The structure constants as a nested array c[mu][nu][lambda].
inline json structure_constants_to_json(const StructureConstants& sc) {
  json out = json::array();
  for (int mu = 0; mu < sc.classes(); ++mu) {
    json plane = json::array();
    for (int nu = 0; nu < sc.classes(); ++nu) {
      json row = json::array();
      for (int lambda = 0; lambda < sc.classes(); ++lambda) row.push_back(sc(mu, nu, lambda));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

struct GraphFile {
  EnhancedGraph graph;
  std::map<int, std::string> boundary;  // leaf edge id -> class label
};

/// {"darts": N, "pairing": [...], "vertex": [...], "next": [...],
///  "source_dart": [...], "tree": [...], "basepoint": v,
///  "boundary": {"<leaf edge id>": "<class label>"}}. Edge ids follow the
/// graph's numbering (by increasing smaller dart).
inline json graph_to_json(const EnhancedGraph& g, const std::map<int, std::string>& boundary = {}) {
  json out = {{"darts", g.darts()},        {"pairing", g.pairing()},     {"vertex", g.vertex_map()},
              {"next", g.next_map()},      {"source_dart", g.source_darts()}, {"tree", g.tree_edges()},
              {"basepoint", g.basepoint()}};
  if (!boundary.empty()) {
    json b = json::object();
    for (const auto& [e, label] : boundary) b[std::to_string(e)] = label;
    out["boundary"] = b;
  }
  return out;
}

inline GraphFile graph_from_json(const json& j) {
  try {
    const int darts = j.at("darts").get<int>();
    auto pairing = j.at("pairing").get<std::vector<int>>();
    if (static_cast<int>(pairing.size()) != darts) throw InvalidGraph("\"darts\" does not match the pairing length");
    EnhancedGraph g(std::move(pairing), j.at("vertex").get<std::vector<int>>(), j.at("next").get<std::vector<int>>(),
                    j.at("source_dart").get<std::vector<int>>(), j.at("tree").get<std::vector<int>>(),
                    j.at("basepoint").get<int>());
    std::map<int, std::string> boundary;
    if (j.contains("boundary")) {
      for (const auto& [key, value] : j.at("boundary").items()) {
        int e = 0;
        try {
          e = std::stoi(key);
        } catch (const std::exception&) {
          throw InvalidInput("boundary key '" + key + "' is not an edge id");
        }
        boundary[e] = value.get<std::string>();
      }
    }
    return {std::move(g), std::move(boundary)};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed graph file: ") + e.what());
  }
}

inline BoundaryCondition resolve_boundary(const GraphFile& f, const ClassTable& ct) {
  BoundaryCondition m;
  for (const auto& [e, label] : f.boundary) m[e] = ct.require(label);
  return m;
}

inline json presentation_to_json(const Presentation& p) {
  json rel = json::array();
  for (const auto& w : p.relators) {
    json word = json::array();
    for (const auto& l : w) word.push_back({{"generator", p.generators[l.generator]}, {"exponent", l.exponent}});
    rel.push_back(std::move(word));
  }
  return {{"generators", p.generators}, {"relators", rel}, {"leaf_edges", p.leaf_edges}};
}

/// {"mu": .., "nu": .., "tau": .., "gf": {...}, "coeffs": [...], "counts": [...]}
inline json hurwitz_result_to_json(const HurwitzResult& r, const std::string& mu, const std::string& nu,
                                   const std::string& tau) {
  json counts = json::array();
  for (const auto& c : r.raw_counts) counts.push_back(integer_to_json(c));
  return {{"mu", mu},
          {"nu", nu},
          {"tau", tau},
          {"gf", ratfunc_to_json(r.gf)},
          {"coeffs", rationals(r.coeffs.coeffs())},
          {"counts", counts}};
}

}  // namespace hurwitz::json

#endif  // HURWITZ_JSON_IO_HPP
