#ifndef HURWITZ_FINITE_GROUP_HPP
#define HURWITZ_FINITE_GROUP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

struct GroupLimits {
  std::size_t order_cap = 5040;
  int degree_cap = 7;
};

/// A finite group given by its full multiplication table.
///
/// Elements are indices 0..order-1. Immutable after construction; only the
/// factory functions below build instances.
class FiniteGroup {
 public:
  std::size_t order() const { return order_; }
  int mul(int a, int b) const { return static_cast<int>(table_[static_cast<std::size_t>(a) * order_ + b]); }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }

  /// A generating set: the input generators for permutation groups, a
  /// greedily chosen one for groups loaded from a Cayley table.
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::string>& element_labels() const { return labels_; }
  /// Underlying permutations; empty for groups loaded from a Cayley table.
  const std::vector<Permutation>& permutations() const { return perms_; }

  std::optional<int> index_of(const Permutation& p) const {
    for (std::size_t i = 0; i < perms_.size(); ++i) {
      if (perms_[i] == p) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  friend FiniteGroup enumerate_group(const std::vector<Permutation>& generators, const GroupLimits& limits);
  friend FiniteGroup load_cayley_table(const std::vector<std::vector<int>>& table, std::uint64_t seed);

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<int> generators_;
  std::vector<std::string> labels_;
  std::vector<Permutation> perms_;
};

namespace detail {

/// Maps permutations to element indices; packs small degrees into one word.
class PermIndex {
 public:
  explicit PermIndex(int degree) : packed_(degree <= 16) {}

  std::optional<int> find(const Permutation& p) const {
    if (packed_) {
      auto it = small_.find(pack(p));
      if (it == small_.end()) return std::nullopt;
      return it->second;
    }
    auto it = large_.find(p.images());
    if (it == large_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Permutation& p, int index) {
    if (packed_) {
      small_.emplace(pack(p), index);
    } else {
      large_.emplace(p.images(), index);
    }
  }

 private:
  static std::uint64_t pack(const Permutation& p) {
    std::uint64_t key = 0;
    for (int x : p.images()) key = (key << 4) | static_cast<std::uint64_t>(x);
    return key;
  }

  bool packed_;
  std::unordered_map<std::uint64_t, int> small_;
  std::map<std::vector<int>, int> large_;
};

}  // namespace detail

/// Closes the generators under multiplication by breadth-first search.
///
/// Numbering: the identity is element 0; each further BFS layer (elements at
/// word length k) is appended sorted lexicographically by image array, so the
/// numbering depends only on the generated group and the word-length filtration.
inline FiniteGroup enumerate_group(const std::vector<Permutation>& generators,
                                   const GroupLimits& limits = {}) {
  if (generators.empty()) throw InvalidInput("at least one generator is required");
  const int degree = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InvalidInput("generators must share one degree");
  }

  std::vector<Permutation> elements{Permutation::identity(degree)};
  detail::PermIndex index(degree);
  index.insert(elements.front(), 0);
  std::vector<int> layer{0};
  while (!layer.empty()) {
    std::vector<Permutation> fresh;
    for (int x : layer) {
      for (const auto& s : generators) {
        Permutation y = elements[x] * s;
        if (index.find(y)) continue;
        index.insert(y, -1);
        fresh.push_back(std::move(y));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    layer.clear();
    for (auto& p : fresh) {
      if (elements.size() >= limits.order_cap) {
        throw OrderCapExceeded("group order exceeds cap " + std::to_string(limits.order_cap));
      }
      layer.push_back(static_cast<int>(elements.size()));
      elements.push_back(std::move(p));
    }
  }
  detail::PermIndex final_index(degree);
  for (std::size_t i = 0; i < elements.size(); ++i) final_index.insert(elements[i], static_cast<int>(i));

  FiniteGroup g;
  g.order_ = elements.size();
  g.identity_ = 0;
  g.table_.resize(g.order_ * g.order_);
  g.inverse_.resize(g.order_);
  for (std::size_t a = 0; a < g.order_; ++a) {
    for (std::size_t b = 0; b < g.order_; ++b) {
      g.table_[a * g.order_ + b] = static_cast<std::uint32_t>(*final_index.find(elements[a] * elements[b]));
    }
    g.inverse_[a] = *final_index.find(elements[a].inverse());
  }
  for (const auto& s : generators) g.generators_.push_back(*final_index.find(s));
  std::sort(g.generators_.begin(), g.generators_.end());
  g.generators_.erase(std::unique(g.generators_.begin(), g.generators_.end()), g.generators_.end());
  for (const auto& p : elements) g.labels_.push_back(p.cycle_string());
  g.perms_ = std::move(elements);
  return g;
}

namespace detail {

inline std::vector<bool> generated_subgroup(const std::vector<std::vector<int>>& t, int identity,
                                            const std::vector<int>& gens) {
  std::vector<bool> in(t.size(), false);
  std::vector<int> queue{identity};
  in[identity] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s : gens) {
      int y = t[queue[head]][s];
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace detail

/// Validates a Cayley table and wraps it as a group.
///
/// Associativity is checked on all triples when the order is at most 256.
/// Above that, Light's test is run: (x s) y == x (s y) for every x, y and every
/// s in a greedily chosen generating set (sufficient for associativity), plus
/// 10 * order seeded random triples.
inline FiniteGroup load_cayley_table(const std::vector<std::vector<int>>& table,
                                     std::uint64_t seed = 0x5eedu) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("closure", "empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw NotAGroup("closure", "row " + std::to_string(i) + " has wrong length");
    for (int x : table[i]) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw NotAGroup("closure", "entry " + std::to_string(x) + " out of range in row " + std::to_string(i));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[table[i][j]]) throw NotAGroup("latin", "row " + std::to_string(i) + " repeats an entry");
      if (col[table[j][i]]) throw NotAGroup("latin", "column " + std::to_string(i) + " repeats an entry");
      row[table[i][j]] = true;
      col[table[j][i]] = true;
    }
  }
  std::optional<int> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = table[e][x] == static_cast<int>(x) && table[x][e] == static_cast<int>(x);
    }
    if (ok) identity = static_cast<int>(e);
  }
  if (!identity) throw NotAGroup("identity", "no two-sided identity element");

  auto witness = [](std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table[table[a][b]][c] != table[a][table[b][c]]) throw NotAGroup("associativity", witness(a, b, c));
  };

  std::vector<int> gens;
  {
    std::vector<bool> covered = detail::generated_subgroup(table, *identity, gens);
    for (std::size_t x = 0; x < n; ++x) {
      if (covered[x]) continue;
      gens.push_back(static_cast<int>(x));
      covered = detail::generated_subgroup(table, *identity, gens);
    }
  }

  if (n <= 256) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    for (int s : gens)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) check(a, static_cast<std::size_t>(s), c);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < 10 * n; ++k) check(pick(rng), pick(rng), pick(rng));
  }

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = *identity;
  g.table_.resize(n * n);
  g.inverse_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      g.table_[a * n + b] = static_cast<std::uint32_t>(table[a][b]);
      if (table[a][b] == *identity) g.inverse_[a] = static_cast<int>(b);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[g.inverse_[a]][a] != *identity) throw NotAGroup("inverse", "element " + std::to_string(a));
    g.labels_.push_back(std::to_string(a));
  }
  g.generators_ = std::move(gens);
  return g;
}

}  // namespace hurwitz

#endif  // HURWITZ_FINITE_GROUP_HPP
