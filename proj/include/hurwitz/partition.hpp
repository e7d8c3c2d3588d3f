#ifndef HURWITZ_PARTITION_HPP
#define HURWITZ_PARTITION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// An integer partition, parts kept in ascending order. Used as the cycle
/// type labelling the conjugacy classes of S_d.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("partition must have at least one part");
    for (int p : parts_) {
      if (p < 1) throw InvalidInput("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end());
  }

  /// Parses a comma list such as "1,1,2"; order of the parts is irrelevant.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view token = text.substr(pos, comma - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      if (token.empty() || token.size() > 6 ||
          !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidInput("bad partition '" + std::string(text) + "'");
      }
      parts.push_back(std::stoi(std::string(token)));
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int sum() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  int largest() const { return parts_.back(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  /// d! / prod_i (i^{m_i} m_i!), the number of permutations of this cycle type.
  long long class_size() const {
    long long size = 1;
    for (int k = 2; k <= sum(); ++k) size *= k;
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    for (auto [part, m] : mult) {
      for (int j = 0; j < m; ++j) size /= part;
      for (int j = 2; j <= m; ++j) size /= j;
    }
    return size;
  }

  /// Cycles filled with consecutive points, parts taken in ascending order.
  Permutation canonical_permutation() const {
    std::vector<std::vector<int>> cycles;
    int next = 0;
    for (int p : parts_) {
      std::vector<int> cycle;
      for (int j = 0; j < p; ++j) cycle.push_back(next++);
      cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(sum(), cycles);
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Class order used for S_d: more parts first; among equal part counts the
/// partition whose parts, read in descending order, are lexicographically
/// smaller comes first. Reproduces (11),(2); (111),(12),(3);
/// (1111),(112),(22),(13),(4).
inline bool symmetric_class_order(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return std::lexicographical_compare(a.parts().rbegin(), a.parts().rend(), b.parts().rbegin(),
                                      b.parts().rend());
}

/// All partitions of d in symmetric_class_order.
inline std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, d, 1);
  std::sort(out.begin(), out.end(), symmetric_class_order);
  return out;
}

}  // namespace hurwitz

#endif  // HURWITZ_PARTITION_HPP
