#ifndef HURWITZ_PERMUTATION_HPP
#define HURWITZ_PERMUTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products compose as functions: (p * q)(i) = p(q(i)), so q acts first.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x]) {
        throw InvalidInput("image array is not a permutation of 0.." +
                           std::to_string(images_.size() - 1));
      }
      seen[x] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    return Permutation(std::move(images));
  }

  /// The permutation with the given disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        images.at(cycle[k]) = cycle[(k + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<int>(i);
    Permutation p;
    p.images_ = std::move(out);
    return p;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw InvalidInput("degree mismatch in permutation product");
    Permutation r;
    r.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i)) return false;
    }
    return true;
  }

  /// Cycle lengths, ascending (fixed points included as 1s).
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  /// Cycle notation without fixed points, "()" for the identity.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == static_cast<int>(i)) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) out += ' ';
        out += std::to_string(j);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

}  // namespace hurwitz

#endif  // HURWITZ_PERMUTATION_HPP
