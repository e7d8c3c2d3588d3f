#ifndef HURWITZ_CLASS_TABLE_HPP
#define HURWITZ_CLASS_TABLE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/finite_group.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

struct ConjugacyClass {
  int id = 0;
  std::vector<int> members;  // sorted element indices
  int representative = 0;    // least member
  int inverse_class_id = 0;
  std::string label;
  std::optional<Partition> cycle_type;  // set for S_d

  std::size_t size() const { return members.size(); }
};

/// Conjugacy classes of a group, i.e. the standard basis of the class algebra.
class ClassTable {
 public:
  ClassTable() = default;
  ClassTable(std::vector<ConjugacyClass> classes, std::vector<int> class_of)
      : classes_(std::move(classes)), class_of_(std::move(class_of)) {}

  std::size_t count() const { return classes_.size(); }
  const ConjugacyClass& operator[](int id) const { return classes_.at(id); }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int element) const { return class_of_[element]; }
  std::size_t size(int id) const { return classes_.at(id).size(); }
  int inverse(int id) const { return classes_.at(id).inverse_class_id; }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& c : classes_) out.push_back(c.label);
    return out;
  }

  /// Resolves a user-supplied class label. For S_d the label is a partition
  /// and parts may be given in any order, with or without parentheses
  /// ("(2,1,1)" finds "1,1,2").
  std::optional<int> find(std::string_view label) const {
    for (const auto& c : classes_) {
      if (c.label == label) return c.id;
    }
    if (!classes_.empty() && classes_.front().cycle_type) {
      try {
        if (label.size() >= 2 && label.front() == '(' && label.back() == ')') label = label.substr(1, label.size() - 2);
        Partition p = Partition::parse(label);
        for (const auto& c : classes_) {
          if (c.cycle_type && *c.cycle_type == p) return c.id;
        }
      } catch (const InvalidInput&) {
      }
    }
    return std::nullopt;
  }

  /// Like find(), but throws InvalidInput listing the valid labels.
  int require(std::string_view label) const {
    if (auto id = find(label)) return *id;
    std::string valid;
    for (const auto& c : classes_) valid += (valid.empty() ? "" : " ") + ("'" + c.label + "'");
    throw InvalidInput("unknown class label '" + std::string(label) + "'; valid labels: " + valid);
  }

 private:
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

/// Orbits of the conjugation action, ordered by least representative index.
/// Labels are "c0", "c1", ... in that order.
inline ClassTable conjugacy_classes(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> class_of(n, -1);
  std::vector<ConjugacyClass> classes;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] >= 0) continue;
    ConjugacyClass c;
    c.id = static_cast<int>(classes.size());
    std::vector<int> queue{x};
    class_of[x] = c.id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int s : g.generators()) {
        int y = g.mul(g.mul(s, queue[head]), g.inv(s));
        if (class_of[y] < 0) {
          class_of[y] = c.id;
          queue.push_back(y);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    c.members = std::move(queue);
    c.representative = c.members.front();
    c.label = "c" + std::to_string(c.id);
    classes.push_back(std::move(c));
  }
  for (auto& c : classes) c.inverse_class_id = class_of[g.inv(c.representative)];
  return ClassTable(std::move(classes), std::move(class_of));
}

struct SymmetricGroup {
  FiniteGroup group;
  ClassTable classes;
  int degree = 0;

  /// The element of cycle type p with cycles on consecutive points.
  int canonical_element(const Partition& p) const {
    return *group.index_of(p.canonical_permutation());
  }
};

/// S_d generated by (0 1) and (0 1 ... d-1), with classes labelled by cycle
/// type and ordered by symmetric_class_order.
inline SymmetricGroup symmetric_group(int d, const GroupLimits& limits = {}) {
  if (d < 1) throw InvalidInput("degree must be at least 1");
  if (d > limits.degree_cap) {
    throw OrderCapExceeded("degree " + std::to_string(d) + " exceeds cap " + std::to_string(limits.degree_cap));
  }
  std::vector<Permutation> gens;
  if (d == 1) {
    gens.push_back(Permutation::identity(1));
  } else {
    gens.push_back(Permutation::from_cycles(d, {{0, 1}}));
    std::vector<int> full(d);
    for (int i = 0; i < d; ++i) full[i] = i;
    gens.push_back(Permutation::from_cycles(d, {full}));
  }
  SymmetricGroup out{enumerate_group(gens, limits), {}, d};

  std::vector<Partition> types = partitions_of(d);
  std::vector<ConjugacyClass> classes(types.size());
  for (std::size_t i = 0; i < types.size(); ++i) {
    classes[i].id = static_cast<int>(i);
    classes[i].label = types[i].to_string();
    classes[i].cycle_type = types[i];
  }
  std::vector<int> class_of(out.group.order());
  for (std::size_t x = 0; x < out.group.order(); ++x) {
    Partition t(out.group.permutations()[x].cycle_type());
    auto it = std::find(types.begin(), types.end(), t);
    class_of[x] = static_cast<int>(it - types.begin());
    classes[class_of[x]].members.push_back(static_cast<int>(x));
  }
  for (auto& c : classes) {
    c.representative = c.members.front();
    c.inverse_class_id = class_of[out.group.inv(c.representative)];
  }
  out.classes = ClassTable(std::move(classes), std::move(class_of));
  return out;
}

}  // namespace hurwitz

#endif  // HURWITZ_CLASS_TABLE_HPP
