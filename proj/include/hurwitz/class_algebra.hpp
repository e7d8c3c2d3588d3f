#ifndef HURWITZ_CLASS_ALGEBRA_HPP
#define HURWITZ_CLASS_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "hurwitz/class_table.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// c(mu, nu, lambda): the coefficient of f_lambda in f_mu * f_nu.
class StructureConstants {
 public:
  StructureConstants() = default;
  StructureConstants(int classes, int identity_class)
      : k_(classes), identity_class_(identity_class), c_(static_cast<std::size_t>(classes) * classes * classes, 0) {}

  int classes() const { return k_; }
  int identity_class() const { return identity_class_; }
  std::int64_t operator()(int mu, int nu, int lambda) const { return c_[index(mu, nu, lambda)]; }
  std::int64_t& at(int mu, int nu, int lambda) { return c_[index(mu, nu, lambda)]; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t index(int mu, int nu, int lambda) const {
    return (static_cast<std::size_t>(mu) * k_ + nu) * k_ + lambda;
  }
  int k_ = 0;
  int identity_class_ = 0;
  std::vector<std::int64_t> c_;
};

/// Counts, for a fixed representative r of lambda, the a in mu with
/// a^{-1} r in nu. Each lambda with more than one member is recounted at a
/// second representative; a mismatch means the class table is not a union of
/// conjugacy classes.
inline StructureConstants structure_constants(const FiniteGroup& g, const ClassTable& classes) {
  const int k = static_cast<int>(classes.count());
  StructureConstants sc(k, classes.class_of(g.identity()));
  std::vector<std::int64_t> recount(static_cast<std::size_t>(k) * k);
  for (int lambda = 0; lambda < k; ++lambda) {
    const auto& target = classes[lambda];
    const int r = target.representative;
    for (int mu = 0; mu < k; ++mu) {
      for (int a : classes[mu].members) sc.at(mu, classes.class_of(g.mul(g.inv(a), r)), lambda) += 1;
    }
    if (target.size() > 1) {
      const int r2 = target.members[1];
      std::fill(recount.begin(), recount.end(), 0);
      for (int mu = 0; mu < k; ++mu) {
        for (int a : classes[mu].members) recount[static_cast<std::size_t>(mu) * k + classes.class_of(g.mul(g.inv(a), r2))] += 1;
      }
      for (int mu = 0; mu < k; ++mu) {
        for (int nu = 0; nu < k; ++nu) {
          if (recount[static_cast<std::size_t>(mu) * k + nu] != sc(mu, nu, lambda)) {
            throw std::logic_error("structure constant depends on the representative of class " + target.label);
          }
        }
      }
    }
  }
  return sc;
}

/// An element of the class algebra in the standard basis f_mu.
struct ClassVector {
  std::vector<Rational> coeffs;

  static ClassVector zero(std::size_t classes) { return {std::vector<Rational>(classes)}; }
  static ClassVector basis(std::size_t classes, int id) {
    ClassVector v = zero(classes);
    v.coeffs.at(id) = 1;
    return v;
  }

  std::size_t size() const { return coeffs.size(); }
  const Rational& operator[](int id) const { return coeffs[id]; }
  Rational& operator[](int id) { return coeffs[id]; }

  ClassVector& operator+=(const ClassVector& o) {
    if (o.size() != size()) throw InvalidInput("class vector dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator*(const Rational& s, ClassVector v) {
    for (auto& c : v.coeffs) c *= s;
    return v;
  }
  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

inline ClassVector convolve(const ClassVector& u, const ClassVector& v, const StructureConstants& sc) {
  const int k = sc.classes();
  if (static_cast<int>(u.size()) != k || static_cast<int>(v.size()) != k) {
    throw InvalidInput("class vector dimension does not match the structure constants");
  }
  ClassVector w = ClassVector::zero(k);
  for (int mu = 0; mu < k; ++mu) {
    if (u[mu] == 0) continue;
    for (int nu = 0; nu < k; ++nu) {
      if (v[nu] == 0) continue;
      Rational uv = u[mu] * v[nu];
      for (int lambda = 0; lambda < k; ++lambda) {
        if (std::int64_t c = sc(mu, nu, lambda)) w[lambda] += uv * c;
      }
    }
  }
  return w;
}

/// Coefficient of the identity class.
inline Rational trace(const ClassVector& v, const StructureConstants& sc) {
  return v[sc.identity_class()];
}

/// tr(f_{c_1} ... f_{c_m}).
inline Rational trace_product(std::span<const int> classes, const StructureConstants& sc) {
  if (classes.empty()) throw InvalidInput("trace_product needs at least one class");
  ClassVector acc = ClassVector::basis(sc.classes(), classes[0]);
  for (std::size_t i = 1; i < classes.size(); ++i) acc = convolve(acc, ClassVector::basis(sc.classes(), classes[i]), sc);
  return trace(acc, sc);
}

inline Rational trace_product(std::initializer_list<int> classes, const StructureConstants& sc) {
  return trace_product(std::span<const int>(classes.begin(), classes.size()), sc);
}

/// A group together with its class table and structure constants: everything
/// the counting formulas need. Shared immutably between engines.
class ClassAlgebra {
 public:
  ClassAlgebra(FiniteGroup group, ClassTable classes)
      : group_(std::move(group)), classes_(std::move(classes)), sc_(structure_constants(group_, classes_)) {
    const int k = this->classes();
    triple_.assign(static_cast<std::size_t>(k) * k * k, 0);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c) {
          // tr(f_a f_b f_c) = c(a, b, c^{-1}) * |c|
          triple_[(static_cast<std::size_t>(a) * k + b) * k + c] =
              sc_(a, b, classes_.inverse(c)) * static_cast<std::int64_t>(classes_.size(c));
        }
  }

  static std::shared_ptr<const ClassAlgebra> of(FiniteGroup group, ClassTable classes) {
    return std::make_shared<const ClassAlgebra>(std::move(group), std::move(classes));
  }
  static std::shared_ptr<const ClassAlgebra> of(SymmetricGroup sym) {
    return of(std::move(sym.group), std::move(sym.classes));
  }

  const FiniteGroup& group() const { return group_; }
  const ClassTable& class_table() const { return classes_; }
  const StructureConstants& constants() const { return sc_; }
  int classes() const { return static_cast<int>(classes_.count()); }
  int identity_class() const { return sc_.identity_class(); }
  std::int64_t order() const { return static_cast<std::int64_t>(group_.order()); }

  /// tr(f_a f_b f_c), precomputed.
  std::int64_t trace3(int a, int b, int c) const {
    return triple_[(static_cast<std::size_t>(a) * classes() + b) * classes() + c];
  }

 private:
  FiniteGroup group_;
  ClassTable classes_;
  StructureConstants sc_;
  std::vector<std::int64_t> triple_;
};

}  // namespace hurwitz

#endif  // HURWITZ_CLASS_ALGEBRA_HPP
