#ifndef HURWITZ_RATFUNC_HPP
#define HURWITZ_RATFUNC_HPP

#include "hurwitz/poly.hpp"

namespace hurwitz {

/// A rational function num/den in beta, kept reduced with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  RatFunc(int c) : RatFunc(Rational(c)) {}          // NOLINT(implicit)
  RatFunc(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroFunction("rational function with zero denominator");
    canonicalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw DivisionByZeroFunction("evaluation at a pole");
    return num_.eval(x) / d;
  }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  RatFunc operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZeroFunction("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  /// Equality by cross-multiplication, so unreduced forms compare equal.
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    Rational l = den_.lead();
    if (l != 1) {
      num_ = num_ * Poly(1 / l);
      den_ = den_ * Poly(1 / l);
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace hurwitz

#endif  // HURWITZ_RATFUNC_HPP
