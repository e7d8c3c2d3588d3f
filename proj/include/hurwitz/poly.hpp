#ifndef HURWITZ_POLY_HPP
#define HURWITZ_POLY_HPP

#include <utility>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Dense univariate polynomial in beta over the rationals.
/// Coefficients ascend by degree; trailing zeros are always stripped, so the
/// zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant) : c_{constant} { trim(); }  // NOLINT(implicit)
  Poly(int constant) : Poly(Rational(constant)) {}            // NOLINT(implicit)
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const Rational& coeff, int degree) {
    std::vector<Rational> c(degree + 1);
    c[degree] = coeff;
    return Poly(std::move(c));
  }
  /// The variable beta.
  static Poly beta() { return monomial(1, 1); }

  /// Convenience for literals: Poly::of({1, 0, -9}) is 1 - 9 beta^2.
  static Poly of(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly out = *this;
    Rational l = lead();
    for (auto& x : out.c_) x /= l;
    return out;
  }

  Poly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long long>(i));
    return Poly(std::move(d));
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division: returns (q, r) with a = q b + r, deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroFunction("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Rational> q(a.degree() - db + 1);
    for (int i = a.degree(); i >= db; --i) {
      if (rem[i] == 0) continue;
      Rational f = rem[i] / b.lead();
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  /// a / b when b divides a; throws std::logic_error otherwise.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace hurwitz

#endif  // HURWITZ_POLY_HPP
