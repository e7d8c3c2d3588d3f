#ifndef HURWITZ_POWER_SERIES_HPP
#define HURWITZ_POWER_SERIES_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "hurwitz/ratfunc.hpp"

namespace hurwitz {

/// Truncated power series: coefficients of beta^0 .. beta^order.
/// Binary operations truncate to the smaller order; nothing is extended.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw InvalidInput("power series needs an explicit truncation order");
  }

  static PowerSeries zero(int order) { return PowerSeries(std::vector<Rational>(order + 1)); }
  static PowerSeries one(int order) {
    PowerSeries s = zero(order);
    s.c_[0] = 1;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_.at(i); }
  Rational& operator[](int i) { return c_.at(i); }

  PowerSeries truncated(int order) const {
    if (order > this->order()) throw InvalidInput("cannot extend a truncated series");
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out = zero(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out = zero(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out = zero(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= out.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
  }
  friend PowerSeries operator*(const Rational& s, PowerSeries a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  /// a / b; b must have a nonzero constant term.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
    if (b.c_[0] == 0) throw PoleAtOrigin("series division by a series with zero constant term");
    PowerSeries out = zero(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) {
      Rational acc = a.c_[k];
      for (int j = 1; j <= k; ++j) acc -= b.c_[j] * out.c_[k - j];
      out.c_[k] = acc / b.c_[0];
    }
    return out;
  }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> c_;
};

/// Taylor coefficients of f at beta = 0 through beta^order.
inline PowerSeries series_expand(const RatFunc& f, int order) {
  if (order < 0) throw InvalidInput("series order must be non-negative");
  if (f.den()[0] == 0) throw PoleAtOrigin("rational function has a pole at beta = 0");
  PowerSeries num = PowerSeries::zero(order), den = PowerSeries::zero(order);
  for (int i = 0; i <= order; ++i) {
    num[i] = f.num()[i];
    den[i] = f.den()[i];
  }
  return num / den;
}

}  // namespace hurwitz

#endif  // HURWITZ_POWER_SERIES_HPP
