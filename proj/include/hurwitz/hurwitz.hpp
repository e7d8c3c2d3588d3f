#ifndef HURWITZ_HURWITZ_HPP
#define HURWITZ_HURWITZ_HPP

#include <memory>
#include <optional>
#include <vector>

#include "hurwitz/class_algebra.hpp"
#include "hurwitz/power_series.hpp"
#include "hurwitz/rat_matrix.hpp"
#include "hurwitz/work_cap.hpp"

namespace hurwitz {

using AlgebraPtr = std::shared_ptr<const ClassAlgebra>;

/// A_tau(beta) = D - beta B with D_{mu,nu} = tr(f_{mu^-1} f_nu) and
/// B_{mu,nu} = tr(f_{mu^-1} f_nu f_tau), rows and columns in class order.
struct TauMatrix {
  std::vector<Rational> diag;
  std::vector<std::vector<Rational>> b;
  RatMatrix a;
};

inline TauMatrix build_A(const ClassAlgebra& ctx, int tau) {
  const int k = ctx.classes();
  if (tau < 0 || tau >= k) throw InvalidInput("tau is not a valid class id");
  const ClassTable& ct = ctx.class_table();
  TauMatrix out{std::vector<Rational>(k), std::vector<std::vector<Rational>>(k, std::vector<Rational>(k)),
                RatMatrix(k, k)};
  for (int mu = 0; mu < k; ++mu) {
    for (int nu = 0; nu < k; ++nu) {
      const std::int64_t pair = ctx.constants()(ct.inverse(mu), nu, ctx.identity_class());
      if (mu == nu) {
        out.diag[mu] = pair;
      } else if (pair != 0) {
        throw std::logic_error("pairing tr(f_{mu^-1} f_nu) is not diagonal");
      }
      out.b[mu][nu] = ctx.trace3(ct.inverse(mu), nu, tau);
      out.a(mu, nu) = RatFunc(Poly(std::vector<Rational>{Rational(mu == nu ? pair : 0), -out.b[mu][nu]}));
    }
  }
  return out;
}

struct HurwitzResult {
  RatFunc gf;
  PowerSeries coeffs;
  std::vector<Integer> raw_counts;  // coeffs[r] * |G|
};

/// Generating functions h^tau_{mu,nu}(beta) for one fixed tau. The inverse of
/// A_tau is computed once and shared by all (mu, nu) queries.
class HurwitzEngine {
 public:
  HurwitzEngine(AlgebraPtr ctx, int tau) : ctx_(std::move(ctx)), tau_(tau), a_(build_A(*ctx_, tau)), inv_(mat_inverse(a_.a)) {}

  const ClassAlgebra& algebra() const { return *ctx_; }
  int tau() const { return tau_; }
  const TauMatrix& matrix() const { return a_; }
  const RatMatrix& inverse() const { return inv_; }

  /// (|mu| |nu| / |G|) (A^{-1})_{mu,nu}. Its r-th coefficient times |G| is
  /// brute_force_count(mu^-1, nu, tau, r); the two agree on the nose when mu
  /// is self-inverse, as in every symmetric group.
  RatFunc gf(int mu, int nu) const {
    check_class(mu);
    check_class(nu);
    const ClassTable& ct = ctx_->class_table();
    Rational prefactor(static_cast<long long>(ct.size(mu) * ct.size(nu)), ctx_->order());
    return RatFunc(prefactor) * inv_(mu, nu);
  }

  HurwitzResult series(int mu, int nu, int order) const {
    if (order < 0) throw InvalidInput("series order must be non-negative");
    HurwitzResult out{gf(mu, nu), {}, {}};
    out.coeffs = series_expand(out.gf, order);
    for (int r = 0; r <= order; ++r) {
      Rational raw = out.coeffs[r] * ctx_->order();
      if (!is_integer(raw) || raw < 0) {
        throw IntegralityViolation("|G| * [beta^" + std::to_string(r) + "] h = " + to_string(raw) +
                                   " is not a non-negative integer");
      }
      out.raw_counts.push_back(numerator(raw));
    }
    return out;
  }

 private:
  void check_class(int id) const {
    if (id < 0 || id >= ctx_->classes()) throw InvalidInput("invalid class id " + std::to_string(id));
  }

  AlgebraPtr ctx_;
  int tau_;
  TauMatrix a_;
  RatMatrix inv_;
};

inline RatFunc hurwitz_gf(const AlgebraPtr& ctx, int mu, int nu, int tau) {
  return HurwitzEngine(ctx, tau).gf(mu, nu);
}

inline HurwitzResult hurwitz_series(const AlgebraPtr& ctx, int mu, int nu, int tau, int order) {
  return HurwitzEngine(ctx, tau).series(mu, nu, order);
}

/// #{(a, t_1..t_r, b) : a in mu, t_i in tau, b in nu, a t_1 ... t_r b = 1}.
/// Iterates a and the t_i and membership-tests b = (a t_1 ... t_r)^{-1}.
inline Integer brute_force_count(const ClassAlgebra& ctx, int mu, int nu, int tau, int r, const WorkCap& cap = {}) {
  const ClassTable& ct = ctx.class_table();
  const FiniteGroup& g = ctx.group();
  std::uint64_t work = ct.size(mu);
  for (int i = 0; i < r; ++i) work = saturating_mul(work, ct.size(tau));
  cap.require(saturating_mul(work, static_cast<std::uint64_t>(r + 1)), "brute-force tuple count");

  const auto& taus = ct[tau].members;
  Integer total = 0;
  std::uint64_t hits = 0;
  auto rec = [&](auto&& self, int prefix, int depth) -> void {
    if (depth == r) {
      if (ct.class_of(g.inv(prefix)) == nu) ++hits;
      return;
    }
    for (int t : taus) self(self, g.mul(prefix, t), depth + 1);
  };
  for (int a : ct[mu].members) rec(rec, a, 0);
  total = hits;
  return total;
}

/// h_tau(mu, nu; r) = count / |G|.
inline Rational brute_force_h(const ClassAlgebra& ctx, int mu, int nu, int tau, int r, const WorkCap& cap = {}) {
  return Rational(brute_force_count(ctx, mu, nu, tau, r, cap), Integer(ctx.order()));
}

/// r! [z^r] (1/d^2) sigma(d^2 z) / sigma(d z) for r = 0..r_max, where
/// sigma(z) = e^{z/2} - e^{-z/2}.
inline std::vector<Rational> one_part_coeffs(int d, int r_max) {
  if (d < 1) throw InvalidInput("degree must be at least 1");
  if (r_max < 0) throw InvalidInput("r_max must be non-negative");
  // sigma(c z) / z = sum_{k odd} 2 (c/2)^k z^{k-1} / k!
  auto sigma_over_z = [&](const Rational& c) {
    PowerSeries s = PowerSeries::zero(r_max);
    Rational power = c / 2, factorial = 1;
    for (int k = 1; k - 1 <= r_max; ++k) {
      if (k > 1) {
        power *= c / 2;
        factorial *= k;
      }
      if (k % 2 == 1) s[k - 1] = 2 * power / factorial;
    }
    return s;
  };
  const Rational dd(d);
  PowerSeries ratio = sigma_over_z(dd * dd) / sigma_over_z(dd);
  std::vector<Rational> out;
  Rational factorial = 1;
  for (int r = 0; r <= r_max; ++r) {
    if (r > 0) factorial *= r;
    out.push_back(ratio[r] * factorial / (dd * dd));
  }
  return out;
}

struct OdeReport {
  bool holds = false;
  RatFunc lhs;
  RatFunc rhs;
  RatFunc residual;
};

/// Checks h + beta h' = |G| sum_lambda h_{mu,lambda} h_{lambda,nu} / tr(f_{lambda^-1} f_lambda)
/// exactly in the field of rational functions.
inline OdeReport ode_check(const HurwitzEngine& engine, int mu, int nu) {
  const ClassAlgebra& ctx = engine.algebra();
  OdeReport rep;
  RatFunc h = engine.gf(mu, nu);
  rep.lhs = h + RatFunc(Poly::beta()) * h.derivative();
  for (int lambda = 0; lambda < ctx.classes(); ++lambda) {
    Rational pair = ctx.constants()(ctx.class_table().inverse(lambda), lambda, ctx.identity_class());
    rep.rhs += engine.gf(mu, lambda) * engine.gf(lambda, nu) * RatFunc(Rational(ctx.order()) / pair);
  }
  rep.residual = rep.lhs - rep.rhs;
  rep.holds = rep.residual.is_zero();
  return rep;
}

inline OdeReport ode_check(const AlgebraPtr& ctx, int mu, int nu, int tau) {
  return ode_check(HurwitzEngine(ctx, tau), mu, nu);
}

}  // namespace hurwitz

#endif  // HURWITZ_HURWITZ_HPP
