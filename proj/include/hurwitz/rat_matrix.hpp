#ifndef HURWITZ_RAT_MATRIX_HPP
#define HURWITZ_RAT_MATRIX_HPP

#include <string>
#include <vector>

#include "hurwitz/power_series.hpp"
#include "hurwitz/ratfunc.hpp"

namespace hurwitz {

/// Dense matrix of rational functions in beta.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw InvalidInput("matrix dimensions must be positive");
  }
  explicit RatMatrix(const std::vector<std::vector<RatFunc>>& grid)
      : RatMatrix(static_cast<int>(grid.size()), grid.empty() ? 0 : static_cast<int>(grid[0].size())) {
    for (int i = 0; i < rows_; ++i) {
      if (static_cast<int>(grid[i].size()) != cols_) throw InvalidInput("ragged matrix");
      for (int j = 0; j < cols_; ++j) (*this)(i, j) = grid[i][j];
    }
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const RatFunc& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  RatFunc& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
      }
    return c;
  }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference dimension mismatch");
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
    return c;
  }
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<RatFunc> e_;
};

namespace detail {

using PolyGrid = std::vector<std::vector<Poly>>;

/// Scales each row of m by the lcm of its denominators, giving a polynomial
/// matrix p with m = diag(scale)^{-1} p.
inline PolyGrid clear_row_denominators(const RatMatrix& m, std::vector<Poly>& scale) {
  const int n = m.rows();
  PolyGrid p(n, std::vector<Poly>(m.cols()));
  scale.assign(n, Poly(1));
  for (int i = 0; i < n; ++i) {
    Poly l(1);
    for (int j = 0; j < m.cols(); ++j) {
      const Poly& d = m(i, j).den();
      l = exact_div(l * d, gcd(l, d));
    }
    scale[i] = l;
    for (int j = 0; j < m.cols(); ++j) p[i][j] = m(i, j).num() * exact_div(l, m(i, j).den());
  }
  return p;
}

/// Determinant of the rows [0, k) of p restricted to the columns in `cols`,
/// by Laplace expansion along the last row with memoisation over column subsets.
inline Poly laplace_det(const PolyGrid& p, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return Poly(1);
  std::vector<Poly> det(std::size_t{1} << k);
  std::vector<bool> done(det.size(), false);
  det[0] = Poly(1);
  done[0] = true;
  // masks are subsets of positions in `cols`; a mask of popcount r is the
  // determinant of rows[0..r) against those columns.
  for (std::size_t mask = 1; mask < det.size(); ++mask) {
    const int r = __builtin_popcountll(mask);
    const int row = rows[r - 1];
    Poly acc;
    int pos = 0;
    for (int j = 0; j < k; ++j) {
      if (!(mask >> j & 1)) continue;
      // column j is at position `pos` within the mask; cofactor sign (-1)^{(r-1)+pos}
      const Poly& entry = p[row][cols[j]];
      if (!entry.is_zero() && !det[mask ^ (std::size_t{1} << j)].is_zero()) {
        Poly term = entry * det[mask ^ (std::size_t{1} << j)];
        if ((r - 1 + pos) % 2) acc -= term; else acc += term;
      }
      ++pos;
    }
    det[mask] = std::move(acc);
  }
  return det.back();
}

}  // namespace detail

enum class InverseMethod { Bareiss, Adjugate };

/// Determinant via Laplace expansion; intended for small dimensions.
inline RatFunc determinant(const RatMatrix& m) {
  if (!m.square()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() > 20) throw InvalidInput("determinant: dimension too large for Laplace expansion");
  std::vector<Poly> scale;
  detail::PolyGrid p = detail::clear_row_denominators(m, scale);
  std::vector<int> idx(m.rows());
  for (int i = 0; i < m.rows(); ++i) idx[i] = i;
  Poly s(1);
  for (const auto& x : scale) s *= x;
  return RatFunc(detail::laplace_det(p, idx, idx), s);
}

namespace detail {

inline RatMatrix inverse_bareiss(const RatMatrix& m) {
  const int n = m.rows();
  std::vector<Poly> scale;
  PolyGrid a = clear_row_denominators(m, scale);
  for (int i = 0; i < n; ++i) {
    a[i].resize(2 * n);
    a[i][n + i] = Poly(1);
  }
  Poly prev(1);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular (determinant is the zero polynomial)");
    std::swap(a[k], a[pivot]);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < 2 * n; ++j) {
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  // Back substitution over the field of rational functions.
  RatMatrix x(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = n - 1; i >= 0; --i) {
      RatFunc acc(a[i][n + j]);
      for (int l = i + 1; l < n; ++l) {
        if (!a[i][l].is_zero()) acc -= RatFunc(a[i][l]) * x(l, j);
      }
      x(i, j) = acc / RatFunc(a[i][i]);
    }
  }
  // m = S^{-1} p, so m^{-1} = p^{-1} S.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) *= RatFunc(scale[j]);
  return x;
}

inline RatMatrix inverse_adjugate(const RatMatrix& m) {
  const int n = m.rows();
  if (n > 12) throw InvalidInput("adjugate inverse limited to dimension 12");
  std::vector<Poly> scale;
  PolyGrid p = clear_row_denominators(m, scale);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  Poly det = laplace_det(p, all, all);
  if (det.is_zero()) throw SingularMatrix("matrix is singular (determinant is the zero polynomial)");
  RatMatrix x(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    for (int j = 0; j < n; ++j) {
      std::vector<int> cols;
      for (int c = 0; c < n; ++c)
        if (c != j) cols.push_back(c);
      Poly minor = laplace_det(p, rows, cols);
      if ((i + j) % 2) minor = -minor;
      // (p^{-1})_{j,i} = C_{i,j} / det, then scale column i by S_i.
      x(j, i) = RatFunc(minor * scale[i], det);
    }
  }
  return x;
}

}  // namespace detail

/// Exact inverse over the field of rational functions.
///
/// Bareiss: fraction-free elimination over Q[beta] on [P | I] followed by back
/// substitution. Adjugate: cofactors by memoised Laplace expansion. In debug
/// builds the Bareiss result is cross-checked against the adjugate for n <= 8.
inline RatMatrix mat_inverse(const RatMatrix& m, InverseMethod method = InverseMethod::Bareiss) {
  if (!m.square()) throw InvalidInput("inverse of a non-square matrix");
  if (method == InverseMethod::Adjugate) return detail::inverse_adjugate(m);
  RatMatrix x = detail::inverse_bareiss(m);
#ifndef NDEBUG
  if (m.rows() <= 8 && !(x == detail::inverse_adjugate(m))) {
    throw std::logic_error("Bareiss and adjugate inverses disagree");
  }
#endif
  return x;
}

using SeriesMatrix = std::vector<std::vector<PowerSeries>>;

/// (D - beta B)^{-1} = sum_k beta^k (D^{-1} B)^k D^{-1}, truncated at `order`.
/// D is given by its diagonal.
inline SeriesMatrix neumann_inverse(const std::vector<Rational>& diag, const std::vector<std::vector<Rational>>& b,
                                    int order) {
  const std::size_t n = diag.size();
  if (order < 0) throw InvalidInput("series order must be non-negative");
  if (b.size() != n) throw InvalidInput("neumann_inverse: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0) throw SingularDiagonal("diagonal entry " + std::to_string(i) + " is zero");
    if (b[i].size() != n) throw InvalidInput("neumann_inverse: dimension mismatch");
  }
  SeriesMatrix out(n, std::vector<PowerSeries>(n, PowerSeries::zero(order)));
  // term = (D^{-1} B)^k D^{-1}
  std::vector<std::vector<Rational>> term(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) term[i][i] = 1 / diag[i];
  for (int k = 0; k <= order; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j][k] = term[i][j];
    if (k == order) break;
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (b[i][l] == 0) continue;
        Rational f = b[i][l] / diag[i];
        for (std::size_t j = 0; j < n; ++j) next[i][j] += f * term[l][j];
      }
    term = std::move(next);
  }
  return out;
}

}  // namespace hurwitz

#endif  // HURWITZ_RAT_MATRIX_HPP
