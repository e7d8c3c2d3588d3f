#ifndef HURWITZ_FORMAT_HPP
#define HURWITZ_FORMAT_HPP

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/rat_matrix.hpp"

namespace hurwitz {

/// Integer coefficient lists (ascending) for num and den, jointly scaled so
/// that all coefficients are coprime integers and the leading denominator
/// coefficient is positive. Printing only; equality stays cross-multiplicative.
inline std::pair<std::vector<Integer>, std::vector<Integer>> primitive_form(const RatFunc& f) {
  Integer l = 1;
  for (const auto* p : {&f.num(), &f.den()})
    for (const auto& c : p->coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<Integer> num, den;
  Integer g = 0;
  for (const auto& c : f.num().coeffs()) {
    num.push_back(numerator(c) * (l / denominator(c)));
    g = boost::multiprecision::gcd(g, num.back());
  }
  for (const auto& c : f.den().coeffs()) {
    den.push_back(numerator(c) * (l / denominator(c)));
    g = boost::multiprecision::gcd(g, den.back());
  }
  if (g < 0) g = -g;
  if (den.back() < 0) g = -g;
  for (auto& x : num) x /= g;
  for (auto& x : den) x /= g;
  return {num, den};
}

/// Descending-degree rendering, e.g. "-20b^2 + 1". `var` is the variable name;
/// `latex` switches to "\beta^{2}"-style exponents.
inline std::string poly_string(const std::vector<Integer>& c, const std::string& var = "b", bool latex = false) {
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    Integer a = c[i] < 0 ? Integer(-c[i]) : c[i];
    if (out.empty()) {
      if (c[i] < 0) out += "-";
    } else {
      out += c[i] < 0 ? " - " : " + ";
    }
    if (a != 1 || i == 0) out += a.str();
    if (i >= 1) out += var;
    if (i >= 2) out += latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

inline std::string ratfunc_string(const RatFunc& f) {
  auto [num, den] = primitive_form(f);
  std::string n = poly_string(num);
  if (den.size() == 1 && den[0] == 1) return n;
  std::string d = poly_string(den);
  if (num.size() > 1 && std::count(num.begin(), num.end(), Integer(0)) + 1 < static_cast<long>(num.size())) n = "(" + n + ")";
  if (den.size() > 1 && std::count(den.begin(), den.end(), Integer(0)) + 1 < static_cast<long>(den.size())) d = "(" + d + ")";
  return n + "/" + d;
}

inline std::string ratfunc_latex(const RatFunc& f) {
  auto [num, den] = primitive_form(f);
  std::string n = poly_string(num, "\\beta", true);
  if (den.size() == 1 && den[0] == 1) return n;
  return "\\frac{" + n + "}{" + poly_string(den, "\\beta", true) + "}";
}

/// Rows of space-padded columns.
inline std::string aligned_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], row[j].size());
    }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += row[j];
      if (j + 1 < row.size()) line += std::string(width[j] - row[j].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string matrix_latex(const RatMatrix& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out += (j ? " & " : "") + ratfunc_latex(m(i, j));
    out += i + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return out + "\\end{pmatrix}\n";
}

}  // namespace hurwitz

#endif  // HURWITZ_FORMAT_HPP
