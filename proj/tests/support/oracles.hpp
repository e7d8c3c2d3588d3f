#ifndef HURWITZ_TESTS_ORACLES_HPP
#define HURWITZ_TESTS_ORACLES_HPP

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/hurwitz_all.hpp"

namespace hurwitz {

inline void PrintTo(const RatFunc& f, std::ostream* os) { *os << ratfunc_string(f); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << ratfunc_string(RatFunc(p)); }
inline void PrintTo(const PowerSeries& s, std::ostream* os) {
  *os << "[";
  for (int i = 0; i <= s.order(); ++i) *os << (i ? ", " : "") << to_string(s[i]);
  *os << "]";
}
inline void PrintTo(const ClassVector& v, std::ostream* os) {
  *os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) *os << (i ? ", " : "") << to_string(v.coeffs[i]);
  *os << ")";
}

}  // namespace hurwitz

namespace oracle {

using namespace hurwitz;

/// f_mu * f_nu by multiplying every pair of group elements, read back on the
/// class basis. Independent of the representative-based structure constants.
inline std::vector<std::vector<std::vector<std::int64_t>>> structure_constants_by_convolution(const FiniteGroup& g,
                                                                                           const ClassTable& ct) {
  const int k = static_cast<int>(ct.count());
  std::vector<std::vector<std::vector<std::int64_t>>> out(k, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k)));
  for (int mu = 0; mu < k; ++mu) {
    for (int nu = 0; nu < k; ++nu) {
      std::vector<std::int64_t> product(g.order(), 0);
      for (int a : ct[mu].members)
        for (int b : ct[nu].members) ++product[g.mul(a, b)];
      for (int lambda = 0; lambda < k; ++lambda) {
        const auto& members = ct[lambda].members;
        out[mu][nu][lambda] = product[members.front()];
        for (int x : members) {
          if (product[x] != product[members.front()]) throw std::logic_error("product is not a class function");
        }
      }
    }
  }
  return out;
}

/// #{(x_1, ..., x_n) : x_i in class cs[i], x_1 ... x_n = e}, i.e. tr(f_{c_1} ... f_{c_n}).
inline std::int64_t trace_by_enumeration(const FiniteGroup& g, const ClassTable& ct, const std::vector<int>& cs) {
  std::int64_t hits = 0;
  auto rec = [&](auto&& self, std::size_t i, int prefix) -> void {
    if (i + 1 == cs.size()) {
      if (ct.class_of(g.inv(prefix)) == cs[i]) ++hits;
      return;
    }
    for (int x : ct[cs[i]].members) self(self, i + 1, g.mul(prefix, x));
  };
  rec(rec, 0, g.identity());
  return hits;
}

/// Parses entries written the way printed tables write them, with b for beta:
/// "1", "-6b", "-b/(9b^2-1)", "-(20b^3-b)/(144b^4-40b^2+1)". An unparenthesised
/// operand is a single monomial.
class EntryParser {
 public:
  explicit EntryParser(std::string text) : s_(std::move(text)) {
    s_.erase(std::remove(s_.begin(), s_.end(), ' '), s_.end());
  }

  RatFunc parse() {
    bool negate = false;
    if (peek() == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
      negate = true;
      ++pos_;
    }
    Poly num = operand();
    Poly den = Poly::of({1});
    if (peek() == '/') {
      ++pos_;
      den = operand();
    }
    if (pos_ != s_.size()) throw std::invalid_argument("trailing input in '" + s_ + "'");
    RatFunc f(num, den);
    return negate ? RatFunc(Rational(-1)) * f : f;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  Poly operand() {
    if (peek() == '(') {
      ++pos_;
      Poly p = monomial();
      while (peek() == '+' || peek() == '-') p = p + monomial();
      if (peek() != ')') throw std::invalid_argument("missing ')' in '" + s_ + "'");
      ++pos_;
      return p;
    }
    return monomial();
  }

  Poly monomial() {
    Integer sign = 1;
    if (peek() == '+' || peek() == '-') sign = s_[pos_++] == '-' ? -1 : 1;
    Integer coeff = 1;
    bool digits = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = 0;
      digits = true;
      while (std::isdigit(static_cast<unsigned char>(peek()))) coeff = coeff * 10 + (s_[pos_++] - '0');
    }
    int degree = 0;
    if (peek() == 'b') {
      ++pos_;
      degree = 1;
      if (peek() == '^') {
        ++pos_;
        degree = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) degree = degree * 10 + (s_[pos_++] - '0');
      }
    } else if (!digits) {
      throw std::invalid_argument("expected a monomial in '" + s_ + "'");
    }
    return Poly::monomial(Rational(sign * coeff), degree);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline RatFunc entry(const std::string& text) { return EntryParser(text).parse(); }

inline RatMatrix matrix(const std::vector<std::vector<std::string>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = entry(rows[i][j]);
  return m;
}

}  // namespace oracle

#endif  // HURWITZ_TESTS_ORACLES_HPP
