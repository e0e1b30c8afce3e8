// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact bivariate polynomials over the integers and the changes of
// coordinates between Q' and the Tutte polynomial.
//
// All rational-function substitutions are carried out by homogenizing
// against an explicit denominator polynomial whose power is tracked, so every
// intermediate value stays in Z[x,y] and a failed exact division is a real
// integrity signal.

#ifndef POLYQ_POLYNOMIAL_HPP_
#define POLYQ_POLYNOMIAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyq/error.hpp"

namespace polyq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Variables {
  std::string x = "x";
  std::string y = "y";

  friend bool operator==(const Variables&, const Variables&) = default;
};

inline const Variables kTutteVariables{"x", "y"};
inline const Variables kActivityVariables{"xi", "eta"};

class BivariatePolynomial {
 public:
  struct Exponents {
    int x = 0;
    int y = 0;
    friend bool operator==(Exponents, Exponents) = default;
  };

  // Canonical order: total degree descending, then x-degree descending.
  struct CanonicalOrder {
    bool operator()(Exponents a, Exponents b) const {
      if (a.x + a.y != b.x + b.y) return a.x + a.y > b.x + b.y;
      return a.x > b.x;
    }
  };

  using TermMap = std::map<Exponents, Integer, CanonicalOrder>;

  explicit BivariatePolynomial(Variables vars = kTutteVariables)
      : vars_(std::move(vars)) {}

  static BivariatePolynomial constant(Integer c,
                                      Variables vars = kTutteVariables) {
    return monomial(std::move(c), 0, 0, std::move(vars));
  }
  static BivariatePolynomial monomial(Integer c, int ex, int ey,
                                      Variables vars = kTutteVariables) {
    BivariatePolynomial p(std::move(vars));
    if (c != 0) p.terms_[{ex, ey}] = std::move(c);
    return p;
  }
  static BivariatePolynomial x(Variables vars = kTutteVariables) {
    return monomial(1, 1, 0, std::move(vars));
  }
  static BivariatePolynomial y(Variables vars = kTutteVariables) {
    return monomial(1, 0, 1, std::move(vars));
  }

  // Parses the canonical grammar, e.g. "x^2 + 2*x*y - y". Whitespace is
  // optional; factors may repeat ("x*x" is x^2).
  static BivariatePolynomial parse(std::string_view text,
                                   Variables vars = kTutteVariables);

  const Variables& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coefficient(int ex, int ey) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  // -1 for the zero polynomial.
  int total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.x +
                                     terms_.begin()->first.y;
  }
  int degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x);
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.y);
    return d;
  }

  BivariatePolynomial homogeneous_part(int degree) const {
    BivariatePolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e.x + e.y == degree) out.terms_[e] = c;
    }
    return out;
  }

  bool all_coefficients_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second >= 0; });
  }

  BivariatePolynomial with_variables(Variables vars) const {
    BivariatePolynomial out = *this;
    out.vars_ = std::move(vars);
    return out;
  }

  // p(y, x).
  BivariatePolynomial swapped() const {
    BivariatePolynomial out(vars_);
    for (const auto& [e, c] : terms_) out.terms_[{e.y, e.x}] = c;
    return out;
  }

  // p(a*x, b*y) for a, b in {1, -1}.
  BivariatePolynomial sign_substituted(int sx, int sy) const {
    BivariatePolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      const bool flip = (sx < 0 && (e.x & 1)) != (sy < 0 && (e.y & 1));
      out.terms_[e] = flip ? Integer(-c) : c;
    }
    return out;
  }

  // Multiplies by x^dx y^dy; negative shifts are exact monomial divisions and
  // throw NotDivisible if any exponent would become negative.
  BivariatePolynomial shifted(int dx, int dy) const {
    BivariatePolynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e.x + dx < 0 || e.y + dy < 0) {
        throw Error(ErrorKind::kNotDivisible,
                    "monomial division leaves a negative exponent in " +
                        to_string());
      }
      out.terms_[{e.x + dx, e.y + dy}] = c;
    }
    return out;
  }

  Rational evaluate(const Rational& xv, const Rational& yv) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = Rational(c);
      for (int i = 0; i < e.x; ++i) term *= xv;
      for (int i = 0; i < e.y; ++i) term *= yv;
      sum += term;
    }
    return sum;
  }

  // p(fx(x,y), fy(x,y)).
  BivariatePolynomial compose(const BivariatePolynomial& fx,
                              const BivariatePolynomial& fy) const;

  // Exact division; throws NotDivisible unless divisor * q == *this with
  // integer coefficients.
  BivariatePolynomial divide_exact(const BivariatePolynomial& divisor) const;

  std::string to_string() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    check_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
    check_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BivariatePolynomial& operator*=(const BivariatePolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend BivariatePolynomial operator+(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    a += b;
    return a;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    a -= b;
    return a;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    a.check_variables(b);
    BivariatePolynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
      }
    }
    return out;
  }
  friend BivariatePolynomial operator*(const Integer& k,
                                       BivariatePolynomial p) {
    if (k == 0) return BivariatePolynomial(p.vars_);
    for (auto& [e, c] : p.terms_) c *= k;
    return p;
  }

  friend bool operator==(const BivariatePolynomial& a,
                         const BivariatePolynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Convenience constants over the same variables as `this`.
  BivariatePolynomial one() const { return constant(1, vars_); }
  BivariatePolynomial var_x() const { return x(vars_); }
  BivariatePolynomial var_y() const { return y(vars_); }

 private:
  void check_variables(const BivariatePolynomial& o) const {
    if (!(vars_ == o.vars_)) {
      throw Error(ErrorKind::kVariableMismatch,
                  "(" + vars_.x + "," + vars_.y + ") vs (" + o.vars_.x + "," +
                      o.vars_.y + ")");
    }
  }
  void add_term(Exponents e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Variables vars_;
  TermMap terms_;
};

inline BivariatePolynomial pow(const BivariatePolynomial& p, int k) {
  BivariatePolynomial result = p.one();
  BivariatePolynomial base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

inline BivariatePolynomial BivariatePolynomial::compose(
    const BivariatePolynomial& fx, const BivariatePolynomial& fy) const {
  check_variables(fx);
  check_variables(fy);
  std::vector<BivariatePolynomial> px{one()}, py{one()};
  BivariatePolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(px.size()) <= e.x) px.push_back(px.back() * fx);
    while (static_cast<int>(py.size()) <= e.y) py.push_back(py.back() * fy);
    out += c * (px[e.x] * py[e.y]);
  }
  return out;
}

inline BivariatePolynomial BivariatePolynomial::divide_exact(
    const BivariatePolynomial& divisor) const {
  check_variables(divisor);
  if (divisor.is_zero()) {
    throw Error(ErrorKind::kNotDivisible, "division by zero polynomial");
  }
  // The canonical order is graded lex, a monomial order, so dividing by a
  // single polynomial leaves a zero remainder exactly when it divides.
  const Exponents lead = divisor.terms_.begin()->first;
  const Integer& lead_c = divisor.terms_.begin()->second;
  BivariatePolynomial rest = *this;
  BivariatePolynomial quotient(vars_);
  while (!rest.is_zero()) {
    const auto [e, c] = *rest.terms_.begin();
    if (e.x < lead.x || e.y < lead.y || c % lead_c != 0) {
      throw Error(ErrorKind::kNotDivisible,
                  "(" + to_string() + ") / (" + divisor.to_string() + ")");
    }
    const BivariatePolynomial step =
        monomial(c / lead_c, e.x - lead.x, e.y - lead.y, vars_);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

inline std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    auto append = [&factors](const std::string& name, int exponent) {
      if (exponent == 0) return;
      if (!factors.empty()) factors += "*";
      factors += name;
      if (exponent > 1) factors += "^" + std::to_string(exponent);
    };
    append(vars_.x, e.x);
    append(vars_.y, e.y);
    if (factors.empty()) {
      out += magnitude.str();
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += magnitude.str() + "*" + factors;
    }
  }
  return out;
}

inline BivariatePolynomial BivariatePolynomial::parse(std::string_view text,
                                                      Variables vars) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::kInvalidInput,
                 "cannot parse polynomial '" + std::string(text) + "' at " +
                     std::to_string(pos) + ": " + why);
  };
  auto skip = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto read_int = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    return std::string(text.substr(start, pos - start));
  };
  BivariatePolynomial out(vars);
  skip();
  if (pos == text.size()) throw fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Integer coeff = 1;
    Exponents e;
    bool have_factor = false;
    while (true) {
      skip();
      if (pos == text.size()) break;
      const char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= Integer(read_int());
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_')) {
          ++pos;
        }
        const std::string_view name = text.substr(start, pos - start);
        int exponent = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          const std::string digits = read_int();
          if (digits.empty()) throw fail("expected exponent");
          exponent = std::stoi(digits);
        }
        if (name == vars.x) {
          e.x += exponent;
        } else if (name == vars.y) {
          e.y += exponent;
        } else {
          throw fail("unknown variable '" + std::string(name) + "'");
        }
      } else {
        throw fail("unexpected character");
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) throw fail("empty term");
    out.add_term(e, sign * coeff);
  }
  return out;
}

// p(num_x / d, num_y / d) == numerator / d^power with power = total degree
// of p (0 for constants and the zero polynomial).
struct LinearSubstitution {
  BivariatePolynomial numerator;
  int denominator_power = 0;
};

inline LinearSubstitution substitute_linear(const BivariatePolynomial& p,
                                            const BivariatePolynomial& num_x,
                                            const BivariatePolynomial& num_y,
                                            const BivariatePolynomial& d) {
  const int k = std::max(p.total_degree(), 0);
  std::vector<BivariatePolynomial> pd{p.one()};
  while (static_cast<int>(pd.size()) <= k) pd.push_back(pd.back() * d);
  BivariatePolynomial numerator(p.variables());
  std::vector<BivariatePolynomial> px{p.one()}, py{p.one()};
  for (const auto& [e, c] : p.terms()) {
    while (static_cast<int>(px.size()) <= e.x) px.push_back(px.back() * num_x);
    while (static_cast<int>(py.size()) <= e.y) py.push_back(py.back() * num_y);
    numerator += c * (px[e.x] * py[e.y] * pd[k - e.x - e.y]);
  }
  return {std::move(numerator), k};
}

inline void require_rank_parameters(int n, int r) {
  if (n < 1 || r < 0 || r > n) {
    throw Error(ErrorKind::kInvalidInput,
                "need n >= 1 and 0 <= r <= n, got n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
  }
}

// Q'(x,y) = x^{n-r} y^r / (x+y-1) * T((x+y-1)/y, (x+y-1)/x).
inline BivariatePolynomial qprime_from_tutte(const BivariatePolynomial& tutte,
                                             int n, int r) {
  require_rank_parameters(n, r);
  if (tutte.is_zero()) {
    throw Error(ErrorKind::kNotDivisible, "zero polynomial is not a Tutte "
                                          "polynomial");
  }
  const BivariatePolynomial x = tutte.var_x(), y = tutte.var_y();
  const BivariatePolynomial s = x + y - tutte.one();
  // Common denominator xy: (x+y-1)/y = x s / (xy), (x+y-1)/x = y s / (xy).
  const LinearSubstitution sub = substitute_linear(tutte, x * s, y * s, x * y);
  const int k = sub.denominator_power;
  return sub.numerator.divide_exact(s).shifted(n - r - k, r - k);
}

struct TutteRecovery {
  BivariatePolynomial polynomial;
  // Set when the result has a negative coefficient, which no matroid Tutte
  // polynomial has; valid output for inputs that are not matroid Q'.
  bool negative_coefficients = false;
};

// T(x,y) = -(xy-x-y)^{n-1} / ((-y)^{r-1} (-x)^{n-r-1})
//          * Q'(-x/(xy-x-y), -y/(xy-x-y)).
inline TutteRecovery tutte_from_qprime(const BivariatePolynomial& qprime,
                                       int n, int r) {
  require_rank_parameters(n, r);
  const BivariatePolynomial x = qprime.var_x(), y = qprime.var_y();
  const BivariatePolynomial d = x * y - x - y;
  const LinearSubstitution sub = substitute_linear(qprime, -x, -y, d);
  const int k = sub.denominator_power;
  BivariatePolynomial scaled = k <= n - 1
                                   ? pow(d, n - 1 - k) * sub.numerator
                                   : sub.numerator.divide_exact(
                                         pow(d, k - (n - 1)));
  // Dividing by (-y)^{r-1} (-x)^{n-r-1} contributes the sign (-1)^{n-2}.
  scaled = scaled.shifted(-(n - r - 1), -(r - 1));
  const bool negate = (n % 2) == 0;  // -(-1)^n
  TutteRecovery out{negate ? -scaled : scaled, false};
  out.negative_coefficients = !out.polynomial.all_coefficients_nonnegative();
  return out;
}

}  // namespace polyq

#endif  // POLYQ_POLYNOMIAL_HPP_
