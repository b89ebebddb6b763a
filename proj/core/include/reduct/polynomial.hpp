#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "reduct/rational.hpp"

namespace reduct {

// Exponent vector of a power product in n variables, ordered graded-lex:
// total degree first, ties broken lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial var(std::size_t nvars, std::size_t i, unsigned e = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned exp(std::size_t i) const { return exps_[i]; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  // graded-lex: a < b iff deg(a) < deg(b), or equal degrees and a precedes b
  // lexicographically on exponents.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  const std::vector<unsigned>& exponents() const { return exps_; }

 private:
  std::vector<unsigned> exps_;
};

/// All monomials in n variables with total degree <= d, graded-lex ascending.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d);

// Sparse multivariate polynomial over the rationals. Zero coefficients are
// never stored; equality is coefficient-wise.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial term(std::size_t nvars, const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree() const;  // degree of 0 is 0
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial::one(nvars_)); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  friend bool operator==(const Polynomial& f, const Polynomial& g) = default;

  /// Exact partial derivative with respect to variable i.
  Polynomial pdiff(std::size_t i) const;

  /// Drops every term of total degree above d.
  Polynomial truncated(unsigned d) const;

  /// Substitutes 0 for every variable in K. Result lives in the same
  /// n-variable ambient; f vanishes on {x_k = 0 : k in K} iff result is 0.
  Polynomial restrict_zero(const std::set<std::size_t>& K) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const Polynomial& g) const;

  std::size_t nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Parses the scenario-file term syntax, e.g. "3/2 x1^2 x3 - y2 + 1".
/// Variables are resolved against `names`; unknown names throw
/// std::invalid_argument with the offending token in the message.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names);

}  // namespace reduct
