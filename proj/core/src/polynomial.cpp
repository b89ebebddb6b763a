#include "reduct/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace reduct {

Rational parse_rational(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + s + "'"); };
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) bad();
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(t));
    Integer num(t.substr(0, slash));
    Integer den(t.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return {};
}

std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re != 0) out = to_string(z.re);
  if (z.im != 0) {
    if (!out.empty()) out += z.im > 0 ? " + " : " - ";
    else if (z.im < 0) out = "-";
    Rational a = abs(z.im);
    if (a != 1) out += to_string(a) + " ";
    out += "i";
  }
  return out;
}

GaussianRational parse_gaussian(const std::string& s) {
  // Split on top-level +/- (not inside a token), track each part's sign.
  GaussianRational z;
  std::string tok;
  int sign = 1;
  bool any = false;
  auto flush = [&] {
    if (tok.empty()) return;
    any = true;
    bool imag = false;
    if (!tok.empty() && tok.back() == 'i') {
      imag = true;
      tok.pop_back();
    }
    Rational v = tok.empty() ? Rational(1) : parse_rational(tok);
    v *= sign;
    if (imag) z.im += v;
    else z.re += v;
    tok.clear();
  };
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') continue;
    if (c == '+' || c == '-') {
      if (tok.empty() && !any && c == '-') {
        sign = -sign;
        continue;
      }
      flush();
      sign = (c == '-') ? -1 : 1;
    } else {
      tok += c;
    }
  }
  flush();
  if (!any) throw std::invalid_argument("malformed complex entry: '" + s + "'");
  return z;
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, unsigned e) {
  std::vector<unsigned> v(nvars, 0);
  v.at(i) = e;
  return Monomial(std::move(v));
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (exps_.size() != o.exps_.size())
    throw std::invalid_argument("monomial variable-count mismatch");
  std::vector<unsigned> v(exps_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = exps_[i] + o.exps_[i];
  return Monomial(std::move(v));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> cur(nvars, 0);
  // enumerate all exponent vectors with total degree <= d, then sort graded-lex
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == nvars) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  return term(nvars, Monomial::one(nvars), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return term(nvars, Monomial::var(nvars, i), 1);
}

Polynomial Polynomial::term(std::size_t nvars, const Monomial& m, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial/polynomial variable-count mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (nvars_ != g.nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  Polynomial r = f;
  for (const auto& [m, c] : g.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  Polynomial r = f;
  for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  Polynomial r(f.nvars_);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  Polynomial r(f.nvars_);
  if (c == 0) return r;
  for (const auto& [m, cf] : f.terms_) r.terms_.emplace(m, c * cf);
  return r;
}

Polynomial Polynomial::pdiff(std::size_t i) const {
  if (i >= nvars_) throw std::out_of_range("pdiff: variable index out of range");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp(i);
    if (e == 0) continue;
    std::vector<unsigned> v = m.exponents();
    v[i] = e - 1;
    r.add_term(Monomial(std::move(v)), c * e);
  }
  return r;
}

Polynomial Polynomial::truncated(unsigned d) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > d) break;  // terms are graded-lex ascending
    r.add_term(m, c);
  }
  return r;
}

Polynomial Polynomial::restrict_zero(const std::set<std::size_t>& K) const {
  for (std::size_t k : K)
    if (k >= nvars_) throw std::out_of_range("restrict_zero: variable index out of range");
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    bool kills = false;
    for (std::size_t k : K)
      if (m.exp(k) > 0) {
        kills = true;
        break;
      }
    if (!kills) r.add_term(m, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest-degree terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool printed = false;
    if (a != 1 || m.is_one()) {
      os << reduct::to_string(a);
      printed = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m.exp(i) == 0) continue;
      if (printed) os << " ";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (m.exp(i) > 1) os << "^" << m.exp(i);
      printed = true;
    }
  }
  return os.str();
}

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  Polynomial out(n);
  auto var_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("undeclared variable '" + name + "' in polynomial '" + text + "'");
  };

  // split into signed terms at top level
  std::vector<std::pair<int, std::string>> parts;
  int sign = 1;
  std::string cur;
  bool expect_term = true;
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      if (expect_term && cur.empty()) {
        if (ch == '-') sign = -sign;
        continue;
      }
      if (!cur.empty()) parts.emplace_back(sign, cur);
      cur.clear();
      sign = (ch == '-') ? -1 : 1;
      expect_term = true;
    } else {
      cur += ch;
      if (!std::isspace(static_cast<unsigned char>(ch))) expect_term = false;
    }
  }
  if (!cur.empty()) parts.emplace_back(sign, cur);
  if (parts.empty()) throw std::invalid_argument("empty polynomial: '" + text + "'");

  for (auto& [s, body] : parts) {
    // tokenize factors: optional leading rational, then var[^exp] factors
    std::vector<std::string> toks;
    std::string tok;
    for (char ch : body) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
        if (!tok.empty()) toks.push_back(tok), tok.clear();
      } else {
        tok += ch;
      }
    }
    if (!tok.empty()) toks.push_back(tok);
    if (toks.empty()) throw std::invalid_argument("empty term in polynomial: '" + text + "'");

    Rational coeff(s);
    std::vector<unsigned> exps(n, 0);
    bool first_tok = true;
    for (const std::string& t : toks) {
      bool numeric = std::isdigit(static_cast<unsigned char>(t[0])) != 0;
      if (numeric && first_tok) {
        coeff *= parse_rational(t);
      } else {
        auto caret = t.find('^');
        std::string name = t.substr(0, caret);
        unsigned e = 1;
        if (caret != std::string::npos) {
          int v = std::stoi(t.substr(caret + 1));
          if (v < 0) throw std::invalid_argument("negative exponent in '" + text + "'");
          e = static_cast<unsigned>(v);
        }
        exps[var_index(name)] += e;
      }
      first_tok = false;
    }
    out.add_term(Monomial(std::move(exps)), coeff);
  }
  return out;
}

}  // namespace reduct
