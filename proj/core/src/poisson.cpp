#include "reduct/poisson.hpp"

#include <stdexcept>

namespace reduct {

PolyVectorField::PolyVectorField(std::size_t nvars)
    : comps_(nvars, Polynomial::zero(nvars)) {}

PolyVectorField::PolyVectorField(std::vector<Polynomial> components)
    : comps_(std::move(components)) {
  for (const auto& c : comps_)
    if (c.nvars() != comps_.size())
      throw std::invalid_argument("vector field component variable-count mismatch");
}

void PolyVectorField::set_component(std::size_t i, Polynomial p) {
  if (p.nvars() != comps_.size())
    throw std::invalid_argument("vector field component variable-count mismatch");
  comps_.at(i) = std::move(p);
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
  Polynomial out(f.nvars());
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    out += comps_[i] * f.pdiff(i);
  }
  return out;
}

PoissonBivector PoissonBivector::canonical(std::size_t pairs) {
  PoissonBivector pi(2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i)
    pi.set(i, pairs + i, Polynomial::constant(2 * pairs, 1));
  return pi;
}

void PoissonBivector::set(std::size_t i, std::size_t j, Polynomial coeff) {
  if (i >= j || j >= nvars_) throw std::invalid_argument("bivector: need i < j < nvars");
  if (coeff.nvars() != nvars_) throw std::invalid_argument("bivector coefficient variable-count mismatch");
  if (coeff.is_zero()) entries_.erase({i, j});
  else entries_[{i, j}] = std::move(coeff);
}

Polynomial PoissonBivector::component(std::size_t i, std::size_t j) const {
  if (i == j) return Polynomial::zero(nvars_);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = entries_.find({i, j});
  if (it == entries_.end()) return Polynomial::zero(nvars_);
  return flip ? -it->second : it->second;
}

unsigned PoissonBivector::coefficient_degree() const {
  unsigned d = 0;
  for (const auto& [ij, c] : entries_) d = std::max(d, c.degree());
  return d;
}

void Trivector::set(std::size_t i, std::size_t j, std::size_t k, Polynomial coeff) {
  if (!(i < j && j < k && k < nvars_)) throw std::invalid_argument("trivector: need i < j < k < nvars");
  if (coeff.is_zero()) entries_.erase({i, j, k});
  else entries_[{i, j, k}] = std::move(coeff);
}

Polynomial Trivector::component(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = entries_.find({i, j, k});
  return it == entries_.end() ? Polynomial::zero(nvars_) : it->second;
}

Polynomial bracket(const PoissonBivector& pi, const Polynomial& f, const Polynomial& g) {
  if (pi.nvars() != f.nvars() || pi.nvars() != g.nvars())
    throw std::invalid_argument("bracket: variable-count mismatch");
  Polynomial out(pi.nvars());
  for (const auto& [ij, c] : pi.entries()) {
    auto [i, j] = ij;
    Polynomial dfi = f.pdiff(i), dgj = g.pdiff(j);
    Polynomial dfj = f.pdiff(j), dgi = g.pdiff(i);
    out += c * (dfi * dgj - dfj * dgi);
  }
  return out;
}

PolyVectorField hamiltonian_vf(const PoissonBivector& pi, const Polynomial& g) {
  const std::size_t n = pi.nvars();
  PolyVectorField x(n);
  // X_g f = {g, f} = sum_j (sum_i Pi^{ij} d_i g) d_j f
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial cj(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      Polynomial pij = pi.component(i, j);
      if (pij.is_zero()) continue;
      cj += pij * g.pdiff(i);
    }
    x.set_component(j, cj);
  }
  return x;
}

Polynomial jacobiator(const PoissonBivector& pi, const Polynomial& f, const Polynomial& g,
                      const Polynomial& h) {
  return bracket(pi, f, bracket(pi, g, h)) + bracket(pi, g, bracket(pi, h, f)) +
         bracket(pi, h, bracket(pi, f, g));
}

Trivector schouten_self(const PoissonBivector& pi) {
  const std::size_t n = pi.nvars();
  Trivector t(n);
  // T^{ijk} = 2 sum_l (Pi^{il} d_l Pi^{jk} + Pi^{jl} d_l Pi^{ki} + Pi^{kl} d_l Pi^{ij}),
  // which makes T^{ijk} = 2 jacobiator(x_i, x_j, x_k).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Polynomial c(n);
        for (std::size_t l = 0; l < n; ++l) {
          c += pi.component(i, l) * pi.component(j, k).pdiff(l);
          c += pi.component(j, l) * pi.component(k, i).pdiff(l);
          c += pi.component(k, l) * pi.component(i, j).pdiff(l);
        }
        t.set(i, j, k, Rational(2) * c);
      }
  return t;
}

JacobiReport check_jacobi(const PoissonBivector& pi, unsigned sweep_degree) {
  if (sweep_degree < 1) throw std::invalid_argument("check_jacobi: sweep degree must be >= 1");
  JacobiReport rep;
  rep.schouten_zero = schouten_self(pi).is_zero();
  rep.sweep_clean = true;
  auto mons = monomials_up_to(pi.nvars(), sweep_degree);
  for (std::size_t a = 0; a < mons.size() && rep.sweep_clean; ++a) {
    if (mons[a].is_one()) continue;
    Polynomial fa = Polynomial::term(pi.nvars(), mons[a], 1);
    for (std::size_t b = a + 1; b < mons.size() && rep.sweep_clean; ++b) {
      Polynomial fb = Polynomial::term(pi.nvars(), mons[b], 1);
      Polynomial gab = bracket(pi, fa, fb);
      for (std::size_t c = b + 1; c < mons.size(); ++c) {
        Polynomial fc = Polynomial::term(pi.nvars(), mons[c], 1);
        Polynomial res = bracket(pi, fa, bracket(pi, fb, fc)) +
                         bracket(pi, fb, bracket(pi, fc, fa)) + bracket(pi, fc, gab);
        if (!res.is_zero()) {
          rep.sweep_clean = false;
          rep.witness = JacobiWitness{a, b, c, mons[a], mons[b], mons[c], res};
          break;
        }
      }
    }
  }
  rep.pass = rep.schouten_zero && rep.sweep_clean;
  return rep;
}

}  // namespace reduct
