#include "reduct/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace reduct {

AmbientBasis AmbientBasis::polynomials(std::size_t nvars, unsigned degree) {
  AmbientBasis b;
  b.kind_ = Kind::Polynomials;
  b.nvars_ = nvars;
  b.degree_ = degree;
  b.monomials_ = monomials_up_to(nvars, degree);
  return b;
}

AmbientBasis AmbientBasis::hermitian(std::size_t matrix_dim) {
  AmbientBasis b;
  b.kind_ = Kind::Hermitian;
  b.dim_ = matrix_dim;
  return b;
}

std::size_t AmbientBasis::dimension() const {
  return kind_ == Kind::Polynomials ? monomials_.size() : dim_ * dim_;
}

RatVector AmbientBasis::coords(const Polynomial& f) const {
  if (kind_ != Kind::Polynomials) throw std::invalid_argument("ambient is not polynomial");
  if (f.nvars() != nvars_) throw std::invalid_argument("coords: variable-count mismatch");
  if (f.degree() > degree_ && !f.is_zero())
    throw std::out_of_range("coords: polynomial degree exceeds ambient degree");
  RatVector v(monomials_.size(), Rational(0));
  for (const auto& [m, c] : f.terms()) {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
    v[static_cast<std::size_t>(it - monomials_.begin())] = c;
  }
  return v;
}

Polynomial AmbientBasis::poly_from_coords(const RatVector& v) const {
  if (kind_ != Kind::Polynomials) throw std::invalid_argument("ambient is not polynomial");
  if (v.size() != monomials_.size()) throw std::invalid_argument("poly_from_coords: bad length");
  Polynomial f(nvars_);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) f.add_term(monomials_[i], v[i]);
  return f;
}

RatVector AmbientBasis::coords(const HermitianElement& h) const {
  if (kind_ != Kind::Hermitian) throw std::invalid_argument("ambient is not Hermitian");
  if (h.dim() != dim_) throw std::invalid_argument("coords: matrix dimension mismatch");
  return hermitian_coords(h);
}

HermitianElement AmbientBasis::herm_from_coords(const RatVector& v) const {
  if (kind_ != Kind::Hermitian) throw std::invalid_argument("ambient is not Hermitian");
  return hermitian_from_coords(dim_, v);
}

ExplicitSpan ExplicitSpan::from_rows(AmbientBasis ambient, RatMatrix raw_rows) {
  for (const auto& r : raw_rows)
    if (r.size() != ambient.dimension())
      throw std::invalid_argument("span row length does not match ambient dimension");
  ExplicitSpan s(std::move(ambient));
  s.rows_ = std::move(raw_rows);
  s.pivots_ = rref(s.rows_);
  return s;
}

ExplicitSpan ExplicitSpan::from_polys(const AmbientBasis& ambient,
                                      const std::vector<Polynomial>& gens) {
  RatMatrix rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(ambient.coords(g));
  return from_rows(ambient, std::move(rows));
}

ExplicitSpan ExplicitSpan::full(AmbientBasis ambient) {
  RatMatrix id = identity_matrix(ambient.dimension());
  return from_rows(std::move(ambient), std::move(id));
}

std::vector<Polynomial> ExplicitSpan::basis_polys() const {
  std::vector<Polynomial> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(ambient_.poly_from_coords(r));
  return out;
}

RatVector ExplicitSpan::reduce(RatVector v) const {
  if (v.size() != ambient_.dimension()) throw std::invalid_argument("reduce: bad vector length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c == 0) continue;
    Rational f = c;  // pivot entries are 1
    for (std::size_t j = 0; j < v.size(); ++j)
      if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool ExplicitSpan::contains(const RatVector& v) const {
  RatVector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
}

bool ExplicitSpan::contains_span(const ExplicitSpan& other) const {
  if (!(ambient_ == other.ambient_)) throw std::invalid_argument("ambient mismatch");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const RatVector& r) { return contains(r); });
}

ExplicitSpan span_sum(const ExplicitSpan& a, const ExplicitSpan& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("span_sum: ambient mismatch");
  RatMatrix stacked = a.rows();
  stacked.insert(stacked.end(), b.rows().begin(), b.rows().end());
  return ExplicitSpan::from_rows(a.ambient(), std::move(stacked));
}

ExplicitSpan span_intersect(const ExplicitSpan& a, const ExplicitSpan& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("span_intersect: ambient mismatch");
  // v = x A = y B: kernel of [A^T | -B^T] in (x, y), then map x back through A.
  const std::size_t n = a.ambient().dimension();
  const std::size_t ra = a.dim(), rb = b.dim();
  RatMatrix sys(n, RatVector(ra + rb, Rational(0)));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < ra; ++r) sys[c][r] = a.rows()[r][c];
    for (std::size_t r = 0; r < rb; ++r) sys[c][ra + r] = -b.rows()[r][c];
  }
  RatMatrix ker = kernel(sys, ra + rb);
  RatMatrix rows;
  for (const auto& xy : ker) {
    RatVector v(n, Rational(0));
    for (std::size_t r = 0; r < ra; ++r) {
      if (xy[r] == 0) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] += xy[r] * a.rows()[r][c];
    }
    rows.push_back(std::move(v));
  }
  return ExplicitSpan::from_rows(a.ambient(), std::move(rows));
}

QuotientPresentation::QuotientPresentation(ExplicitSpan sub, RatMatrix representatives)
    : sub_(std::move(sub)), reps_(std::move(representatives)) {}

RatVector QuotientPresentation::class_coords(const RatVector& v) const {
  RatVector c = canon(v);
  const std::size_t n = c.size();
  RatMatrix sys(n, RatVector(reps_.size(), Rational(0)));
  for (std::size_t col = 0; col < reps_.size(); ++col)
    for (std::size_t r = 0; r < n; ++r) sys[r][col] = reps_[col][r];
  auto sol = solve(sys, c);
  if (!sol) throw std::invalid_argument("class_coords: vector not in B + representatives");
  return *sol;
}

QuotientPresentation quotient(const ExplicitSpan& a, const ExplicitSpan& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("quotient: ambient mismatch");
  if (!a.contains_span(b)) throw std::invalid_argument("quotient: subspace is not contained in the total space");
  RatMatrix reps;
  RatMatrix probe;  // running echelon for independence tests
  for (const auto& row : a.rows()) {
    RatVector c = b.reduce(row);
    RatMatrix trial = probe;
    trial.push_back(c);
    auto piv = rref(trial);
    if (piv.size() > probe.size()) {
      reps.push_back(std::move(c));
      probe = std::move(trial);
    }
  }
  return QuotientPresentation(b, std::move(reps));
}

StructuredSpace StructuredSpace::vanishing_ideal(std::size_t nvars, std::set<std::size_t> coords) {
  StructuredSpace s;
  s.rule_ = Rule::VanishingIdeal;
  s.nvars_ = nvars;
  s.coords_ = std::move(coords);
  for (std::size_t k : s.coords_)
    if (k >= nvars) throw std::out_of_range("vanishing_ideal: coordinate index out of range");
  return s;
}

StructuredSpace StructuredSpace::invariant_space(std::vector<PolyVectorField> fields) {
  if (fields.empty()) throw std::invalid_argument("invariant_space: need at least one field");
  StructuredSpace s;
  s.rule_ = Rule::InvariantSpace;
  s.nvars_ = fields.front().nvars();
  s.fields_ = std::move(fields);
  return s;
}

StructuredSpace StructuredSpace::restricted_invariant_space(std::vector<PolyVectorField> fields,
                                                            std::set<std::size_t> coords) {
  if (fields.empty()) throw std::invalid_argument("restricted_invariant_space: need at least one field");
  StructuredSpace s;
  s.rule_ = Rule::RestrictedInvariantSpace;
  s.nvars_ = fields.front().nvars();
  s.fields_ = std::move(fields);
  s.coords_ = std::move(coords);
  return s;
}

StructuredSpace StructuredSpace::normalizer_space(PoissonBivector pi, std::set<std::size_t> coords) {
  StructuredSpace s;
  s.rule_ = Rule::NormalizerSpace;
  s.nvars_ = pi.nvars();
  s.coords_ = std::move(coords);
  s.pi_ = std::make_shared<const PoissonBivector>(std::move(pi));
  return s;
}

std::vector<Polynomial> StructuredSpace::residuals(const Polynomial& f) const {
  if (f.nvars() != nvars_) throw std::invalid_argument("residuals: variable-count mismatch");
  std::vector<Polynomial> out;
  switch (rule_) {
    case Rule::VanishingIdeal:
      out.push_back(f.restrict_zero(coords_));
      break;
    case Rule::InvariantSpace:
      for (const auto& x : fields_) out.push_back(x.apply(f));
      break;
    case Rule::RestrictedInvariantSpace:
      for (const auto& x : fields_) out.push_back(x.apply(f).restrict_zero(coords_));
      break;
    case Rule::NormalizerSpace:
      // {g, I} subset I for the coordinate ideal reduces to the generators:
      // {g, h x_k} = h {g, x_k} + x_k {g, h} and the second term is already
      // in the ideal.
      for (std::size_t k : coords_)
        out.push_back(
            bracket(*pi_, f, Polynomial::variable(nvars_, k)).restrict_zero(coords_));
      break;
  }
  return out;
}

bool StructuredSpace::member(const Polynomial& f) const {
  auto rs = residuals(f);
  return std::all_of(rs.begin(), rs.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ExplicitSpan StructuredSpace::truncate(unsigned degree) const {
  AmbientBasis ambient = AmbientBasis::polynomials(nvars_, degree);
  const auto& mons = ambient.monomials();

  // residuals of all basis monomials; target ambient must fit the largest
  std::vector<std::vector<Polynomial>> res(mons.size());
  unsigned target_deg = 0;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    res[i] = residuals(Polynomial::term(nvars_, mons[i], 1));
    for (const auto& p : res[i]) target_deg = std::max(target_deg, p.degree());
  }
  AmbientBasis target = AmbientBasis::polynomials(nvars_, target_deg);
  const std::size_t tdim = target.dimension();
  const std::size_t nres = res.empty() ? 0 : res[0].size();

  // rows: one per (residual slot, target coordinate); columns: basis monomials
  RatMatrix sys;
  for (std::size_t slot = 0; slot < nres; ++slot) {
    RatMatrix block(tdim, RatVector(mons.size(), Rational(0)));
    for (std::size_t i = 0; i < mons.size(); ++i) {
      RatVector col = target.coords(res[i][slot]);
      for (std::size_t r = 0; r < tdim; ++r)
        if (col[r] != 0) block[r][i] = col[r];
    }
    for (auto& row : block) sys.push_back(std::move(row));
  }
  RatMatrix ker = kernel(sys, mons.size());
  return ExplicitSpan::from_rows(std::move(ambient), std::move(ker));
}

}  // namespace reduct
