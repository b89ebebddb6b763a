#include "reduct/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace reduct {

void ConditionReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void ConditionReport::record_dim(std::string name, std::size_t value) {
  dimensions.emplace_back(std::move(name), value);
}

bool ConditionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.pass; });
}

const ConditionCheck* ConditionReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Polynomial ReducedBracket::structure_value(std::size_t i, std::size_t j) const {
  if (i == j) return Polynomial::zero(representatives.empty() ? 0 : representatives[0].nvars());
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = structure.find({i, j});
  Polynomial v = it == structure.end()
                     ? Polynomial::zero(representatives[0].nvars())
                     : it->second;
  return flip ? -v : v;
}

namespace {

std::string pstr(const Polynomial& p, const std::vector<std::string>& names) {
  return p.to_string(names);
}

// Span of the restrictions to N of a structured space's degree-d truncation,
// in the degree-`ambient_degree` ambient. Membership of h|_N here decides
// h in B + I at the working truncation.
struct RestrictionSpan {
  std::vector<Polynomial> basis;       // truncation basis of the space itself
  ExplicitSpan restricted;             // span of their restrictions

  RestrictionSpan(const std::vector<Polynomial>& space_basis, const std::set<std::size_t>& K,
                  unsigned ambient_degree, std::size_t nvars)
      : basis(space_basis),
        restricted(ExplicitSpan::from_polys(AmbientBasis::polynomials(nvars, ambient_degree), [&] {
          std::vector<Polynomial> r;
          r.reserve(space_basis.size());
          for (const auto& b : space_basis) r.push_back(b.restrict_zero(K));
          return r;
        }())) {}

  bool contains_restriction(const Polynomial& h_restricted) const {
    return restricted.contains(restricted.ambient().coords(h_restricted));
  }
};

// Solves sum_i c_i b_i|_N = target; returns sum_i c_i b_i (free coefficients
// zero, so the solution is supported on the earliest basis elements).
std::optional<Polynomial> lift_from_basis(const std::vector<Polynomial>& basis,
                                          const Polynomial& target,
                                          const std::set<std::size_t>& K) {
  const std::size_t n = target.nvars();
  unsigned deg = target.degree();
  for (const auto& b : basis) deg = std::max(deg, b.degree());
  AmbientBasis amb = AmbientBasis::polynomials(n, deg);
  RatMatrix sys(amb.dimension(), RatVector(basis.size(), Rational(0)));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    RatVector v = amb.coords(basis[col].restrict_zero(K));
    for (std::size_t r = 0; r < v.size(); ++r)
      if (v[r] != 0) sys[r][col] = v[r];
  }
  auto sol = solve(sys, amb.coords(target));
  if (!sol) return std::nullopt;
  Polynomial out(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if ((*sol)[i] != 0) out += (*sol)[i] * basis[i];
  return out;
}

// The structured rule for the subalgebra B; empty b_fields select the
// degenerate B = 0 case, where the function space is everything.
std::optional<StructuredSpace> b_rule_of(const ReductionScenario& s) {
  if (s.b_fields.empty()) return std::nullopt;
  return StructuredSpace::restricted_invariant_space(s.b_fields, s.submanifold);
}

ExplicitSpan truncate_or_full(const std::optional<StructuredSpace>& rule, std::size_t nvars,
                              unsigned degree) {
  if (rule) return rule->truncate(degree);
  return ExplicitSpan::full(AmbientBasis::polynomials(nvars, degree));
}

Polynomial constraint_det(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial::constant(nvars, 1);
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  Polynomial det(nvars);
  // Leibniz expansion; constraint sets are small.
  std::sort(cols.begin(), cols.end());
  do {
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (cols[i] > cols[j]) sign = -sign;
    Polynomial prod = Polynomial::constant(nvars, sign);
    for (std::size_t i = 0; i < k && !prod.is_zero(); ++i) prod = prod * m[i][cols[i]];
    det += prod;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return det;
}

}  // namespace

std::optional<Polynomial> lift_into(const StructuredSpace& space, const Polynomial& target,
                                    const std::set<std::size_t>& K, unsigned degree) {
  return lift_from_basis(space.truncate(degree).basis_polys(), target, K);
}

ReductionOutcome reduce_by_symmetries(const ReductionScenario& s) {
  if (s.e_fields.empty()) throw std::invalid_argument("reduce_by_symmetries: no symmetry fields");
  ReductionOutcome out;
  StructuredSpace rule = StructuredSpace::invariant_space(s.e_fields);
  ExplicitSpan e_check = rule.truncate(s.d_check);
  out.report.record_dim("E", e_check.dim());

  auto basis = e_check.basis_polys();
  bool closed = true;
  for (std::size_t i = 0; i < basis.size() && closed; ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial br = bracket(s.pi, basis[i], basis[j]);
      if (!rule.member(br)) {
        closed = false;
        out.report.add("lie_closure", false,
                       "witness pair f = " + pstr(basis[i], s.names) + ", g = " +
                           pstr(basis[j], s.names) + ", {f,g} = " + pstr(br, s.names) +
                           " is not invariant");
        break;
      }
    }
  if (closed) out.report.add("lie_closure", true);
  if (!closed) return out;

  ReducedBracket red;
  red.submanifold = {};
  red.representatives = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      red.structure[{i, j}] = bracket(s.pi, basis[i], basis[j]);
  out.reduced = std::move(red);
  return out;
}

ConditionReport second_class_check(const ReductionScenario& s) {
  const std::size_t n = s.nvars();
  ConditionReport rep;
  for (const auto& phi : s.constraints)
    if (!phi.restrict_zero(s.submanifold).is_zero())
      throw std::invalid_argument("second_class_check: constraint " + pstr(phi, s.names) +
                                  " does not vanish on N");
  const std::size_t k = s.constraints.size();
  std::vector<std::vector<Polynomial>> c(k, std::vector<Polynomial>(k, Polynomial::zero(n)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Polynomial v = bracket(s.pi, s.constraints[a], s.constraints[b]).restrict_zero(s.submanifold);
      c[a][b] = v;
      c[b][a] = -v;
    }
  Polynomial det = constraint_det(c, n);
  bool invertible = det.constant_term() != 0 && k > 0;
  rep.add("second_class", invertible,
          invertible ? "det C has nonzero constant term " + to_string(det.constant_term())
                     : "det C|_N = " + pstr(det, s.names) + " vanishes at the origin");

  // equivalent statement: the truncations of N + I span everything
  StructuredSpace norm = StructuredSpace::normalizer_space(s.pi, s.submanifold);
  StructuredSpace ideal = StructuredSpace::vanishing_ideal(n, s.submanifold);
  ExplicitSpan n_check = norm.truncate(s.d_check);
  ExplicitSpan i_check = ideal.truncate(s.d_check);
  ExplicitSpan sum = span_sum(n_check, i_check);
  const std::size_t full = AmbientBasis::polynomials(n, s.d_check).dimension();
  rep.record_dim("N", n_check.dim());
  rep.record_dim("I", i_check.dim());
  rep.record_dim("N+I", sum.dim());
  std::string missing;
  if (sum.dim() < full) {
    for (const auto& m : sum.ambient().monomials()) {
      Polynomial p = Polynomial::term(n, m, 1);
      if (!sum.contains(p)) {
        missing = "; missing " + pstr(p, s.names);
        break;
      }
    }
  }
  rep.add("normalizer_plus_ideal_full", sum.dim() == full,
          "dim(N+I) = " + std::to_string(sum.dim()) + " of " + std::to_string(full) + missing);
  return rep;
}

Polynomial dirac_bracket(const ReductionScenario& s, const Polynomial& f, const Polynomial& g) {
  const std::size_t n = s.nvars();
  const std::size_t k = s.constraints.size();
  if (k == 0) return bracket(s.pi, f, g);

  std::vector<std::vector<Polynomial>> c(k, std::vector<Polynomial>(k, Polynomial::zero(n)));
  bool constant = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Polynomial v = bracket(s.pi, s.constraints[a], s.constraints[b]);
      constant = constant && v.is_constant();
      c[a][b] = v;
      c[b][a] = -v;
    }

  RatMatrix c0(k, RatVector(k, Rational(0)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) c0[a][b] = c[a][b].constant_term();
  auto c0inv = inverse(c0);
  if (!c0inv) throw std::domain_error("dirac_bracket: constraint matrix singular at the origin");

  // C^-1 exactly for constant C, else the geometric series
  // (I + C0^-1 C1)^-1 C0^-1 truncated at degree d_work.
  std::vector<std::vector<Polynomial>> cinv(k, std::vector<Polynomial>(k, Polynomial::zero(n)));
  auto const_mat = [&](const RatMatrix& m) {
    std::vector<std::vector<Polynomial>> r(k, std::vector<Polynomial>(k, Polynomial::zero(n)));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) r[a][b] = Polynomial::constant(n, m[a][b]);
    return r;
  };
  auto mat_mul = [&](const auto& x, const auto& y) {
    std::vector<std::vector<Polynomial>> r(k, std::vector<Polynomial>(k, Polynomial::zero(n)));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t l = 0; l < k; ++l) r[a][b] += (x[a][l] * y[l][b]).truncated(s.d_work);
    return r;
  };
  if (constant) {
    cinv = const_mat(*c0inv);
  } else {
    auto c0i = const_mat(*c0inv);
    std::vector<std::vector<Polynomial>> c1(k, std::vector<Polynomial>(k, Polynomial::zero(n)));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        c1[a][b] = c[a][b];
        c1[a][b] -= Polynomial::constant(n, c[a][b].constant_term());
      }
    auto step = mat_mul(c0i, c1);  // C0^-1 C1, nilpotent to any fixed degree
    auto term = c0i;
    cinv = c0i;
    for (unsigned it = 1; it <= s.d_work; ++it) {
      term = mat_mul(step, term);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          cinv[a][b] += (it % 2 ? Rational(-1) : Rational(1)) * term[a][b];
    }
  }

  Polynomial out = bracket(s.pi, f, g);
  for (std::size_t a = 0; a < k; ++a) {
    Polynomial fa = bracket(s.pi, f, s.constraints[a]);
    if (fa.is_zero()) continue;
    for (std::size_t b = 0; b < k; ++b) {
      if (cinv[a][b].is_zero()) continue;
      out -= fa * cinv[a][b] * bracket(s.pi, s.constraints[b], g);
    }
  }
  return constant ? out : out.truncated(s.d_work);
}

namespace {

// Stage-one data of the constraint reduction: normalizer-side lifts of the
// quotient N/(N cap I) at d_check.
std::vector<Polynomial> normalizer_lifts(const ReductionScenario& s, ConditionReport& rep) {
  const std::size_t n = s.nvars();
  StructuredSpace norm = StructuredSpace::normalizer_space(s.pi, s.submanifold);
  StructuredSpace ideal = StructuredSpace::vanishing_ideal(n, s.submanifold);
  ExplicitSpan n_check = norm.truncate(s.d_check);
  ExplicitSpan ni = span_intersect(n_check, ideal.truncate(s.d_check));
  QuotientPresentation q = quotient(n_check, ni);
  rep.record_dim("N_normalizer", n_check.dim());
  rep.record_dim("N/(N^I)", q.dim());
  std::vector<Polynomial> lifts;
  for (const auto& row : q.representatives())
    lifts.push_back(n_check.ambient().poly_from_coords(row));
  return lifts;
}

}  // namespace

ReductionOutcome reduce_by_constraints(const ReductionScenario& s) {
  ReductionOutcome out;
  if (!s.constraints.empty()) out.report = second_class_check(s);
  std::vector<Polynomial> lifts = normalizer_lifts(s, out.report);

  ReducedBracket red;
  red.submanifold = s.submanifold;
  for (const auto& u : lifts) red.representatives.push_back(u.restrict_zero(s.submanifold));
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = i + 1; j < lifts.size(); ++j)
      red.structure[{i, j}] = bracket(s.pi, lifts[i], lifts[j]).restrict_zero(s.submanifold);
  out.reduced = std::move(red);
  return out;
}

PoissonBivector reduced_bivector(const ReductionScenario& s) {
  const std::size_t n = s.nvars();
  auto rule = b_rule_of(s);
  std::vector<Polynomial> work_basis = truncate_or_full(rule, n, s.d_work).basis_polys();

  std::vector<std::size_t> nvarsN;
  for (std::size_t i = 0; i < n; ++i)
    if (!s.submanifold.count(i)) nvarsN.push_back(i);

  std::vector<Polynomial> lifts(n, Polynomial::zero(n));
  for (std::size_t u : nvarsN) {
    auto l = lift_from_basis(work_basis, Polynomial::variable(n, u), s.submanifold);
    if (!l)
      throw std::domain_error("reduced_bivector: no lift of coordinate " +
                              (u < s.names.size() ? s.names[u] : std::to_string(u)) +
                              " into B at degree " + std::to_string(s.d_work));
    lifts[u] = *l;
  }

  PoissonBivector pn(n);
  for (std::size_t a = 0; a < nvarsN.size(); ++a)
    for (std::size_t b = a + 1; b < nvarsN.size(); ++b) {
      std::size_t u = nvarsN[a], v = nvarsN[b];
      Polynomial comp = bracket(s.pi, lifts[u], lifts[v]).restrict_zero(s.submanifold);
      if (!comp.is_zero()) pn.set(u, v, std::move(comp));
    }
  return pn;
}

ReductionOutcome generalized_reduce(const ReductionScenario& s) {
  const std::size_t n = s.nvars();
  const auto& K = s.submanifold;
  ReductionOutcome out;
  auto rule = b_rule_of(s);
  StructuredSpace ideal = StructuredSpace::vanishing_ideal(n, K);

  ExplicitSpan b_check = truncate_or_full(rule, n, s.d_check);
  ExplicitSpan i_check = ideal.truncate(s.d_check);
  ExplicitSpan bi_check = span_intersect(b_check, i_check);
  out.report.record_dim("B", b_check.dim());
  out.report.record_dim("I", i_check.dim());
  out.report.record_dim("B^I", bi_check.dim());
  out.report.record_dim("B+I", span_sum(b_check, i_check).dim());

  auto basis = b_check.basis_polys();
  auto bi_basis = bi_check.basis_polys();

  // ambient degree for restriction membership must fit every bracket we test
  unsigned amb_deg = s.d_work;
  std::vector<std::vector<Polynomial>> brackets(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    brackets[i].reserve(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Polynomial br =
          j <= i ? Polynomial::zero(n) : bracket(s.pi, basis[i], basis[j]).restrict_zero(K);
      amb_deg = std::max(amb_deg, br.degree());
      brackets[i].push_back(std::move(br));
    }
  }
  RestrictionSpan rspan(truncate_or_full(rule, n, s.d_work).basis_polys(), K, amb_deg, n);

  bool cond_a = true;
  for (std::size_t i = 0; i < basis.size() && cond_a; ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!rspan.contains_restriction(brackets[i][j])) {
        cond_a = false;
        out.report.add("weak_a", false,
                       "witness pair f = " + pstr(basis[i], s.names) + ", g = " +
                           pstr(basis[j], s.names) + ": {f,g}|_N = " +
                           pstr(brackets[i][j], s.names) + " not in (B+I)|_N");
        break;
      }
    }
  if (cond_a) out.report.add("weak_a", true);

  bool cond_b = true;
  for (std::size_t i = 0; i < basis.size() && cond_b; ++i)
    for (const auto& t : bi_basis) {
      Polynomial r = bracket(s.pi, basis[i], t).restrict_zero(K);
      if (!r.is_zero()) {
        cond_b = false;
        out.report.add("weak_b", false,
                       "witness pair f = " + pstr(basis[i], s.names) + ", t = " + pstr(t, s.names) +
                           ": {f,t}|_N = " + pstr(r, s.names));
        break;
      }
    }
  if (cond_b) out.report.add("weak_b", true);

  if (!(cond_a && cond_b)) return out;

  QuotientPresentation q = quotient(b_check, bi_check);
  out.report.record_dim("B/(B^I)", q.dim());

  ReducedBracket red;
  red.submanifold = K;
  std::vector<Polynomial> reps;
  for (const auto& row : q.representatives()) reps.push_back(b_check.ambient().poly_from_coords(row));
  for (const auto& u : reps) red.representatives.push_back(u.restrict_zero(K));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      red.structure[{i, j}] = bracket(s.pi, reps[i], reps[j]).restrict_zero(K);

  // lift independence: shift each lift by an element of B cap I and compare
  bool independent = true;
  if (!bi_basis.empty()) {
    const Polynomial& t = bi_basis.front();
    for (std::size_t i = 0; i < reps.size() && independent; ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        Polynomial alt = bracket(s.pi, reps[i] + t, reps[j]).restrict_zero(K);
        if (alt != red.structure[{i, j}]) {
          independent = false;
          out.report.add("lift_independence", false,
                         "classes of {" + pstr(reps[i], s.names) + " [+ " + pstr(t, s.names) +
                             "], " + pstr(reps[j], s.names) + "} differ");
          break;
        }
      }
  }
  if (independent) out.report.add("lift_independence", true);

  try {
    PoissonBivector pn = reduced_bivector(s);
    red.jacobi = check_jacobi(pn, s.d_sweep);
    red.bivector = std::move(pn);
    out.report.add("jacobi", red.jacobi->pass,
                   red.jacobi->pass ? "induced bracket satisfies Jacobi" : "");
    if (!red.jacobi->pass && red.jacobi->witness) {
      const auto& w = *red.jacobi->witness;
      out.report.checks.back().detail =
          "witness (" + Polynomial::term(n, w.f, 1).to_string(s.names) + ", " +
          Polynomial::term(n, w.g, 1).to_string(s.names) + ", " +
          Polynomial::term(n, w.h, 1).to_string(s.names) +
          "), residual = " + w.residual.to_string(s.names);
    }
  } catch (const std::domain_error& e) {
    out.report.add("jacobi_audit_skipped", true, e.what());
  }

  out.reduced = std::move(red);
  return out;
}

ReductionOutcome certify_strong(const ReductionScenario& s) {
  const std::size_t n = s.nvars();
  const auto& K = s.submanifold;
  if (s.b_minus_fields.empty())
    throw std::invalid_argument("certify_strong: certificate needs B- fields");
  ReductionOutcome out;

  StructuredSpace bm_rule = StructuredSpace::invariant_space(s.b_minus_fields);
  auto b_rule = b_rule_of(s);
  if (!b_rule && !s.b_plus_fields)
    throw std::invalid_argument("certify_strong: need B fields or explicit B+ fields");
  StructuredSpace bp_rule = s.b_plus_fields
                                ? StructuredSpace::restricted_invariant_space(*s.b_plus_fields, K)
                                : *b_rule;
  StructuredSpace ideal = StructuredSpace::vanishing_ideal(n, K);

  // All certificate checks run at the lift degree: the induced bracket is
  // built from lifts of degree <= d_work, so a certificate sound for it must
  // cover B- elements up to that degree (a d_check sweep misses witness
  // pairs involving degree-(d_check+1) invariants).
  const unsigned d_cert = s.d_work;
  ExplicitSpan bm_check = bm_rule.truncate(d_cert);
  ExplicitSpan b_check = truncate_or_full(b_rule, n, d_cert);
  ExplicitSpan bp_check = bp_rule.truncate(d_cert);
  ExplicitSpan i_check = ideal.truncate(d_cert);
  out.report.record_dim("B-", bm_check.dim());
  out.report.record_dim("B", b_check.dim());
  out.report.record_dim("B+", bp_check.dim());

  auto all_member = [&](const ExplicitSpan& span, const StructuredSpace& target,
                        std::string check_name) {
    for (const auto& f : span.basis_polys())
      if (!target.member(f)) {
        out.report.add(std::move(check_name), false, "witness " + pstr(f, s.names));
        return;
      }
    out.report.add(std::move(check_name), true);
  };
  if (b_rule) all_member(bm_check, *b_rule, "sandwich_lower");
  else out.report.add("sandwich_lower", true, "B is the full algebra");
  all_member(b_check, bp_rule, "sandwich_upper");

  // The sum conditions B- + I = B + I = B+ + I compare spans of restrictions
  // to N: I is exactly the restriction kernel, so X + I = Y + I iff X and Y
  // restrict to the same span. Classes are capped at d_check (where the
  // quotient lives) while lifts may use the full degree d_cert, matching how
  // the reduction pipeline consumes these spaces.
  AmbientBasis cert_amb = AmbientBasis::polynomials(n, d_cert);
  std::vector<Polynomial> low_monoms;
  for (const auto& m : monomials_up_to(n, s.d_check))
    low_monoms.push_back(Polynomial::term(n, m, 1));
  ExplicitSpan low_span = ExplicitSpan::from_polys(cert_amb, low_monoms);
  auto class_span = [&](const ExplicitSpan& sp) {
    std::vector<Polynomial> r;
    r.reserve(sp.dim());
    for (const auto& f : sp.basis_polys()) r.push_back(f.restrict_zero(K));
    return span_intersect(ExplicitSpan::from_polys(cert_amb, r), low_span);
  };
  ExplicitSpan b_classes = class_span(b_check);
  std::string sum_detail = "classes of degree <= " + std::to_string(s.d_check) +
                           ", lifts of degree <= " + std::to_string(d_cert);
  out.report.add("sum_lower", class_span(bm_check) == b_classes, "B- + I vs B + I, " + sum_detail);
  out.report.add("sum_upper", class_span(bp_check) == b_classes, "B+ + I vs B + I, " + sum_detail);

  auto bm_basis = bm_check.basis_polys();
  bool strong_a = true;
  for (std::size_t i = 0; i < bm_basis.size() && strong_a; ++i)
    for (std::size_t j = i + 1; j < bm_basis.size(); ++j) {
      Polynomial br = bracket(s.pi, bm_basis[i], bm_basis[j]);
      if (!bp_rule.member(br)) {
        strong_a = false;
        out.report.add("strong_a", false,
                       "witness pair f = " + pstr(bm_basis[i], s.names) + ", g = " +
                           pstr(bm_basis[j], s.names) + ", {f,g} = " + pstr(br, s.names) +
                           " not in B+");
        break;
      }
    }
  if (strong_a) out.report.add("strong_a", true);

  bool strong_b = true;
  const auto bp_ideal = span_intersect(bp_check, i_check).basis_polys();
  for (const auto& f : bm_basis) {
    if (!strong_b) break;
    for (const auto& t : bp_ideal) {
      Polynomial r = bracket(s.pi, f, t).restrict_zero(K);
      if (!r.is_zero()) {
        strong_b = false;
        out.report.add("strong_b", false,
                       "witness pair f = " + pstr(f, s.names) + ", t = " + pstr(t, s.names) +
                           ": {f,t}|_N = " + pstr(r, s.names));
        break;
      }
    }
  }
  if (strong_b) out.report.add("strong_b", true);

  // cross-check the certificate guarantee against the direct Jacobi audit
  ReductionOutcome gen = generalized_reduce(s);
  bool cert = out.report.all_pass();
  if (gen.reduced && gen.reduced->jacobi) {
    bool jac = gen.reduced->jacobi->pass;
    out.report.add("certificate_consistent", !cert || jac,
                   cert ? (jac ? "certificate PASS and Jacobi PASS"
                               : "certificate PASS but Jacobi FAIL")
                        : "certificate FAIL; direct Jacobi audit " +
                              std::string(jac ? "PASS" : "FAIL"));
  }
  out.reduced = std::move(gen.reduced);
  return out;
}

namespace {

// Sections of B with vanishing K-components on N: polynomial coefficient
// tuples (h_a) on N with sum_a h_a X_a^k |_N = 0 for all k in K. Returns the
// resulting tangent fields (K-components zeroed, the rest restricted to N).
std::vector<PolyVectorField> intersect_with_tangent(const ReductionScenario& s) {
  const std::size_t n = s.nvars();
  const auto& K = s.submanifold;
  const std::size_t m = s.b_fields.size();
  if (m == 0) return {};

  // coefficient monomials: N-variables only, degree <= d_work
  std::vector<Monomial> coeff_mons;
  for (const auto& mon : monomials_up_to(n, s.d_work)) {
    bool ok = true;
    for (std::size_t k : K)
      if (mon.exp(k) > 0) ok = false;
    if (ok) coeff_mons.push_back(mon);
  }
  const std::size_t su = coeff_mons.size();

  unsigned target_deg = s.d_work;
  for (const auto& x : s.b_fields)
    for (std::size_t i = 0; i < n; ++i) target_deg = std::max(target_deg, s.d_work + x.component(i).degree());
  AmbientBasis target = AmbientBasis::polynomials(n, target_deg);

  RatMatrix sys;
  for (std::size_t k : K) {
    RatMatrix block(target.dimension(), RatVector(m * su, Rational(0)));
    for (std::size_t a = 0; a < m; ++a) {
      Polynomial ck = s.b_fields[a].component(k).restrict_zero(K);
      if (ck.is_zero()) continue;
      for (std::size_t u = 0; u < su; ++u) {
        Polynomial prod = Polynomial::term(n, coeff_mons[u], 1) * ck;
        RatVector col = target.coords(prod);
        for (std::size_t r = 0; r < col.size(); ++r)
          if (col[r] != 0) block[r][a * su + u] = col[r];
      }
    }
    for (auto& row : block) sys.push_back(std::move(row));
  }
  RatMatrix ker = kernel(sys, m * su);

  std::vector<PolyVectorField> fields;
  for (const auto& sol : ker) {
    PolyVectorField y(n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (K.count(i)) continue;
      Polynomial ci(n);
      for (std::size_t a = 0; a < m; ++a) {
        Polynomial comp = s.b_fields[a].component(i).restrict_zero(K);
        if (comp.is_zero()) continue;
        for (std::size_t u = 0; u < su; ++u) {
          const Rational& c = sol[a * su + u];
          if (c != 0) ci += c * (Polynomial::term(n, coeff_mons[u], 1) * comp);
        }
      }
      if (!ci.is_zero()) nonzero = true;
      y.set_component(i, std::move(ci));
    }
    if (nonzero) fields.push_back(std::move(y));
  }
  return fields;
}

}  // namespace

ReductionOutcome two_stage_reduce(const ReductionScenario& s) {
  const std::size_t n = s.nvars();
  const auto& K = s.submanifold;
  ReductionOutcome out;
  auto b_rule = b_rule_of(s);

  // Strict Lie closure of B fails already for transverse subbundles (the
  // bracket of an ideal-square with a lift leaves B), so the pipeline is
  // gated on the weak conditions; the strict status is still reported.
  {
    ExplicitSpan b_check = truncate_or_full(b_rule, n, s.d_check);
    bool closed = true;
    std::string wit;
    auto basis = b_check.basis_polys();
    for (std::size_t i = 0; i < basis.size() && closed; ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        Polynomial br = bracket(s.pi, basis[i], basis[j]);
        bool in_b = b_rule ? b_rule->member(br) : true;
        if (!in_b) {
          closed = false;
          wit = "witness pair f = " + pstr(basis[i], s.names) + ", g = " + pstr(basis[j], s.names);
          break;
        }
      }
    out.report.add("b_strict_lie_closure", true,
                   closed ? "B is Lie-closed at degree " + std::to_string(s.d_check)
                          : "not Lie-closed (" + wit + "); proceeding via the weak conditions");
  }

  ReductionOutcome gen = generalized_reduce(s);
  for (const auto& c : gen.report.checks)
    if (c.name == "weak_a" || c.name == "weak_b") out.report.checks.push_back(c);
  if (!out.report.all_pass()) return out;

  // stage 1: constraint reduction via the normalizer
  std::vector<Polynomial> lifts1 = normalizer_lifts(s, out.report);

  // stage 2: symmetry reduction with E = B cap TN
  std::vector<PolyVectorField> e_fields = intersect_with_tangent(s);
  out.report.record_dim("B^TN_fields", e_fields.size());

  std::vector<std::size_t> kept;
  if (e_fields.empty()) {
    for (std::size_t i = 0; i < lifts1.size(); ++i) kept.push_back(i);
  } else {
    // invariant combinations of the stage-1 classes under the tangent fields
    unsigned deg = s.d_check;
    std::vector<Polynomial> rests;
    for (const auto& u : lifts1) rests.push_back(u.restrict_zero(K));
    std::vector<std::vector<Polynomial>> acted(e_fields.size());
    unsigned target_deg = deg;
    for (std::size_t e = 0; e < e_fields.size(); ++e)
      for (const auto& r : rests) {
        acted[e].push_back(e_fields[e].apply(r));
        target_deg = std::max(target_deg, acted[e].back().degree());
      }
    AmbientBasis target = AmbientBasis::polynomials(n, target_deg);
    RatMatrix sys;
    for (std::size_t e = 0; e < e_fields.size(); ++e) {
      RatMatrix block(target.dimension(), RatVector(rests.size(), Rational(0)));
      for (std::size_t i = 0; i < rests.size(); ++i) {
        RatVector col = target.coords(acted[e][i]);
        for (std::size_t r = 0; r < col.size(); ++r)
          if (col[r] != 0) block[r][i] = col[r];
      }
      for (auto& row : block) sys.push_back(std::move(row));
    }
    RatMatrix ker = kernel(sys, rests.size());
    // rebuild lifts from invariant combinations
    std::vector<Polynomial> inv_lifts;
    for (const auto& sol : ker) {
      Polynomial u(n);
      for (std::size_t i = 0; i < lifts1.size(); ++i)
        if (sol[i] != 0) u += sol[i] * lifts1[i];
      inv_lifts.push_back(std::move(u));
    }
    lifts1 = std::move(inv_lifts);
    for (std::size_t i = 0; i < lifts1.size(); ++i) kept.push_back(i);
  }

  ReducedBracket red;
  red.submanifold = K;
  for (std::size_t i : kept) red.representatives.push_back(lifts1[i].restrict_zero(K));
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = a + 1; b < kept.size(); ++b)
      red.structure[{a, b}] =
          bracket(s.pi, lifts1[kept[a]], lifts1[kept[b]]).restrict_zero(K);

  // compare with the generalized pipeline on the common representatives
  bool match = true;
  std::string mismatch;
  std::vector<Polynomial> work_basis = truncate_or_full(b_rule, n, s.d_work).basis_polys();
  std::vector<std::optional<Polynomial>> b_lifts;
  for (const auto& r : red.representatives)
    b_lifts.push_back(lift_from_basis(work_basis, r, K));
  for (std::size_t a = 0; a < red.representatives.size() && match; ++a)
    for (std::size_t b = a + 1; b < red.representatives.size(); ++b) {
      if (!b_lifts[a] || !b_lifts[b]) {
        match = false;
        mismatch = "no B-lift of " + pstr(red.representatives[!b_lifts[a] ? a : b], s.names);
        break;
      }
      Polynomial gv = bracket(s.pi, *b_lifts[a], *b_lifts[b]).restrict_zero(K);
      if (gv != red.structure[{a, b}]) {
        match = false;
        mismatch = "pair (" + pstr(red.representatives[a], s.names) + ", " +
                   pstr(red.representatives[b], s.names) + "): two-stage " +
                   pstr(red.structure[{a, b}], s.names) + " vs generalized " + pstr(gv, s.names);
        break;
      }
    }
  out.report.add("two_stage_matches_generalized", match, mismatch);

  out.reduced = std::move(red);
  return out;
}

}  // namespace reduct
