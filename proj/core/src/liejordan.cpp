#include "reduct/liejordan.hpp"

#include <stdexcept>

namespace reduct {

std::string to_string(const HermitianElement& h) {
  std::string out = "[";
  for (std::size_t i = 0; i < h.dim(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < h.dim(); ++j) {
      if (j) out += ", ";
      out += to_string(h.at(i, j));
    }
  }
  return out + "]";
}

LJAlgebra::LJAlgebra(std::size_t d, Rational hbar) : d_(d), hbar_(std::move(hbar)) {
  if (hbar_ == 0)
    throw std::invalid_argument("LJAlgebra: hbar = 0 selects the classical case, not modeled here");
  ConditionReport rep = verify_axioms(d_, hbar_, hermitian_basis(d_));
  if (!rep.all_pass()) throw std::logic_error("LJAlgebra: axiom verification failed at construction");
}

ConditionReport verify_axioms(std::size_t d, const Rational& hbar,
                              const std::vector<HermitianElement>& sample) {
  ConditionReport rep;
  if (hbar == 0) throw std::invalid_argument("verify_axioms: hbar must be nonzero");

  // does the sample span the Hermitian space?
  {
    AmbientBasis amb = AmbientBasis::hermitian(d);
    RatMatrix rows;
    for (const auto& h : sample) rows.push_back(amb.coords(h));
    ExplicitSpan span = ExplicitSpan::from_rows(amb, std::move(rows));
    rep.record_dim("sample_span", span.dim());
    rep.add("sample_spans_ambient", span.dim() == d * d,
            span.dim() == d * d ? "" : "partial verification only");
  }

  auto jd = [&](const HermitianElement& a, const HermitianElement& b) { return jordan(a, b); };
  auto li = [&](const HermitianElement& a, const HermitianElement& b) { return lie(a, b, hbar); };

  bool jac = true, lei = true, ass = true;
  std::string jac_w, lei_w, ass_w;
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j)
      for (std::size_t k = 0; k < sample.size(); ++k) {
        const auto &a = sample[i], &b = sample[j], &c = sample[k];
        if (jac) {
          HermitianElement r = li(li(a, b), c) + li(li(b, c), a) + li(li(c, a), b);
          if (!r.is_zero()) {
            jac = false;
            jac_w = "witness triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ")";
          }
        }
        if (lei) {
          HermitianElement r = li(jd(a, b), c) - jd(a, li(b, c)) - jd(li(a, c), b);
          if (!r.is_zero()) {
            lei = false;
            lei_w = "witness triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ")";
          }
        }
        if (ass) {
          HermitianElement lhs = jd(jd(a, b), c) - jd(a, jd(b, c));
          HermitianElement rhs = (hbar * hbar) * li(li(a, c), b);
          if (!(lhs == rhs)) {
            ass = false;
            ass_w = "witness triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ")";
          }
        }
      }
  rep.add("jacobi", jac, jac_w);
  rep.add("leibniz", lei, lei_w);
  rep.add("associator", ass, ass_w);
  return rep;
}

namespace {

// b-component of an element of B + S; nullopt when v is outside B + S.
std::optional<RatVector> split_b_part(const ExplicitSpan& b, const ExplicitSpan& s,
                                      const RatVector& v) {
  const std::size_t n = v.size();
  const std::size_t rb = b.dim(), rs = s.dim();
  RatMatrix sys(n, RatVector(rb + rs, Rational(0)));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < rb; ++r) sys[c][r] = b.rows()[r][c];
    for (std::size_t r = 0; r < rs; ++r) sys[c][rb + r] = s.rows()[r][c];
  }
  auto sol = solve(sys, v);
  if (!sol) return std::nullopt;
  RatVector out(n, Rational(0));
  for (std::size_t r = 0; r < rb; ++r) {
    if ((*sol)[r] == 0) continue;
    for (std::size_t c = 0; c < n; ++c) out[c] += (*sol)[r] * b.rows()[r][c];
  }
  return out;
}

}  // namespace

QuantumReduction quantum_reduce(const ExplicitSpan& b, const ExplicitSpan& s, const LJAlgebra& alg,
                                const std::optional<QuantumCertificate>& cert) {
  QuantumReduction out;
  const AmbientBasis& amb = b.ambient();
  if (!(amb == s.ambient()) || amb.kind() != AmbientBasis::Kind::Hermitian ||
      amb.matrix_dim() != alg.dim())
    throw std::invalid_argument("quantum_reduce: ambient mismatch");

  ExplicitSpan bs = span_sum(b, s);
  ExplicitSpan bi = span_intersect(b, s);
  out.report.record_dim("B", b.dim());
  out.report.record_dim("S", s.dim());
  out.report.record_dim("B+S", bs.dim());
  out.report.record_dim("B^S", bi.dim());

  std::vector<HermitianElement> b_basis, bi_basis;
  for (const auto& r : b.rows()) b_basis.push_back(amb.herm_from_coords(r));
  for (const auto& r : bi.rows()) bi_basis.push_back(amb.herm_from_coords(r));

  struct Weak {
    const char* name;
    bool jordan_side;
    bool into_sum;  // target B+S (pair conditions) vs S (ideal conditions)
  };
  const Weak weak[] = {{"weak_jordan_pair", true, true},
                       {"weak_jordan_ideal", true, false},
                       {"weak_lie_pair", false, true},
                       {"weak_lie_ideal", false, false}};
  for (const auto& w : weak) {
    bool pass = true;
    std::string detail;
    const auto& rhs = w.into_sum ? b_basis : bi_basis;
    const ExplicitSpan& target = w.into_sum ? bs : s;
    for (std::size_t i = 0; i < b_basis.size() && pass; ++i)
      for (std::size_t j = 0; j < rhs.size(); ++j) {
        if (w.into_sum && j < i) continue;
        HermitianElement r = w.jordan_side ? alg.jordan(b_basis[i], rhs[j])
                                           : alg.lie(b_basis[i], rhs[j]);
        if (!target.contains(amb.coords(r))) {
          pass = false;
          detail = "witness pair a = " + to_string(b_basis[i]) + ", b = " + to_string(rhs[j]) +
                   ", result " + to_string(r);
          break;
        }
      }
    out.report.add(w.name, pass, detail);
  }
  if (!out.report.all_pass()) return out;

  QuotientPresentation q = quotient(b, bi);
  out.report.record_dim("B/(B^S)", q.dim());

  LJQuotient lj{q, {}, {}, {}};
  for (const auto& r : q.representatives()) lj.representatives.push_back(amb.herm_from_coords(r));

  auto project = [&](const HermitianElement& v) -> RatVector {
    auto bpart = split_b_part(b, s, amb.coords(v));
    if (!bpart) throw std::logic_error("quantum_reduce: product left B + S despite weak conditions");
    return q.class_coords(*bpart);
  };
  auto element_of = [&](const RatVector& cls) {
    HermitianElement h(alg.dim());
    for (std::size_t i = 0; i < cls.size(); ++i)
      if (cls[i] != 0) h = h + cls[i] * lj.representatives[i];
    return h;
  };

  const std::size_t m = lj.representatives.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      lj.jordan_sc[{i, j}] = project(alg.jordan(lj.representatives[i], lj.representatives[j]));
      lj.lie_sc[{i, j}] = project(alg.lie(lj.representatives[i], lj.representatives[j]));
    }

  // lift independence: shift the first slot by an element of B cap S
  bool indep = true;
  if (!bi_basis.empty()) {
    for (std::size_t i = 0; i < m && indep; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        HermitianElement alt_a = lj.representatives[i] + bi_basis.front();
        if (project(alg.jordan(alt_a, lj.representatives[j])) != lj.jordan_sc[{i, j}] ||
            project(alg.lie(alt_a, lj.representatives[j])) != lj.lie_sc[{i, j}]) {
          indep = false;
          out.report.add("lift_independence", false,
                         "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
          break;
        }
      }
  }
  if (indep) out.report.add("lift_independence", true);

  // ternary axioms of the induced structure, computed through the projection
  auto q_jordan = [&](const RatVector& x, const RatVector& y) {
    return project(alg.jordan(element_of(x), element_of(y)));
  };
  auto q_lie = [&](const RatVector& x, const RatVector& y) {
    return project(alg.lie(element_of(x), element_of(y)));
  };
  auto vsub = [](RatVector a, const RatVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  auto vadd = [](RatVector a, const RatVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  auto vscale = [](const Rational& c, RatVector a) {
    for (auto& v : a) v *= c;
    return a;
  };
  auto vzero = [](const RatVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
  };

  RatMatrix cls(m, RatVector(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) cls[i][i] = 1;

  bool qjac = true, qlei = true, qass = true;
  std::string wjac, wlei, wass;
  const Rational h2 = alg.hbar() * alg.hbar();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const auto &a = cls[i], &bb = cls[j], &c = cls[k];
        if (qjac && !vzero(vadd(vadd(q_lie(q_lie(a, bb), c), q_lie(q_lie(bb, c), a)),
                                q_lie(q_lie(c, a), bb)))) {
          qjac = false;
          wjac = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        }
        if (qlei && !vzero(vsub(vsub(q_lie(q_jordan(a, bb), c), q_jordan(a, q_lie(bb, c))),
                                q_jordan(q_lie(a, c), bb)))) {
          qlei = false;
          wlei = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        }
        if (qass) {
          RatVector lhs = vsub(q_jordan(q_jordan(a, bb), c), q_jordan(a, q_jordan(bb, c)));
          RatVector rhs = vscale(h2, q_lie(q_lie(a, c), bb));
          if (!vzero(vsub(lhs, rhs))) {
            qass = false;
            wass = "triple (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
          }
        }
      }
  out.report.add("quotient_jacobi", qjac, wjac);
  out.report.add("quotient_leibniz", qlei, wlei);
  out.report.add("quotient_associator", qass, wass);

  if (cert) {
    const ExplicitSpan& bm = cert->b_minus;
    const ExplicitSpan& bp = cert->b_plus;
    out.report.add("cert_sandwich", b.contains_span(bm) && bp.contains_span(b));
    out.report.add("cert_sums", span_sum(bm, s) == bs && span_sum(bp, s) == bs);
    ExplicitSpan bps = span_intersect(bp, s);
    std::vector<HermitianElement> bm_basis, bps_basis;
    for (const auto& r : bm.rows()) bm_basis.push_back(amb.herm_from_coords(r));
    for (const auto& r : bps.rows()) bps_basis.push_back(amb.herm_from_coords(r));
    bool sa = true, sb = true;
    for (std::size_t i = 0; i < bm_basis.size(); ++i) {
      for (std::size_t j = i; j < bm_basis.size() && sa; ++j)
        sa = bp.contains(amb.coords(alg.jordan(bm_basis[i], bm_basis[j]))) &&
             bp.contains(amb.coords(alg.lie(bm_basis[i], bm_basis[j])));
      for (const auto& t : bps_basis) {
        if (!sb) break;
        sb = s.contains(amb.coords(alg.jordan(bm_basis[i], t))) &&
             s.contains(amb.coords(alg.lie(bm_basis[i], t)));
      }
    }
    out.report.add("strong_pair", sa);
    out.report.add("strong_ideal", sb);
    bool cert_pass = sa && sb && out.report.find("cert_sandwich")->pass &&
                     out.report.find("cert_sums")->pass;
    out.report.add("certificate_consistent", !cert_pass || (qjac && qlei && qass));
  }

  out.quotient = std::move(lj);
  return out;
}

ConditionReport classical_limit_compare(std::size_t d, const std::vector<HermitianElement>& sample) {
  ConditionReport rep;
  const Rational hbars[] = {Rational(1), Rational(1, 2), Rational(1, 3)};
  for (const auto& h : hbars) {
    bool ok = true;
    for (const auto& a : sample)
      for (const auto& b : sample)
        for (const auto& c : sample) {
          HermitianElement lhs = jordan(jordan(a, b), c) - jordan(a, jordan(b, c));
          HermitianElement rhs = (h * h) * lie(lie(a, c, h), b, h);
          if (!(lhs == rhs)) ok = false;
        }
    rep.add("associator_matches_hbar_" + to_string(h), ok,
            "(a o b) o c - a o (b o c) = hbar^2 [[a,c],b] with hbar = " + to_string(h));
  }
  // the Jordan associator itself is hbar-independent; the double Lie bracket
  // carries the compensating 1/hbar^2
  bool scaling = true;
  for (const auto& a : sample)
    for (const auto& b : sample) {
      HermitianElement l1 = lie(a, b, Rational(1));
      HermitianElement l2 = lie(a, b, Rational(1, 2));
      if (!(l2 == Rational(2) * l1)) scaling = false;
    }
  rep.add("lie_scales_inverse_hbar", scaling);
  return rep;
}

}  // namespace reduct
