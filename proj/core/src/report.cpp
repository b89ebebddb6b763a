#include "reduct/report.hpp"

#include <sstream>

#include <json.hpp>

namespace reduct {

using ojson = nlohmann::ordered_json;

namespace {

ojson conditions_json(const ConditionReport& rep) {
  ojson checks = ojson::array();
  for (const auto& c : rep.checks) {
    ojson e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  ojson dims = ojson::object();
  for (const auto& [k, v] : rep.dimensions) dims[k] = v;
  ojson out;
  out["checks"] = std::move(checks);
  out["dimensions"] = std::move(dims);
  return out;
}

ojson reduced_json(const ReducedBracket& rb, const std::vector<std::string>& names) {
  ojson out;
  ojson reps = ojson::array();
  for (const auto& r : rb.representatives) reps.push_back(r.to_string(names));
  out["representatives"] = std::move(reps);
  ojson structure = ojson::array();
  for (const auto& [ij, v] : rb.structure) {
    if (v.is_zero()) continue;
    ojson e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["bracket"] = v.to_string(names);
    structure.push_back(std::move(e));
  }
  out["structure"] = std::move(structure);
  if (rb.bivector) {
    ojson biv = ojson::array();
    for (const auto& [ij, c] : rb.bivector->entries()) {
      ojson e;
      e["i"] = ij.first < names.size() ? names[ij.first] : std::to_string(ij.first);
      e["j"] = ij.second < names.size() ? names[ij.second] : std::to_string(ij.second);
      e["coeff"] = c.to_string(names);
      biv.push_back(std::move(e));
    }
    out["reduced_bivector"] = std::move(biv);
  }
  if (rb.jacobi) {
    ojson jc;
    jc["pass"] = rb.jacobi->pass;
    if (rb.jacobi->witness) {
      const auto& w = *rb.jacobi->witness;
      const std::size_t n = w.residual.nvars();
      jc["witness"] = ojson::array({Polynomial::term(n, w.f, 1).to_string(names),
                                    Polynomial::term(n, w.g, 1).to_string(names),
                                    Polynomial::term(n, w.h, 1).to_string(names)});
      jc["residual"] = w.residual.to_string(names);
    }
    out["jacobi"] = std::move(jc);
  }
  return out;
}

ojson quotient_json(const LJQuotient& q) {
  ojson out;
  ojson reps = ojson::array();
  for (const auto& r : q.representatives) reps.push_back(to_string(r));
  out["representatives"] = std::move(reps);
  auto table = [](const std::map<std::pair<std::size_t, std::size_t>, RatVector>& sc) {
    ojson t = ojson::array();
    for (const auto& [ij, v] : sc) {
      bool nonzero = false;
      for (const auto& c : v)
        if (c != 0) nonzero = true;
      if (!nonzero) continue;
      ojson e;
      e["i"] = ij.first;
      e["j"] = ij.second;
      ojson coords = ojson::array();
      for (const auto& c : v) coords.push_back(to_string(c));
      e["coords"] = std::move(coords);
      t.push_back(std::move(e));
    }
    return t;
  };
  out["jordan"] = table(q.jordan_sc);
  out["lie"] = table(q.lie_sc);
  return out;
}

}  // namespace

std::string Report::to_machine() const {
  ojson out;
  out["scenario"] = scenario_name;
  out["mode"] = mode;
  out["conditions"] = conditions_json(conditions);
  if (reduced) out["reduced"] = reduced_json(*reduced, names);
  if (quotient) out["quotient"] = quotient_json(*quotient);
  if (!evaluations.empty()) {
    ojson ev = ojson::array();
    for (const auto& [f, g, v] : evaluations) {
      ojson e;
      e["f"] = f;
      e["g"] = g;
      e["value"] = v;
      ev.push_back(std::move(e));
    }
    out["evaluations"] = std::move(ev);
  }
  out["status"] = conditions.all_pass() ? "PASS" : "FAIL";
  return out.dump(2) + "\n";
}

std::string Report::to_human() const {
  std::ostringstream os;
  os << "scenario: " << scenario_name << " (" << mode << ")\n";
  for (const auto& [k, v] : conditions.dimensions) os << "  dim " << k << " = " << v << "\n";
  for (const auto& c : conditions.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  if (reduced) {
    if (reduced->bivector) {
      os << "  reduced bivector:\n";
      for (const auto& [ij, c] : reduced->bivector->entries())
        os << "    {" << names[ij.first] << "," << names[ij.second]
           << "} = " << c.to_string(names) << "\n";
    }
    if (!reduced->representatives.empty())
      os << "  quotient dimension " << reduced->representatives.size() << "\n";
  }
  if (quotient) os << "  quotient dimension " << quotient->representatives.size() << "\n";
  for (const auto& [f, g, v] : evaluations) os << "  {" << f << ", " << g << "}_D = " << v << "\n";
  os << (conditions.all_pass() ? "ALL CHECKS PASS" : "CHECK FAILURES PRESENT") << "\n";
  return os.str();
}

std::string reemit_machine(const std::string& text) {
  return ojson::parse(text).dump(2) + "\n";
}

}  // namespace reduct
