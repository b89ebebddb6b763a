#include "reduct/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace reduct {

using json = nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> errs)
    : std::runtime_error("scenario error: " + join(errs)), errors(std::move(errs)) {}

const char* mode_name(ScenarioFile::Mode m) {
  switch (m) {
    case ScenarioFile::Mode::Symmetry: return "symmetry";
    case ScenarioFile::Mode::Constraint: return "constraint";
    case ScenarioFile::Mode::Dirac: return "dirac";
    case ScenarioFile::Mode::Generalized: return "generalized";
    case ScenarioFile::Mode::Quantum: return "quantum";
  }
  return "?";
}

namespace {

struct Parser {
  std::vector<std::string> errors;

  void fail(const std::string& msg) { errors.push_back(msg); }

  std::size_t var_index(const std::vector<std::string>& names, const std::string& v,
                        const std::string& where) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == v) return i;
    fail(where + ": undeclared variable '" + v + "'");
    return 0;
  }

  Polynomial poly(const std::string& text, const std::vector<std::string>& names,
                  const std::string& where) {
    try {
      return parse_polynomial(text, names);
    } catch (const std::exception& e) {
      fail(where + ": " + e.what());
      return Polynomial::zero(names.size());
    }
  }

  PolyVectorField field(const json& j, const std::vector<std::string>& names,
                        const std::string& where) {
    PolyVectorField x(names.size());
    if (!j.is_object()) {
      fail(where + ": field must be an object mapping variables to coefficients");
      return x;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::size_t i = var_index(names, it.key(), where);
      if (!it.value().is_string()) {
        fail(where + ": coefficient of '" + it.key() + "' must be a polynomial string");
        continue;
      }
      x.set_component(i, poly(it.value().get<std::string>(), names, where));
    }
    return x;
  }

  HermitianElement matrix(const json& j, std::size_t d, const std::string& where) {
    HermitianElement h(d);
    if (!j.is_array() || j.size() != d) {
      fail(where + ": expected " + std::to_string(d) + " rows");
      return h;
    }
    // read the upper triangle; validate Hermitian symmetry from the full data
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!j[i].is_array() || j[i].size() != d) {
        fail(where + ": row " + std::to_string(i) + " must have " + std::to_string(d) + " entries");
        return h;
      }
      for (std::size_t c = 0; c < d; ++c) {
        try {
          m.at(i, c) = parse_gaussian(j[i][c].get<std::string>());
        } catch (const std::exception& e) {
          fail(where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]: " + e.what());
        }
      }
    }
    if (!m.is_hermitian()) {
      fail(where + ": matrix is not Hermitian");
      return h;
    }
    return HermitianElement(std::move(m));
  }
};

}  // namespace

ScenarioFile parse_scenario_text(const std::string& content) {
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    throw ScenarioError({std::string("JSON parse error: ") + e.what()});
  }
  if (!j.is_object()) throw ScenarioError({"scenario must be a JSON object"});

  Parser p;
  ScenarioFile out;
  out.name = j.value("name", "");

  std::string mode = j.value("mode", "");
  if (mode == "symmetry") out.mode = ScenarioFile::Mode::Symmetry;
  else if (mode == "constraint") out.mode = ScenarioFile::Mode::Constraint;
  else if (mode == "dirac") out.mode = ScenarioFile::Mode::Dirac;
  else if (mode == "generalized") out.mode = ScenarioFile::Mode::Generalized;
  else if (mode == "quantum") out.mode = ScenarioFile::Mode::Quantum;
  else p.fail("missing or unknown mode '" + mode + "'");

  if (out.mode == ScenarioFile::Mode::Quantum) {
    auto& q = out.quantum;
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
      p.fail("quantum scenario needs a positive integer 'dimension'");
    else
      q.dimension = j["dimension"].get<std::size_t>();
    if (j.contains("hbar")) {
      try {
        q.hbar = parse_rational(j["hbar"].get<std::string>());
      } catch (const std::exception& e) {
        p.fail(std::string("hbar: ") + e.what());
      }
    }
    if (q.hbar == 0) p.fail("hbar must be nonzero");
    auto span = [&](const char* key) {
      std::vector<HermitianElement> v;
      if (!j.contains(key)) return v;
      for (std::size_t i = 0; i < j[key].size(); ++i)
        v.push_back(p.matrix(j[key][i], q.dimension, std::string(key) + "[" + std::to_string(i) + "]"));
      return v;
    };
    q.b_span = span("b_span");
    q.s_span = span("s_span");
    if (!j.contains("b_span")) p.fail("quantum scenario needs 'b_span'");
    if (j.contains("certificate")) {
      const auto& c = j["certificate"];
      std::vector<HermitianElement> bm, bp;
      for (std::size_t i = 0; i < c.value("b_minus", json::array()).size(); ++i)
        bm.push_back(p.matrix(c["b_minus"][i], q.dimension, "certificate.b_minus[" + std::to_string(i) + "]"));
      for (std::size_t i = 0; i < c.value("b_plus", json::array()).size(); ++i)
        bp.push_back(p.matrix(c["b_plus"][i], q.dimension, "certificate.b_plus[" + std::to_string(i) + "]"));
      q.b_minus = std::move(bm);
      q.b_plus = std::move(bp);
    }
    if (!p.errors.empty()) throw ScenarioError(std::move(p.errors));
    return out;
  }

  // classical modes
  auto& s = out.classical;
  if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
    p.fail("scenario needs a nonempty 'variables' array");
  else
    for (const auto& v : j["variables"]) s.names.push_back(v.get<std::string>());
  const std::size_t n = s.names.size();
  s.pi = PoissonBivector(n);

  if (j.contains("degrees")) {
    const auto& d = j["degrees"];
    s.d_check = d.value("check", 2u);
    s.d_work = d.value("work", s.d_check + 2);
    s.d_sweep = d.value("sweep", 3u);
    if (s.d_sweep < 1) p.fail("degrees.sweep must be >= 1");
  }

  if (j.contains("bivector")) {
    for (std::size_t e = 0; e < j["bivector"].size(); ++e) {
      const auto& entry = j["bivector"][e];
      std::string where = "bivector[" + std::to_string(e) + "]";
      if (!entry.contains("i") || !entry.contains("j") || !entry.contains("coeff")) {
        p.fail(where + ": needs fields i, j, coeff");
        continue;
      }
      std::size_t a = p.var_index(s.names, entry["i"].get<std::string>(), where);
      std::size_t b = p.var_index(s.names, entry["j"].get<std::string>(), where);
      Polynomial c = p.poly(entry["coeff"].get<std::string>(), s.names, where);
      if (a == b) {
        p.fail(where + ": i and j must differ");
        continue;
      }
      if (p.errors.empty()) {
        if (a < b) s.pi.set(a, b, std::move(c));
        else s.pi.set(b, a, -c);
      }
    }
  } else {
    p.fail("classical scenario needs 'bivector'");
  }

  if (j.contains("submanifold"))
    for (const auto& v : j["submanifold"])
      s.submanifold.insert(p.var_index(s.names, v.get<std::string>(), "submanifold"));

  auto fields = [&](const char* key) {
    std::vector<PolyVectorField> v;
    if (!j.contains(key)) return v;
    for (std::size_t i = 0; i < j[key].size(); ++i)
      v.push_back(p.field(j[key][i], s.names, std::string(key) + "[" + std::to_string(i) + "]"));
    return v;
  };
  s.b_fields = fields("b_fields");
  s.e_fields = fields("e_fields");

  if (j.contains("constraints"))
    for (std::size_t i = 0; i < j["constraints"].size(); ++i)
      s.constraints.push_back(
          p.poly(j["constraints"][i].get<std::string>(), s.names, "constraints[" + std::to_string(i) + "]"));

  if (j.contains("certificate")) {
    const auto& c = j["certificate"];
    if (c.contains("b_minus_fields"))
      for (std::size_t i = 0; i < c["b_minus_fields"].size(); ++i)
        s.b_minus_fields.push_back(
            p.field(c["b_minus_fields"][i], s.names, "certificate.b_minus_fields[" + std::to_string(i) + "]"));
    else
      p.fail("certificate needs 'b_minus_fields'");
    if (c.contains("b_plus_fields")) {
      std::vector<PolyVectorField> bp;
      for (std::size_t i = 0; i < c["b_plus_fields"].size(); ++i)
        bp.push_back(
            p.field(c["b_plus_fields"][i], s.names, "certificate.b_plus_fields[" + std::to_string(i) + "]"));
      s.b_plus_fields = std::move(bp);
    }
  }

  out.two_stage = j.value("two_stage", false);

  if (j.contains("pairs"))
    for (std::size_t i = 0; i < j["pairs"].size(); ++i) {
      const auto& pr = j["pairs"][i];
      if (!pr.is_array() || pr.size() != 2) {
        p.fail("pairs[" + std::to_string(i) + "]: expected [f, g]");
        continue;
      }
      out.dirac_pairs.emplace_back(p.poly(pr[0].get<std::string>(), s.names, "pairs"),
                                   p.poly(pr[1].get<std::string>(), s.names, "pairs"));
    }

  // mode-specific requirements
  if (out.mode == ScenarioFile::Mode::Symmetry && s.e_fields.empty())
    p.fail("symmetry scenario needs 'e_fields'");
  if ((out.mode == ScenarioFile::Mode::Constraint || out.mode == ScenarioFile::Mode::Dirac ||
       out.mode == ScenarioFile::Mode::Generalized) &&
      !j.contains("submanifold"))
    p.fail(std::string(mode_name(out.mode)) + " scenario needs 'submanifold'");
  if (out.mode == ScenarioFile::Mode::Dirac && s.constraints.empty())
    p.fail("dirac scenario needs 'constraints'");

  if (!p.errors.empty()) throw ScenarioError(std::move(p.errors));
  return out;
}

ScenarioFile parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError({"cannot open scenario file '" + path + "'"});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

}  // namespace reduct
