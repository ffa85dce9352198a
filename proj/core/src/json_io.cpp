#include "dga/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dga {

namespace {

using Int = boost::multiprecision::cpp_int;

Rational rational_component(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational component: ") + e.what());
  }
  throw ParseError("rational component must be an integer or a string");
}

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

std::vector<int> indices_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("index list must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError("basis index must be an integer");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

GaussianRational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string())
    return GaussianRational(rational_component(j));
  if (j.is_array() && j.size() == 2)
    return GaussianRational(rational_component(j[0]) / rational_component(j[1]));
  if (j.is_array() && j.size() == 4) {
    Rational re = rational_component(j[0]) / rational_component(j[1]);
    Rational im = rational_component(j[2]) / rational_component(j[3]);
    return GaussianRational(re, im);
  }
  throw ParseError("rational must be an integer, \"p/q\", [num,den] or "
                   "[re_num,re_den,im_num,im_den]");
}

Json rational_to_json(const GaussianRational& c) {
  return Json::array({int_to_json(numerator(c.re)), int_to_json(denominator(c.re)),
                      int_to_json(numerator(c.im)), int_to_json(denominator(c.im))});
}

Multivector multivector_from_json(const Json& j, int ambient) {
  if (!j.is_array()) throw ParseError("multivector must be an array of terms");
  Multivector out(ambient);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw ParseError("multivector term must be [[indices], coefficient]");
    std::vector<int> idx = indices_from_json(term[0]);
    for (int i : idx)
      if (i < 0 || i >= ambient) throw ParseError("basis index out of range");
    out.add_tuple(idx, rational_from_json(term[1]));
  }
  return out;
}

Json multivector_to_json(const Multivector& a) {
  Json out = Json::array();
  for (const auto& [mask, c] : a.terms()) {
    Json idx = Json::array();
    for (int i : Multivector::mask_indices(mask)) idx.push_back(i);
    out.push_back(Json::array({idx, rational_to_json(c)}));
  }
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].is_array() ? j[0].size() : 0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw ParseError("matrix rows must have equal length");
    for (int k = 0; k < cols; ++k) m[i][k] = rational_from_json(j[i][k]);
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols; ++k) row.push_back(rational_to_json(m[i][k]));
    out.push_back(std::move(row));
  }
  return out;
}

LieAlgebraSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra spec must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("algebra spec needs an integer \"dim\"");
  LieAlgebraSpec spec;
  spec.dim = j["dim"].get<int>();
  if (spec.dim <= 0 || spec.dim > 30) throw ParseError("\"dim\" out of supported range");
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != spec.dim)
      throw ParseError("\"basis\" must list one name per dimension");
    for (const auto& b : j["basis"]) spec.basis.push_back(b.get<std::string>());
  } else {
    for (int i = 0; i < spec.dim; ++i) spec.basis.push_back("e" + std::to_string(i + 1));
  }
  if (j.contains("real")) spec.real = j["real"].get<bool>();
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("\"brackets\" must be an array");
    for (const auto& b : j["brackets"]) {
      if (!b.is_array() || b.size() != 3 || !b[0].is_number_integer() ||
          !b[1].is_number_integer() || !b[2].is_array())
        throw ParseError("bracket entry must be [i, j, [[k, coeff]...]]");
      int i = b[0].get<int>(), k = b[1].get<int>();
      if (i < 0 || k < 0 || i >= spec.dim || k >= spec.dim || i >= k)
        throw ParseError("bracket indices must satisfy 0 <= i < j < dim");
      Multivector val(spec.dim);
      for (const auto& t : b[2]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
          throw ParseError("bracket value term must be [k, coeff]");
        int g = t[0].get<int>();
        if (g < 0 || g >= spec.dim) throw ParseError("bracket target index out of range");
        val.add_term(Multivector::Mask(1) << g, rational_from_json(t[1]));
      }
      spec.set_bracket(i, k, std::move(val));
    }
  }
  if (j.contains("J")) {
    Matrix J = matrix_from_json(j["J"]);
    if (J.rows != spec.dim || J.cols != spec.dim)
      throw ParseError("\"J\" must be a dim x dim matrix");
    spec.J = std::move(J);
  }
  return spec;
}

Json spec_to_json(const LieAlgebraSpec& spec) {
  Json j;
  j["dim"] = spec.dim;
  j["basis"] = spec.basis;
  Json brackets = Json::array();
  for (const auto& [key, val] : spec.brackets) {
    Json terms = Json::array();
    for (const auto& [mask, c] : val.terms())
      terms.push_back(
          Json::array({Multivector::mask_indices(mask)[0], rational_to_json(c)}));
    brackets.push_back(Json::array({key.first, key.second, terms}));
  }
  j["brackets"] = std::move(brackets);
  if (spec.J) j["J"] = matrix_to_json(*spec.J);
  j["real"] = spec.real;
  return j;
}

SymplecticConnectionData connection_from_json(const Json& j) {
  SymplecticConnectionData data;
  data.g_spec = spec_from_json(j);
  if (!j.contains("omega")) throw ParseError("connection file needs \"omega\"");
  data.omega = multivector_from_json(j["omega"], data.g_spec.dim);
  if (!j.contains("gamma") || !j["gamma"].is_array() ||
      static_cast<int>(j["gamma"].size()) != data.g_spec.dim)
    throw ParseError("connection file needs one \"gamma\" matrix per basis vector");
  for (const auto& g : j["gamma"]) data.gamma.push_back(matrix_from_json(g));
  if (j.contains("metric")) data.metric = matrix_from_json(j["metric"]);
  return data;
}

Json connection_to_json(const SymplecticConnectionData& data) {
  Json j = spec_to_json(data.g_spec);
  j["omega"] = multivector_to_json(data.omega);
  Json gs = Json::array();
  for (const auto& g : data.gamma) gs.push_back(matrix_to_json(g));
  j["gamma"] = std::move(gs);
  if (data.metric) j["metric"] = matrix_to_json(*data.metric);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json validation_report_to_json(const ValidationReport& rep) {
  Json j;
  j["valid"] = rep.valid();
  Json jf = Json::array();
  for (const auto& f : rep.jacobi_failures)
    jf.push_back(Json{{"triple", Json::array({f.i, f.j, f.k})},
                      {"residual", multivector_to_json(f.residual)}});
  j["jacobi_failures"] = std::move(jf);
  j["j_present"] = rep.j_present;
  j["j_square_ok"] = rep.j_square_ok;
  Json nf = Json::array();
  for (const auto& f : rep.nijenhuis_failures)
    nf.push_back(Json{{"pair", Json::array({f.first.first, f.first.second})},
                      {"residual", multivector_to_json(f.second)}});
  j["nijenhuis_failures"] = std::move(nf);
  return j;
}

Json context_dump(const GcaContext& ctx) {
  Json j;
  j["generators"] = ctx.names();
  int L = ctx.L_dim();
  Json br = Json::object();
  for (int a = 0; a < L; ++a)
    for (int b = a + 1; b < L; ++b) {
      Multivector s = ctx.schouten(Multivector::basis(L, a), Multivector::basis(L, b));
      if (!s.is_zero())
        br[ctx.names()[a] + "|" + ctx.names()[b]] = multivector_to_json(s);
    }
  j["bracket_table"] = std::move(br);
  Json db = Json::object();
  for (int a = 0; a < L; ++a)
    if (!ctx.dbar_gen(a).is_zero())
      db[ctx.names()[a]] = multivector_to_json(ctx.dbar_gen(a));
  j["dbar_table"] = std::move(db);
  return j;
}

Json cohomology_to_json(const CohomologyBasis& h, const std::vector<std::string>& names) {
  Json degrees = Json::array();
  for (size_t k = 0; k < h.degrees.size(); ++k) {
    Json reps = Json::array();
    Json pretty = Json::array();
    for (const auto& r : h.degrees[k].representatives) {
      reps.push_back(multivector_to_json(r));
      pretty.push_back(r.str(names));
    }
    degrees.push_back(Json{{"degree", k},
                           {"dim", h.degrees[k].dim},
                           {"representatives", std::move(reps)},
                           {"rendered", std::move(pretty)}});
  }
  return Json{{"ambient", h.ambient}, {"degrees", std::move(degrees)}};
}

Json compatible_report_to_json(const CompatiblePairReport& rep,
                               const std::vector<std::string>& names) {
  auto residuals = [&names](const std::vector<std::pair<std::string, Multivector>>& rs) {
    Json out = Json::array();
    for (const auto& [label, mv] : rs)
      out.push_back(Json{{"at", label}, {"residual", mv.str(names)}});
    return out;
  };
  return Json{{"gamma_closed", rep.gamma_closed},
              {"intertwine_residuals", residuals(rep.eq1_residuals)},
              {"bracket_endo_residuals", residuals(rep.eq2_residuals)},
              {"wedge_endo_residuals", residuals(rep.eq3_residuals)},
              {"compatible", rep.verdict()}};
}

Json series_report_to_json(const SeriesReport& rep) {
  return Json{{"order", rep.order},
              {"first_failing_order", rep.first_failing_order},
              {"failures", rep.failures},
              {"residual_coefficientwise_zero", rep.residual_coefficientwise_zero},
              {"passed", rep.passed()}};
}

Json center_report_to_json(const CenterReport& rep) {
  auto vecs = [](const std::vector<Vec>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) {
      Json row = Json::array();
      for (const auto& c : v) row.push_back(rational_to_json(c));
      out.push_back(std::move(row));
    }
    return out;
  };
  return Json{{"derived_basis", vecs(rep.derived_basis)},
              {"center_basis", vecs(rep.center_basis)},
              {"center_closed", rep.center_closed},
              {"conclusive", rep.conclusive}};
}

Json diagnostic_to_json(const QuasiIsoDiagnostic& d) {
  return Json{{"a", center_report_to_json(d.a)},
              {"b", center_report_to_json(d.b)},
              {"obstruction", d.obstruction}};
}

Json pipeline_report_to_json(const PipelineReport& rep) {
  Json stages = Json::array();
  for (const auto& s : rep.stages)
    stages.push_back(Json{{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  Json j{{"stages", std::move(stages)}, {"isomorphic", rep.isomorphic}};
  if (rep.diagnostic) j["diagnostic"] = diagnostic_to_json(*rep.diagnostic);
  return j;
}

}  // namespace dga
