#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dga/corpus.hpp"
#include "dga/json_io.hpp"

using namespace dga;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 2;
constexpr int kNegativeVerdict = 3;
constexpr int kParseError = 4;

struct Options {
  bool json = false;
  std::string spec_path, gamma_path, phi_path, connection_path, fixture_name;
  std::string spec_b_path;
  int order = 4;
  bool has_deform = false;
};

void emit(const Options& opt, const Json& machine, const std::string& human) {
  if (opt.json)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

LieAlgebraSpec load_spec(const std::string& path) {
  return spec_from_json(load_json_file(path));
}

Multivector load_gamma(const std::string& path, int L) {
  return multivector_from_json(load_json_file(path), L);
}

Endomorphism load_phi(const std::string& path, int L) {
  Matrix m = matrix_from_json(load_json_file(path));
  if (m.rows != L || m.cols != L)
    throw ParseError(path + ": phi must be a " + std::to_string(L) + "x" +
                     std::to_string(L) + " matrix");
  return Endomorphism(std::move(m));
}

int cmd_validate(const Options& opt) {
  LieAlgebraSpec spec = load_spec(opt.spec_path);
  ValidationReport rep = validate(spec);
  std::string text = rep.valid() ? "valid\n" : "invalid\n";
  for (const auto& f : rep.jacobi_failures)
    text += "  Jacobi fails at (" + spec.basis[f.i] + ", " + spec.basis[f.j] + ", " +
            spec.basis[f.k] + "): " + f.residual.str(spec.basis) + "\n";
  if (!rep.j_square_ok) text += "  J^2 != -1\n";
  for (const auto& f : rep.nijenhuis_failures)
    text += "  Nijenhuis tensor nonzero at (" + spec.basis[f.first.first] + ", " +
            spec.basis[f.first.second] + "): " + f.second.str(spec.basis) + "\n";
  emit(opt, validation_report_to_json(rep), text);
  return rep.valid() ? kOk : kValidationFailure;
}

int cmd_cohomology(const Options& opt) {
  GcaContext ctx = GcaContext::compile(load_spec(opt.spec_path));
  int L = ctx.L_dim();
  DiffOp diff = [&ctx](const Multivector& a) { return ctx.dbar(a); };
  if (opt.has_deform) {
    Multivector gamma = load_gamma(opt.gamma_path, L);
    Multivector res = maurer_cartan(ctx, gamma);
    if (!res.is_zero()) {
      emit(opt, Json{{"error", "deformation is not integrable"}},
           "deformation is not integrable: residual " + res.str(ctx.L_names()) + "\n");
      return kValidationFailure;
    }
    diff = [&ctx, gamma](const Multivector& a) { return deformed_dbar(ctx, gamma, a); };
  }
  CohomologyBasis h = cohomology(build_complex(L, diff));
  std::string text;
  std::vector<std::string> names = ctx.L_names();
  for (int k = 0; k <= L; ++k) {
    text += "H^" + std::to_string(k) + "  dim " + std::to_string(h.degrees[k].dim) + "\n";
    for (const auto& r : h.degrees[k].representatives) text += "  " + r.str(names) + "\n";
  }
  emit(opt, cohomology_to_json(h, names), text);
  return kOk;
}

int cmd_maurer_cartan(const Options& opt) {
  GcaContext ctx = GcaContext::compile(load_spec(opt.spec_path));
  Multivector gamma = load_gamma(opt.gamma_path, ctx.L_dim());
  Multivector res = maurer_cartan(ctx, gamma);
  emit(opt,
       Json{{"residual", multivector_to_json(res)}, {"integrable", res.is_zero()}},
       "residual: " + res.str(ctx.L_names()) + "\n" +
           (res.is_zero() ? "integrable\n" : "not integrable\n"));
  return res.is_zero() ? kOk : kNegativeVerdict;
}

int cmd_compatible(const Options& opt) {
  GcaContext ctx = GcaContext::compile(load_spec(opt.spec_path));
  int L = ctx.L_dim();
  CompatiblePairReport rep =
      check_compatible_pair(ctx, load_gamma(opt.gamma_path, L), load_phi(opt.phi_path, L));
  std::string text = rep.verdict() ? "compatible pair\n" : "not a compatible pair\n";
  if (!rep.gamma_closed) text += "  dbar(gamma) != 0\n";
  auto add = [&](const char* tag, const auto& rs) {
    for (const auto& [label, r] : rs)
      text += std::string("  ") + tag + " residual at " + label + ": " +
              r.str(ctx.L_names()) + "\n";
  };
  add("intertwine", rep.eq1_residuals);
  add("bracket-endo", rep.eq2_residuals);
  add("wedge-endo", rep.eq3_residuals);
  emit(opt, compatible_report_to_json(rep, ctx.L_names()), text);
  return rep.verdict() ? kOk : kNegativeVerdict;
}

int cmd_series(const Options& opt) {
  GcaContext ctx = GcaContext::compile(load_spec(opt.spec_path));
  int L = ctx.L_dim();
  SeriesReport rep = integrability_series(ctx, load_gamma(opt.gamma_path, L),
                                          load_phi(opt.phi_path, L), opt.order);
  std::string text = "order " + std::to_string(rep.order) +
                     (rep.passed() ? ": all identities hold\n" : ": failures\n");
  for (const auto& f : rep.failures) text += "  " + f + "\n";
  emit(opt, series_report_to_json(rep), text);
  return rep.passed() ? kOk : kNegativeVerdict;
}

int cmd_semidirect(const Options& opt) {
  SymplecticConnectionData data = connection_from_json(load_json_file(opt.connection_path));
  SemidirectPackage pkg = build_semidirect(data);
  Json j;
  j["h_spec"] = spec_to_json(pkg.h_spec);
  j["omega1"] = multivector_to_json(pkg.omega1);
  j["omega2"] = multivector_to_json(pkg.omega2);
  j["omega3"] = multivector_to_json(pkg.omega3);
  j["omega_c"] = multivector_to_json(pkg.omega_c);
  if (pkg.omega4) j["omega4"] = multivector_to_json(*pkg.omega4);
  j["lambda"] = multivector_to_json(pkg.lambda);
  j["context"] = context_dump(pkg.ctx);
  std::string text = "h: dim " + std::to_string(pkg.h_spec.dim) + "\n";
  for (const auto& [key, val] : pkg.h_spec.brackets)
    text += "  [" + pkg.h_spec.basis[key.first] + ", " + pkg.h_spec.basis[key.second] +
            "] = " + val.str(pkg.h_spec.basis) + "\n";
  text += "Lambda = " + pkg.lambda.str(pkg.ctx.L_names()) + "\n";
  emit(opt, j, text);
  return kOk;
}

int cmd_pipeline(const Options& opt) {
  SymplecticConnectionData data = connection_from_json(load_json_file(opt.connection_path));
  PipelineReport rep = weak_mirror_pipeline(data);
  std::string text;
  for (const auto& s : rep.stages)
    text += (s.passed ? "[pass] " : "[halt] ") + s.name + ": " + s.detail + "\n";
  text += rep.isomorphic ? "verdict: isomorphic\n" : "verdict: not established\n";
  if (rep.diagnostic && rep.diagnostic->obstruction)
    text += "certified obstruction: derived-center closedness differs\n";
  emit(opt, pipeline_report_to_json(rep), text);
  return rep.isomorphic ? kOk : kNegativeVerdict;
}

int cmd_fixture(const Options& opt) {
  FixtureReport rep = run_fixture(opt.fixture_name);
  std::string text = rep.fixture + (rep.passed() ? ": pass\n" : ": fail\n");
  for (const auto& c : rep.checks) {
    text += std::string(c.passed ? "  [ok]   " : "  [FAIL] ") + c.name + " [" + c.tag + "]";
    if (!c.detail.empty()) text += " -- " + c.detail;
    text += "\n";
  }
  emit(opt, fixture_report_to_json(rep), text);
  return rep.passed() ? kOk : kNegativeVerdict;
}

int cmd_diagnose(const Options& opt) {
  GcaContext a = GcaContext::compile(load_spec(opt.spec_path));
  GcaContext b = GcaContext::compile(load_spec(opt.spec_b_path));
  QuasiIsoDiagnostic d = derived_center_diagnostic(gca_degree1(a), gca_degree1(b));
  std::string text =
      d.obstruction
          ? "certified obstruction: the derived-center closedness verdicts differ\n"
          : "inconclusive: no derived-center obstruction found\n";
  emit(opt, diagnostic_to_json(d), text);
  return d.obstruction ? kNegativeVerdict : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact differential Gerstenhaber algebra engine"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");

  auto* validate_cmd = app.add_subcommand("validate", "validate an algebra spec");
  validate_cmd->add_option("spec", opt.spec_path)->required();

  auto* coh = app.add_subcommand("cohomology", "dbar cohomology of the DGA");
  coh->add_option("spec", opt.spec_path)->required();
  coh->add_option("--deform", opt.gamma_path, "degree-2 deformation file");

  auto* mc = app.add_subcommand("maurer-cartan", "Maurer-Cartan residual");
  mc->add_option("spec", opt.spec_path)->required();
  mc->add_option("gamma", opt.gamma_path)->required();

  auto* comp = app.add_subcommand("compatible", "compatible-pair check");
  comp->add_option("spec", opt.spec_path)->required();
  comp->add_option("gamma", opt.gamma_path)->required();
  comp->add_option("phi", opt.phi_path)->required();

  auto* ser = app.add_subcommand("series", "integrability series identities");
  ser->add_option("spec", opt.spec_path)->required();
  ser->add_option("gamma", opt.gamma_path)->required();
  ser->add_option("phi", opt.phi_path)->required();
  ser->add_option("--order", opt.order, "highest order checked")->default_val(4);

  auto* semi = app.add_subcommand("semidirect", "build the semidirect package");
  semi->add_option("connection", opt.connection_path)->required();

  auto* pipe = app.add_subcommand("pipeline", "weak mirror pipeline");
  pipe->add_option("connection", opt.connection_path)->required();

  auto* fix = app.add_subcommand("fixture", "run a built-in example fixture");
  fix->add_option("name", opt.fixture_name)->required();

  auto* diag = app.add_subcommand("diagnose-quasi", "derived-center diagnostic");
  diag->add_option("specA", opt.spec_path)->required();
  diag->add_option("specB", opt.spec_b_path)->required();

  CLI11_PARSE(app, argc, argv);
  opt.has_deform = coh->count("--deform") > 0;

  try {
    if (validate_cmd->parsed()) return cmd_validate(opt);
    if (coh->parsed()) return cmd_cohomology(opt);
    if (mc->parsed()) return cmd_maurer_cartan(opt);
    if (comp->parsed()) return cmd_compatible(opt);
    if (ser->parsed()) return cmd_series(opt);
    if (semi->parsed()) return cmd_semidirect(opt);
    if (pipe->parsed()) return cmd_pipeline(opt);
    if (fix->parsed()) return cmd_fixture(opt);
    if (diag->parsed()) return cmd_diagnose(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DgaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kOk;
}
