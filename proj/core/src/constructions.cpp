#include "dga/constructions.hpp"

#include <array>

namespace dga {

namespace {

GaussianRational eval1(const Multivector& form, const Multivector& vec) {
  GaussianRational out;
  for (const auto& [m, c] : form.terms()) out += c * vec.coeff(m);
  return out;
}

GaussianRational eval2(const Multivector& form, const Multivector& x, const Multivector& y) {
  return eval1(contract(x, form), y);
}

Vec mat_col(const Matrix& m, int j) {
  Vec out(m.rows);
  for (int i = 0; i < m.rows; ++i) out[i] = m[i][j];
  return out;
}

Multivector from_vec(int ambient, const Vec& v, int offset = 0,
                     const GaussianRational& scale = GaussianRational(1)) {
  Multivector out(ambient);
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      out.add_term(Multivector::Mask(1) << (offset + static_cast<int>(i)), scale * v[i]);
  return out;
}

Vec deg1_coords(const Multivector& a) {
  Vec out(a.ambient());
  for (const auto& [m, c] : a.terms()) out[Multivector::mask_indices(m)[0]] = c;
  return out;
}

GaussianRational bilinear(const Matrix& b, const Vec& u, const Vec& v) {
  GaussianRational out;
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      if (!b[i][j].is_zero()) out += u[i] * b[i][j] * v[j];
  return out;
}

}  // namespace

bool SymplecticConnectionData::gamma_trivial() const {
  for (const auto& g : gamma)
    for (const auto& row : g.a)
      for (const auto& x : row)
        if (!x.is_zero()) return false;
  return true;
}

ConnectionReport validate_connection(const SymplecticConnectionData& data) {
  ConnectionReport rep;
  int m = data.g_spec.dim;
  if (static_cast<int>(data.gamma.size()) != m)
    throw DimensionError("need one connection matrix per basis vector");
  for (const auto& g : data.gamma)
    if (g.rows != m || g.cols != m) throw DimensionError("connection matrix shape mismatch");
  if (data.omega.ambient() != m || !data.omega.homogeneous_of(2))
    throw DimensionError("omega must be a 2-form on g");

  ValidationReport vr = validate(data.g_spec);
  for (const auto& j : vr.jacobi_failures)
    rep.violations.push_back("Jacobi fails at (" + std::to_string(j.i) + "," +
                             std::to_string(j.j) + "," + std::to_string(j.k) + ")");

  Matrix W(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      W[i][j] = eval2(data.omega, Multivector::basis(m, i), Multivector::basis(m, j));
  if (!inverse(W)) rep.violations.push_back("omega is degenerate");
  if (!ce_differential(data.g_spec, data.omega).is_zero())
    rep.violations.push_back("omega is not closed");

  auto omega_of = [&](const Vec& u, const Vec& v) { return bilinear(W, u, v); };

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Vec lhs = mat_col(data.gamma[a], b);
      Vec rhs = mat_col(data.gamma[b], a);
      Vec br = deg1_coords(data.g_spec.bracket_basis(a, b));
      bool ok = true;
      for (int i = 0; i < m; ++i) ok = ok && (lhs[i] - rhs[i] == br[i]);
      if (!ok)
        rep.violations.push_back("torsion at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
    }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        Vec eb(m), ec(m);
        eb[b] = GaussianRational(1);
        ec[c] = GaussianRational(1);
        GaussianRational r = omega_of(mat_col(data.gamma[a], b), ec) +
                             omega_of(eb, mat_col(data.gamma[a], c));
        if (!r.is_zero())
          rep.violations.push_back("connection not symplectic at (" + std::to_string(a) +
                                   "," + std::to_string(b) + "," + std::to_string(c) + ")");
      }

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Matrix lhs(m, m);
      Vec br = deg1_coords(data.g_spec.bracket_basis(a, b));
      for (int k = 0; k < m; ++k) {
        if (br[k].is_zero()) continue;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) lhs[i][j] += br[k] * data.gamma[k][i][j];
      }
      Matrix rhs = mul(data.gamma[a], data.gamma[b]);
      Matrix ba = mul(data.gamma[b], data.gamma[a]);
      bool ok = true;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) ok = ok && (rhs[i][j] - ba[i][j] == lhs[i][j]);
      if (!ok)
        rep.violations.push_back("connection not flat at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
    }

  if (data.metric) {
    const Matrix& g = *data.metric;
    if (g.rows != m || g.cols != m) throw DimensionError("metric shape mismatch");
    if (!(g == transpose(g))) rep.violations.push_back("metric is not symmetric");
    if (!inverse(g)) rep.violations.push_back("metric is degenerate");
  }
  return rep;
}

SemidirectPackage build_semidirect(const SymplecticConnectionData& data) {
  ConnectionReport rep = validate_connection(data);
  if (!rep.valid()) throw ValidationError("invalid connection data: " + rep.violations[0]);

  int m = data.g_spec.dim, d = 2 * m;
  LieAlgebraSpec h;
  h.dim = d;
  h.real = true;
  for (int i = 0; i < m; ++i)
    h.basis.push_back(i < static_cast<int>(data.g_spec.basis.size())
                          ? data.g_spec.basis[i]
                          : "e" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i) h.basis.push_back("v" + std::to_string(i + 1));

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Multivector br(d);
      Multivector gb = data.g_spec.bracket_basis(a, b);
      for (const auto& [mask, c] : gb.terms()) br.add_term(mask, c);
      if (!br.is_zero()) h.set_bracket(a, b, br);
    }
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < m; ++j) {
      Multivector br = from_vec(d, mat_col(data.gamma[a], j), m);
      if (!br.is_zero()) h.set_bracket(a, m + j, br);
    }

  Matrix J(d, d);
  for (int i = 0; i < m; ++i) {
    J[m + i][i] = GaussianRational(1);
    J[i][m + i] = GaussianRational(-1);
  }
  h.J = J;

  Matrix W(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      W[i][j] = eval2(data.omega, Multivector::basis(m, i), Multivector::basis(m, j));
  Matrix G = data.metric ? *data.metric : Matrix();

  // (x_p, u_p) decomposition of basis vector p of h
  auto xpart = [&](int p) {
    Vec v(m);
    if (p < m) v[p] = GaussianRational(1);
    return v;
  };
  auto upart = [&](int p) {
    Vec v(m);
    if (p >= m) v[p - m] = GaussianRational(1);
    return v;
  };

  Multivector o1(d), o2(d), o3(d), o4(d);
  std::optional<Matrix> delta;
  if (data.metric) delta = Matrix(d, d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      Vec xp = xpart(p), up = upart(p), yq = xpart(q), vq = upart(q);
      if (data.metric) {
        (*delta)[p][q] = bilinear(G, xp, yq) + bilinear(G, up, vq);
        if (p < q) {
          GaussianRational c4 = bilinear(G, xp, vq) - bilinear(G, yq, up);
          if (!c4.is_zero()) o4.add_tuple(std::array{p, q}, c4);
        }
      }
      if (p >= q) continue;
      GaussianRational c1 = -bilinear(W, xp, vq) - bilinear(W, up, yq);
      GaussianRational c2 = bilinear(W, xp, yq) - bilinear(W, up, vq);
      GaussianRational c3 = bilinear(W, xp, yq) + bilinear(W, up, vq);
      if (!c1.is_zero()) o1.add_tuple(std::array{p, q}, c1);
      if (!c2.is_zero()) o2.add_tuple(std::array{p, q}, c2);
      if (!c3.is_zero()) o3.add_tuple(std::array{p, q}, c3);
    }
  Multivector oc = o1 + GaussianRational::i() * o2;

  GcaContext ctx = GcaContext::compile(h);
  int n = ctx.n();

  // lambda: invert the contraction matrix of omega_c on (1,0)-vectors
  Matrix M(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      M[b][a] = eval2(oc, ctx.splitting().holo[a], ctx.splitting().holo[b]);
  auto N = inverse(M);
  if (!N) throw StructureError("omega_c is degenerate on (1,0)-vectors");
  Multivector lambda(2 * n);
  for (int c = 0; c < n; ++c)
    for (int e = c + 1; e < n; ++e)
      if (!(*N)[e][c].is_zero()) lambda.add_tuple(std::array{c, e}, (*N)[e][c]);

  std::optional<Matrix> jmath;
  if (data.metric) {
    Matrix wmap(m, m);  // column j = coordinates of omega(e_j, .)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) wmap[i][j] = W[j][i];
    jmath = mul(*inverse(G), wmap);
  }

  return SemidirectPackage{data,
                           std::move(h),
                           std::move(o1),
                           std::move(o2),
                           std::move(o3),
                           std::move(oc),
                           data.metric ? std::optional<Multivector>(o4) : std::nullopt,
                           std::move(delta),
                           std::move(jmath),
                           std::move(ctx),
                           std::move(lambda)};
}

PseudoKahlerReport pseudo_kahler_check(const SemidirectPackage& pkg) {
  if (!pkg.data.metric) throw DataError("pseudo-Kahler check requires a metric");
  int m = pkg.data.g_spec.dim;
  const Matrix& G = *pkg.data.metric;
  PseudoKahlerReport rep;
  rep.d_omega4 = ce_differential(pkg.h_spec, *pkg.omega4);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int w = 0; w < m; ++w) {
        Vec ex(m), ey(m), ew(m);
        ex[x] = GaussianRational(1);
        ey[y] = GaussianRational(1);
        ew[w] = GaussianRational(1);
        GaussianRational r =
            bilinear(G, mat_col(pkg.data.gamma[x], y), ew) -
            bilinear(G, mat_col(pkg.data.gamma[y], x), ew) -
            bilinear(G, ex, mat_col(pkg.data.gamma[y], w)) +
            bilinear(G, ey, mat_col(pkg.data.gamma[x], w));
        if (!r.is_zero())
          rep.criterion_violations.push_back("(" + std::to_string(x) + "," +
                                             std::to_string(y) + "," + std::to_string(w) +
                                             ")");
      }
  return rep;
}

namespace {

/// Endomorphism sending zb^a to -sum_b N[b][a] z_b, zero on the z-block,
/// where N inverts the (1,0) x (0,1) contraction matrix of the given form.
Endomorphism invert_11_form(const GcaContext& ctx, const Multivector& form) {
  int n = ctx.n();
  Matrix M(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      M[b][a] = eval2(form, ctx.splitting().holo[a], ctx.splitting().antiholo[b]);
  auto N = inverse(M);
  if (!N) throw StructureError("(1,1)-form is degenerate");
  Endomorphism out = Endomorphism::zero(2 * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.m[b][n + a] = -(*N)[b][a];
  return out;
}

}  // namespace

std::optional<MuResult> mu_constraint_solve(const SemidirectPackage& pkg) {
  int n = pkg.ctx.n();
  if (pkg.data.gamma_trivial())
    return MuResult{GaussianRational(0), Endomorphism::zero(2 * n), true};
  if (!pkg.jmath) throw DataError("mu constraint requires a metric");
  int m = pkg.data.g_spec.dim;
  const Matrix& jm = *pkg.jmath;

  std::optional<GaussianRational> mu;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Vec eb(m);
      eb[b] = GaussianRational(1);
      Vec lhs = mul(jm, mat_col(pkg.data.gamma[a], b));
      // gamma(j a)(j b)
      Vec ja = mat_col(jm, a), jb = mul(jm, eb);
      Vec rhs(m);
      for (int k = 0; k < m; ++k) {
        if (ja[k].is_zero()) continue;
        Vec t = mul(pkg.data.gamma[k], jb);
        for (int i = 0; i < m; ++i) rhs[i] += ja[k] * t[i];
      }
      for (int i = 0; i < m; ++i) {
        if (rhs[i].is_zero()) {
          if (!lhs[i].is_zero()) return std::nullopt;
          continue;
        }
        GaussianRational cand = -(lhs[i] / (GaussianRational(4) * rhs[i]));
        if (mu && !(*mu == cand)) return std::nullopt;
        mu = cand;
      }
    }
  if (!mu) mu = GaussianRational(0);
  if (!mu->is_real()) return std::nullopt;

  Endomorphism e3 = invert_11_form(pkg.ctx, pkg.omega3);
  Endomorphism e4 = invert_11_form(pkg.ctx, *pkg.omega4);
  GaussianRational quarter_i(Rational(0), Rational(-1, 4));
  Endomorphism phi = quarter_i * e3 + *mu * e4;
  return MuResult{*mu, std::move(phi), false};
}

Lemma55Report lemma55_check(const SemidirectPackage& pkg) {
  if (!pkg.data.metric) throw DataError("lemma 5.5 identities require a metric");
  Lemma55Report rep;
  int m = pkg.data.g_spec.dim, d = 2 * m;
  const Matrix& jm = *pkg.jmath;
  GaussianRational i = GaussianRational::i();

  // (w, -iw) and (w, iw) for a coordinate vector w over g
  auto v10 = [&](const Vec& w) {
    return from_vec(d, w) + (-i) * from_vec(d, w, m);
  };
  auto v01 = [&](const Vec& w) { return from_vec(d, w) + i * from_vec(d, w, m); };
  auto unit = [&](int a) {
    Vec v(m);
    v[a] = GaussianRational(1);
    return v;
  };

  for (int a = 0; a < m; ++a) {
    Vec ja = mat_col(jm, a);
    for (int k = 0; k < m; ++k) {
      Multivector t01 = v01(unit(k)), t10 = v10(unit(k));
      GaussianRational r1 = eval2(pkg.omega3, v10(unit(a)), t01) +
                            i * eval2(*pkg.omega4, v10(ja), t01);
      if (!r1.is_zero())
        rep.violations.push_back("identity 1 at (" + std::to_string(a) + "," +
                                 std::to_string(k) + ")");
      GaussianRational r2 = eval2(pkg.omega3, v01(unit(a)), t10) -
                            i * eval2(*pkg.omega4, v01(ja), t10);
      if (!r2.is_zero())
        rep.violations.push_back("identity 2 at (" + std::to_string(a) + "," +
                                 std::to_string(k) + ")");
      GaussianRational r3 = eval2(pkg.omega_c, v10(unit(a)), t10) +
                            GaussianRational(2) * eval2(*pkg.omega4, v01(ja), t10);
      if (!r3.is_zero())
        rep.violations.push_back("identity 3 at (" + std::to_string(a) + "," +
                                 std::to_string(k) + ")");
    }
    for (int b = 0; b < m; ++b) {
      Multivector br = pkg.h_spec.bracket(v10(unit(a)), v01(unit(b)));
      GaussianRational half(1, 2);
      Multivector p10 = half * (br - i * pkg.h_spec.apply_J(br));
      Multivector p01 = half * (br + i * pkg.h_spec.apply_J(br));
      Vec gba = mat_col(pkg.data.gamma[b], a);
      Vec gab = mat_col(pkg.data.gamma[a], b);
      Multivector want10 = GaussianRational(-1) * v10(gba);
      Multivector want01 = v01(gab);
      if (!(p10 == want10))
        rep.violations.push_back("identity 4 at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
      if (!(p01 == want01))
        rep.violations.push_back("identity 5 at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
    }
  }
  return rep;
}

std::vector<Multivector> deformed_graph_basis(const GcaContext& ctx,
                                              const Multivector& lambda) {
  int n = ctx.n(), N = ctx.full_dim();
  Multivector lambda_bar(N);
  for (const auto& [mask, c] : lambda.terms()) {
    auto idx = Multivector::mask_indices(mask);
    if (idx.size() != 2 || idx[1] >= n)
      throw DataError("lambda must lie in the z-block");
    lambda_bar.add_tuple(std::array{3 * n + idx[0], 3 * n + idx[1]}, c.conj());
  }
  std::function<GaussianRational(int, int)> sp = [&ctx](int i, int j) {
    return GaussianRational(ctx.dual(i) == j ? 1 : 0);
  };
  std::vector<Multivector> out;
  for (int i = 0; i < n; ++i) out.push_back(Multivector::basis(N, i));
  for (int a = 0; a < n; ++a)
    out.push_back(Multivector::basis(N, n + a) +
                  contract(Multivector::basis(N, n + a), lambda_bar, &sp));
  return out;
}

bool graph_matches(const SemidirectPackage& pkg) {
  const GcaContext& ctx = pkg.ctx;
  int d = pkg.h_spec.dim, N = ctx.full_dim();
  std::vector<Vec> span;
  for (const Multivector& g : deformed_graph_basis(ctx, pkg.lambda)) {
    Vec v(N);
    for (const auto& [mask, c] : g.terms()) v[Multivector::mask_indices(mask)[0]] = c;
    span.push_back(std::move(v));
  }
  GaussianRational mi(Rational(0), Rational(-1));
  for (int p = 0; p < d; ++p) {
    Multivector V = Multivector::basis(d, p);
    Section s{V, mi * contract(V, pkg.omega2)};
    Section t = b_field_transform(ctx, pkg.omega1, s);
    Multivector z = ctx.to_z(t);
    Vec v(N);
    for (const auto& [mask, c] : z.terms()) v[Multivector::mask_indices(mask)[0]] = c;
    if (!in_span(span, v)) return false;
  }
  return true;
}

PipelineReport weak_mirror_pipeline(const SymplecticConnectionData& data) {
  PipelineReport rep;
  auto stage = [&rep](const std::string& name, bool ok, std::string detail) {
    rep.stages.push_back({name, ok, std::move(detail)});
    return ok;
  };

  ConnectionReport cr = validate_connection(data);
  if (!stage("validate-connection", cr.valid(),
             cr.valid() ? "torsion-free, symplectic, flat"
                        : cr.violations.front()))
    return rep;

  SemidirectPackage pkg = build_semidirect(data);
  stage("build-semidirect", true,
        "dim " + std::to_string(pkg.h_spec.dim) + " algebra with integrable J");

  if (!data.metric) {
    stage("pseudo-kahler", false, "no metric supplied");
    return rep;
  }
  PseudoKahlerReport pk = pseudo_kahler_check(pkg);
  if (!pk.paths_agree()) throw ConsistencyError("pseudo-Kahler code paths disagree");
  if (!stage("pseudo-kahler", pk.kahler(),
             pk.kahler() ? "d Omega4 = 0"
                         : "d Omega4 = " + pk.d_omega4.str(pkg.h_spec.basis))) {
    rep.diagnostic = derived_center_diagnostic(
        gca_degree1(pkg.ctx), symplectic_dga(pkg.h_spec, pkg.omega2).degree1());
    return rep;
  }

  auto mu = mu_constraint_solve(pkg);
  if (!stage("mu-solve", mu.has_value(),
             mu ? (mu->central_case ? "central case, phi = 0"
                                    : "mu = " + mu->mu.str())
                : "no consistent mu"))
    return rep;

  CompatiblePairReport cp = check_compatible_pair(pkg.ctx, pkg.lambda, mu->phi);
  if (!stage("compatible-pair", cp.verdict(),
             cp.verdict() ? "all three identities hold" : "identity residual nonzero"))
    return rep;

  int L = pkg.ctx.L_dim();
  const GcaContext& ctx = pkg.ctx;
  Multivector lambda = pkg.lambda;
  CochainComplex src = build_complex(
      L, [&ctx, &lambda](const Multivector& a) { return deformed_dbar(ctx, lambda, a); });
  CochainComplex tgt =
      build_complex(L, [&ctx](const Multivector& a) { return ctx.dbar(a); });
  std::vector<Multivector> images;
  for (int j = 0; j < L; ++j)
    images.push_back(Multivector::basis(L, j) + mu->phi.apply(Multivector::basis(L, j)));
  InducedMapReport ind = induced_map(src, tgt, [&images, L](const Multivector& a) {
    return apply_linear(a, images, L);
  });
  if (!stage("cohomology-isomorphism", ind.quasi_isomorphism,
             ind.chain_map ? (ind.quasi_isomorphism ? "1 + phi induces isomorphisms"
                                                    : "induced map not invertible")
                           : "1 + phi is not a chain map"))
    return rep;

  bool graph = graph_matches(pkg);
  QuasiIsoDiagnostic diag = derived_center_diagnostic(
      gca_degree1(pkg.ctx), symplectic_dga(pkg.h_spec, pkg.omega2).degree1());
  rep.diagnostic = diag;
  if (!stage("symplectic-comparison", graph && !diag.obstruction,
             graph ? "B-field graph matches the deformed eigenspace"
                   : "B-field graph mismatch"))
    return rep;

  rep.isomorphic = true;
  return rep;
}

}  // namespace dga
