#include "dga/gca.hpp"

#include <array>

namespace dga {

namespace {

Multivector monomial(int ambient, Multivector::Mask m) {
  Multivector out(ambient);
  out.add_term(m, GaussianRational(1));
  return out;
}

GaussianRational eval_form(const Multivector& form, const Multivector& vec) {
  GaussianRational out;
  for (const auto& [m, c] : form.terms())
    out += c * vec.coeff(m);
  return out;
}

}  // namespace

Section GcaContext::courant(const Section& a, const Section& b) const {
  Multivector v = spec_.bracket(a.vec, b.vec);
  Multivector f = contract(a.vec, ce_differential(spec_, b.form)) -
                  contract(b.vec, ce_differential(spec_, a.form));
  return {std::move(v), std::move(f)};
}

GaussianRational GcaContext::pairing(const Section& a, const Section& b) const {
  GaussianRational half(1, 2);
  return half * (eval_form(b.form, a.vec) + eval_form(a.form, b.vec));
}

Multivector GcaContext::to_z(const Section& s) const {
  int d = spec_.dim;
  Vec v(2 * d);
  for (const auto& [m, c] : s.vec.terms()) v[Multivector::mask_indices(m)[0]] = c;
  for (const auto& [m, c] : s.form.terms()) v[d + Multivector::mask_indices(m)[0]] = c;
  Vec coords = mul(to_z_matrix_, v);
  Multivector out(4 * n_);
  for (int a = 0; a < 4 * n_; ++a)
    if (!coords[a].is_zero()) out.add_term(Multivector::Mask(1) << a, coords[a]);
  return out;
}

Section GcaContext::to_section(const Multivector& z) const {
  if (!z.homogeneous_of(1)) throw DegreeError("to_section expects a degree-1 element");
  Section out{Multivector(spec_.dim), Multivector(spec_.dim)};
  for (const auto& [m, c] : z.terms()) {
    const Section& g = gens_[Multivector::mask_indices(m)[0]];
    out = out + c * g;
  }
  return out;
}

GcaContext GcaContext::compile(const LieAlgebraSpec& spec) {
  ValidationReport rep = validate(spec);
  if (!rep.jacobi_failures.empty()) throw StructureError("Jacobi identity fails");
  if (!spec.J) throw StructureError("compile requires a complex structure");
  if (!rep.j_square_ok) throw StructureError("J^2 != -1");
  if (!rep.nijenhuis_failures.empty()) throw StructureError("J is not integrable");

  GcaContext ctx;
  ctx.spec_ = spec;
  ctx.sp_ = split(spec);
  ctx.n_ = ctx.sp_.n;
  int n = ctx.n_, d = spec.dim, N = 4 * n;

  for (int i = 1; i <= n; ++i) ctx.names_.push_back("z_" + std::to_string(i));
  for (int i = 1; i <= n; ++i) ctx.names_.push_back("zb^" + std::to_string(i));
  for (int i = 1; i <= n; ++i) ctx.names_.push_back("z^" + std::to_string(i));
  for (int i = 1; i <= n; ++i) ctx.names_.push_back("zb_" + std::to_string(i));

  Multivector zero_d(d);
  for (int i = 0; i < n; ++i) ctx.gens_.emplace_back(ctx.sp_.holo[i], zero_d);
  for (int i = 0; i < n; ++i) ctx.gens_.emplace_back(zero_d, ctx.sp_.antiholo_dual[i]);
  for (int i = 0; i < n; ++i) ctx.gens_.emplace_back(zero_d, ctx.sp_.holo_dual[i]);
  for (int i = 0; i < n; ++i) ctx.gens_.emplace_back(ctx.sp_.antiholo[i], zero_d);

  // sigma(gen_a)(gen_b) must be exactly the dual-slot indicator; this pins
  // the generator layout against the section data.
  GaussianRational two(2);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      GaussianRational s = two * ctx.pairing(ctx.gens_[a], ctx.gens_[b]);
      if (!(s == GaussianRational(b == ctx.dual(a) ? 1 : 0)))
        throw ConsistencyError("generator duality table is inconsistent");
    }

  Matrix G(2 * d, N);
  for (int a = 0; a < N; ++a) {
    for (const auto& [m, c] : ctx.gens_[a].vec.terms())
      G[Multivector::mask_indices(m)[0]][a] = c;
    for (const auto& [m, c] : ctx.gens_[a].form.terms())
      G[d + Multivector::mask_indices(m)[0]][a] = c;
  }
  auto Ginv = inverse(G);
  if (!Ginv) throw ConsistencyError("generator coordinate matrix is singular");
  ctx.to_z_matrix_ = *Ginv;

  ctx.bracket_full_.assign(N, std::vector<Multivector>(N, Multivector(N)));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      ctx.bracket_full_[a][b] = ctx.to_z(ctx.courant(ctx.gens_[a], ctx.gens_[b]));

  int L = 2 * n;
  ctx.bracket_L_.assign(L * L, Multivector(L));
  for (int a = 0; a < L; ++a)
    for (int b = 0; b < L; ++b)
      ctx.bracket_L_[a * L + b] = ctx.restrict_L(ctx.bracket_full_[a][b]);

  for (int l = 0; l < L; ++l) {
    Multivector dl(L);
    for (int a = 0; a < L; ++a)
      for (int b = a + 1; b < L; ++b) {
        GaussianRational c =
            -ctx.bracket_full_[ctx.dual(a)][ctx.dual(b)].coeff(
                Multivector::Mask(1) << ctx.dual(l));
        if (!c.is_zero()) dl.add_tuple(std::array{a, b}, c);
      }
    ctx.dbar_gen_.push_back(std::move(dl));
  }

  for (int l = 0; l < L; ++l)
    if (!ctx.dbar(ctx.dbar_gen_[l]).is_zero())
      throw ConsistencyError("dbar does not square to zero");
  for (int a = 0; a < L; ++a)
    for (int b = a + 1; b < L; ++b) {
      // dbar[a,b] = [dbar a, b] + (-1)^{|a|-1} [a, dbar b]; |a| = 1 here.
      Multivector lhs = ctx.dbar(ctx.bracket_L_[a * L + b]);
      Multivector rhs = ctx.schouten(ctx.dbar_gen_[a], Multivector::basis(L, b)) +
                        ctx.schouten(Multivector::basis(L, a), ctx.dbar_gen_[b]);
      if (!(lhs == rhs)) throw ConsistencyError("bialgebroid compatibility fails");
    }
  return ctx;
}

Multivector GcaContext::schouten_terms(Multivector::Mask a, Multivector::Mask b) const {
  int L = 2 * n_;
  int da = Multivector::popcount(a), db = Multivector::popcount(b);
  if (da == 0 || db == 0) return Multivector(L);
  if (da == 1 && db == 1) {
    int i = Multivector::mask_indices(a)[0], j = Multivector::mask_indices(b)[0];
    return bracket_L_[i * L + j];
  }
  if (da == 1) {
    // [A, y ^ B'] = [A, y] ^ B' + y ^ [A, B']
    int y = Multivector::mask_indices(b)[0];
    Multivector::Mask rest = b & (b - 1);
    return wedge(schouten_terms(a, Multivector::Mask(1) << y), monomial(L, rest)) +
           wedge(monomial(L, Multivector::Mask(1) << y), schouten_terms(a, rest));
  }
  // [x ^ A', B] = (-1)^{(|A|-1)(|B|-1)} [x, B] ^ A' + x ^ [A', B]
  int x = Multivector::mask_indices(a)[0];
  Multivector::Mask rest = a & (a - 1);
  Multivector first =
      wedge(schouten_terms(Multivector::Mask(1) << x, b), monomial(L, rest));
  if (((da - 1) * (db - 1)) % 2) first = -first;
  return first + wedge(monomial(L, Multivector::Mask(1) << x), schouten_terms(rest, b));
}

Multivector GcaContext::schouten(const Multivector& a, const Multivector& b) const {
  int L = 2 * n_;
  if (a.ambient() != L || b.ambient() != L)
    throw DimensionError("schouten expects elements of the algebroid exterior algebra");
  Multivector out(L);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out += (ca * cb) * schouten_terms(ma, mb);
  return out;
}

Multivector GcaContext::bracket_full(const Multivector& a, const Multivector& b) const {
  int N = 4 * n_;
  if (!a.homogeneous_of(1) || !b.homogeneous_of(1))
    throw DegreeError("bracket_full expects degree-1 sections");
  Multivector out(N);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out += (ca * cb) *
             bracket_full_[Multivector::mask_indices(ma)[0]][Multivector::mask_indices(mb)[0]];
  return out;
}

Multivector GcaContext::dbar(const Multivector& a) const {
  if (a.ambient() != 2 * n_)
    throw DimensionError("dbar expects elements of the algebroid exterior algebra");
  return apply_derivation(a, dbar_gen_, 2 * n_, /*odd=*/true);
}

GaussianRational GcaContext::sigma(const Multivector& u, const Multivector& v) const {
  GaussianRational out;
  for (const auto& [m, c] : u.terms()) {
    int a = Multivector::mask_indices(m)[0];
    out += c * v.coeff(Multivector::Mask(1) << dual(a));
  }
  return out;
}

Multivector GcaContext::contract_sigma(const Multivector& x, const Multivector& a) const {
  std::function<GaussianRational(int, int)> p = [this](int i, int j) {
    return GaussianRational(dual(i) == j ? 1 : 0);
  };
  return contract(x, a, &p);
}

GaussianRational GcaContext::eval_on(const Multivector& a,
                                     std::span<const int> gen_indices) const {
  std::vector<int> duals;
  for (int g : gen_indices) {
    int dg = dual(g);
    if (dg >= 2 * n_) return GaussianRational();
    duals.push_back(dg);
  }
  return a.coeff_tuple(duals);
}

Multivector GcaContext::lift(const Multivector& a) const {
  Multivector out(4 * n_);
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  return out;
}

Multivector GcaContext::restrict_L(const Multivector& a) const {
  Multivector out(2 * n_);
  for (const auto& [m, c] : a.terms()) {
    if (m >> (2 * n_))
      throw ConsistencyError("element does not lie in the algebroid subspace");
    out.add_term(m, c);
  }
  return out;
}

bool Endomorphism::is_zero() const {
  for (const auto& row : m.a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

Multivector Endomorphism::apply(const Multivector& a) const {
  int L = m.cols;
  if (a.ambient() != L) throw DimensionError("endomorphism ambient mismatch");
  std::vector<Multivector> images;
  for (int j = 0; j < L; ++j) {
    Multivector img(L);
    for (int i = 0; i < L; ++i)
      if (!m[i][j].is_zero()) img.add_term(Multivector::Mask(1) << i, m[i][j]);
    images.push_back(std::move(img));
  }
  return apply_derivation(a, images, L, /*odd=*/false);
}

Multivector Endomorphism::as_bivector(const GcaContext& ctx) const {
  int L = ctx.L_dim();
  Multivector out(ctx.full_dim());
  for (int q = 0; q < L; ++q)
    for (int p = 0; p < L; ++p)
      if (!m[p][q].is_zero()) out.add_tuple(std::array{p, ctx.dual(q)}, m[p][q]);
  return out;
}

EndoBlocks endo_decompose(const GcaContext& ctx, const Endomorphism& phi) {
  int n = ctx.n(), L = 2 * n;
  EndoBlocks out{Endomorphism::zero(L), Endomorphism::zero(L),
                 Endomorphism::zero(L), Endomorphism::zero(L)};
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      const GaussianRational& c = phi.m[i][j];
      if (c.is_zero()) continue;
      if (i < n && j < n) out.phi1.m[i][j] = c;
      else if (i >= n && j >= n) out.phi2.m[i][j] = c;
      else if (i >= n && j < n) out.phi3.m[i][j] = c;
      else out.phi4.m[i][j] = c;
    }
  return out;
}

Endomorphism endo_from_bivector(const GcaContext& ctx, const Multivector& b) {
  int L = ctx.L_dim();
  if (b.ambient() != ctx.full_dim())
    throw DimensionError("endo_from_bivector expects a full-space bivector");
  Endomorphism out = Endomorphism::zero(L);
  for (const auto& [m, c] : b.terms()) {
    auto idx = Multivector::mask_indices(m);
    if (idx.size() != 2) throw DegreeError("endo_from_bivector expects degree 2");
    int p = idx[0], q = idx[1];
    if (p >= L || q < L)
      throw DataError("bivector term does not define a map on the algebroid");
    out.m[p][ctx.dual(q)] += c;
  }
  return out;
}

}  // namespace dga
