#include <doctest.h>

#include "support.hpp"

using namespace dga;
using namespace dga::testing;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("abelian cohomology has binomial dimensions") {
  LieAlgebraSpec s;
  s.dim = 4;
  s.basis = {"a", "b", "c", "d"};
  Matrix j0(4, 4);
  j0[2][0] = j0[3][1] = 1;
  j0[0][2] = j0[1][3] = -1;
  s.J = j0;
  GcaContext ctx = GcaContext::compile(s);
  CohomologyBasis h =
      cohomology(build_complex(ctx.L_dim(), [&](const Multivector& a) { return ctx.dbar(a); }));
  for (int k = 0; k <= 4; ++k) CHECK(h.degrees[k].dim == binom(4, k));
}

TEST_CASE("cohomology representatives are closed, non-exact, independent") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    GcaContext ctx = GcaContext::compile(rand_spec(rng, 4));
    DiffOp d = [&](const Multivector& a) { return ctx.dbar(a); };
    CochainComplex cx = build_complex(ctx.L_dim(), d);
    CohomologyBasis h = cohomology(cx);
    long euler_c = 0, euler_h = 0;
    for (int k = 0; k <= ctx.L_dim(); ++k) {
      long s = k % 2 ? -1 : 1;
      euler_c += s * cx.dim(k);
      euler_h += s * h.degrees[k].dim;
      for (const auto& r : h.degrees[k].representatives) {
        CHECK(d(r).is_zero());
        if (k > 0) CHECK_FALSE(is_exact(cx, k, r));
      }
    }
    CHECK(euler_c == euler_h);
  }
}

TEST_CASE("induced map of the identity is a quasi-isomorphism") {
  Rng rng(73);
  GcaContext ctx = GcaContext::compile(rand_spec(rng, 4));
  DiffOp d = [&](const Multivector& a) { return ctx.dbar(a); };
  CochainComplex cx = build_complex(ctx.L_dim(), d);
  InducedMapReport rep = induced_map(cx, cx, [](const Multivector& a) { return a; });
  CHECK(rep.chain_map);
  CHECK(rep.quasi_isomorphism);
}

TEST_CASE("induced map rejects non-chain maps with a witness") {
  Rng rng(79);
  GcaContext src = GcaContext::compile(rand_spec(rng, 4));
  SemidirectPackage pkg = build_semidirect(fixture_data("solvable-ex2"));
  DiffOp ds = [&](const Multivector& a) { return src.dbar(a); };
  DiffOp dt = [&](const Multivector& a) { return pkg.ctx.dbar(a); };
  CochainComplex a = build_complex(4, ds), b = build_complex(4, dt);
  InducedMapReport rep = induced_map(a, b, [](const Multivector& x) { return x; });
  if (!rep.chain_map) CHECK_FALSE(rep.commutation_witness.empty());
}

TEST_CASE("maurer-cartan: zero and holomorphic Poisson deformations") {
  for (const auto& name : fixture_names()) {
    SemidirectPackage pkg = build_semidirect(fixture_data(name));
    CHECK(maurer_cartan(pkg.ctx, Multivector(pkg.ctx.L_dim())).is_zero());
    PoissonReport pr = holomorphic_poisson_check(pkg.ctx, pkg.lambda);
    CHECK(pr.holomorphic_poisson());
    CHECK(maurer_cartan(pkg.ctx, pkg.lambda).is_zero());
    Deformation def = deform(pkg.ctx, pkg.lambda);
    CHECK(def.integrable());
    // deformed differential squares to zero on every generator
    for (int a = 0; a < pkg.ctx.L_dim(); ++a) {
      Multivector da = deformed_dbar(pkg.ctx, pkg.lambda,
                                     Multivector::basis(pkg.ctx.L_dim(), a));
      CHECK(deformed_dbar(pkg.ctx, pkg.lambda, da).is_zero());
    }
  }
}

TEST_CASE("deformed dbar is a derivation of the wedge") {
  Rng rng(83);
  SemidirectPackage pkg = build_semidirect(fixture_data("kodaira-thurston"));
  int L = pkg.ctx.L_dim();
  for (int trial = 0; trial < 15; ++trial) {
    int p = (int)rand_int(rng, 1, 2);
    Multivector a = rand_multivector(rng, L, p), b = rand_multivector(rng, L, 2);
    GaussianRational sa(p % 2 ? -1 : 1);
    CHECK(deformed_dbar(pkg.ctx, pkg.lambda, wedge(a, b)) ==
          wedge(deformed_dbar(pkg.ctx, pkg.lambda, a), b) +
              sa * wedge(a, deformed_dbar(pkg.ctx, pkg.lambda, b)));
  }
}

TEST_CASE("type decomposition splits and reassembles") {
  Rng rng(89);
  SemidirectPackage pkg = build_semidirect(fixture_data("solvable-ex2"));
  int L = pkg.ctx.L_dim();
  for (int trial = 0; trial < 15; ++trial) {
    Multivector g = rand_multivector(rng, L, 2, 4);
    auto [lam, mixed, om] = type_decompose_gamma(pkg.ctx, g);
    CHECK(lam + mixed + om == g);
    for (const auto& [mask, c] : lam.terms())
      CHECK((mask & ~((Multivector::Mask(1) << pkg.ctx.n()) - 1)) == 0);
    for (const auto& [mask, c] : om.terms())
      CHECK((mask & ((Multivector::Mask(1) << pkg.ctx.n()) - 1)) == 0);
  }
}

TEST_CASE("closedness split matches the deformed differential") {
  Rng rng(97);
  SemidirectPackage pkg = build_semidirect(fixture_data("kodaira-thurston"));
  int L = pkg.ctx.L_dim();
  for (int trial = 0; trial < 15; ++trial) {
    Multivector s = rand_multivector(rng, L, 1);
    auto [a, b, c] = closedness_split(pkg.ctx, pkg.lambda, s);
    CHECK(a + b + c == deformed_dbar(pkg.ctx, pkg.lambda, s));
  }
}

TEST_CASE("compatible pair fails for a non-closed gamma") {
  SemidirectPackage pkg = build_semidirect(fixture_data("solvable-ex3"));
  int L = pkg.ctx.L_dim();
  // dbar z1 != 0 there, so gamma = z1 ^ z2 is not closed
  Multivector g(L);
  g.add_tuple(std::vector<int>{0, 1}, 1);
  if (!pkg.ctx.dbar(g).is_zero()) {
    CompatiblePairReport rep =
        check_compatible_pair(pkg.ctx, g, Endomorphism::zero(L));
    CHECK_FALSE(rep.gamma_closed);
    CHECK_FALSE(rep.verdict());
  }
}

TEST_CASE("b-field transform preserves pairing and courant bracket") {
  Rng rng(101);
  for (const auto& name : fixture_names()) {
    SemidirectPackage pkg = build_semidirect(fixture_data(name));
    const GcaContext& ctx = pkg.ctx;
    int N = ctx.full_dim();
    CHECK(ce_differential(pkg.h_spec, pkg.omega1).is_zero());
    for (int trial = 0; trial < 10; ++trial) {
      Section a = ctx.to_section(rand_multivector(rng, N, 1));
      Section b = ctx.to_section(rand_multivector(rng, N, 1));
      Section ta = b_field_transform(ctx, pkg.omega1, a);
      Section tb = b_field_transform(ctx, pkg.omega1, b);
      CHECK(ctx.pairing(ta, tb) == ctx.pairing(a, b));
      CHECK(b_field_transform(ctx, pkg.omega1, ctx.courant(a, b)) ==
            ctx.courant(ta, tb));
    }
  }
}
