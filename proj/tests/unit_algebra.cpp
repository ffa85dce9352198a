#include <doctest.h>

#include "support.hpp"

using namespace dga;
using namespace dga::testing;

TEST_CASE("validate catches Jacobi and J failures") {
  LieAlgebraSpec bad;
  bad.dim = 3;
  bad.basis = {"a", "b", "c"};
  bad.set_bracket(0, 1, Multivector::basis(3, 2));
  bad.set_bracket(1, 2, Multivector::basis(3, 0));
  bad.set_bracket(0, 2, Multivector::basis(3, 0));
  ValidationReport rep = validate(bad);
  CHECK_FALSE(rep.jacobi_failures.empty());

  LieAlgebraSpec ab;
  ab.dim = 2;
  ab.basis = {"a", "b"};
  Matrix notj = Matrix::identity(2);
  ab.J = notj;
  CHECK_FALSE(validate(ab).j_square_ok);
}

TEST_CASE("random specs validate and survive basis transport") {
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = 2 * (int)rand_int(rng, 1, 3);
    LieAlgebraSpec s = rand_spec(rng, dim);
    CHECK(validate(s).valid());
    LieAlgebraSpec t = transform_spec(s, rand_gl(rng, dim));
    CHECK(validate(t).valid());
  }
}

namespace {

// Degree-1 CE formula computed directly from structure constants.
Multivector ce_oracle_deg1(const LieAlgebraSpec& s, const Multivector& theta) {
  Multivector out(s.dim);
  for (int i = 0; i < s.dim; ++i)
    for (int j = i + 1; j < s.dim; ++j) {
      GaussianRational v;
      Multivector br = s.bracket_basis(i, j);
      for (const auto& [mask, c] : br.terms()) v += c * theta.coeff(mask);
      Multivector mono(s.dim);
      mono.add_tuple(std::vector<int>{i, j}, -v);
      out += mono;
    }
  return out;
}

}  // namespace

TEST_CASE("chevalley-eilenberg differential: degree-1 oracle and d^2 = 0") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    LieAlgebraSpec s = rand_spec(rng, 4);
    Multivector theta = rand_multivector(rng, 4, 1);
    CHECK(ce_differential(s, theta) == ce_oracle_deg1(s, theta));
    for (int deg = 1; deg <= 2; ++deg) {
      Multivector a = rand_multivector(rng, 4, deg);
      CHECK(ce_differential(s, ce_differential(s, a)).is_zero());
    }
    Multivector a = rand_multivector(rng, 4, 1), b = rand_multivector(rng, 4, 1);
    CHECK(ce_differential(s, wedge(a, b)) ==
          wedge(ce_differential(s, a), b) - wedge(a, ce_differential(s, b)));
  }
}

TEST_CASE("complex splitting diagonalizes J") {
  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    LieAlgebraSpec s = rand_spec(rng, (int)(2 * rand_int(rng, 1, 3)));
    ComplexSplitting sp = split(s);
    REQUIRE(2 * sp.n == s.dim);
    GaussianRational i = GaussianRational::i();
    for (int k = 0; k < sp.n; ++k) {
      CHECK(s.apply_J(sp.holo[k]) == i * sp.holo[k]);
      CHECK(s.apply_J(sp.antiholo[k]) == (-i) * sp.antiholo[k]);
      CHECK(sp.holo[k].conj() == sp.antiholo[k]);
      CHECK(sp.holo_dual[k].conj() == sp.antiholo_dual[k]);
      // duality of the two bases
      for (int l = 0; l < sp.n; ++l) {
        GaussianRational zz, zzb;
        for (const auto& [m, c] : sp.holo_dual[k].terms()) {
          zz += c * sp.holo[l].coeff(m);
          zzb += c * sp.antiholo[l].coeff(m);
        }
        CHECK(zz == GaussianRational(k == l ? 1 : 0));
        CHECK(zzb.is_zero());
      }
    }
  }
}

TEST_CASE("sigma pairs each generator exactly with its dual") {
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    GcaContext ctx = GcaContext::compile(rand_spec(rng, (int)(2 * rand_int(rng, 1, 3))));
    int N = ctx.full_dim();
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        GaussianRational v =
            ctx.sigma(Multivector::basis(N, a), Multivector::basis(N, b));
        CHECK(v == GaussianRational(b == ctx.dual(a) ? 1 : 0));
      }
  }
}

TEST_CASE("courant bracket: pairing skew-invariance on closed sections") {
  Rng rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    GcaContext ctx = GcaContext::compile(rand_spec(rng, 4));
    int N = ctx.full_dim();
    // to_z / to_section round trip on generators
    for (int a = 0; a < N; ++a) {
      Multivector z = Multivector::basis(N, a);
      CHECK(ctx.to_z(ctx.to_section(z)) == z);
    }
    // antisymmetry of courant on invariant sections (vector parts commute
    // with exact terms that vanish invariantly is false in general; the
    // invariant bracket is antisymmetric up to d<a,b>, which is invariantly
    // the zero form only through the CE d of a constant -- i.e. exactly 0)
    Section a = ctx.to_section(rand_multivector(rng, N, 1));
    Section b = ctx.to_section(rand_multivector(rng, N, 1));
    Section sum = ctx.courant(a, b) + ctx.courant(b, a);
    CHECK(sum.vec.is_zero());
    CHECK(sum.form.is_zero());
  }
}

TEST_CASE("schouten bracket: graded antisymmetry, Leibniz, Jacobi") {
  Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    GcaContext ctx = GcaContext::compile(rand_spec(rng, (int)(2 * rand_int(rng, 1, 2))));
    int L = ctx.L_dim();
    int p = (int)rand_int(rng, 1, 2), q = (int)rand_int(rng, 1, 2),
        r = (int)rand_int(rng, 1, 2);
    Multivector a = rand_multivector(rng, L, p);
    Multivector b = rand_multivector(rng, L, q);
    Multivector c = rand_multivector(rng, L, r);
    auto sgn = [](int e) { return GaussianRational(e % 2 ? -1 : 1); };
    CHECK(ctx.schouten(a, b) == -(sgn((p - 1) * (q - 1)) * ctx.schouten(b, a)));
    CHECK(ctx.schouten(a, wedge(b, c)) ==
          wedge(ctx.schouten(a, b), c) + sgn((p - 1) * q) * wedge(b, ctx.schouten(a, c)));
    Multivector jac = ctx.schouten(a, ctx.schouten(b, c)) -
                      ctx.schouten(ctx.schouten(a, b), c) -
                      sgn((p - 1) * (q - 1)) * ctx.schouten(b, ctx.schouten(a, c));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("dbar squares to zero and derives both products") {
  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    GcaContext ctx = GcaContext::compile(rand_spec(rng, (int)(2 * rand_int(rng, 1, 2))));
    int L = ctx.L_dim();
    int p = (int)rand_int(rng, 1, 2);
    Multivector a = rand_multivector(rng, L, p);
    Multivector b = rand_multivector(rng, L, (int)rand_int(rng, 1, 2));
    CHECK(ctx.dbar(ctx.dbar(a)).is_zero());
    GaussianRational sa(p % 2 ? -1 : 1);
    CHECK(ctx.dbar(wedge(a, b)) == wedge(ctx.dbar(a), b) + sa * wedge(a, ctx.dbar(b)));
    // bialgebroid compatibility on multivectors of low degree
    GaussianRational sb((p - 1) % 2 ? -1 : 1);
    CHECK(ctx.dbar(ctx.schouten(a, b)) ==
          ctx.schouten(ctx.dbar(a), b) + sb * ctx.schouten(a, ctx.dbar(b)));
  }
}

TEST_CASE("endomorphism derivation extension and bivector round trip") {
  Rng rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    GcaContext ctx = GcaContext::compile(rand_spec(rng, 4));
    int L = ctx.L_dim();
    Matrix m(L, L);
    // a mixed endomorphism: (0,1)-covector block -> (1,0)-vector block
    for (int i = 0; i < ctx.n(); ++i)
      for (int j = ctx.n(); j < L; ++j) m[i][j] = rand_scalar(rng);
    Endomorphism phi(m);
    Multivector a = rand_multivector(rng, L, 1), b = rand_multivector(rng, L, 2);
    CHECK(phi.apply(wedge(a, b)) ==
          wedge(phi.apply(a), b) + wedge(a, phi.apply(b)));
    Endomorphism back = endo_from_bivector(ctx, phi.as_bivector(ctx));
    CHECK(back.m == phi.m);
  }
}
