#include <doctest.h>

#include "dga/json_io.hpp"
#include "support.hpp"

using namespace dga;
using namespace dga::testing;

TEST_CASE("all embedded fixtures pass every check") {
  for (const auto& name : fixture_names()) {
    FixtureReport rep = run_fixture(name);
    for (const auto& c : rep.checks) {
      INFO(name, ": ", c.name, " [", c.tag, "] ", c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("validate_connection rejects broken inputs") {
  SymplecticConnectionData d = fixture_data("kodaira-thurston");
  SUBCASE("degenerate omega") {
    d.omega = Multivector(2);
    CHECK_FALSE(validate_connection(d).valid());
  }
  SUBCASE("torsion") {
    d.gamma[1][0][0] = 5;  // gamma(e2)e1 != gamma(e1)e2 on an abelian algebra
    CHECK_FALSE(validate_connection(d).valid());
  }
  SUBCASE("non-symplectic connection") {
    d.gamma[0] = Matrix::identity(2);
    CHECK_FALSE(validate_connection(d).valid());
  }
  SUBCASE("curvature") {
    d.gamma[0][0][0] = 1;
    d.gamma[1][1][1] = 1;
    d.gamma[1][0][1] = 1;  // torsion-free but [gamma(e1), gamma(e2)] != 0
    ConnectionReport rep = validate_connection(d);
    CHECK_FALSE(rep.valid());
  }
}

TEST_CASE("random transported connections keep every structural property") {
  Rng rng(103);
  for (int trial = 0; trial < 12; ++trial) {
    int dim = trial % 2 ? 4 : 2;
    SymplecticConnectionData d = rand_connection(rng, dim);
    CHECK(validate_connection(d).valid());
    SemidirectPackage pkg = build_semidirect(d);
    CHECK(validate(pkg.h_spec).valid());
    // Lemma 5.1: Lambda is holomorphic Poisson
    PoissonReport pr = holomorphic_poisson_check(pkg.ctx, pkg.lambda);
    CHECK(pr.holomorphic_poisson());
    // Lemma 5.4 criterion vs direct d Omega4
    PseudoKahlerReport pk = pseudo_kahler_check(pkg);
    CHECK(pk.paths_agree());
    // Lemma 5.5 identities
    CHECK(lemma55_check(pkg).ok());
  }
}

TEST_CASE("mu solve: central case and transported examples") {
  SymplecticConnectionData central = fixture_data("kodaira-thurston");
  for (auto& g : central.gamma) g = Matrix(2, 2);
  auto mu = mu_constraint_solve(build_semidirect(central));
  REQUIRE(mu.has_value());
  CHECK(mu->central_case);
  CHECK(mu->phi.is_zero());

  // mu is basis-independent: transport example 2 and re-solve
  Rng rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    SymplecticConnectionData d =
        transport_connection(fixture_data("solvable-ex2"), rand_gl(rng, 2));
    auto m = mu_constraint_solve(build_semidirect(d));
    REQUIRE(m.has_value());
    CHECK(m->mu == GaussianRational(-1, 4));
  }
}

TEST_CASE("pipeline verdicts are transport-invariant") {
  Rng rng(109);
  for (int trial = 0; trial < 3; ++trial) {
    Matrix p = rand_gl(rng, 2);
    PipelineReport ok = weak_mirror_pipeline(
        transport_connection(fixture_data("kodaira-thurston"), p));
    CHECK(ok.isomorphic);
    PipelineReport halt =
        weak_mirror_pipeline(transport_connection(fixture_data("solvable-ex3"), p));
    CHECK_FALSE(halt.isomorphic);
    REQUIRE(halt.diagnostic.has_value());
    CHECK(halt.diagnostic->obstruction);
  }
}

TEST_CASE("deformed graph basis spans the b-field transformed graph") {
  for (const auto& name : std::vector<std::string>{"kodaira-thurston", "solvable-ex2"}) {
    SemidirectPackage pkg = build_semidirect(fixture_data(name));
    CHECK(graph_matches(pkg));
    std::vector<Multivector> basis = deformed_graph_basis(pkg.ctx, pkg.lambda);
    CHECK((int)basis.size() == pkg.ctx.L_dim());
  }
}

TEST_CASE("json round trips") {
  Rng rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    GaussianRational c = rand_scalar(rng);
    CHECK(rational_from_json(rational_to_json(c)) == c);
    int ambient = (int)rand_int(rng, 2, 6);
    Multivector m = rand_multivector(rng, ambient, (int)rand_int(rng, 0, 3));
    CHECK(multivector_from_json(multivector_to_json(m), ambient) == m);
    Matrix mat((int)rand_int(rng, 1, 4), (int)rand_int(rng, 1, 4));
    for (auto& row : mat.a)
      for (auto& x : row) x = rand_scalar(rng);
    CHECK(matrix_from_json(matrix_to_json(mat)) == mat);
  }
  for (int trial = 0; trial < 10; ++trial) {
    LieAlgebraSpec s = rand_spec(rng, 4);
    LieAlgebraSpec t = spec_from_json(spec_to_json(s));
    CHECK(t.dim == s.dim);
    CHECK(t.basis == s.basis);
    CHECK(t.brackets == s.brackets);
    CHECK(t.J == s.J);
  }
}

TEST_CASE("json rational accepts all documented spellings") {
  CHECK(rational_from_json(Json(3)) == GaussianRational(3));
  CHECK(rational_from_json(Json("2/7")) == GaussianRational(2, 7));
  CHECK(rational_from_json(Json::array({3, 4})) == GaussianRational(3, 4));
  CHECK(rational_from_json(Json::array({1, 2, -1, 3})) ==
        GaussianRational(Rational(1, 2), Rational(-1, 3)));
  CHECK_THROWS_AS(rational_from_json(Json("zzz")), ParseError);
}

TEST_CASE("fixture snapshots are deterministic") {
  for (const auto& name : fixture_names()) {
    Json a = fixture_report_to_json(run_fixture(name));
    Json b = fixture_report_to_json(run_fixture(name));
    CHECK(a.dump() == b.dump());
  }
}
