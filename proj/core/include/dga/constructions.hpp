#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dga/cohomology.hpp"
#include "dga/deformation.hpp"
#include "dga/gca.hpp"

namespace dga {

/// A symplectic Lie algebra (g, omega) together with a flat torsion-free
/// symplectic connection gamma on its underlying vector space, and an
/// optional non-degenerate symmetric form g.
struct SymplecticConnectionData {
  LieAlgebraSpec g_spec;         // dimension m
  Multivector omega;             // 2-form, ambient m
  std::vector<Matrix> gamma;     // gamma[a] = action of e_a, m x m
  std::optional<Matrix> metric;  // symmetric m x m

  bool gamma_trivial() const;
};

struct ConnectionReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks torsion-freeness, symplecticity and flatness of the connection
/// over all basis tuples, plus the Jacobi identity of g and
/// closedness/non-degeneracy of omega (and symmetry of the metric).
ConnectionReport validate_connection(const SymplecticConnectionData& data);

/// The semidirect product h = g x| V with J(x,u) = (-u,x), its induced
/// forms, and the compiled generalized-complex context.
struct SemidirectPackage {
  SymplecticConnectionData data;
  LieAlgebraSpec h_spec;  // dimension 2m, with J
  Multivector omega1, omega2, omega3, omega_c;  // 2-forms on h
  std::optional<Multivector> omega4;            // (1,1) fundamental form
  std::optional<Matrix> delta;                  // 2m x 2m symmetric
  std::optional<Matrix> jmath;                  // g^{-1} omega on g
  GcaContext ctx;
  Multivector lambda;  // inverse of omega_c, in the z-block of L
};

SemidirectPackage build_semidirect(const SymplecticConnectionData& data);

struct PseudoKahlerReport {
  Multivector d_omega4;
  std::vector<std::string> criterion_violations;  // failing (x,y,w) triples
  bool kahler() const { return d_omega4.is_zero(); }
  /// The direct d-computation and the connection-level criterion are two
  /// independent code paths; they must always agree.
  bool paths_agree() const { return kahler() == criterion_violations.empty(); }
};

PseudoKahlerReport pseudo_kahler_check(const SemidirectPackage& pkg);

struct MuResult {
  GaussianRational mu;  // real
  Endomorphism phi;
  bool central_case = false;  // gamma == 0: (lambda, 0) is the pair
};

/// Solves j(gamma(a)b) = -4 mu gamma(j a)(j b) (j = g^{-1} omega) for a
/// single real mu over all basis pairs and assembles
/// phi = -(i/4) Omega3^{-1} + mu Omega4^{-1}. nullopt when the pairs demand
/// inconsistent values.
std::optional<MuResult> mu_constraint_solve(const SemidirectPackage& pkg);

struct Lemma55Report {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// The five pointwise identities relating Omega3, Omega4, Omega_c and the
/// bracket of conjugate (1,0)/(0,1) vectors through j.
Lemma55Report lemma55_check(const SemidirectPackage& pkg);

struct StageResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PipelineReport {
  std::vector<StageResult> stages;
  bool isomorphic = false;
  std::optional<QuasiIsoDiagnostic> diagnostic;  // populated when halted early
};

/// validate -> build -> pseudo-Kahler -> mu-solve -> compatible pair ->
/// cohomology isomorphism of 1 + phi -> symplectic comparison.
PipelineReport weak_mirror_pipeline(const SymplecticConnectionData& data);

/// Spanning set of the Lambda-deformed conjugate eigenspace: z_i and
/// zb^a + contraction of zb^a into conj(Lambda) (degree-1, ambient 4n).
std::vector<Multivector> deformed_graph_basis(const GcaContext& ctx,
                                              const Multivector& lambda);

/// Does e^{Omega1}(V - i Omega2(V)) land in the span above for every real
/// basis vector V?
bool graph_matches(const SemidirectPackage& pkg);

}  // namespace dga
