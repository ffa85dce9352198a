#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "dga/gca.hpp"

namespace dga {

/// A degree-2 deformation direction together with its derived data.
struct Deformation {
  Multivector gamma;        // degree 2, ambient 2n
  Multivector mc_residual;  // dbar(gamma) - [gamma, gamma]/2
  std::vector<Multivector> dbar_table;  // deformed dbar on the L generators

  bool integrable() const { return mc_residual.is_zero(); }
};

/// dbar(gamma) - [gamma, gamma]/2; zero iff the deformed structure is
/// integrable.
Multivector maurer_cartan(const GcaContext& ctx, const Multivector& gamma);

Deformation deform(const GcaContext& ctx, const Multivector& gamma);

/// dbar(a) - [gamma, a]. Meaningful as a square-zero differential only when
/// the Maurer-Cartan residual of gamma vanishes; callers probing
/// non-integrable candidates should inspect Deformation::integrable.
Multivector deformed_dbar(const GcaContext& ctx, const Multivector& gamma,
                          const Multivector& a);

struct CompatiblePairReport {
  bool gamma_closed = false;  // dbar(gamma1) = 0
  // Nonzero witnesses, labelled by the inputs that produced them.
  std::vector<std::pair<std::string, Multivector>> eq1_residuals;  // intertwine
  std::vector<std::pair<std::string, Multivector>> eq2_residuals;  // bracket endo
  std::vector<std::pair<std::string, Multivector>> eq3_residuals;  // wedge endo
  bool verdict() const {
    return gamma_closed && eq1_residuals.empty() && eq2_residuals.empty() &&
           eq3_residuals.empty();
  }
};

/// Checks the three compatible-pair identities
///   dbar(phi A) - phi(dbar A) = -[gamma1, A]
///   phi[A, B] = [phi A, B] + [A, phi B]
///   phi(A ^ B) = phi A ^ B + A ^ phi B
/// on generators and generator pairs; this spans all cases because every
/// identity is a derivation/bilinearity statement over a finite basis.
CompatiblePairReport check_compatible_pair(const GcaContext& ctx,
                                           const Multivector& gamma1,
                                           const Endomorphism& phi);

struct SeriesReport {
  int order = 0;
  int first_failing_order = 0;  // 0 = all orders passed
  std::vector<std::string> failures;
  bool residual_coefficientwise_zero = false;
  bool passed() const { return first_failing_order == 0 && residual_coefficientwise_zero; }
};

/// Verifies the recursive integrability identities of the exponentiated
/// pair for every n <= order:
///   dbar(phi^{n-1} G) = -1/2 sum_{k=1}^{n-1} C(n,k) [phi^{k-1} G, phi^{n-k-1} G]
///   phi^n [A,B] = sum_{k=0}^{n} C(n,k) [phi^k A, phi^{n-k} B]   (and for ^)
///   dbar(phi^n A) - phi^n(dbar A) = -sum_{k=1}^{n} C(n,k) [phi^{k-1} G, phi^{n-k} A]
/// and additionally expands Gamma(t) = sum (-1)^{n-1} t^n/n! phi^{n-1} G and
/// checks that the Maurer-Cartan residual vanishes per power of the formal
/// variable t up to t^order.
SeriesReport integrability_series(const GcaContext& ctx, const Multivector& gamma1,
                                  const Endomorphism& phi, int order = 4);

/// (Lambda, GammaHat, Omega): the components of a degree-2 element in
/// ^2 (1,0)-vectors, mixed, and ^2 (0,1)-covectors.
std::tuple<Multivector, Multivector, Multivector> type_decompose_gamma(
    const GcaContext& ctx, const Multivector& gamma1);

struct PoissonReport {
  Multivector dbar_residual;
  Multivector schouten_residual;
  bool holomorphic_poisson() const {
    return dbar_residual.is_zero() && schouten_residual.is_zero();
  }
};

/// lambda must lie in ^2 of the (1,0)-vector block.
PoissonReport holomorphic_poisson_check(const GcaContext& ctx, const Multivector& lambda);

/// Componentwise closedness of Z + w (vector part Z, covector part w) under
/// the lambda-deformed differential: returns ([lambda, Z], dbar Z + [lambda, w],
/// dbar w); the section is closed iff all three vanish.
std::tuple<Multivector, Multivector, Multivector> closedness_split(
    const GcaContext& ctx, const Multivector& lambda, const Multivector& section);

/// B-field transform X + alpha -> X + alpha + i_X(two_form); two_form must be
/// a d-closed 2-form on the underlying algebra.
Section b_field_transform(const GcaContext& ctx, const Multivector& two_form,
                          const Section& s);

}  // namespace dga
