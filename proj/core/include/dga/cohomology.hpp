#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dga/gca.hpp"

namespace dga {

using DiffOp = std::function<Multivector(const Multivector&)>;

/// A finite cochain complex over the monomial basis of the exterior algebra
/// on `ambient` degree-1 generators.
struct CochainComplex {
  int ambient = 0;
  std::vector<std::vector<Multivector::Mask>> basis;  // per degree 0..ambient
  std::vector<Matrix> d;  // d[k]: degree k -> k+1 (rows = dim_{k+1})

  int dim(int k) const { return static_cast<int>(basis[k].size()); }
  Vec coordinates(int k, const Multivector& a) const;
  Multivector element(int k, const Vec& coords) const;
};

/// Assembles the matrices of `diff` (must raise degree by one and square to
/// zero) over the canonical monomial basis.
CochainComplex build_complex(int ambient, const DiffOp& diff);

struct CohomologyDegree {
  int dim = 0;
  std::vector<Multivector> representatives;
};

struct CohomologyBasis {
  int ambient = 0;
  std::vector<CohomologyDegree> degrees;  // 0..ambient
};

CohomologyBasis cohomology(const CochainComplex& complex);

/// Is a closed degree-k element a coboundary?
bool is_exact(const CochainComplex& complex, int k, const Multivector& a);

struct InducedMapReport {
  bool chain_map = false;
  std::string commutation_witness;     // first basis monomial where F d != d F
  std::vector<Matrix> induced;         // per degree, target-basis coordinates
  std::vector<bool> invertible;        // per degree
  bool quasi_isomorphism = false;
};

/// Induced map of the algebra map F on cohomology. F must commute with the
/// differentials; the report carries a witness when it does not.
InducedMapReport induced_map(const CochainComplex& source, const CochainComplex& target,
                             const DiffOp& F);

/// Degree-1 slice of a DGA: enough structure for the derived-center
/// obstruction diagnostic.
struct DgaDegree1 {
  int dim = 0;
  std::vector<std::string> names;
  std::function<Multivector(int, int)> bracket;  // on basis pairs, degree-1 result
  DiffOp diff;                                   // on the exterior algebra
};

struct CenterReport {
  std::vector<Vec> derived_basis;  // derived subalgebra of the degree-1 bracket
  std::vector<Vec> center_basis;   // its center
  bool center_closed = true;       // differential kills every center element
  bool conclusive = false;         // false when the center is trivial
};

CenterReport derived_center(const DgaDegree1& dga);

struct QuasiIsoDiagnostic {
  CenterReport a, b;
  /// True when both sides are conclusive and the closedness verdicts differ:
  /// a certified obstruction to quasi-isomorphism. False means inconclusive.
  bool obstruction = false;
};

QuasiIsoDiagnostic derived_center_diagnostic(const DgaDegree1& a, const DgaDegree1& b);

/// The DGA of a symplectic form: the bracket on 1-forms transported through
/// the contraction isomorphism (X -> i_X omega), differential = d.
struct SymplecticDga {
  LieAlgebraSpec spec;
  Multivector omega;
  Matrix omega_map;  // vector -> form coordinates
  Matrix omega_inv;
  std::vector<std::vector<Multivector>> bracket_table;  // on form generators

  Multivector diff(const Multivector& a) const { return ce_differential(spec, a); }
  DgaDegree1 degree1() const;
};

SymplecticDga symplectic_dga(const LieAlgebraSpec& spec, const Multivector& omega);

/// Degree-1 slice of the compiled generalized-complex DGA.
DgaDegree1 gca_degree1(const GcaContext& ctx);

}  // namespace dga
