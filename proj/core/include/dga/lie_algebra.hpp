#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dga/linalg.hpp"
#include "dga/multivector.hpp"

namespace dga {

/// Lie algebra by structure constants. Brackets are stored for i < j only;
/// antisymmetry is synthesized. An optional complex structure J (a dim x dim
/// matrix with J^2 = -1) turns the algebra into the input of the
/// generalized-complex machinery.
struct LieAlgebraSpec {
  int dim = 0;
  std::vector<std::string> basis;
  /// (i, j) with i < j -> [e_i, e_j] as a degree-1 element (ambient dim).
  std::map<std::pair<int, int>, Multivector> brackets;
  std::optional<Matrix> J;
  bool real = true;

  void set_bracket(int i, int j, Multivector value);
  /// [e_i, e_j] for any order, antisymmetry applied.
  Multivector bracket_basis(int i, int j) const;
  /// Bilinear extension to degree-1 elements.
  Multivector bracket(const Multivector& x, const Multivector& y) const;
  /// J applied to a degree-1 vector.
  Multivector apply_J(const Multivector& x) const;
};

struct JacobiViolation {
  int i, j, k;
  Multivector residual;
};

struct ValidationReport {
  std::vector<JacobiViolation> jacobi_failures;
  bool j_present = false;
  bool j_square_ok = true;
  std::vector<std::pair<std::pair<int, int>, Multivector>> nijenhuis_failures;
  bool valid() const {
    return jacobi_failures.empty() && j_square_ok && nijenhuis_failures.empty();
  }
};

ValidationReport validate(const LieAlgebraSpec& spec);

/// Chevalley-Eilenberg differential on forms in ^* (ambient = dim), with
/// the convention d theta(x, y) = -theta([x, y]) on degree 1, extended as a
/// degree +1 derivation.
Multivector ce_differential(const LieAlgebraSpec& spec, const Multivector& form);

/// Basis change: new_basis[j] = sum_i P[i][j] e_i. Returns the spec in the
/// new basis (structure constants and J transported).
LieAlgebraSpec transform_spec(const LieAlgebraSpec& spec, const Matrix& P);

/// The (1,0)/(0,1) splitting induced by an integrable J.
struct ComplexSplitting {
  int n = 0;  // complex dimension, dim = 2n
  std::vector<Multivector> holo;          // z_j, degree-1 vectors, ambient dim
  std::vector<Multivector> antiholo;      // conjugates
  std::vector<Multivector> holo_dual;     // z^j, degree-1 forms, ambient dim
  std::vector<Multivector> antiholo_dual; // conjugates
};

ComplexSplitting split(const LieAlgebraSpec& spec);

}  // namespace dga
