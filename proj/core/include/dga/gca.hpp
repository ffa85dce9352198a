#pragma once

#include <string>
#include <vector>

#include "dga/lie_algebra.hpp"

namespace dga {

/// Invariant section of T + T* over the algebra: a vector part and a form
/// part, each degree <= 1 in the ambient-dim real basis.
struct Section {
  Multivector vec;
  Multivector form;

  Section() = default;
  Section(Multivector v, Multivector f) : vec(std::move(v)), form(std::move(f)) {}

  Section operator+(const Section& o) const { return {vec + o.vec, form + o.form}; }
  Section operator-(const Section& o) const { return {vec - o.vec, form - o.form}; }
  friend Section operator*(const GaussianRational& c, const Section& s) {
    return {c * s.vec, c * s.form};
  }
  friend bool operator==(const Section&, const Section&) = default;
};

/// The compiled generalized-complex engine over an integrable J.
///
/// Generator index layout over the full space (size N = 4n):
///   [0, n)      z_i        holomorphic vectors        } L = [0, 2n)
///   [n, 2n)     zb^i       antiholomorphic covectors  }
///   [2n, 3n)    z^i        holomorphic covectors      } conjugate Lbar
///   [3n, 4n)    zb_i       antiholomorphic vectors    }
/// sigma pairs generator a with generator dual(a) = (a + 2n) mod 4n.
/// Elements of the exterior algebra of L use ambient 2n with the same
/// indices; full-space elements use ambient 4n.
class GcaContext {
 public:
  static GcaContext compile(const LieAlgebraSpec& spec);

  const LieAlgebraSpec& spec() const { return spec_; }
  const ComplexSplitting& splitting() const { return sp_; }
  int n() const { return n_; }
  int L_dim() const { return 2 * n_; }
  int full_dim() const { return 4 * n_; }
  int dual(int a) const { return (a + 2 * n_) % (4 * n_); }

  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::string> L_names() const {
    return {names_.begin(), names_.begin() + 2 * n_};
  }
  const Section& generator(int a) const { return gens_.at(a); }

  /// Invariant Courant bracket [X,Y] + i_X d(beta) - i_Y d(alpha).
  Section courant(const Section& a, const Section& b) const;
  /// <X+alpha, Y+beta> = (beta(X) + alpha(Y)) / 2.
  GaussianRational pairing(const Section& a, const Section& b) const;

  /// Coordinates in the 4n generators of a section / back again.
  Multivector to_z(const Section& s) const;
  Section to_section(const Multivector& z) const;  // degree-1, ambient 4n

  /// Bracket of two full-space generators, ambient 4n.
  const Multivector& bracket_gen(int a, int b) const { return bracket_full_[a][b]; }
  /// dbar of an L generator, degree 2, ambient 2n.
  const Multivector& dbar_gen(int a) const { return dbar_gen_.at(a); }

  /// Schouten bracket on the exterior algebra of L (ambient 2n).
  Multivector schouten(const Multivector& a, const Multivector& b) const;
  /// Courant bracket extended bilinearly to full-space degree-1 elements.
  Multivector bracket_full(const Multivector& a, const Multivector& b) const;
  /// Algebroid differential on the exterior algebra of L.
  Multivector dbar(const Multivector& a) const;

  /// sigma pairing of degree-1 full-space elements.
  GaussianRational sigma(const Multivector& u, const Multivector& v) const;
  /// Interior product of a full-space degree-1 element into an element of
  /// the exterior algebra of L, pairing through sigma.
  Multivector contract_sigma(const Multivector& x, const Multivector& a) const;
  /// Evaluate a degree-k element of the exterior algebra of L on k
  /// full-space generators (through sigma).
  GaussianRational eval_on(const Multivector& a, std::span<const int> gen_indices) const;

  Multivector lift(const Multivector& a) const;        // ambient 2n -> 4n
  Multivector restrict_L(const Multivector& a) const;  // ambient 4n -> 2n

 private:
  GcaContext() = default;
  Multivector schouten_terms(Multivector::Mask a, Multivector::Mask b) const;

  LieAlgebraSpec spec_;
  ComplexSplitting sp_;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Section> gens_;
  Matrix to_z_matrix_;  // inverse of the generator coordinate matrix
  std::vector<std::vector<Multivector>> bracket_full_;
  std::vector<Multivector> bracket_L_;  // flattened 2n x 2n, ambient 2n
  std::vector<Multivector> dbar_gen_;
};

/// Endomorphism of L given by a 2n x 2n matrix on generators, extended to
/// the exterior algebra as an even derivation.
struct Endomorphism {
  Matrix m;  // column j = image of generator j

  Endomorphism() = default;
  explicit Endomorphism(Matrix mat) : m(std::move(mat)) {}
  static Endomorphism zero(int L_dim) { return Endomorphism(Matrix(L_dim, L_dim)); }
  static Endomorphism identity(int L_dim) { return Endomorphism(Matrix::identity(L_dim)); }

  bool is_zero() const;
  Endomorphism operator+(const Endomorphism& o) const {
    Endomorphism r(*this);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
  }
  friend Endomorphism operator*(const GaussianRational& c, const Endomorphism& e) {
    Endomorphism r(e);
    for (auto& row : r.m.a)
      for (auto& x : row) x = c * x;
    return r;
  }

  /// Even-derivation extension applied to an element of the exterior
  /// algebra of L (ambient 2n).
  Multivector apply(const Multivector& a) const;
  /// The bivector z_p ^ m_q picture of a mixed endomorphism (ambient 4n).
  Multivector as_bivector(const GcaContext& ctx) const;
};

/// phi1..phi4 blocks of END(L): (1,0)->(1,0), (0,1)*->(0,1)*,
/// (1,0)->(0,1)*, (0,1)*->(1,0).
struct EndoBlocks {
  Endomorphism phi1, phi2, phi3, phi4;
};
EndoBlocks endo_decompose(const GcaContext& ctx, const Endomorphism& phi);

/// Reads a mixed bivector sum c * z_p ^ m_q (p in L, q in Lbar, ambient 4n)
/// as the endomorphism gen(dual q) -> c * gen(p). Pure L x L or Lbar x Lbar
/// terms do not define a map on L and are rejected.
Endomorphism endo_from_bivector(const GcaContext& ctx, const Multivector& b);

}  // namespace dga
