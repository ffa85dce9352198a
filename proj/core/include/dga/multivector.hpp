#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dga/rational.hpp"

namespace dga {

/// Sparse element of the exterior algebra over a space with `ambient`
/// degree-1 generators. A term is a strictly increasing index tuple,
/// stored as a bitmask, with a nonzero Q(i) coefficient; the Koszul sign
/// of the original ordering is absorbed into the coefficient.
class Multivector {
 public:
  using Mask = std::uint64_t;

  Multivector() = default;
  explicit Multivector(int ambient) : ambient_(ambient) {}

  static Multivector scalar(int ambient, GaussianRational c);
  static Multivector basis(int ambient, int index);

  int ambient() const { return ambient_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, GaussianRational>& terms() const { return terms_; }

  GaussianRational coeff(Mask m) const;
  GaussianRational coeff_tuple(std::span<const int> indices) const;

  /// nullopt when zero or mixed-degree.
  std::optional<int> homogeneous_degree() const;
  /// zero counts as homogeneous of every degree.
  bool homogeneous_of(int k) const;

  void add_term(Mask m, const GaussianRational& c);
  /// Adds c * e_{i1} ^ ... ^ e_{ik} for an arbitrary-order index tuple,
  /// sorting with the permutation sign; repeated indices give zero.
  void add_tuple(std::span<const int> indices, const GaussianRational& c);

  Multivector conj() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  Multivector operator-() const;
  friend Multivector operator*(const GaussianRational& c, const Multivector& m);

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

  std::string str(const std::vector<std::string>& names) const;

  static int popcount(Mask m);
  /// Koszul sign for concatenating two disjoint sorted masks.
  static int merge_sign(Mask a, Mask b);
  static std::vector<int> mask_indices(Mask m);

 private:
  int ambient_ = 0;
  std::map<Mask, GaussianRational> terms_;
};

Multivector wedge(const Multivector& a, const Multivector& b);

/// Interior product of a degree-1 element of the dual space into `target`.
/// `pairing(i, j)` is the value of dual-basis element i on basis element j;
/// when null the two bases are taken to be dual pairs (identity pairing).
Multivector contract(const Multivector& form_or_vector, const Multivector& target,
                     const std::function<GaussianRational(int, int)>* pairing = nullptr);

/// Extends a generator substitution multiplicatively (algebra homomorphism).
Multivector apply_linear(const Multivector& a, std::span<const Multivector> images,
                         int target_ambient);

/// Extends a generator map as a derivation. `odd` inserts the Koszul sign
/// (-1)^{position} so the extension has odd degree.
Multivector apply_derivation(const Multivector& a, std::span<const Multivector> images,
                             int target_ambient, bool odd);

}  // namespace dga
