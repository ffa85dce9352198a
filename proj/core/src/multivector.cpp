#include "dga/multivector.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace dga {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (re != 0) os << rational_str(re);
  if (im != 0) {
    if (re != 0 && im > 0) os << "+";
    if (im == -1) os << "-";
    else if (im != 1) os << rational_str(im) << "*";
    os << "i";
  }
  return os.str();
}

int Multivector::popcount(Mask m) { return std::popcount(m); }

int Multivector::merge_sign(Mask a, Mask b) {
  // count pairs (x in a, y in b) with x > y
  int inversions = 0;
  Mask bb = b;
  while (bb) {
    int y = std::countr_zero(bb);
    bb &= bb - 1;
    Mask higher = a & ~((Mask(1) << (y + 1)) - 1);
    inversions += std::popcount(higher);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<int> Multivector::mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Multivector Multivector::scalar(int ambient, GaussianRational c) {
  Multivector m(ambient);
  if (!c.is_zero()) m.terms_.emplace(0, std::move(c));
  return m;
}

Multivector Multivector::basis(int ambient, int index) {
  if (index < 0 || index >= ambient) throw DimensionError("basis index out of range");
  Multivector m(ambient);
  m.terms_.emplace(Mask(1) << index, GaussianRational(1));
  return m;
}

GaussianRational Multivector::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational Multivector::coeff_tuple(std::span<const int> indices) const {
  Multivector probe(ambient_);
  probe.add_tuple(indices, GaussianRational(1));
  if (probe.is_zero()) return GaussianRational();
  const auto& [mask, sign] = *probe.terms_.begin();
  return sign * coeff(mask);
}

std::optional<int> Multivector::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int deg = popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (popcount(m) != deg) return std::nullopt;
  return deg;
}

bool Multivector::homogeneous_of(int k) const {
  for (const auto& [m, c] : terms_)
    if (popcount(m) != k) return false;
  return true;
}

void Multivector::add_term(Mask m, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (ambient_ < 64 && (m >> ambient_) != 0) throw DimensionError("term index exceeds ambient dimension");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Multivector::add_tuple(std::span<const int> indices, const GaussianRational& c) {
  Mask m = 0;
  int sign = 1;
  for (size_t pos = 0; pos < indices.size(); ++pos) {
    int idx = indices[pos];
    if (idx < 0 || idx >= ambient_) throw DimensionError("tuple index out of range");
    Mask bit = Mask(1) << idx;
    if (m & bit) return;  // repeated generator
    // parity of already-placed indices greater than idx
    Mask higher = m & ~((bit << 1) - 1);
    if (std::popcount(higher) % 2) sign = -sign;
    m |= bit;
  }
  add_term(m, sign > 0 ? c : -c);
}

Multivector Multivector::conj() const {
  Multivector out(ambient_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (ambient_ != o.ambient_) throw DimensionError("ambient dimension mismatch in +");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (ambient_ != o.ambient_) throw DimensionError("ambient dimension mismatch in -");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out(ambient_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Multivector operator*(const GaussianRational& c, const Multivector& m) {
  Multivector out(m.ambient_);
  if (c.is_zero()) return out;
  for (const auto& [mask, v] : m.terms_) out.terms_.emplace(mask, c * v);
  return out;
}

std::string Multivector::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    if (!first) os << " + ";
    first = false;
    if (m == 0) { os << cs; continue; }
    bool unit = (cs == "1");
    bool neg_unit = (cs == "-1");
    if (neg_unit) os << "-";
    else if (!unit) os << "(" << cs << ")*";
    bool fw = true;
    for (int idx : mask_indices(m)) {
      if (!fw) os << "^";
      fw = false;
      os << (idx < static_cast<int>(names.size()) ? names[idx] : "g" + std::to_string(idx));
    }
  }
  return os.str();
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("ambient dimension mismatch in wedge");
  Multivector out(a.ambient());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      int sign = Multivector::merge_sign(ma, mb);
      out.add_term(ma | mb, sign > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

Multivector contract(const Multivector& x, const Multivector& target,
                     const std::function<GaussianRational(int, int)>* pairing) {
  if (!x.homogeneous_of(1)) throw DegreeError("contract expects a degree-1 contractor");
  if (!pairing && x.ambient() != target.ambient())
    throw PairingError("contract: spaces are not dual (no pairing table supplied)");
  Multivector out(target.ambient());
  for (const auto& [mx, cx] : x.terms()) {
    int i = std::countr_zero(mx);
    for (const auto& [mt, ct] : target.terms()) {
      for (int j : Multivector::mask_indices(mt)) {
        GaussianRational p = pairing ? (*pairing)(i, j)
                                     : GaussianRational(i == j ? 1 : 0);
        if (p.is_zero()) continue;
        Multivector::Mask below = mt & ((Multivector::Mask(1) << j) - 1);
        int sign = (Multivector::popcount(below) % 2 == 0) ? 1 : -1;
        GaussianRational term = cx * p * ct;
        out.add_term(mt & ~(Multivector::Mask(1) << j), sign > 0 ? term : -term);
      }
    }
  }
  return out;
}

Multivector apply_linear(const Multivector& a, std::span<const Multivector> images,
                         int target_ambient) {
  Multivector out(target_ambient);
  for (const auto& [m, c] : a.terms()) {
    Multivector prod = Multivector::scalar(target_ambient, c);
    for (int idx : Multivector::mask_indices(m)) {
      if (idx >= static_cast<int>(images.size()))
        throw DimensionError("apply_linear: no image for generator");
      prod = wedge(prod, images[idx]);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

Multivector apply_derivation(const Multivector& a, std::span<const Multivector> images,
                             int target_ambient, bool odd) {
  Multivector out(target_ambient);
  for (const auto& [m, c] : a.terms()) {
    auto idxs = Multivector::mask_indices(m);
    for (size_t pos = 0; pos < idxs.size(); ++pos) {
      if (idxs[pos] >= static_cast<int>(images.size()))
        throw DimensionError("apply_derivation: no image for generator");
      const Multivector& img = images[idxs[pos]];
      if (img.is_zero()) continue;
      Multivector term = Multivector::scalar(target_ambient,
                                             (odd && pos % 2 == 1) ? -c : c);
      for (size_t q = 0; q < idxs.size(); ++q) {
        term = wedge(term, q == pos ? img : Multivector::basis(target_ambient, idxs[q]));
        if (term.is_zero()) break;
      }
      out += term;
    }
  }
  return out;
}

}  // namespace dga
