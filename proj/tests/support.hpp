#pragma once

#include <random>
#include <vector>

#include "dga/constructions.hpp"
#include "dga/corpus.hpp"

namespace dga::testing {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng) {
  return Rational(rand_int(rng, -6, 6), rand_int(rng, 1, 5));
}

inline GaussianRational rand_scalar(Rng& rng, bool complex_part = true) {
  return {rand_rational(rng), complex_part ? rand_rational(rng) : Rational(0)};
}

inline Multivector rand_multivector(Rng& rng, int ambient, int degree, int terms = 3) {
  Multivector out(ambient);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx;
    for (int k = 0; k < degree; ++k) idx.push_back((int)rand_int(rng, 0, ambient - 1));
    out.add_tuple(idx, rand_scalar(rng));
  }
  return out;
}

// Random GL(m, Q): identity perturbed by elementary row operations.
inline Matrix rand_gl(Rng& rng, int m) {
  Matrix p = Matrix::identity(m);
  for (int step = 0; step < 3 * m; ++step) {
    int i = (int)rand_int(rng, 0, m - 1), j = (int)rand_int(rng, 0, m - 1);
    if (i == j) {
      GaussianRational c(rand_int(rng, 1, 3), rand_int(rng, 1, 3));
      for (int k = 0; k < m; ++k) p[i][k] = c * p[i][k];
    } else {
      GaussianRational c = rand_scalar(rng, false);
      for (int k = 0; k < m; ++k) p[i][k] = p[i][k] + c * p[j][k];
    }
  }
  return p;
}

// Pull a 2-form back through the basis change e'_j = sum_i P[i][j] e_i.
inline Multivector pullback_2form(const Multivector& form, const Matrix& p) {
  int m = p.cols;
  Multivector out(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      GaussianRational v;
      for (const auto& [mask, c] : form.terms()) {
        auto idx = Multivector::mask_indices(mask);
        v += c * (p[idx[0]][a] * p[idx[1]][b] - p[idx[0]][b] * p[idx[1]][a]);
      }
      if (!v.is_zero()) out.add_tuple(std::vector<int>{a, b}, v);
    }
  return out;
}

// Transport connection data through a basis change; preserves validity.
inline SymplecticConnectionData transport_connection(const SymplecticConnectionData& d,
                                                     const Matrix& p) {
  SymplecticConnectionData out;
  out.g_spec = transform_spec(d.g_spec, p);
  out.omega = pullback_2form(d.omega, p);
  Matrix pinv = *inverse(p);
  int m = d.g_spec.dim;
  out.gamma.assign(m, Matrix(m, m));
  for (int a = 0; a < m; ++a) {
    Matrix ga(m, m);  // gamma(e'_a) in old coordinates = sum_c P[c][a] gamma(e_c)
    for (int c = 0; c < m; ++c)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) ga[i][j] += p[c][a] * d.gamma[c][i][j];
    out.gamma[a] = mul(pinv, mul(ga, p));
  }
  if (d.metric) {
    Matrix g(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        GaussianRational v;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) v += p[i][a] * p[j][b] * (*d.metric)[i][j];
        g[a][b] = v;
      }
    out.metric = g;
  }
  return out;
}

inline SymplecticConnectionData direct_sum_connection(const SymplecticConnectionData& a,
                                                      const SymplecticConnectionData& b) {
  int ma = a.g_spec.dim, mb = b.g_spec.dim, m = ma + mb;
  SymplecticConnectionData out;
  out.g_spec.dim = m;
  out.g_spec.real = true;
  for (int i = 0; i < ma; ++i) out.g_spec.basis.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < mb; ++i) out.g_spec.basis.push_back("b" + std::to_string(i + 1));
  auto embed = [&](const Multivector& v, int off) {
    Multivector r(m);
    for (const auto& [mask, c] : v.terms()) {
      std::vector<int> idx = Multivector::mask_indices(mask);
      for (int& x : idx) x += off;
      r.add_tuple(idx, c);
    }
    return r;
  };
  for (const auto& [key, val] : a.g_spec.brackets)
    out.g_spec.set_bracket(key.first, key.second, embed(val, 0));
  for (const auto& [key, val] : b.g_spec.brackets)
    out.g_spec.set_bracket(key.first + ma, key.second + ma, embed(val, ma));
  out.omega = embed(a.omega, 0) + embed(b.omega, ma);
  out.gamma.assign(m, Matrix(m, m));
  for (int c = 0; c < ma; ++c)
    for (int i = 0; i < ma; ++i)
      for (int j = 0; j < ma; ++j) out.gamma[c][i][j] = a.gamma[c][i][j];
  for (int c = 0; c < mb; ++c)
    for (int i = 0; i < mb; ++i)
      for (int j = 0; j < mb; ++j) out.gamma[c + ma][i + ma][j + ma] = b.gamma[c][i][j];
  if (a.metric && b.metric) {
    Matrix g(m, m);
    for (int i = 0; i < ma; ++i)
      for (int j = 0; j < ma; ++j) g[i][j] = (*a.metric)[i][j];
    for (int i = 0; i < mb; ++i)
      for (int j = 0; j < mb; ++j) g[i + ma][j + ma] = (*b.metric)[i][j];
    out.metric = g;
  }
  return out;
}

// Random valid connection data: a random basis transport of one fixture
// (dim 2) or of a direct sum of two fixtures (dim 4).
inline SymplecticConnectionData rand_connection(Rng& rng, int dim) {
  const auto& names = fixture_names();
  SymplecticConnectionData d = fixture_data(names[rand_int(rng, 0, 2)]);
  if (dim == 4) d = direct_sum_connection(d, fixture_data(names[rand_int(rng, 0, 2)]));
  return transport_connection(d, rand_gl(rng, d.g_spec.dim));
}

// Random valid spec with integrable J, dim in {2, 4, 6}: abelian algebras
// with a conjugated standard J, transported semidirect algebras of the
// fixtures, and direct sums of the two.
inline LieAlgebraSpec rand_spec(Rng& rng, int dim) {
  auto abelian = [&](int m) {
    LieAlgebraSpec s;
    s.dim = m;
    s.real = true;
    for (int i = 0; i < m; ++i) s.basis.push_back("x" + std::to_string(i + 1));
    Matrix j0(m, m);
    for (int i = 0; i < m / 2; ++i) {
      j0[m / 2 + i][i] = 1;
      j0[i][m / 2 + i] = -1;
    }
    Matrix p = rand_gl(rng, m);
    s.J = mul(p, mul(j0, *inverse(p)));
    return s;
  };
  auto fixture_h = [&] {
    const auto& names = fixture_names();
    SemidirectPackage pkg = build_semidirect(fixture_data(names[rand_int(rng, 0, 2)]));
    return transform_spec(pkg.h_spec, rand_gl(rng, 4));
  };
  auto sum = [&](const LieAlgebraSpec& a, const LieAlgebraSpec& b) {
    LieAlgebraSpec s;
    s.dim = a.dim + b.dim;
    s.real = true;
    for (int i = 0; i < a.dim; ++i) s.basis.push_back("p" + std::to_string(i + 1));
    for (int i = 0; i < b.dim; ++i) s.basis.push_back("q" + std::to_string(i + 1));
    auto embed = [&](const Multivector& v, int off) {
      Multivector r(s.dim);
      for (const auto& [mask, c] : v.terms()) {
        std::vector<int> idx = Multivector::mask_indices(mask);
        for (int& x : idx) x += off;
        r.add_tuple(idx, c);
      }
      return r;
    };
    for (const auto& [key, val] : a.brackets) s.set_bracket(key.first, key.second, embed(val, 0));
    for (const auto& [key, val] : b.brackets)
      s.set_bracket(key.first + a.dim, key.second + a.dim, embed(val, a.dim));
    Matrix j(s.dim, s.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int k = 0; k < a.dim; ++k) j[i][k] = (*a.J)[i][k];
    for (int i = 0; i < b.dim; ++i)
      for (int k = 0; k < b.dim; ++k) j[i + a.dim][k + a.dim] = (*b.J)[i][k];
    s.J = j;
    return s;
  };
  if (dim == 2) return abelian(2);
  if (dim == 4) return rand_int(rng, 0, 1) ? abelian(4) : fixture_h();
  switch (rand_int(rng, 0, 2)) {
    case 0: return abelian(6);
    case 1: return sum(fixture_h(), abelian(2));
    default: return transform_spec(sum(fixture_h(), abelian(2)), rand_gl(rng, 6));
  }
}

// Random dbar-closed element of ^2 L.
inline Multivector rand_closed_gamma(Rng& rng, const GcaContext& ctx) {
  int L = ctx.L_dim();
  std::vector<Multivector::Mask> deg2;
  for (Multivector::Mask m = 0; m < (Multivector::Mask(1) << L); ++m)
    if (Multivector::popcount(m) == 2) deg2.push_back(m);
  std::vector<Multivector::Mask> deg3;
  for (Multivector::Mask m = 0; m < (Multivector::Mask(1) << L); ++m)
    if (Multivector::popcount(m) == 3) deg3.push_back(m);
  Matrix dm((int)deg3.size(), (int)deg2.size());
  for (int c = 0; c < (int)deg2.size(); ++c) {
    Multivector e(L);
    e.add_term(deg2[c], 1);
    Multivector de = ctx.dbar(e);
    for (int r = 0; r < (int)deg3.size(); ++r) dm[r][c] = de.coeff(deg3[r]);
  }
  std::vector<Vec> ker = kernel_basis(dm);
  Multivector out(L);
  for (const auto& k : ker) {
    GaussianRational c = rand_scalar(rng);
    for (int i = 0; i < (int)deg2.size(); ++i)
      if (!k[i].is_zero()) out.add_term(deg2[i], c * k[i]);
  }
  return out;
}

}  // namespace dga::testing
