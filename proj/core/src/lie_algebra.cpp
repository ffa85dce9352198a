#include "dga/lie_algebra.hpp"

namespace dga {

void LieAlgebraSpec::set_bracket(int i, int j, Multivector value) {
  if (i == j) throw StructureError("bracket of a generator with itself");
  if (i > j) { std::swap(i, j); value = -value; }
  if (value.ambient() != dim) throw DimensionError("bracket value ambient mismatch");
  if (value.is_zero()) brackets.erase({i, j});
  else brackets[{i, j}] = std::move(value);
}

Multivector LieAlgebraSpec::bracket_basis(int i, int j) const {
  if (i == j) return Multivector(dim);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = brackets.find({i, j});
  if (it == brackets.end()) return Multivector(dim);
  return flip ? -it->second : it->second;
}

Multivector LieAlgebraSpec::bracket(const Multivector& x, const Multivector& y) const {
  if (!x.homogeneous_of(1) || !y.homogeneous_of(1))
    throw DegreeError("Lie bracket expects degree-1 vectors");
  Multivector out(dim);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      int i = Multivector::mask_indices(mx)[0];
      int j = Multivector::mask_indices(my)[0];
      out += (cx * cy) * bracket_basis(i, j);
    }
  return out;
}

Multivector LieAlgebraSpec::apply_J(const Multivector& x) const {
  if (!J) throw StructureError("no complex structure on this algebra");
  Multivector out(dim);
  for (const auto& [m, c] : x.terms()) {
    int j = Multivector::mask_indices(m)[0];
    for (int i = 0; i < dim; ++i) {
      GaussianRational e = (*J)[i][j];
      if (!e.is_zero()) out.add_term(Multivector::Mask(1) << i, c * e);
    }
  }
  return out;
}

ValidationReport validate(const LieAlgebraSpec& spec) {
  ValidationReport rep;
  if (spec.dim <= 0) throw StructureError("dimension must be positive");
  for (int i = 0; i < spec.dim; ++i)
    for (int j = i + 1; j < spec.dim; ++j)
      for (int k = j + 1; k < spec.dim; ++k) {
        Multivector ei = Multivector::basis(spec.dim, i);
        Multivector ej = Multivector::basis(spec.dim, j);
        Multivector ek = Multivector::basis(spec.dim, k);
        Multivector res = spec.bracket(spec.bracket_basis(i, j), ek) +
                          spec.bracket(spec.bracket_basis(j, k), ei) +
                          spec.bracket(spec.bracket_basis(k, i), ej);
        if (!res.is_zero()) rep.jacobi_failures.push_back({i, j, k, res});
      }
  if (spec.J) {
    rep.j_present = true;
    const Matrix& J = *spec.J;
    if (J.rows != spec.dim || J.cols != spec.dim) throw StructureError("J has wrong shape");
    Matrix sq = mul(J, J);
    Matrix minus_id(spec.dim, spec.dim);
    for (int i = 0; i < spec.dim; ++i) minus_id[i][i] = GaussianRational(-1);
    rep.j_square_ok = (sq == minus_id);
    if (rep.j_square_ok) {
      // Nijenhuis tensor on basis pairs
      for (int i = 0; i < spec.dim; ++i)
        for (int j = i + 1; j < spec.dim; ++j) {
          Multivector x = Multivector::basis(spec.dim, i);
          Multivector y = Multivector::basis(spec.dim, j);
          Multivector jx = spec.apply_J(x), jy = spec.apply_J(y);
          Multivector nij = spec.bracket(jx, jy) - spec.bracket(x, y) -
                            spec.apply_J(spec.bracket(jx, y) + spec.bracket(x, jy));
          if (!nij.is_zero()) rep.nijenhuis_failures.push_back({{i, j}, nij});
        }
    }
  }
  return rep;
}

Multivector ce_differential(const LieAlgebraSpec& spec, const Multivector& form) {
  if (form.ambient() != spec.dim) throw DimensionError("form ambient must equal algebra dim");
  std::vector<Multivector> d_gen(spec.dim, Multivector(spec.dim));
  for (const auto& [ij, value] : spec.brackets) {
    auto [i, j] = ij;
    for (const auto& [mk, c] : value.terms()) {
      int k = Multivector::mask_indices(mk)[0];
      // d e^k picks up -c^k_{ij} e^i ^ e^j
      Multivector term(spec.dim);
      term.add_tuple(std::array{i, j}, -c);
      d_gen[k] += term;
    }
  }
  return apply_derivation(form, d_gen, spec.dim, /*odd=*/true);
}

LieAlgebraSpec transform_spec(const LieAlgebraSpec& spec, const Matrix& P) {
  auto Pinv = inverse(P);
  if (!Pinv) throw StructureError("basis change matrix is singular");
  auto to_new = [&](const Multivector& v) {
    Multivector out(spec.dim);
    for (const auto& [m, c] : v.terms()) {
      int i = Multivector::mask_indices(m)[0];
      for (int j = 0; j < spec.dim; ++j) {
        GaussianRational e = (*Pinv)[j][i];
        if (!e.is_zero()) out.add_term(Multivector::Mask(1) << j, c * e);
      }
    }
    return out;
  };
  LieAlgebraSpec out;
  out.dim = spec.dim;
  out.real = spec.real;
  for (int j = 0; j < spec.dim; ++j) out.basis.push_back("f" + std::to_string(j + 1));
  for (int a = 0; a < spec.dim; ++a)
    for (int b = a + 1; b < spec.dim; ++b) {
      Multivector fa(spec.dim), fb(spec.dim);
      for (int i = 0; i < spec.dim; ++i) {
        if (!P[i][a].is_zero()) fa.add_term(Multivector::Mask(1) << i, P[i][a]);
        if (!P[i][b].is_zero()) fb.add_term(Multivector::Mask(1) << i, P[i][b]);
      }
      Multivector br = to_new(spec.bracket(fa, fb));
      if (!br.is_zero()) out.set_bracket(a, b, br);
    }
  if (spec.J) out.J = mul(mul(*Pinv, *spec.J), P);
  return out;
}

ComplexSplitting split(const LieAlgebraSpec& spec) {
  if (!spec.J) throw StructureError("split requires a complex structure");
  ValidationReport rep = validate(spec);
  if (!rep.valid()) throw StructureError("split requires a valid, integrable spec");
  if (spec.dim % 2 != 0) throw StructureError("complex structure needs even dimension");
  ComplexSplitting sp;
  sp.n = spec.dim / 2;

  // pick x_1..x_n greedily so (x_1, Jx_1, ..., x_n, Jx_n) is a basis
  std::vector<Vec> chosen;
  auto as_vec = [&](const Multivector& v) {
    Vec out(spec.dim);
    for (const auto& [m, c] : v.terms()) out[Multivector::mask_indices(m)[0]] = c;
    return out;
  };
  std::vector<Multivector> picks;
  for (int i = 0; i < spec.dim && static_cast<int>(picks.size()) < sp.n; ++i) {
    Multivector x = Multivector::basis(spec.dim, i);
    Multivector jx = spec.apply_J(x);
    std::vector<Vec> trial = chosen;
    trial.push_back(as_vec(x));
    if (in_span(chosen, as_vec(x)) || in_span(trial, as_vec(jx))) continue;
    chosen.push_back(as_vec(x));
    chosen.push_back(as_vec(jx));
    picks.push_back(x);
  }
  if (static_cast<int>(picks.size()) != sp.n)
    throw StructureError("could not complete a J-adapted basis");

  GaussianRational half(1, 2);
  GaussianRational half_i(Rational(0), Rational(1, 2));
  for (const Multivector& x : picks) {
    Multivector jx = spec.apply_J(x);
    sp.holo.push_back(half * x - half_i * jx);      // (x - i Jx)/2
    sp.antiholo.push_back(half * x + half_i * jx);
  }

  // dual forms: rows of the inverse of the column matrix (z, zbar)
  Matrix C(spec.dim, spec.dim);
  for (int j = 0; j < sp.n; ++j) {
    Vec zj = as_vec(sp.holo[j]), zbj = as_vec(sp.antiholo[j]);
    for (int i = 0; i < spec.dim; ++i) {
      C[i][j] = zj[i];
      C[i][sp.n + j] = zbj[i];
    }
  }
  auto Cinv = inverse(C);
  if (!Cinv) throw StructureError("splitting basis is degenerate");
  for (int j = 0; j < sp.n; ++j) {
    Multivector zu(spec.dim), zbu(spec.dim);
    for (int i = 0; i < spec.dim; ++i) {
      if (!(*Cinv)[j][i].is_zero()) zu.add_term(Multivector::Mask(1) << i, (*Cinv)[j][i]);
      if (!(*Cinv)[sp.n + j][i].is_zero())
        zbu.add_term(Multivector::Mask(1) << i, (*Cinv)[sp.n + j][i]);
    }
    sp.holo_dual.push_back(std::move(zu));
    sp.antiholo_dual.push_back(std::move(zbu));
  }
  return sp;
}

}  // namespace dga
