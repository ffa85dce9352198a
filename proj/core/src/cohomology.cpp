#include "dga/cohomology.hpp"

#include <algorithm>

namespace dga {

namespace {

Multivector from_vec_deg1(int ambient, const Vec& v) {
  Multivector out(ambient);
  for (int i = 0; i < ambient; ++i)
    if (!v[i].is_zero()) out.add_term(Multivector::Mask(1) << i, v[i]);
  return out;
}

bool vec_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

Vec CochainComplex::coordinates(int k, const Multivector& a) const {
  if (!a.homogeneous_of(k)) throw DegreeError("element has the wrong degree");
  Vec out(basis[k].size());
  for (const auto& [m, c] : a.terms()) {
    auto it = std::lower_bound(basis[k].begin(), basis[k].end(), m);
    if (it == basis[k].end() || *it != m) throw ConsistencyError("monomial outside basis");
    out[it - basis[k].begin()] = c;
  }
  return out;
}

Multivector CochainComplex::element(int k, const Vec& coords) const {
  Multivector out(ambient);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out.add_term(basis[k][i], coords[i]);
  return out;
}

CochainComplex build_complex(int ambient, const DiffOp& diff) {
  CochainComplex cc;
  cc.ambient = ambient;
  cc.basis.assign(ambient + 1, {});
  for (Multivector::Mask m = 0; m < (Multivector::Mask(1) << ambient); ++m)
    cc.basis[Multivector::popcount(m)].push_back(m);

  for (int k = 0; k <= ambient; ++k) {
    int rows = k + 1 <= ambient ? cc.dim(k + 1) : 0;
    Matrix d(rows, cc.dim(k));
    for (int j = 0; j < cc.dim(k); ++j) {
      Multivector mono(ambient);
      mono.add_term(cc.basis[k][j], GaussianRational(1));
      Multivector img = diff(mono);
      if (img.is_zero()) continue;
      if (!img.homogeneous_of(k + 1))
        throw ConsistencyError("differential does not raise degree by one");
      Vec col = cc.coordinates(k + 1, img);
      for (int i = 0; i < rows; ++i) d[i][j] = col[i];
    }
    cc.d.push_back(std::move(d));
  }
  for (int k = 0; k + 1 <= ambient; ++k) {
    Matrix sq = mul(cc.d[k + 1], cc.d[k]);
    for (const auto& row : sq.a)
      for (const auto& x : row)
        if (!x.is_zero()) throw ConsistencyError("differential does not square to zero");
  }
  return cc;
}

CohomologyBasis cohomology(const CochainComplex& cc) {
  CohomologyBasis out;
  out.ambient = cc.ambient;
  for (int k = 0; k <= cc.ambient; ++k) {
    CohomologyDegree deg;
    std::vector<Vec> span;
    if (k > 0)
      for (int j = 0; j < cc.d[k - 1].cols; ++j) {
        Vec col(cc.d[k - 1].rows);
        for (int i = 0; i < cc.d[k - 1].rows; ++i) col[i] = cc.d[k - 1][i][j];
        span.push_back(std::move(col));
      }
    for (const Vec& v : kernel_basis(cc.d[k])) {
      if (in_span(span, v)) continue;
      span.push_back(v);
      deg.representatives.push_back(cc.element(k, v));
    }
    deg.dim = static_cast<int>(deg.representatives.size());
    out.degrees.push_back(std::move(deg));
  }
  return out;
}

bool is_exact(const CochainComplex& cc, int k, const Multivector& a) {
  if (a.is_zero()) return true;
  if (k == 0) return false;
  return solve(cc.d[k - 1], cc.coordinates(k, a)).has_value();
}

InducedMapReport induced_map(const CochainComplex& src, const CochainComplex& tgt,
                             const DiffOp& F) {
  if (src.ambient != tgt.ambient)
    throw DimensionError("induced_map expects complexes over the same space");
  int A = src.ambient;
  InducedMapReport rep;
  rep.chain_map = true;

  for (int k = 0; k < A && rep.chain_map; ++k)
    for (int j = 0; j < src.dim(k); ++j) {
      Multivector mono(A);
      mono.add_term(src.basis[k][j], GaussianRational(1));
      // F(d e) vs d(F e), through the assembled matrices
      Vec de(src.d[k].rows);
      for (int i = 0; i < src.d[k].rows; ++i) de[i] = src.d[k][i][j];
      Multivector lhs = F(src.element(k + 1, de));
      Vec rhs = mul(tgt.d[k], tgt.coordinates(k, F(mono)));
      if (!(tgt.coordinates(k + 1, lhs) == rhs)) {
        rep.chain_map = false;
        std::vector<std::string> dummy;
        rep.commutation_witness =
            "degree " + std::to_string(k) + " monomial " + mono.str(dummy);
        break;
      }
    }
  if (!rep.chain_map) return rep;

  CohomologyBasis hs = cohomology(src), ht = cohomology(tgt);
  rep.quasi_isomorphism = true;
  for (int k = 0; k <= A; ++k) {
    const auto& rs = hs.degrees[k].representatives;
    const auto& rt = ht.degrees[k].representatives;
    // columns: target representatives, then the image of d (quotient slack)
    std::vector<Vec> cols;
    for (const auto& r : rt) cols.push_back(tgt.coordinates(k, r));
    if (k > 0)
      for (int j = 0; j < tgt.d[k - 1].cols; ++j) {
        Vec col(tgt.d[k - 1].rows);
        for (int i = 0; i < tgt.d[k - 1].rows; ++i) col[i] = tgt.d[k - 1][i][j];
        cols.push_back(std::move(col));
      }
    Matrix M(tgt.dim(k), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (int i = 0; i < tgt.dim(k); ++i) M[i][j] = cols[j][i];

    Matrix ind(static_cast<int>(rt.size()), static_cast<int>(rs.size()));
    for (size_t j = 0; j < rs.size(); ++j) {
      auto sol = solve(M, tgt.coordinates(k, F(rs[j])));
      if (!sol) throw ConsistencyError("image of a closed class is not closed");
      for (size_t i = 0; i < rt.size(); ++i) ind[static_cast<int>(i)][static_cast<int>(j)] = (*sol)[i];
    }
    bool inv = ind.rows == ind.cols && rank(ind) == ind.rows;
    rep.invertible.push_back(inv);
    rep.quasi_isomorphism = rep.quasi_isomorphism && inv;
    rep.induced.push_back(std::move(ind));
  }
  return rep;
}

CenterReport derived_center(const DgaDegree1& dga) {
  int m = dga.dim;
  CenterReport rep;

  std::vector<Vec> images;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Multivector b = dga.bracket(i, j);
      Vec v(m);
      for (const auto& [mask, c] : b.terms()) v[Multivector::mask_indices(mask)[0]] = c;
      if (!vec_zero(v)) images.push_back(std::move(v));
    }
  for (int idx : independent_subset(images)) rep.derived_basis.push_back(images[idx]);

  int r = static_cast<int>(rep.derived_basis.size());
  if (r == 0) {
    rep.conclusive = false;
    return rep;
  }

  auto bracket_vec = [&](const Vec& x, const Vec& y) {
    Multivector out(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (x[i].is_zero() || y[j].is_zero() || i == j) continue;
        out += (x[i] * y[j]) * dga.bracket(i, j);
      }
    return out;
  };

  // center of the derived subalgebra: kernel of c -> [sum c_i D_i, D_j]
  Matrix sys(r * m, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) {
      Multivector b = bracket_vec(rep.derived_basis[i], rep.derived_basis[j]);
      for (const auto& [mask, c] : b.terms())
        sys[j * m + Multivector::mask_indices(mask)[0]][i] = c;
    }
  for (const Vec& c : kernel_basis(sys)) {
    Vec x(m);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < m; ++k) x[k] += c[i] * rep.derived_basis[i][k];
    rep.center_basis.push_back(std::move(x));
  }

  rep.conclusive = !rep.center_basis.empty();
  for (const Vec& x : rep.center_basis)
    rep.center_closed = rep.center_closed && dga.diff(from_vec_deg1(m, x)).is_zero();
  return rep;
}

QuasiIsoDiagnostic derived_center_diagnostic(const DgaDegree1& a, const DgaDegree1& b) {
  QuasiIsoDiagnostic out;
  out.a = derived_center(a);
  out.b = derived_center(b);
  out.obstruction = out.a.conclusive && out.b.conclusive &&
                    out.a.center_closed != out.b.center_closed;
  return out;
}

DgaDegree1 SymplecticDga::degree1() const {
  DgaDegree1 out;
  out.dim = spec.dim;
  for (const auto& name : spec.basis) out.names.push_back(name + "*");
  auto table = bracket_table;
  out.bracket = [table](int i, int j) { return table[i][j]; };
  LieAlgebraSpec s = spec;
  out.diff = [s](const Multivector& a) { return ce_differential(s, a); };
  return out;
}

SymplecticDga symplectic_dga(const LieAlgebraSpec& spec, const Multivector& omega) {
  if (!omega.homogeneous_of(2)) throw StructureError("omega must be a 2-form");
  if (!ce_differential(spec, omega).is_zero()) throw StructureError("omega is not closed");
  int d = spec.dim;

  SymplecticDga out;
  out.spec = spec;
  out.omega = omega;
  out.omega_map = Matrix(d, d);
  for (int j = 0; j < d; ++j) {
    Multivector f = contract(Multivector::basis(d, j), omega);
    for (const auto& [m, c] : f.terms())
      out.omega_map[Multivector::mask_indices(m)[0]][j] = c;
  }
  auto inv = inverse(out.omega_map);
  if (!inv) throw StructureError("omega is degenerate");
  out.omega_inv = *inv;

  out.bracket_table.assign(d, std::vector<Multivector>(d, Multivector(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Multivector xi(d), xj(d);
      for (int k = 0; k < d; ++k) {
        if (!out.omega_inv[k][i].is_zero())
          xi.add_term(Multivector::Mask(1) << k, out.omega_inv[k][i]);
        if (!out.omega_inv[k][j].is_zero())
          xj.add_term(Multivector::Mask(1) << k, out.omega_inv[k][j]);
      }
      out.bracket_table[i][j] = contract(spec.bracket(xi, xj), omega);
    }
  return out;
}

DgaDegree1 gca_degree1(const GcaContext& ctx) {
  DgaDegree1 out;
  out.dim = ctx.L_dim();
  out.names = ctx.L_names();
  const GcaContext* c = &ctx;
  out.bracket = [c](int i, int j) {
    return c->schouten(Multivector::basis(c->L_dim(), i), Multivector::basis(c->L_dim(), j));
  };
  out.diff = [c](const Multivector& a) { return c->dbar(a); };
  return out;
}

}  // namespace dga
