#include "dga/linalg.hpp"

namespace dga {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.a[i][i] = GaussianRational(1);
  return m;
}

Matrix mul(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw DimensionError("matrix product shape mismatch");
  Matrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.a[i][k].is_zero()) continue;
      for (int j = 0; j < y.cols; ++j)
        out.a[i][j] += x.a[i][k] * y.a[k][j];
    }
  return out;
}

Vec mul(const Matrix& x, const Vec& v) {
  if (x.cols != static_cast<int>(v.size())) throw DimensionError("matrix-vector shape mismatch");
  Vec out(x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (!x.a[i][j].is_zero() && !v[j].is_zero()) out[i] += x.a[i][j] * v[j];
  return out;
}

Matrix transpose(const Matrix& x) {
  Matrix out(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) out.a[j][i] = x.a[i][j];
  return out;
}

std::vector<int> rref_inplace(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.a[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(m.a[p], m.a[r]);
    GaussianRational inv = m.a[r][c].inverse();
    for (int j = c; j < m.cols; ++j) m.a[r][j] *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.a[i][c].is_zero()) continue;
      GaussianRational f = m.a[i][c];
      for (int j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref_inplace(m).size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix e = m;
  std::vector<int> pivots = rref_inplace(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols);
    v[c] = GaussianRational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.a[r][c];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.a[i][j] = m.a[i][j];
    aug.a[i][n + i] = GaussianRational(1);
  }
  auto pivots = rref_inplace(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.a[i][j] = aug.a[i][n + j];
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (m.rows != static_cast<int>(b.size())) throw DimensionError("solve shape mismatch");
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.a[i][j] = m.a[i][j];
    aug.a[i][m.cols] = b[i];
  }
  auto pivots = rref_inplace(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
  Vec x(m.cols);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.a[r][m.cols];
  return x;
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v) {
  int dim = static_cast<int>(v.size());
  Matrix m(dim, static_cast<int>(span.size()));
  for (size_t j = 0; j < span.size(); ++j) {
    if (static_cast<int>(span[j].size()) != dim) throw DimensionError("span vector size mismatch");
    for (int i = 0; i < dim; ++i) m.a[i][j] = span[j][i];
  }
  return solve(m, v);
}

bool in_span(const std::vector<Vec>& span, const Vec& v) {
  return coordinates_in_span(span, v).has_value();
}

std::vector<int> independent_subset(const std::vector<Vec>& vectors) {
  std::vector<int> chosen;
  std::vector<Vec> acc;
  for (size_t i = 0; i < vectors.size(); ++i) {
    bool nonzero = false;
    for (const auto& c : vectors[i]) nonzero = nonzero || !c.is_zero();
    if (!nonzero) continue;
    if (!in_span(acc, vectors[i])) {
      acc.push_back(vectors[i]);
      chosen.push_back(static_cast<int>(i));
    }
  }
  return chosen;
}

}  // namespace dga
