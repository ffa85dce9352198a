#pragma once

#include <optional>
#include <vector>

#include "dga/rational.hpp"

namespace dga {

using Vec = std::vector<GaussianRational>;

/// Dense exact matrix over Q(i). Row/column counts are explicit so that
/// zero-dimensional complexes keep their shape information.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Vec> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(r, Vec(c)) {}

  Vec& operator[](int r) { return a[r]; }
  const Vec& operator[](int r) const { return a[r]; }

  static Matrix identity(int n);
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mul(const Matrix& x, const Matrix& y);
Vec mul(const Matrix& x, const Vec& v);
Matrix transpose(const Matrix& x);

/// Reduced row echelon form; returns pivot column indices.
std::vector<int> rref_inplace(Matrix& m);

int rank(Matrix m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// One exact solution of m x = b, if consistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Coordinates of v in span(basis vectors), if it lies there.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v);
bool in_span(const std::vector<Vec>& span, const Vec& v);
/// A maximal linearly independent subset (indices) of the given vectors.
std::vector<int> independent_subset(const std::vector<Vec>& vectors);

}  // namespace dga
