#pragma once

#include <cassert>
#include <vector>

#include "rhv/rational.hpp"

namespace rhv {

// Dense exact linear algebra over a field F (Rat or the complex rationals in
// octonion.hpp).  F needs +,-,*,/, default construction to zero and
// operator==.  Everything here is small and dense; the sparse machinery for
// polynomial systems lives in poly.hpp.

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Reduced row echelon form in place; returns pivot column indices.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!(m[i][c] == F())) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    F inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] / inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      if (m[i][c] == F()) continue;
      F f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right kernel {x : m x = 0}.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m, int cols) {
  if (m.empty()) {
    Matrix<F> id(cols, std::vector<F>(cols));
    for (int i = 0; i < cols; ++i) id[i][i] = F(1);
    return id;
  }
  std::vector<int> piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  Matrix<F> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols);
    v[f] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F() - m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a square matrix; asserts nonsingularity.
template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  const int n = static_cast<int>(a.size());
  Matrix<F> m(n, std::vector<F>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = F(1);
  }
  std::vector<int> piv = rref(m);
  assert(static_cast<int>(piv.size()) == n && "singular matrix");
  Matrix<F> inv(n, std::vector<F>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace rhv
