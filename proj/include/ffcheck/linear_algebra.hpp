#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ffcheck/error.hpp"

namespace ffcheck {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Fraction-free determinant (Bareiss). R is an integral domain and
/// exact_div(a, b) must return a/b for every b dividing a.
template <class R, class ExactDiv>
R bareiss_determinant(Matrix<R> m, ExactDiv exact_div) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == R(0)) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == R(0)) ++swap_row;
      if (swap_row == n) return R(0);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = R(m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R(-det) : det;
}

/// Determinant over a field by Gaussian elimination.
template <class K>
K field_determinant(Matrix<K> m) {
  const std::size_t n = m.size();
  K det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == K(0)) ++pivot;
    if (pivot == n) return K(0);
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      det = K(-det);
    }
    det = K(det * m[k][k]);
    const K inv = K(K(1) / m[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == K(0)) continue;
      const K factor = K(m[i][k] * inv);
      for (std::size_t j = k; j < n; ++j) m[i][j] = K(m[i][j] - factor * m[k][j]);
    }
  }
  return det;
}

/// Basis of the right nullspace {x : m x = 0} over a field.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, std::size_t columns) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == K(0)) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const K inv = K(K(1) / m[r][c]);
    for (std::size_t j = c; j < columns; ++j) m[r][j] = K(m[r][j] * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == K(0)) continue;
      const K factor = m[i][c];
      for (std::size_t j = c; j < columns; ++j) m[i][j] = K(m[i][j] - factor * m[r][j]);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> x(columns, K(0));
    x[free] = K(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = K(-m[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace ffcheck
