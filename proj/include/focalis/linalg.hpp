#pragma once

#include <optional>
#include <vector>

#include "focalis/error.hpp"

namespace focalis {

// Dense linear algebra over an exact field (GaussianRational or
// RationalFunction): row reduction, solving, nullspaces, determinants.
template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
int rref(Mat<F>& m) {
  int rank = 0;
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  for (size_t col = 0; col < cols && (size_t)rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    F inv = F(1) / m[rank][col];
    for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == (size_t)rank || m[i][col].is_zero()) continue;
      F f = m[i][col];
      for (size_t j = col; j < cols; ++j)
        m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

template <class F>
int rank_of(Mat<F> m) {
  return rref(m);
}

// Basis of { x : m x = 0 }, in canonical RREF-derived form.
template <class F>
Mat<F> nullspace(Mat<F> m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  int rank = rref(m);
  std::vector<long> pivot_of_col(cols, -1);
  {
    size_t r = 0;
    for (size_t c = 0; c < cols && r < (size_t)rank; ++c) {
      if (!m[r][c].is_zero()) {
        pivot_of_col[c] = (long)r;
        ++r;
      }
    }
  }
  Mat<F> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<F> v(cols, F(0));
    v[c] = F(1);
    for (size_t cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = -m[pivot_of_col[cc]][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Particular solution of m x = b; nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve_particular(Mat<F> m,
                                               const std::vector<F>& b) {
  if (m.size() != b.size()) fail(Errc::dimension_mismatch, "solve: rows");
  if (m.empty()) return std::vector<F>{};
  size_t cols = m[0].size();
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  rref(m);
  std::vector<F> x(cols, F(0));
  for (size_t i = 0; i < m.size(); ++i) {
    size_t lead = 0;
    while (lead < cols + 1 && m[i][lead].is_zero()) ++lead;
    if (lead == cols + 1) continue;         // zero row
    if (lead == cols) return std::nullopt;  // 0 = nonzero
    x[lead] = m[i][cols];
  }
  return x;
}

template <class F>
F det(Mat<F> m) {
  size_t n = m.size();
  F d = F(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return F(0);
    if (piv != k) {
      std::swap(m[k], m[piv]);
      d = -d;
    }
    d = d * m[k][k];
    F inv = F(1) / m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      F f = m[i][k] * inv;
      for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
    }
  }
  return d;
}

}  // namespace focalis
