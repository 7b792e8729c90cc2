#include "triplane/core/linalg.hpp"

#include <utility>

namespace triplane {

std::vector<int> row_reduce(const PrimeField& k, ScalarMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m(i, col)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    const Coeff inv = k.inv(m(row, col));
    for (int j = col; j < m.cols; ++j) m(row, j) = k.mul(m(row, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || !m(i, col)) continue;
      const Coeff f = m(i, col);
      for (int j = col; j < m.cols; ++j)
        if (m(row, j)) m(i, j) = k.sub(m(i, j), k.mul(f, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const PrimeField& k, ScalarMatrix m) { return static_cast<int>(row_reduce(k, m).size()); }

std::vector<std::vector<Coeff>> nullspace(const PrimeField& k, ScalarMatrix m) {
  const std::vector<int> piv = row_reduce(k, m);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Coeff>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Coeff> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = k.neg(m(static_cast<int>(r), f));
    basis.push_back(std::move(v));
  }
  return basis;
}

ScalarMatrix transpose(const ScalarMatrix& m) {
  ScalarMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

std::vector<std::vector<Coeff>> left_nullspace(const PrimeField& k, const ScalarMatrix& m) {
  return nullspace(k, transpose(m));
}

Coeff determinant(const PrimeField& k, ScalarMatrix m) {
  if (m.rows != m.cols) throw UsageError("determinant: matrix is not square");
  Coeff det = 1;
  for (int col = 0; col < m.cols; ++col) {
    int p = -1;
    for (int i = col; i < m.rows; ++i)
      if (m(i, col)) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(col, j));
      det = k.neg(det);
    }
    det = k.mul(det, m(col, col));
    const Coeff inv = k.inv(m(col, col));
    for (int i = col + 1; i < m.rows; ++i) {
      if (!m(i, col)) continue;
      const Coeff f = k.mul(m(i, col), inv);
      for (int j = col; j < m.cols; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(col, j)));
    }
  }
  return det;
}

}  // namespace triplane
