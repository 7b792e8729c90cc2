#pragma once

#include <vector>

#include "triplane/core/field.hpp"

namespace triplane {

/// Dense row-major matrix over F_p.
struct ScalarMatrix {
  int rows = 0, cols = 0;
  std::vector<Coeff> a;

  ScalarMatrix() = default;
  ScalarMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  Coeff& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Coeff operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(const PrimeField& k, ScalarMatrix& m);
int rank(const PrimeField& k, ScalarMatrix m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Coeff>> nullspace(const PrimeField& k, ScalarMatrix m);
/// Basis of {w : w^T m = 0}.
std::vector<std::vector<Coeff>> left_nullspace(const PrimeField& k, const ScalarMatrix& m);
ScalarMatrix transpose(const ScalarMatrix& m);
Coeff determinant(const PrimeField& k, ScalarMatrix m);

}  // namespace triplane
