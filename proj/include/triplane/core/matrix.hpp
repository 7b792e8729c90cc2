#pragma once

#include <vector>

#include "triplane/core/polynomial.hpp"

namespace triplane {

/// Matrix of polynomials viewed as a graded map
///   ⊕_j R(-col_degrees[j]) -> ⊕_i R(-row_degrees[i]),
/// so a homogeneous entry (i, j) has degree col_degrees[j] - row_degrees[i].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, int rows, int cols);
  PolyMatrix(RingPtr ring, int rows, int cols, std::vector<int> row_degrees, std::vector<int> col_degrees);

  static PolyMatrix identity(RingPtr ring, int n, std::vector<int> degrees = {});
  /// Columns given as module vectors (component i = row i).
  static PolyMatrix from_columns(RingPtr ring, int rows, const std::vector<Polynomial>& cols,
                                 std::vector<int> row_degrees = {});

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Polynomial& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  Polynomial& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<int>& row_degrees() const { return row_deg_; }
  const std::vector<int>& col_degrees() const { return col_deg_; }
  void set_row_degrees(std::vector<int> d);
  void set_col_degrees(std::vector<int> d);
  /// Recomputes column degrees from the first nonzero entry of each column
  /// (zero columns keep their current degree).
  void infer_col_degrees();

  bool is_zero() const;
  /// Every nonzero entry (i, j) homogeneous of degree col_j - row_j.
  bool is_degree_compatible() const;

  PolyMatrix transpose() const;
  PolyMatrix operator*(const PolyMatrix& b) const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix column_block(const std::vector<int>& cols) const { return submatrix(all_rows(), cols); }
  /// Horizontal concatenation (same target).
  PolyMatrix concat(const PolyMatrix& b) const;

  /// Column j as a module vector with component i for row i.
  Polynomial column(int j) const;
  std::vector<Polynomial> columns() const;

  std::vector<int> all_rows() const;
  std::vector<int> all_cols() const;

  bool operator==(const PolyMatrix& b) const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<Polynomial> e_;
  std::vector<int> row_deg_, col_deg_;
};

/// Determinant by Laplace expansion along the first row (small sizes only).
Polynomial determinant(const PolyMatrix& m);

}  // namespace triplane
