#include "triplane/core/matrix.hpp"

#include <numeric>

namespace triplane {

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : PolyMatrix(std::move(ring), rows, cols, std::vector<int>(rows, 0), std::vector<int>(cols, 0)) {}

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols, std::vector<int> row_degrees, std::vector<int> col_degrees)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      e_(static_cast<std::size_t>(rows) * cols, Polynomial(ring_)),
      row_deg_(std::move(row_degrees)), col_deg_(std::move(col_degrees)) {
  if (rows < 0 || cols < 0) throw UsageError("matrix: negative size");
  if (static_cast<int>(row_deg_.size()) != rows || static_cast<int>(col_deg_.size()) != cols)
    throw UsageError("matrix: degree list does not match size");
}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n, std::vector<int> degrees) {
  if (degrees.empty()) degrees.assign(n, 0);
  PolyMatrix m(ring, n, n, degrees, degrees);
  for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, int rows, const std::vector<Polynomial>& cols,
                                    std::vector<int> row_degrees) {
  if (row_degrees.empty()) row_degrees.assign(rows, 0);
  PolyMatrix m(ring, rows, static_cast<int>(cols.size()), row_degrees, std::vector<int>(cols.size(), 0));
  for (int j = 0; j < m.cols_; ++j) {
    std::vector<std::vector<Term>> per_row(rows);
    for (const Term& t : cols[j].terms()) {
      if (static_cast<int>(t.m.comp) >= rows) throw UsageError("matrix: column vector component out of range");
      Monomial mm = t.m;
      mm.comp = 0;
      per_row[t.m.comp].push_back({mm, t.c});
    }
    for (int i = 0; i < rows; ++i) m.at(i, j) = Polynomial::from_sorted(ring, std::move(per_row[i]));
    if (!cols[j].is_zero()) {
      const Term& lt = cols[j].lead();
      m.col_deg_[j] = lt.m.deg + row_degrees[lt.m.comp];
    }
  }
  return m;
}

void PolyMatrix::set_row_degrees(std::vector<int> d) {
  if (static_cast<int>(d.size()) != rows_) throw UsageError("matrix: row degree count");
  row_deg_ = std::move(d);
}

void PolyMatrix::set_col_degrees(std::vector<int> d) {
  if (static_cast<int>(d.size()) != cols_) throw UsageError("matrix: column degree count");
  col_deg_ = std::move(d);
}

void PolyMatrix::infer_col_degrees() {
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) {
        col_deg_[j] = at(i, j).lead().m.deg + row_deg_[i];
        break;
      }
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_degree_compatible() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Polynomial& p = at(i, j);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.lead().m.deg != col_deg_[j] - row_deg_[i]) return false;
    }
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  std::vector<int> rd(cols_), cd(rows_);
  for (int j = 0; j < cols_; ++j) rd[j] = -col_deg_[j];
  for (int i = 0; i < rows_; ++i) cd[i] = -row_deg_[i];
  PolyMatrix t(ring_, cols_, rows_, rd, cd);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& b) const {
  if (cols_ != b.rows_) throw UsageError("matrix: size mismatch in product");
  PolyMatrix c(ring_, rows_, b.cols_, row_deg_, b.col_deg_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      Polynomial s(ring_);
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s += at(i, k) * b.at(k, j);
      }
      c.at(i, j) = std::move(s);
    }
  return c;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& r, const std::vector<int>& c) const {
  std::vector<int> rd, cd;
  for (int i : r) rd.push_back(row_deg_.at(i));
  for (int j : c) cd.push_back(col_deg_.at(j));
  PolyMatrix s(ring_, static_cast<int>(r.size()), static_cast<int>(c.size()), rd, cd);
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b) s.at(static_cast<int>(a), static_cast<int>(b)) = at(r[a], c[b]);
  return s;
}

PolyMatrix PolyMatrix::concat(const PolyMatrix& b) const {
  if (rows_ != b.rows_) throw UsageError("matrix: row mismatch in concat");
  std::vector<int> cd = col_deg_;
  cd.insert(cd.end(), b.col_deg_.begin(), b.col_deg_.end());
  PolyMatrix c(ring_, rows_, cols_ + b.cols_, row_deg_, cd);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) c.at(i, j) = at(i, j);
    for (int j = 0; j < b.cols_; ++j) c.at(i, cols_ + j) = b.at(i, j);
  }
  return c;
}

Polynomial PolyMatrix::column(int j) const {
  std::vector<Term> terms;
  for (int i = 0; i < rows_; ++i)
    for (const Term& t : at(i, j).terms()) {
      Monomial m = t.m;
      m.comp = static_cast<std::uint32_t>(i);
      terms.push_back({m, t.c});
    }
  return Polynomial::from_terms(ring_, std::move(terms));
}

std::vector<Polynomial> PolyMatrix::columns() const {
  std::vector<Polynomial> out;
  for (int j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

std::vector<int> PolyMatrix::all_rows() const {
  std::vector<int> v(rows_);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> PolyMatrix::all_cols() const {
  std::vector<int> v(cols_);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool PolyMatrix::operator==(const PolyMatrix& b) const {
  return rows_ == b.rows_ && cols_ == b.cols_ && e_ == b.e_;
}

std::string PolyMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += "| ";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
    s += " |\n";
  }
  return s;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant: matrix is not square");
  const int n = m.rows();
  const RingPtr& r = m.ring();
  if (n == 0) return Polynomial::constant(r, 1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  Polynomial det(r);
  std::vector<int> rows;
  for (int i = 1; i < n; ++i) rows.push_back(i);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<int> cols;
    for (int k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Polynomial term = m.at(0, j) * determinant(m.submatrix(rows, cols));
    det = (j % 2) ? det - term : det + term;
  }
  return det;
}

}  // namespace triplane
