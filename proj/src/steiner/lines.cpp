#include <algorithm>
#include <stdexcept>

#include "triplane/core/linalg.hpp"
#include "triplane/core/ops.hpp"
#include "triplane/steiner/steiner.hpp"

namespace triplane {

RingPtr line_ring(std::uint32_t prime) { return make_ring(prime, indexed_names("u", 2)); }

PolyMatrix restrict_to_line(const SteinerPresentation& P, const LineInDualPlane& L, int pivot) {
  const PrimeField& k = P.ring()->field();
  if (pivot < 0) pivot = L.pivot();
  if (pivot > 2 || L.c[pivot] == 0) throw UsageError("restrict_to_line: pivot coordinate of the line is zero");
  const RingPtr U = line_ring(k.characteristic());
  std::vector<Polynomial> images(3, Polynomial(U));
  const Coeff inv = k.inv(L.c[pivot]);
  int u = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == pivot) continue;
    images[j] = Polynomial::variable(U, u);
    images[pivot] -= Polynomial::variable(U, u).scale(k.mul(L.c[j], inv));
    ++u;
  }
  PolyMatrix R = substitute(P.matrix, U, images);
  R.set_row_degrees(P.matrix.row_degrees());
  R.set_col_degrees(P.matrix.col_degrees());
  return R;
}

SplittingType splitting_type(const SteinerPresentation& P, const LineInDualPlane& L, int pivot) {
  PolyMatrix T = restrict_to_line(P, L, pivot).transpose();
  T.set_row_degrees(std::vector<int>(T.rows(), -1));
  T.set_col_degrees(std::vector<int>(T.cols(), 0));
  const PolyMatrix K = syzygies(T);
  if (K.cols() != 2)
    throw DomainError("splitting_type: restriction to " + L.to_string() + " is not a rank-2 bundle (kernel has " +
                      std::to_string(K.cols()) + " generators)");
  SplittingType s{K.col_degrees()[0], K.col_degrees()[1]};
  if (s.first > s.second) std::swap(s.first, s.second);
  if (s.first + s.second != P.b - 4)
    throw DomainError("splitting_type: degrees " + s.to_string() + " on " + L.to_string() + " do not add up to b-4");
  return s;
}

bool is_unstable(const SteinerPresentation& P, const LineInDualPlane& L) { return splitting_type(P, L).first == 0; }

namespace {

/// A constant vector v with v^T M|_L = 0 exists, i.e. O is a summand of the dual
/// restriction. a is the coefficient tensor of M.
bool constant_left_kernel(const PrimeField& k, const std::vector<std::vector<std::vector<Coeff>>>& a,
                          const LineInDualPlane& L, ScalarMatrix& scratch) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  const int p = L.pivot();
  const int free_vars[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c)
      for (int f = 0; f < 2; ++f) {
        const int j = free_vars[p][f];
        scratch(i, 2 * c + f) = k.sub(a[i][c][j], k.mul(a[i][c][p], L.c[j]));
      }
  return rank(k, scratch) < rows;
}

}  // namespace

int veronese_rank(const PrimeField& k, const std::vector<LineInDualPlane>& pts) {
  ScalarMatrix m(static_cast<int>(pts.size()), 6);
  for (int r = 0; r < m.rows; ++r) {
    const auto& c = pts[r].c;
    m(r, 0) = k.mul(c[0], c[0]);
    m(r, 1) = k.mul(c[0], c[1]);
    m(r, 2) = k.mul(c[0], c[2]);
    m(r, 3) = k.mul(c[1], c[1]);
    m(r, 4) = k.mul(c[1], c[2]);
    m(r, 5) = k.mul(c[2], c[2]);
  }
  return rank(k, m);
}

std::vector<LineInDualPlane> unstable_lines(const SteinerPresentation& P, LineSearch mode) {
  std::vector<LineInDualPlane> out;
  if (mode == LineSearch::Candidates) {
    for (const LineInDualPlane& L : P.candidates)
      if (is_unstable(P, L)) out.push_back(L);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  const PrimeField& k = P.ring()->field();
  const Coeff p = k.characteristic();
  if (p > 1000) throw UsageError("unstable_lines: exhaustive search needs p <= 1000, got " + std::to_string(p));
  const auto a = linear_coefficients(P.matrix);
  ScalarMatrix scratch(P.b - 2, 2 * (P.b - 4));
  auto test = [&](const LineInDualPlane& L) {
    if (constant_left_kernel(k, a, L, scratch)) out.push_back(L);
  };
  for (Coeff s = 0; s < p; ++s)
    for (Coeff t = 0; t < p; ++t) test(LineInDualPlane{{1, s, t}});
  for (Coeff t = 0; t < p; ++t) test(LineInDualPlane{{0, 1, t}});
  test(LineInDualPlane{{0, 0, 1}});
  for (const LineInDualPlane& L : out)
    if (splitting_type(P, L).first != 0) throw std::logic_error("unstable_lines: prefilter disagrees on " + L.to_string());
  std::sort(out.begin(), out.end());
  if (static_cast<int>(out.size()) > P.b - 1 && P.b > 5 && veronese_rank(k, out) > 5)
    throw std::logic_error("unstable_lines: " + std::to_string(out.size()) +
                           " unstable lines, more than b-1 and not on a conic; the presentation is not locally free");
  return out;
}

}  // namespace triplane
