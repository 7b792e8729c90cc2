#include <algorithm>

#include "triplane/core/linalg.hpp"
#include "triplane/core/ops.hpp"
#include "triplane/steiner/steiner.hpp"

namespace triplane {

LineInDualPlane LineInDualPlane::normalized(const PrimeField& k, std::array<Coeff, 3> c) {
  int p = 0;
  while (p < 3 && c[p] == 0) ++p;
  if (p == 3) throw DomainError("line: all coefficients are zero");
  const Coeff inv = k.inv(c[p]);
  LineInDualPlane L;
  for (int j = 0; j < 3; ++j) L.c[j] = k.mul(c[j], inv);
  return L;
}

LineInDualPlane LineInDualPlane::of_form(const Polynomial& H) {
  const Ring& r = *H.ring();
  if (r.nvars() != 3) throw UsageError("line: form must live in three variables");
  std::array<Coeff, 3> c{0, 0, 0};
  for (const Term& t : H.terms()) {
    if (t.m.deg != 1) throw UsageError("line: form is not linear");
    int v = 0;
    while (!t.m.exp(v)) ++v;
    c[v] = t.c;
  }
  return normalized(r.field(), c);
}

int LineInDualPlane::pivot() const {
  for (int j = 0; j < 3; ++j)
    if (c[j]) return j;
  return -1;
}

Polynomial LineInDualPlane::equation(const RingPtr& plane) const {
  Polynomial h(plane);
  for (int j = 0; j < 3; ++j)
    if (c[j]) h += Polynomial::variable(plane, j).scale(c[j]);
  return h;
}

std::string LineInDualPlane::to_string() const {
  return "(" + std::to_string(c[0]) + ":" + std::to_string(c[1]) + ":" + std::to_string(c[2]) + ")";
}

std::string SplittingType::to_string() const {
  return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
}

std::string to_string(SteinerKind k) {
  switch (k) {
    case SteinerKind::Generic:
      return "generic";
    case SteinerKind::Logarithmic:
      return "logarithmic";
    case SteinerKind::Schwarzenberger:
      return "schwarzenberger";
    case SteinerKind::Given:
      break;
  }
  return "given";
}

SteinerKind steiner_kind_from_string(const std::string& s) {
  if (s == "generic") return SteinerKind::Generic;
  if (s == "logarithmic") return SteinerKind::Logarithmic;
  if (s == "schwarzenberger") return SteinerKind::Schwarzenberger;
  if (s == "given") return SteinerKind::Given;
  throw UsageError("unknown presentation kind '" + s + "'");
}

SteinerPresentation SteinerPresentation::from_matrix(const PolyMatrix& M, SteinerKind kind) {
  if (!M.ring() || M.ring()->nvars() != 3) throw UsageError("steiner: matrix must be over a ring in three variables");
  const int b = M.rows() + 2;
  if (b < 5 || M.cols() != b - 4) throw UsageError("steiner: matrix must be (b-2) x (b-4) with b >= 5");
  linear_coefficients(M);
  SteinerPresentation P;
  P.b = b;
  P.kind = kind;
  P.matrix = M;
  P.matrix.set_row_degrees(std::vector<int>(M.rows(), 0));
  P.matrix.set_col_degrees(std::vector<int>(M.cols(), 1));
  return P;
}

RingPtr plane_ring(std::uint32_t prime) { return make_ring(prime, indexed_names("x", 3)); }

namespace {

void check_plane(const RingPtr& plane, int b) {
  if (!plane || plane->nvars() != 3) throw UsageError("steiner: need a ring in three variables");
  if (b < 5) throw UsageError("steiner: b must be at least 5");
}

bool candidates_unstable(const SteinerPresentation& P) {
  for (const LineInDualPlane& L : P.candidates)
    if (!is_unstable(P, L)) return false;
  return true;
}

bool pairwise_distinct(std::vector<LineInDualPlane> lines) {
  std::sort(lines.begin(), lines.end());
  return std::adjacent_find(lines.begin(), lines.end()) == lines.end();
}

bool no_three_concurrent(const PrimeField& k, const std::vector<LineInDualPlane>& lines) {
  const int n = static_cast<int>(lines.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        ScalarMatrix m(3, 3);
        for (int j = 0; j < 3; ++j) {
          m(0, j) = lines[a].c[j];
          m(1, j) = lines[b].c[j];
          m(2, j) = lines[c].c[j];
        }
        if (determinant(k, m) == 0) return false;
      }
  return true;
}

}  // namespace

SteinerPresentation gen_steiner_matrix(const RingPtr& plane, int b, int alpha, Rng& rng, int max_attempts) {
  check_plane(plane, b);
  if (alpha < 0 || alpha > b - 2) throw UsageError("gen_steiner_matrix: alpha must lie in 0..b-2");
  const PrimeField& k = plane->field();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    PolyMatrix M(plane, b - 2, b - 4, std::vector<int>(b - 2, 0), std::vector<int>(b - 4, 1));
    std::vector<LineInDualPlane> lines;
    for (int j = 0; j < alpha; ++j) {
      const Polynomial H = random_linear_form(plane, rng);
      lines.push_back(LineInDualPlane::of_form(H));
      for (int c = 0; c < b - 4; ++c) M.at(j, c) = H.scale(random_scalar(k, rng));
    }
    for (int j = alpha; j < b - 2; ++j)
      for (int c = 0; c < b - 4; ++c) M.at(j, c) = random_form(plane, 1, rng);
    if (!pairwise_distinct(lines)) continue;
    SteinerPresentation P = SteinerPresentation::from_matrix(M, SteinerKind::Generic);
    P.intended_alpha = alpha;
    P.seed = rng.seed();
    P.candidates = lines;
    if (is_locally_free(P) && candidates_unstable(P)) return P;
  }
  throw GenerationError("gen_steiner_matrix: no locally free draw with the requested unstable lines after " +
                            std::to_string(max_attempts) + " attempts (seed " + std::to_string(rng.seed()) + ")",
                        rng.seed());
}

SteinerPresentation gen_logarithmic_matrix(const RingPtr& plane, int b, Rng& rng, int max_attempts) {
  check_plane(plane, b);
  const PrimeField& k = plane->field();
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<LineInDualPlane> lines;
    Polynomial f = Polynomial::constant(plane, 1);
    for (int j = 0; j < b - 1; ++j) {
      const Polynomial H = random_linear_form(plane, rng);
      lines.push_back(LineInDualPlane::of_form(H));
      f *= H;
    }
    if (!pairwise_distinct(lines) || !no_three_concurrent(k, lines)) continue;
    const PolyMatrix Z1 = syzygies(jacobian(f));
    const PolyMatrix Z2 = syzygies(Z1);
    if (Z2.rows() != b - 2 || Z2.cols() != b - 4) continue;
    bool linear = true;
    for (int i = 0; i < Z2.rows() && linear; ++i)
      for (int j = 0; j < Z2.cols(); ++j)
        if (!Z2.at(i, j).is_zero() && Z2.at(i, j).degree() != 1) {
          linear = false;
          break;
        }
    if (!linear) continue;
    SteinerPresentation P = SteinerPresentation::from_matrix(Z2, SteinerKind::Logarithmic);
    P.intended_alpha = b - 1;
    P.seed = rng.seed();
    P.candidates = lines;
    std::sort(P.candidates.begin(), P.candidates.end());
    if (is_locally_free(P) && candidates_unstable(P)) return P;
  }
  throw GenerationError("gen_logarithmic_matrix: no general line arrangement after " + std::to_string(max_attempts) +
                            " attempts (seed " + std::to_string(rng.seed()) + ")",
                        rng.seed());
}

SteinerPresentation gen_schwarzenberger_matrix(const RingPtr& plane, int b) {
  check_plane(plane, b);
  if (b < 7) throw UsageError("gen_schwarzenberger_matrix: b must be at least 7");
  PolyMatrix M(plane, b - 2, b - 4);
  for (int i = 0; i < b - 2; ++i)
    for (int c = 0; c < b - 4; ++c)
      if (i - c >= 0 && i - c <= 2) M.at(i, c) = Polynomial::variable(plane, i - c);
  return SteinerPresentation::from_matrix(M, SteinerKind::Schwarzenberger);
}

std::vector<std::vector<std::vector<Coeff>>> linear_coefficients(const PolyMatrix& M) {
  const int n = M.ring()->nvars();
  std::vector<std::vector<std::vector<Coeff>>> a(M.rows(),
                                                 std::vector<std::vector<Coeff>>(M.cols(), std::vector<Coeff>(n, 0)));
  for (int i = 0; i < M.rows(); ++i)
    for (int c = 0; c < M.cols(); ++c)
      for (const Term& t : M.at(i, c).terms()) {
        if (t.m.deg != 1 || t.m.comp != 0) throw UsageError("matrix entry is not a linear form");
        int v = 0;
        while (!t.m.exp(v)) ++v;
        a[i][c][v] = t.c;
      }
  return a;
}

PolyMatrix fliptensor(const PolyMatrix& M, const RingPtr& target) {
  if (target->nvars() != M.rows()) throw UsageError("fliptensor: target ring needs one variable per row");
  if (!(target->field() == M.ring()->field())) throw UsageError("fliptensor: rings over different fields");
  const auto a = linear_coefficients(M);
  const int n = M.ring()->nvars();
  PolyMatrix N(target, n, M.cols(), std::vector<int>(n, 0), std::vector<int>(M.cols(), 1));
  for (int j = 0; j < n; ++j)
    for (int c = 0; c < M.cols(); ++c) {
      std::vector<Term> t;
      for (int i = 0; i < M.rows(); ++i)
        if (a[i][c][j]) t.push_back({target->variable(i), a[i][c][j]});
      N.at(j, c) = Polynomial::from_terms(target, std::move(t));
    }
  return N;
}

PolyMatrix fliptensor(const SteinerPresentation& P) {
  const RingPtr S = make_ring(P.ring()->field().characteristic(), indexed_names("y", P.b - 2));
  return fliptensor(P.matrix, S);
}

bool is_locally_free(const SteinerPresentation& P, const GroebnerOptions& opts) {
  return is_projectively_empty(minors(P.matrix, P.b - 4), opts);
}

}  // namespace triplane
