#include "doctest.h"
#include "triplane/core/linalg.hpp"
#include "triplane/core/ops.hpp"
#include "triplane/steiner/steiner.hpp"

using namespace triplane;

namespace {

// h0(S^2 F(-2)) by plain linear algebra: such a section is a skew form on the
// column space W = k^{b-4} that vanishes against every row of M, i.e. the
// kernel of Lambda^2 W (x) k^3 -> W (x) k^{b-2}.
long long h0_S2_m2_oracle(const SteinerPresentation& P) {
  const auto a = linear_coefficients(P.matrix);
  const PrimeField& k = P.ring()->field();
  const int n = P.b - 2, w = P.b - 4;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < w; ++x)
    for (int y = x + 1; y < w; ++y) pairs.push_back({x, y});
  ScalarMatrix m(w * n, static_cast<int>(pairs.size()) * 3);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int j = 0; j < 3; ++j) {
      const int col = static_cast<int>(p) * 3 + j;
      const auto [kk, l] = pairs[p];
      for (int i = 0; i < n; ++i) {
        m(kk * n + i, col) = k.add(m(kk * n + i, col), a[i][l][j]);
        m(l * n + i, col) = k.sub(m(l * n + i, col), a[i][kk][j]);
      }
    }
  return static_cast<long long>(pairs.size()) * 3 - rank(k, m);
}

PolyMatrix invertible_scalar(const RingPtr& r, int n, Rng& rng) {
  for (;;) {
    PolyMatrix A = random_scalar_matrix(r, n, n, rng);
    if (!determinant(A).is_zero()) return A;
  }
}

}  // namespace

TEST_SUITE("steiner") {

TEST_CASE("generated presentations are locally free") {
  const RingPtr r = plane_ring();
  Rng root(1);
  for (int alpha = 0; alpha <= 6; ++alpha) {
    Rng rng = root.substream("alpha-" + std::to_string(alpha));
    const SteinerPresentation P = gen_steiner_matrix(r, 8, alpha, rng);
    CHECK(P.matrix.rows() == 6);
    CHECK(P.matrix.cols() == 4);
    CHECK(P.kind == SteinerKind::Generic);
    CHECK(P.candidates.size() == static_cast<std::size_t>(alpha));
    CHECK(is_locally_free(P));
    for (const LineInDualPlane& L : P.candidates) CHECK(splitting_type(P, L) == SplittingType{0, 4});
  }
  Rng rng = root.substream("log");
  const SteinerPresentation L = gen_logarithmic_matrix(r, 8, rng);
  CHECK(L.matrix.rows() == 6);
  CHECK(L.matrix.cols() == 4);
  CHECK(L.candidates.size() == 7);
  CHECK(is_locally_free(L));
  CHECK(unstable_lines(L, LineSearch::Candidates).size() == 7);
}

TEST_CASE("local freeness fails at a forced rank drop") {
  const RingPtr r = plane_ring();
  Rng rng(3);
  SteinerPresentation P = gen_steiner_matrix(r, 8, 0, rng);
  // drop the x0 part of column 0 so the column vanishes at (1:0:0)
  for (int i = 0; i < 6; ++i) {
    Polynomial e(r);
    for (const Term& t : P.matrix.at(i, 0).terms())
      if (t.m.exp(0) == 0) e += Polynomial::term(r, t.m, t.c);
    P.matrix.at(i, 0) = e;
  }
  CHECK_FALSE(is_locally_free(P));
}

TEST_CASE("the Euler presentation for b = 5") {
  const RingPtr r = plane_ring();
  PolyMatrix M(r, 3, 1);
  for (int i = 0; i < 3; ++i) M.at(i, 0) = Polynomial::variable(r, i);
  const SteinerPresentation P = SteinerPresentation::from_matrix(M);
  CHECK(is_locally_free(P));
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const LineInDualPlane L = LineInDualPlane::of_form(random_linear_form(r, rng));
    CHECK(splitting_type(P, L) == SplittingType{0, 1});
  }
  const SteinerCriterion c = steiner_criterion_check(P);
  CHECK(c.h0_F_m1 == 0);
  CHECK(c.h0_F == 3);
  CHECK(c.h1_F_m2 == 1);
  CHECK(c.ok);

  Rng lr(6);
  const SteinerPresentation T = gen_logarithmic_matrix(r, 5, lr);
  CHECK(T.matrix.rows() == 3);
  CHECK(T.matrix.cols() == 1);
  CHECK(is_locally_free(T));
  CHECK(steiner_criterion_check(T).ok);
  for (int t = 0; t < 10; ++t)
    CHECK(splitting_type(T, LineInDualPlane::of_form(random_linear_form(r, rng))) == SplittingType{0, 1});
}

TEST_CASE("Schwarzenberger presentations") {
  const RingPtr r = plane_ring();
  const SteinerPresentation P = gen_schwarzenberger_matrix(r, 7);
  REQUIRE(P.matrix.rows() == 5);
  REQUIRE(P.matrix.cols() == 3);
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < 3; ++k) {
      const int d = i - k;
      if (d >= 0 && d <= 2)
        CHECK(P.matrix.at(i, k) == Polynomial::variable(r, d));
      else
        CHECK(P.matrix.at(i, k).is_zero());
    }
  CHECK(is_locally_free(P));
  const SteinerCriterion c = steiner_criterion_check(P);
  CHECK(c.h0_F_m1 == 0);
  CHECK(c.h0_F == 5);
  CHECK(c.h1_F_m2 == 3);
  CHECK(sheaf_sections(sym_power_module(P, 3), -1) == 12);

  const SteinerPresentation P8 = gen_schwarzenberger_matrix(r, 8);
  CHECK(P8.matrix.rows() == 6);
  CHECK(is_locally_free(P8));
  CHECK(sheaf_sections(sym_power_module(P8, 2), -2) == h0_S2_m2_oracle(P8));
}

TEST_CASE("Steiner criterion on b = 8") {
  const RingPtr r = plane_ring();
  Rng rng(10);
  const SteinerPresentation P = gen_steiner_matrix(r, 8, 0, rng);
  const SteinerCriterion c = steiner_criterion_check(P);
  CHECK(c.h0_F_m1 == 0);
  CHECK(c.h0_F == 6);
  CHECK(c.h1_F_m2 == 4);
  CHECK(c.h2_F_m2 == 0);
  CHECK(c.ok);
  CHECK(c.chi_F_m2 == rank2_euler_characteristic(4, 10, -2));
  CHECK(sheaf_sections(GradedModule::cokernel(P.matrix), -1) == 0);
}

TEST_CASE("sheaf sections of the structure module") {
  const RingPtr r = plane_ring();
  const GradedModule O = GradedModule::free(r, {0});
  CHECK(sheaf_sections(O, 2) == 6);
  CHECK(sheaf_sections(O, -1) == 0);
  // the maximal ideal has the same sheaf as R
  const Ideal m(r, {Polynomial::variable(r, 0), Polynomial::variable(r, 1), Polynomial::variable(r, 2)});
  const GradedModule M = GradedModule::subquotient(r, {0}, m.generators(), {});
  CHECK(sheaf_sections(M, 0) == 1);
}

TEST_CASE("symmetric powers") {
  const RingPtr r = plane_ring();
  Rng rng(2);
  const SteinerPresentation P = gen_steiner_matrix(r, 8, 2, rng);
  const GradedModule S1 = sym_power_module(P, 1);
  for (int d = 0; d <= 3; ++d) CHECK(S1.graded_piece_dim(d) == GradedModule::cokernel(P.matrix).graded_piece_dim(d));
  CHECK(sym_basis(3, 2) == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  // rank of S^2 F is 3
  CHECK(sym_power_module(P, 2).hilbert().degree == 3);
}

TEST_CASE("section dimensions on generated presentations") {
  const RingPtr r = plane_ring();
  Rng root(1);
  for (int alpha : {0, 1, 3, 6}) {
    Rng rng = root.substream("s-" + std::to_string(alpha));
    const SteinerPresentation P = gen_steiner_matrix(r, 8, alpha, rng);
    INFO("alpha = " << alpha);
    const long long s2 = sheaf_sections(sym_power_module(P, 2), -2);
    CHECK(s2 == h0_S2_m2_oracle(P));
    CHECK(s2 == 0);
    CHECK(sheaf_sections(sym_power_module(P, 3), -2) == alpha);
  }
  Rng rng = root.substream("log");
  const SteinerPresentation L = gen_logarithmic_matrix(r, 8, rng);
  CHECK(sheaf_sections(sym_power_module(L, 3), -2) == 7);
  CHECK(sheaf_sections(sym_power_module(L, 2), -2) == h0_S2_m2_oracle(L));
}

TEST_CASE("fliptensor") {
  const RingPtr plane = plane_ring();
  const RingPtr S = make_ring(32003, indexed_names("z", 6));
  PolyMatrix M(plane, 6, 4, std::vector<int>(6, 0), std::vector<int>(4, 1));
  M.at(2, 0) = Polynomial::variable(plane, 1);
  const PolyMatrix N = fliptensor(M, S);
  REQUIRE(N.rows() == 3);
  REQUIRE(N.cols() == 4);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 4; ++k) CHECK(N.at(j, k) == (j == 1 && k == 0 ? Polynomial::variable(S, 2) : Polynomial(S)));

  Rng rng(4);
  const SteinerPresentation P = gen_steiner_matrix(plane, 8, 3, rng);
  const PolyMatrix F = fliptensor(P.matrix, S);
  CHECK(fliptensor(F, plane) == P.matrix);
  CHECK(linear_coefficients(fliptensor(F, plane)) == linear_coefficients(P.matrix));

  PolyMatrix Q(plane, 1, 1);
  Q.at(0, 0) = Polynomial::variable(plane, 0) * Polynomial::variable(plane, 1);
  CHECK_THROWS_AS(fliptensor(Q, S), UsageError);

  const HilbertData h = hilbert(minors(fliptensor(P), 3));
  CHECK(h.krull_dim == 4);
  CHECK(h.degree == 6);
}

TEST_CASE("restriction to a line") {
  const RingPtr r = plane_ring();
  Rng rng(9);
  const SteinerPresentation P = gen_steiner_matrix(r, 8, 0, rng);
  const LineInDualPlane L = LineInDualPlane::normalized(r->field(), {0, 0, 1});
  const PolyMatrix R = restrict_to_line(P, L);
  CHECK(R.ring()->nvars() == 2);
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 4; ++k) {
      // on x2 = 0 the entry keeps its x0, x1 coefficients
      const auto a = linear_coefficients(P.matrix);
      CHECK(R.at(i, k) == Polynomial::variable(R.ring(), 0).scale(a[i][k][0]) +
                              Polynomial::variable(R.ring(), 1).scale(a[i][k][1]));
    }
}

TEST_CASE("splitting types") {
  const RingPtr r = plane_ring();
  Rng rng(11);
  const SteinerPresentation P = gen_steiner_matrix(r, 8, 2, rng);
  Rng lr(12);
  for (int t = 0; t < 10; ++t) {
    const LineInDualPlane L = LineInDualPlane::of_form(random_linear_form(r, lr));
    const SplittingType s = splitting_type(P, L);
    CHECK(s.first + s.second == 4);
    CHECK(s == SplittingType{2, 2});
  }

  // independent of the pivot and of scalar row and column operations
  Rng cr(13);
  const PolyMatrix A = invertible_scalar(r, 6, cr), B = invertible_scalar(r, 4, cr);
  PolyMatrix AMB = A * P.matrix * B;
  const SteinerPresentation Q = SteinerPresentation::from_matrix(AMB);
  std::vector<LineInDualPlane> lines = P.candidates;
  for (int t = 0; t < 4; ++t) lines.push_back(LineInDualPlane::of_form(random_linear_form(r, lr)));
  for (const LineInDualPlane& L : lines) {
    const SplittingType s = splitting_type(P, L);
    CHECK(splitting_type(Q, L) == s);
    for (int pv = 0; pv < 3; ++pv)
      if (L.c[pv] != 0) CHECK(splitting_type(P, L, pv) == s);
  }
}

TEST_CASE("exhaustive search over a small field") {
  const RingPtr r = plane_ring(31);
  Rng rng(14);
  const SteinerPresentation P = gen_steiner_matrix(r, 8, 3, rng);
  const auto found = unstable_lines(P, LineSearch::Exhaustive);
  auto cand = P.candidates;
  std::sort(cand.begin(), cand.end());
  CHECK(found == cand);
  CHECK(unstable_lines(P, LineSearch::Candidates) == cand);
  CHECK_THROWS(unstable_lines(gen_steiner_matrix(plane_ring(), 8, 0, rng), LineSearch::Exhaustive));
}

TEST_CASE("Veronese rank") {
  const PrimeField k(101);
  std::vector<LineInDualPlane> conic;
  // points (1 : t : t^2) lie on y0 y2 = y1^2
  for (Coeff t = 0; t < 8; ++t) conic.push_back(LineInDualPlane::normalized(k, {1, t, k.mul(t, t)}));
  CHECK(veronese_rank(k, conic) == 5);
  conic.push_back(LineInDualPlane::normalized(k, {1, 2, 5}));
  CHECK(veronese_rank(k, conic) == 6);
}

TEST_CASE("zero scheme of a section has degree c2") {
  const RingPtr r = plane_ring();
  Rng rng(15);
  const SteinerPresentation P = gen_steiner_matrix(r, 8, 1, rng);
  std::vector<Coeff> v;
  for (int i = 0; i < 6; ++i) v.push_back(random_scalar(r->field(), rng));
  const HilbertData h = hilbert(section_zero_scheme(P, v));
  CHECK(h.krull_dim == 1);
  CHECK(h.degree == 10);
}

TEST_CASE("presentations reject bad shapes") {
  const RingPtr r = plane_ring();
  PolyMatrix M(r, 6, 3);
  CHECK_THROWS_AS(SteinerPresentation::from_matrix(M), UsageError);
  Rng rng(1);
  CHECK_THROWS(gen_steiner_matrix(r, 8, 7, rng));
}

}
