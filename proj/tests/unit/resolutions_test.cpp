#include "doctest.h"
#include "triplane/core/ops.hpp"
#include "triplane/resolutions/resolution.hpp"
#include "triplane/steiner/steiner.hpp"

using namespace triplane;

namespace {

std::vector<int> ranks(const FreeResolution& F) {
  std::vector<int> r;
  for (int i = 0; i <= F.length(); ++i) r.push_back(F.rank(i));
  return r;
}

Ideal maximal_ideal(const RingPtr& r) {
  std::vector<Polynomial> g;
  for (int i = 0; i < r->nvars(); ++i) g.push_back(Polynomial::variable(r, i));
  return Ideal(r, g);
}

}  // namespace

TEST_SUITE("resolutions") {

TEST_CASE("syzygies") {
  const RingPtr r = make_ring(32003, indexed_names("x", 3));
  const Polynomial x0 = Polynomial::variable(r, 0), x1 = Polynomial::variable(r, 1);
  PolyMatrix M(r, 1, 2, {0}, {1, 1});
  M.at(0, 0) = x0;
  M.at(0, 1) = x1;
  const PolyMatrix S = syzygies(M);
  REQUIRE(S.cols() == 1);
  CHECK(((S.at(0, 0) == -x1 && S.at(1, 0) == x0) || (S.at(0, 0) == x1 && S.at(1, 0) == -x0)));
  CHECK((M * S).is_zero());

  PolyMatrix I(r, 2, 2);
  I.at(0, 0) = Polynomial::from_int(r, 1);
  I.at(1, 1) = Polynomial::from_int(r, 1);
  CHECK(syzygies(I).cols() == 0);
}

TEST_CASE("syzygies of the Jacobian of seven lines") {
  const RingPtr r = plane_ring();
  Rng rng(70);
  Polynomial f = Polynomial::from_int(r, 1);
  for (int i = 0; i < 7; ++i) f *= random_linear_form(r, rng);
  const PolyMatrix J = jacobian(f);
  const PolyMatrix S = syzygies(J);
  CHECK((J * S).is_zero());
  // six generators of equal degree and four relations among them
  CHECK(S.cols() == 6);
  const PolyMatrix SS = syzygies(S);
  CHECK(SS.cols() == 4);
  for (int c = 1; c < S.cols(); ++c) CHECK(S.col_degrees()[c] == S.col_degrees()[0]);
}

TEST_CASE("Koszul resolution of the residue field") {
  const RingPtr r = make_ring(32003, indexed_names("x", 3));
  const FreeResolution F = free_resolution(GradedModule::quotient_ring(maximal_ideal(r)), 5);
  CHECK(ranks(F) == std::vector<int>{1, 3, 3, 1});
  CHECK(F.degrees(3) == std::vector<int>{3});
  CHECK(F.is_complex());
  CHECK_FALSE(F.has_unit_entries());
}

TEST_CASE("complete intersection of two quadrics") {
  const RingPtr r = make_ring(32003, indexed_names("x", 4));
  Rng rng(4);
  const Ideal I(r, {random_form(r, 2, rng), random_form(r, 2, rng)});
  const FreeResolution F = free_resolution(GradedModule::quotient_ring(I), 5);
  CHECK(ranks(F) == std::vector<int>{1, 2, 1});
  CHECK(F.degrees(2) == std::vector<int>{4});
  int min_degree = 0;
  const auto table = F.betti_table(min_degree);
  CHECK(min_degree == 0);
  CHECK_FALSE(F.betti_string().empty());
  CHECK(table.size() == 3);
}

TEST_CASE("resolution of a Steiner cokernel is its presentation") {
  const RingPtr r = plane_ring();
  Rng rng(8);
  const SteinerPresentation P = gen_steiner_matrix(r, 8, 0, rng);
  const FreeResolution F = free_resolution(GradedModule::cokernel(P.matrix), 4);
  CHECK(ranks(F) == std::vector<int>{6, 4});
  CHECK(F.degrees(0) == std::vector<int>(6, 0));
  CHECK(F.degrees(1) == std::vector<int>(4, 1));
  CHECK_FALSE(F.has_unit_entries());
}

TEST_CASE("rank consistency and Hilbert additivity") {
  const RingPtr r = make_ring(32003, indexed_names("x", 4));
  Rng rng(12);
  for (int n = 2; n <= 4; ++n) {
    std::vector<Polynomial> g;
    for (int i = 0; i < n; ++i) g.push_back(random_form(r, 2, rng));
    const Ideal I(r, g);
    const FreeResolution F = free_resolution(GradedModule::quotient_ring(I), 5);
    CHECK(F.is_complex());
    int alt = 0;
    LaurentPoly series;
    for (int i = 0; i <= F.length(); ++i) {
      alt += i % 2 ? -F.rank(i) : F.rank(i);
      for (int d : F.degrees(i)) series = i % 2 ? series - LaurentPoly::one().shifted(d) : series + LaurentPoly::one().shifted(d);
    }
    CHECK(alt == 0);
    CHECK((series - hilbert(I).numerator).is_zero());
  }
}

TEST_CASE("Hom") {
  const RingPtr r = make_ring(32003, indexed_names("x", 3));
  const GradedModule R = GradedModule::free(r, {0});
  const GradedModule Rm2 = GradedModule::free(r, {2});
  const GradedModule H = hom_module(Rm2, R);
  // Hom(R(-2), R) = R(2): one dimension in degree -2
  CHECK(H.graded_piece_dim(-2) == 1);
  CHECK(H.graded_piece_dim(-3) == 0);
  CHECK(H.graded_piece_dim(0) == 6);

  const GradedModule k = GradedModule::quotient_ring(maximal_ideal(r));
  CHECK(hom_module(k, R).hilbert().empty());
  CHECK(dual_module(k).hilbert().empty());

  const GradedModule RR = hom_module(R, R);
  for (int d = 0; d <= 4; ++d) CHECK(RR.graded_piece_dim(d) == R.graded_piece_dim(d));
}

TEST_CASE("Ext") {
  const RingPtr r = make_ring(32003, indexed_names("x", 3));
  const Polynomial x0 = Polynomial::variable(r, 0);
  const GradedModule RI = GradedModule::quotient_ring(Ideal(r, {x0}));
  CHECK(ext_module(0, RI, 0).hilbert().empty());
  // Ext^1(R/(x0), R) = R/(x0)(1)
  const GradedModule e1 = ext_module(1, RI, 0);
  CHECK(e1.graded_piece_dim(-1) == 1);
  CHECK(e1.graded_piece_dim(0) == 2);

  const GradedModule k = GradedModule::quotient_ring(maximal_ideal(r));
  for (int i = 0; i < 3; ++i) CHECK(ext_module(i, k, 0).hilbert().empty());
  const GradedModule e3 = ext_module(3, k, 0);
  const HilbertData h = e3.hilbert();
  CHECK(h.krull_dim == 0);
  CHECK(h.degree == 1);
  CHECK(e3.graded_piece_dim(-3) == 1);
  CHECK(ext_module(3, k, -3).graded_piece_dim(0) == 1);
}

TEST_CASE("Euler characteristics and graded pieces") {
  const RingPtr r = make_ring(32003, indexed_names("x", 3));
  CHECK(euler_characteristic(GradedModule::free(r, {0})) == 1);
  CHECK(euler_characteristic(GradedModule::free(r, {1})) == 0);
  CHECK(euler_characteristic(GradedModule::free(r, {3})) == 1);
  CHECK(graded_piece_dim(GradedModule::free(r, {0}), 2) == 6);
  CHECK(graded_piece_dim(GradedModule::free(r, {1, 1, 1}), 1) == 3);
  CHECK(graded_piece_dim(GradedModule::free(r, {1, 1, 1}), 0) == 0);
}

TEST_CASE("presentations are pruned") {
  const RingPtr r = make_ring(32003, indexed_names("x", 3));
  const Polynomial x0 = Polynomial::variable(r, 0), x1 = Polynomial::variable(r, 1);
  PolyMatrix P(r, 2, 2, {0, 1}, {1, 2});
  P.at(0, 0) = x0;
  P.at(1, 1) = x1;
  P.at(0, 1) = x0 * x1;
  P.at(1, 0) = Polynomial::from_int(r, 1);
  // cancelling the unit leaves x0 x1 - x0 x1 = 0, so the module is R
  const PolyMatrix Q = prune_presentation(P);
  CHECK(Q.rows() == 1);
  CHECK(Q.cols() == 0);
  const GradedModule M = GradedModule::cokernel(P);
  for (int d = 0; d <= 4; ++d) CHECK(M.graded_piece_dim(d) == M.pruned().graded_piece_dim(d));
  P.at(0, 1) = x1 * x1;
  const PolyMatrix Q2 = prune_presentation(P);
  CHECK(Q2.rows() == 1);
  CHECK(Q2.cols() == 1);
}

}
