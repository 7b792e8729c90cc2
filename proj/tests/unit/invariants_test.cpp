#include <algorithm>

#include "doctest.h"
#include "triplane/core/field.hpp"
#include "triplane/invariants/invariants.hpp"
#include "numerology_suite.hpp"

using namespace triplane;

namespace {

AdjunctionState st(long long d2, long long kd, long long k2) {
  AdjunctionState s;
  s.D2 = d2;
  s.KD = kd;
  s.K2 = k2;
  return s;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("classification table") {
  const auto rows = invariant_table();
  REQUIRE(rows.size() == 12);
  CHECK(rows.front().b == 2);
  CHECK(rows.front().h == 1);
  CHECK(rows.front().K2 == 8);
  CHECK(rows.front().gH == 0);
  const TriplePlaneInvariants vii = invariant_table(8);
  CHECK(vii.h == 22);
  CHECK(vii.K2 == -7);
  CHECK(vii.gH == 6);
  CHECK(vii.type_label() == "VII");
  CHECK(vii.branch_degree() == 16);
  CHECK(vii.cusp_count() == 66);
  const TriplePlaneInvariants xii = invariant_table(13);
  CHECK(xii.h == 67);
  CHECK(xii.K2 == 8);
  CHECK(xii.gH == 11);
  CHECK(invariant_table(6).cusp_count() == 33);
  CHECK_THROWS_AS(invariant_table(1), DomainError);
  CHECK_THROWS_AS(invariant_table(14), DomainError);
}

TEST_CASE("table identities and brute-force solve") {
  for (const TriplePlaneInvariants& t : invariant_table()) {
    const long long b = t.b;
    CHECK(2 * t.h == b * b - 3 * b + 4);
    CHECK(b * b - 15 * b + 42 - 2 * t.K2 == 0);
    CHECK(t.gH == b - 2);
    CHECK(t.K2 >= -7);
    CHECK(t.K2 <= 9);
    // the only integer K^2 in the window satisfying the quadratic
    std::vector<long long> sols;
    for (long long k = -7; k <= 9; ++k)
      if (b * b - 15 * b + 42 - 2 * k == 0) sols.push_back(k);
    CHECK(sols == std::vector<long long>{t.K2});
  }
}

TEST_CASE("ramification numbers") {
  CHECK(ramification_numbers(2, 1).R2 == 5);
  const RamificationNumbers r = ramification_numbers(8, 22);
  CHECK(r.R02 == -8);
  CHECK(r.RR0 == 132);
  CHECK(r.HR == 16);
  CHECK(r.KH == 7);
  for (long long b = 2; b <= 13; ++b)
    for (long long h = 0; h <= 80; ++h) {
      const RamificationNumbers q = ramification_numbers(b, h);
      // (2R + R0)^2 and R (2R + R0)
      CHECK(4 * q.R2 + 4 * q.RR0 + q.R02 == 12 * b * b);
      CHECK(2 * q.R2 + q.RR0 == 4 * b * b);
      CHECK(q.KR == -3 * q.HR + q.R2);
    }
}

TEST_CASE("Bronowski check") {
  CHECK(bronowski_check(8, 22) == BronowskiVerdict::Counterexample);
  CHECK(bronowski_check(5, 7) == BronowskiVerdict::ClassicalOk);
  CHECK(bronowski_check(2, 1) == BronowskiVerdict::ClassicalOk);
  CHECK(to_string(BronowskiVerdict::Counterexample) == "counterexample");
  CHECK_THROWS_AS(bronowski_check(8, 3), DomainError);
  CHECK_THROWS_AS(bronowski_check(8, 50), DomainError);
}

TEST_CASE("Chern classes and scroll degree") {
  const ChernAndScroll c8 = chern_and_scroll(8);
  CHECK(c8.c1F == 4);
  CHECK(c8.c2F == 10);
  CHECK(c8.degY == 6);
  const ChernAndScroll c6 = chern_and_scroll(6);
  CHECK((c6.c1F == 2 && c6.c2F == 3 && c6.degY == 1));
  const ChernAndScroll c5 = chern_and_scroll(5);
  CHECK((c5.c1F == 1 && c5.c2F == 1 && c5.degY == 0));
  CHECK_THROWS_AS(chern_and_scroll(4), DomainError);
}

TEST_CASE("adjunction matrices of type IV") {
  const AdjunctionState s0 = initial_state(5, 1, 2);
  CHECK(s0 == st(12, -2, -4));
  for (long long a1 = 0; a1 <= 8; ++a1) CHECK(adjunction_step(s0, a1) == st(4, -6, -4 + a1));
  // (P2, O(2)) at a1 = 13
  CHECK(terminal_pair(adjunction_step(s0, 13)) == "(P2, O(2))");
}

TEST_CASE("adjunction matrices of type V") {
  const AdjunctionState s0 = initial_state(6, 1, 2);
  CHECK(s0 == st(18, 0, -6));
  for (long long a1 = 0; a1 <= 6; ++a1) {
    const AdjunctionState s1 = adjunction_step(s0, a1);
    CHECK(s1 == st(12, -6, -6 + a1));
    CHECK(adjunction_step(s1, 0) == st(-6 + a1, -12 + a1, -6 + a1));
  }
}

TEST_CASE("adjunction matrices of type VII") {
  const AdjunctionState s0 = initial_state(8, 0, 1);
  CHECK(s0 == st(3, 7, -7));
  for (long long a1 = 0; a1 <= 7; ++a1) {
    const AdjunctionState s1 = adjunction_step(s0, a1);
    CHECK(s1 == st(10, 0, -7 + a1));
    CHECK(s1.step == 1);
    for (long long a2 = 0; a2 <= 3; ++a2) {
      if (!st(3 + a1, -7 + a1, -7 + a1 + a2).hodge_feasible()) {
        CHECK_THROWS_AS(adjunction_step(s1, a2), InfeasibleState);
        continue;
      }
      CHECK(adjunction_step(s1, a2) == st(3 + a1, -7 + a1, -7 + a1 + a2));
    }
  }
  CHECK_THROWS_AS(adjunction_step(s0, 8), InfeasibleState);
  const AdjunctionState enriques = adjunction_step(s0, 7);
  CHECK(enriques.k_numerically_trivial());
  CHECK(terminal_pair(enriques) == "K numerically trivial");
  CHECK(adjunction_step(enriques, 0) == st(10, 0, 0));
  // alpha1 = 0: the second surface is a cubic with K.D = -7
  CHECK(adjunction_step(adjunction_step(s0, 0), 0) == st(3, -7, -7));
}

TEST_CASE("third adjunction states of type VII") {
  const AdjunctionState s0 = initial_state(8, 0, 1);
  auto third = [&](long long a1, long long a2, long long a3) {
    return adjunction_step(adjunction_step(adjunction_step(s0, a1), a2), a3);
  };
  CHECK(third(4, 3, 0) == st(1, -3, 0));
  CHECK(third(4, 3, 9) == st(1, -3, 9));
  CHECK(terminal_pair(third(4, 3, 9)) == "(P2, O(1))");
  struct Row {
    long long a1, a2, d2, kd, k2_offset;
  };
  const Row rows[] = {{5, 0, 2, -4, -2}, {5, 1, 3, -3, -1}, {5, 2, 4, -2, 0}, {6, 0, 6, -2, -1}, {6, 1, 7, -1, 0}};
  for (const Row& r : rows)
    for (long long a3 = 0; a3 <= 12; ++a3) {
      const AdjunctionState want = st(r.d2, r.kd, r.k2_offset + a3);
      if (want.hodge_feasible())
        CHECK(third(r.a1, r.a2, a3) == want);
      else
        CHECK_THROWS_AS(third(r.a1, r.a2, a3), InfeasibleState);
    }
  CHECK(terminal_pair(third(5, 0, 10)) == "(P1 x P1, O(1,1))");
}

TEST_CASE("type VII enumeration") {
  const TypeVIIEnumeration e = typeVII_enumeration();
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (const TypeVIICase& c : e.cases) {
    pairs.push_back({c.alpha1, c.alpha2});
    labels.push_back(c.label);
  }
  CHECK(pairs == std::vector<std::pair<int, int>>{{1, 14}, {1, 15}, {2, 10}, {3, 6}, {4, 2}, {4, 3}, {4, 4},
                                                  {5, 0}, {5, 1}, {6, 0}, {7, 0}});
  CHECK(labels == std::vector<std::string>{"VII.1a", "VII.1b", "VII.2", "VII.3", "VII.4a", "VII.4b", "VII.4c",
                                           "VII.5a", "VII.5b", "VII.6", "VII.7"});
  int starred = 0;
  for (const TypeVIICase& c : e.cases) {
    if (!c.exists_constructed) continue;
    ++starred;
    CHECK(c.alpha2 == (7 - c.alpha1) * (6 - c.alpha1) / 2);
  }
  CHECK(starred == 7);

  // alpha1 ranges over 0..7; alpha2 in 2..4 when alpha1 = 4
  REQUIRE(e.alpha2_range.size() == 8);
  CHECK(e.alpha2_range[4] == std::pair<int, int>{2, 4});
  CHECK(e.alpha2_range[7] == std::pair<int, int>{0, 0});
  CHECK(e.arithmetically_pruned > 0);

  bool only_known = true;
  bool has52 = false, has61 = false;
  for (const TypeVIIExclusion& x : e.excluded) {
    only_known = only_known && (x.alpha1 == 0 || (x.alpha1 == 5 && x.alpha2 == 2) || (x.alpha1 == 6 && x.alpha2 == 1));
    has52 = has52 || (x.alpha1 == 5 && x.alpha2 == 2);
    has61 = has61 || (x.alpha1 == 6 && x.alpha2 == 1);
    CHECK_FALSE(x.reason.empty());
  }
  CHECK(only_known);
  CHECK(has52);
  CHECK(has61);
  CHECK(std::any_of(e.excluded.begin(), e.excluded.end(), [](const TypeVIIExclusion& x) { return x.alpha1 == 0; }));

  CHECK(e.cases.back().second == st(10, 0, 0));
  CHECK(e.cases.back().second.k_numerically_trivial());
}

TEST_CASE("alpha2 from the computed K^2") {
  CHECK(alpha2_from_K2X2(1, 9) == 15);
  CHECK(alpha2_from_K2X2(6, -1) == 0);
  CHECK(alpha2_from_K2X2(7, 0) == 0);
  const long long K2[] = {9, 5, 2, 0, -1, -1, 0};
  for (int a = 1; a <= 7; ++a) CHECK(alpha2_from_K2X2(a, K2[a - 1]) == binomial_ll(7 - a, 2));
  CHECK_THROWS_AS(alpha2_from_K2X2(0, 0), DomainError);
}

TEST_CASE("moduli dimensions") {
  CHECK(moduli_dimensions(5, 24).dimN == 23);
  CHECK(moduli_dimensions(6, 20).dimN == 24);
  CHECK(moduli_dimensions(6, 20).dimM == 16);
  for (int a = 1; a <= 7; ++a) CHECK(moduli_dimensions(8, a, a).dimN == 20);
  CHECK_THROWS_AS(moduli_dimensions(8, 3), DomainError);
  CHECK_THROWS_AS(moduli_dimensions(9, 3), DomainError);
}

}

TEST_SUITE("invariants") {

TEST_CASE("numerology suite") {
  for (const auto& r : triplane::testing::run_numerology_suite()) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok);
    CHECK(r.cases > 0);
  }
}

}
