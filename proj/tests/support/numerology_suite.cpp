#include "numerology_suite.hpp"

#include <functional>
#include <sstream>

#include "triplane/invariants/invariants.hpp"

namespace triplane::testing {

namespace {

struct Check {
  PropertyResult& res;
  void operator()(bool cond, const std::string& what) {
    ++res.cases;
    if (!cond && res.ok) {
      res.ok = false;
      res.detail = what;
    }
  }
};

AdjunctionState st(long long d2, long long kd, long long k2) {
  AdjunctionState s;
  s.D2 = d2;
  s.KD = kd;
  s.K2 = k2;
  return s;
}

void table(PropertyResult& res) {
  Check check{res};
  // (b, h, K^2, g(H)) for types I..XII
  const long long rows[12][4] = {{2, 1, 8, 0},    {3, 2, 3, 1},    {4, 4, -1, 2},   {5, 7, -4, 3},
                                 {6, 11, -6, 4},  {7, 16, -7, 5},  {8, 22, -7, 6},  {9, 29, -6, 7},
                                 {10, 37, -4, 8}, {11, 46, -1, 9}, {12, 56, 3, 10}, {13, 67, 8, 11}};
  const auto t = invariant_table();
  check(t.size() == 12, "table does not have 12 rows");
  for (std::size_t i = 0; i < t.size() && i < 12; ++i) {
    const long long* w = rows[i];
    std::ostringstream os;
    os << "row b = " << w[0] << ": got (" << t[i].h << ", " << t[i].K2 << ", " << t[i].gH << ")";
    check(t[i].b == w[0] && t[i].h == w[1] && t[i].K2 == w[2] && t[i].gH == w[3], os.str());
  }
}

void ramification(PropertyResult& res) {
  Check check{res};
  check(ramification_numbers(2, 1).R2 == 5, "R^2 at (2, 1) is not 5");
  check(ramification_numbers(8, 22).R02 == -8, "R0^2 at (8, 22) is not -8");
  check(bronowski_check(8, 22) == BronowskiVerdict::Counterexample, "(8, 22) is not a Bronowski counterexample");
  check(bronowski_check(5, 7) == BronowskiVerdict::ClassicalOk, "(5, 7) is not classical");
  check(bronowski_check(2, 1) == BronowskiVerdict::ClassicalOk, "(2, 1) is not classical");
  for (const TriplePlaneInvariants& t : invariant_table()) {
    const RamificationNumbers r = ramification_numbers(t.b, t.h);
    const long long b = t.b;
    check(4 * r.R2 + 4 * r.RR0 + r.R02 == 12 * b * b, "(2R + R0)^2 != 12 b^2 at b = " + std::to_string(b));
    check(2 * r.R2 + r.RR0 == 4 * b * b, "R (2R + R0) != 4 b^2 at b = " + std::to_string(b));
  }
  const ChernAndScroll c = chern_and_scroll(8);
  check(c.c1F == 4 && c.c2F == 10 && c.degY == 6, "Chern classes for b = 8 are not (4, 10, 6)");
  check(moduli_dimensions(5, 24).dimN == 23, "dim N for b = 5 is not 23");
  check(moduli_dimensions(6, 20).dimN == 24, "dim N for b = 6 is not 24");
  for (int a = 1; a <= 7; ++a) check(moduli_dimensions(8, a, a).dimN == 20, "dim N for b = 8 is not 20");
}

// Each entry: a path of adjunction steps from an initial state and the
// matrix expected at its end, as a function of the free parameters.
void adjunction(PropertyResult& res) {
  Check check{res};
  auto run = [](AdjunctionState s, std::initializer_list<long long> alphas) {
    for (long long a : alphas) s = adjunction_step(s, a);
    return s;
  };
  auto expect = [&](const std::string& name, const std::function<AdjunctionState()>& got, AdjunctionState want) {
    if (!want.hodge_feasible()) return;
    try {
      const AdjunctionState g = got();
      check(g == want, name + ": got " + g.to_string() + ", expected " + want.to_string());
    } catch (const std::exception& e) {
      check(false, name + ": " + e.what());
    }
  };
  const AdjunctionState iv = initial_state(5, 1, 2), v = initial_state(6, 1, 2), vii = initial_state(8, 0, 1);
  expect("IV start", [&] { return iv; }, st(12, -2, -4));
  expect("V start", [&] { return v; }, st(18, 0, -6));
  expect("VII start", [&] { return vii; }, st(3, 7, -7));
  for (long long a1 = 0; a1 <= 7; ++a1) {
    const std::string s1 = " a1 = " + std::to_string(a1);
    expect("IV first" + s1, [&] { return run(iv, {a1}); }, st(4, -6, -4 + a1));
    expect("V first" + s1, [&] { return run(v, {a1}); }, st(12, -6, -6 + a1));
    expect("V second" + s1, [&] { return run(v, {a1, 0}); }, st(-6 + a1, -12 + a1, -6 + a1));
    expect("VII first" + s1, [&] { return run(vii, {a1}); }, st(10, 0, -7 + a1));
    for (long long a2 = 0; a2 <= 15; ++a2)
      expect("VII second" + s1 + ", a2 = " + std::to_string(a2), [&] { return run(vii, {a1, a2}); },
             st(3 + a1, -7 + a1, -7 + a1 + a2));
  }
  expect("VII.7 second", [&] { return run(vii, {7, 0}); }, st(10, 0, 0));
  expect("VII alpha1 = 0", [&] { return run(vii, {0, 0}); }, st(3, -7, -7));
  for (long long a3 = 0; a3 <= 12; ++a3) {
    const std::string s3 = " a3 = " + std::to_string(a3);
    expect("VII.4b third" + s3, [&] { return run(vii, {4, 3, a3}); }, st(1, -3, a3));
    expect("VII.5a third" + s3, [&] { return run(vii, {5, 0, a3}); }, st(2, -4, -2 + a3));
    expect("VII.5b third" + s3, [&] { return run(vii, {5, 1, a3}); }, st(3, -3, -1 + a3));
    expect("VII (5, 2) third" + s3, [&] { return run(vii, {5, 2, a3}); }, st(4, -2, a3));
    expect("VII.6 third" + s3, [&] { return run(vii, {6, 0, a3}); }, st(6, -2, -1 + a3));
    expect("VII (6, 1) third" + s3, [&] { return run(vii, {6, 1, a3}); }, st(7, -1, a3));
  }
  check(terminal_pair(run(vii, {4, 3, 9})) == "(P2, O(1))", "VII.4b with a3 = 9 is not (P2, O(1))");
  check(run(vii, {7}).k_numerically_trivial(), "alpha1 = 7 does not give a numerically trivial K");
  bool threw = false;
  try {
    run(vii, {8});
  } catch (const InfeasibleState&) {
    threw = true;
  }
  check(threw, "alpha1 = 8 passes the Hodge test");
}

void type_vii(PropertyResult& res) {
  Check check{res};
  const std::vector<std::tuple<int, int, std::string, bool>> want = {
      {1, 14, "VII.1a", false}, {1, 15, "VII.1b", true}, {2, 10, "VII.2", true}, {3, 6, "VII.3", true},
      {4, 2, "VII.4a", false},  {4, 3, "VII.4b", true},  {4, 4, "VII.4c", false}, {5, 0, "VII.5a", false},
      {5, 1, "VII.5b", true},   {6, 0, "VII.6", true},   {7, 0, "VII.7", true}};
  const auto cases = typeVII_enumerate();
  check(cases.size() == want.size(), "expected 11 cases, got " + std::to_string(cases.size()));
  for (std::size_t i = 0; i < cases.size() && i < want.size(); ++i) {
    const auto& [a1, a2, label, star] = want[i];
    check(cases[i].alpha1 == a1 && cases[i].alpha2 == a2 && cases[i].label == label &&
              cases[i].exists_constructed == star,
          "case " + std::to_string(i) + " is " + cases[i].label + " (" + std::to_string(cases[i].alpha1) + ", " +
              std::to_string(cases[i].alpha2) + "), expected " + label);
    if (cases[i].exists_constructed)
      check(cases[i].alpha2 == binomial_ll(7 - cases[i].alpha1, 2), label + " breaks alpha2 = C(7 - alpha1, 2)");
  }
  const TypeVIIEnumeration e = typeVII_enumeration();
  check(e.alpha2_range.size() == 8, "alpha1 does not range over 0..7");
  if (e.alpha2_range.size() > 4) check(e.alpha2_range[4] == std::pair<int, int>{2, 4}, "alpha2 range for alpha1 = 4 is not 2..4");
  const long long K2[] = {9, 5, 2, 0, -1, -1, 0};
  const long long a2[] = {15, 10, 6, 3, 1, 0, 0};
  for (int a = 1; a <= 7; ++a)
    check(alpha2_from_K2X2(a, K2[a - 1]) == a2[a - 1], "alpha2 from K^2 at alpha1 = " + std::to_string(a));
}

}  // namespace

std::vector<PropertyResult> run_numerology_suite() {
  const std::vector<std::pair<std::string, std::function<void(PropertyResult&)>>> parts = {
      {"classification table", table},
      {"ramification, Bronowski, Chern classes and moduli counts", ramification},
      {"adjunction matrices of types IV, V and VII", adjunction},
      {"type VII case list", type_vii},
  };
  std::vector<PropertyResult> out;
  for (const auto& [name, fn] : parts) {
    PropertyResult res;
    res.name = name;
    try {
      fn(res);
    } catch (const std::exception& e) {
      res.ok = false;
      res.detail = std::string("exception: ") + e.what();
    }
    out.push_back(res);
  }
  return out;
}

}  // namespace triplane::testing
