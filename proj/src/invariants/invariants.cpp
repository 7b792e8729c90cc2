#include "triplane/invariants/invariants.hpp"

#include <map>

#include "triplane/core/field.hpp"

namespace triplane {

long long binomial_ll(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string TriplePlaneInvariants::type_label() const {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI", "XII"};
  return b >= 2 && b <= 13 ? names[b - 2] : "?";
}

TriplePlaneInvariants invariant_table(int b) {
  if (b < 2 || b > 13)
    throw DomainError("invariant_table: b = " + std::to_string(b) +
                      " is outside 2..13, where K^2 = (b^2 - 15b + 42)/2 leaves the window -7..9");
  TriplePlaneInvariants t;
  t.b = b;
  t.h = (static_cast<long long>(b) * b - 3LL * b + 4) / 2;
  t.K2 = (static_cast<long long>(b) * b - 15LL * b + 42) / 2;
  t.gH = b - 2;
  return t;
}

std::vector<TriplePlaneInvariants> invariant_table() {
  std::vector<TriplePlaneInvariants> rows;
  for (int b = 2; b <= 13; ++b) rows.push_back(invariant_table(b));
  return rows;
}

RamificationNumbers ramification_numbers(long long b, long long h) {
  RamificationNumbers r;
  r.R2 = 2 * b * b - 3 * h;
  r.RR0 = 6 * h;
  r.R02 = 4 * b * b - 12 * h;
  r.KR = 2 * b * b - 6 * b - 3 * h;
  r.HR = 2 * b;
  r.KH = 2 * b - 9;
  return r;
}

std::string to_string(BronowskiVerdict v) {
  return v == BronowskiVerdict::ClassicalOk ? "classical_ok" : "counterexample";
}

BronowskiVerdict bronowski_check(long long b, long long h) {
  if (9 * h < 2 * b * b || 3 * h >= 2 * b * b)
    throw DomainError("bronowski_check: (b, h) = (" + std::to_string(b) + ", " + std::to_string(h) +
                      ") violates 2b^2/3 <= 3h < 2b^2");
  return 3 * h <= b * b ? BronowskiVerdict::ClassicalOk : BronowskiVerdict::Counterexample;
}

ChernAndScroll chern_and_scroll(long long b) {
  if (b < 5) throw DomainError("chern_and_scroll: b must be at least 5");
  return {b - 4, binomial_ll(b - 3, 2), binomial_ll(b - 4, 2)};
}

std::string AdjunctionState::to_string() const {
  return "(" + std::to_string(D2) + ", " + std::to_string(KD) + ", " + std::to_string(K2) + ")";
}

InfeasibleState::InfeasibleState(AdjunctionState s)
    : s_(s), msg_("adjunction state " + s.to_string() + " violates the Hodge index inequality") {}

AdjunctionState initial_state(int b, long long a, long long c) {
  const TriplePlaneInvariants t = invariant_table(b);
  const long long KH = 2LL * b - 9, H2 = 3;
  AdjunctionState s;
  s.D2 = a * a * t.K2 + 2 * a * c * KH + c * c * H2;
  s.KD = a * t.K2 + c * KH;
  s.K2 = t.K2;
  return s;
}

AdjunctionState adjunction_step(const AdjunctionState& s, long long alpha) {
  if (alpha < 0) throw DomainError("adjunction_step: alpha must be non-negative");
  AdjunctionState n;
  n.D2 = s.adjoint_square();
  n.KD = s.KD + s.K2;
  n.K2 = s.K2 + alpha;
  n.step = s.step + 1;
  if (!n.hodge_feasible()) throw InfeasibleState(n);
  return n;
}

std::string terminal_pair(const AdjunctionState& s) {
  if (s == AdjunctionState{1, -3, 9}) return "(P2, O(1))";
  if (s == AdjunctionState{2, -4, 8}) return "(P1 x P1, O(1,1))";
  if (s == AdjunctionState{4, -6, 9}) return "(P2, O(2))";
  if (s.D2 > 0 && s.k_numerically_trivial()) return "K numerically trivial";
  return {};
}

namespace {

struct Label {
  const char* name;
  bool starred;
};

const std::map<std::pair<int, int>, Label>& typeVII_labels() {
  static const std::map<std::pair<int, int>, Label> labels = {
      {{1, 14}, {"VII.1a", false}}, {{1, 15}, {"VII.1b", true}}, {{2, 10}, {"VII.2", true}},
      {{3, 6}, {"VII.3", true}},    {{4, 2}, {"VII.4a", false}}, {{4, 3}, {"VII.4b", true}},
      {{4, 4}, {"VII.4c", false}},  {{5, 0}, {"VII.5a", false}}, {{5, 1}, {"VII.5b", true}},
      {{6, 0}, {"VII.6", true}},    {{7, 0}, {"VII.7", true}},
  };
  return labels;
}

std::string geometric_exclusion(int alpha1, int alpha2) {
  if (alpha1 == 0) return "second adjoint surface has degree 3 in P5, so it lies in a hyperplane";
  if (alpha1 == 5 && alpha2 == 2) return "third adjoint surface is a smooth quartic in P3, contradicting p_g = 0";
  if (alpha1 == 6 && alpha2 == 1)
    return "third adjoint surface would be a rational surface of degree 7 in P4 with K^2 = 0, but that surface has K^2 = -2";
  return {};
}

}  // namespace

TypeVIIEnumeration typeVII_enumeration() {
  TypeVIIEnumeration out;
  const AdjunctionState start = initial_state(8, 0, 1);
  const int kSearch = 40;
  for (int a1 = 0; a1 <= kSearch; ++a1) {
    AdjunctionState s1;
    try {
      s1 = adjunction_step(start, a1);
    } catch (const InfeasibleState&) {
      ++out.arithmetically_pruned;
      continue;
    }
    std::vector<std::pair<int, AdjunctionState>> survivors;
    if (s1.k_numerically_trivial()) {
      survivors.push_back({0, s1});
    } else {
      for (int a2 = 0; a2 <= kSearch; ++a2) {
        try {
          const AdjunctionState s2 = adjunction_step(s1, a2);
          if (s2.adjoint_square() < 0) {
            ++out.arithmetically_pruned;
            continue;
          }
          survivors.push_back({a2, s2});
        } catch (const InfeasibleState&) {
          ++out.arithmetically_pruned;
        }
      }
    }
    if (survivors.empty()) continue;
    out.alpha2_range.resize(static_cast<std::size_t>(a1) + 1, {-1, -1});
    out.alpha2_range[a1] = {survivors.front().first, survivors.back().first};
    for (const auto& [a2, s2] : survivors) {
      const std::string why = geometric_exclusion(a1, a2);
      if (!why.empty()) {
        out.excluded.push_back({a1, a2, why});
        continue;
      }
      TypeVIICase c;
      c.alpha1 = a1;
      c.alpha2 = a2;
      c.second = s2;
      auto it = typeVII_labels().find({a1, a2});
      if (it != typeVII_labels().end()) {
        c.label = it->second.name;
        c.exists_constructed = it->second.starred;
      } else {
        c.label = "VII.?";
      }
      out.cases.push_back(c);
    }
  }
  return out;
}

std::vector<TypeVIICase> typeVII_enumerate() { return typeVII_enumeration().cases; }

long long alpha2_from_K2X2(int alpha1, long long K2X2) {
  if (alpha1 < 1 || alpha1 > 7) throw DomainError("alpha2_from_K2X2: alpha1 must lie in 1..7");
  return K2X2 + 7 - alpha1;
}

ModuliDimensions moduli_dimensions(int b, long long h0S3, std::optional<int> alpha1) {
  if (b < 5 || b > 8) throw DomainError("moduli_dimensions: b must lie in 5..8");
  long long base = static_cast<long long>(b - 1) * (b - 5);
  if (b == 8) {
    if (!alpha1) throw DomainError("moduli_dimensions: b = 8 needs alpha1");
    base = 21 - *alpha1;
  }
  const long long dimN = base + h0S3 - 1;
  return {dimN, dimN - 8};
}

}  // namespace triplane
