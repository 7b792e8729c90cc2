#pragma once

#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace triplane {

/// Numerical invariants of a general triple plane with branch curve of degree 2b.
struct TriplePlaneInvariants {
  int b = 0;
  long long h = 0;
  long long K2 = 0;
  long long gH = 0;

  long long branch_degree() const { return 2LL * b; }
  long long cusp_count() const { return 3 * h; }
  /// Roman numeral of the type, I for b = 2 up to XII for b = 13.
  std::string type_label() const;
};

/// Row of the classification table, 2 <= b <= 13.
TriplePlaneInvariants invariant_table(int b);
std::vector<TriplePlaneInvariants> invariant_table();

struct RamificationNumbers {
  long long R2, RR0, R02, KR, HR, KH;
};
RamificationNumbers ramification_numbers(long long b, long long h);

enum class BronowskiVerdict { ClassicalOk, Counterexample };
std::string to_string(BronowskiVerdict v);
/// Requires 2b^2/3 <= 3h < 2b^2; classical when 3h <= b^2.
BronowskiVerdict bronowski_check(long long b, long long h);

struct ChernAndScroll {
  long long c1F, c2F, degY;
};
ChernAndScroll chern_and_scroll(long long b);

/// Intersection numbers (D^2, K.D, K^2) after `step` adjunction maps.
struct AdjunctionState {
  long long D2 = 0;
  long long KD = 0;
  long long K2 = 0;
  int step = 0;

  bool hodge_feasible() const { return D2 * K2 - KD * KD <= 0; }
  /// (K + D)^2, the D^2 of the next state.
  long long adjoint_square() const { return D2 + 2 * KD + K2; }
  bool k_numerically_trivial() const { return K2 == 0 && KD == 0; }
  bool operator==(const AdjunctionState& o) const { return D2 == o.D2 && KD == o.KD && K2 == o.K2; }
  std::string to_string() const;
};

class InfeasibleState : public std::exception {
 public:
  explicit InfeasibleState(AdjunctionState s);
  const AdjunctionState& state() const { return s_; }
  const char* what() const noexcept override { return msg_.c_str(); }

 private:
  AdjunctionState s_;
  std::string msg_;
};

/// State of D = a K + c H on the surface of type b (H^2 = 3, K.H = 2b - 9).
AdjunctionState initial_state(int b, long long a, long long c);

/// D' = K + D, K'^2 = K^2 + alpha. Throws InfeasibleState when the result
/// violates the Hodge index inequality.
AdjunctionState adjunction_step(const AdjunctionState& s, long long alpha);

/// Name of a terminal pair recognised from its numbers, or empty.
std::string terminal_pair(const AdjunctionState& s);

struct TypeVIICase {
  int alpha1 = 0;
  int alpha2 = 0;
  std::string label;
  /// Realized by the construction.
  bool exists_constructed = false;
  AdjunctionState second;
};

struct TypeVIIExclusion {
  int alpha1 = 0;
  int alpha2 = 0;
  std::string reason;
};

struct TypeVIIEnumeration {
  std::vector<TypeVIICase> cases;
  /// Hodge-legal pairs removed by geometry.
  std::vector<TypeVIIExclusion> excluded;
  /// Pairs removed by the Hodge or adjoint-square inequalities.
  int arithmetically_pruned = 0;
  /// For each alpha1 in 0..7 the surviving alpha2 range before geometric exclusion.
  std::vector<std::pair<int, int>> alpha2_range;
};

TypeVIIEnumeration typeVII_enumeration();
std::vector<TypeVIICase> typeVII_enumerate();

long long alpha2_from_K2X2(int alpha1, long long K2X2);

struct ModuliDimensions {
  long long dimN, dimM;
};
/// For b = 8 the stratum dimension 21 - alpha1 replaces (b-1)(b-5).
ModuliDimensions moduli_dimensions(int b, long long h0S3, std::optional<int> alpha1 = std::nullopt);

long long binomial_ll(long long n, long long k);

}  // namespace triplane
