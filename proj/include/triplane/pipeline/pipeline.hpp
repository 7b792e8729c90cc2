#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triplane/pipeline/io.hpp"

namespace triplane {

inline constexpr int kReportVersion = 1;

struct ConstructOptions {
  int b = 8;
  int alpha1 = 1;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  /// Retries per stage group after the first attempt.
  int max_retries = 8;
  /// Gröbner step budget per call; 0 = unlimited.
  long long step_budget = 0;
  /// Exhaustive unstable-line corroboration; defaults to prime <= 1000.
  std::optional<bool> exhaustive_lines;
  /// Compute Ext^(c-1) of the ideal next to Ext^c of the quotient.
  bool cross_check_ext = true;
  /// Run stage 12.
  bool section_checks = true;
};

struct StageRecord {
  int index = 0;
  std::string name;
  int attempts = 0;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

struct CheckResult {
  std::string name;
  json expected;
  json actual;
  bool pass = false;
};

struct DimDegree {
  int dim = kEmptyDim;
  long long degree = 0;
};

struct ConstructionReport {
  ConstructOptions inputs;
  int retries_used = 0;

  bool locally_free = false;
  std::vector<LineInDualPlane> unstable_candidates;
  std::optional<int> exhaustive_unstable_count;
  DimDegree Y;
  DimDegree singY;
  DimDegree singY_residual;
  DimDegree X1;
  std::vector<long long> X1_genera;
  bool X1_smooth = false;
  DimDegree X2;
  json X2_betti;
  long long chi_OX2 = 0;
  long long K2_X2 = 0;
  long long alpha2_derived = 0;
  std::optional<bool> ext_shift_agrees;
  std::optional<long long> h0_S2F_m2;
  std::optional<long long> h0_S3F_m2;

  std::vector<StageRecord> stages;
  std::vector<CheckResult> checks;
  /// Set when a stage ran out of retries.
  std::optional<std::string> failure;

  bool pass() const;
  std::string verdict() const { return pass() ? "PASS" : "FAIL"; }
};

/// A Gröbner budget ran out inside a pipeline stage.
class StageBudgetExceeded : public BudgetExceeded {
 public:
  StageBudgetExceeded(int stage, const std::string& name, const BudgetExceeded& e)
      : BudgetExceeded("stage " + std::to_string(stage) + " (" + name + "): " + e.what(), e.stats, e.basis_size,
                       e.pending),
        stage(stage),
        stage_name(name) {}
  int stage;
  std::string stage_name;
};

/// K^2 of the second adjoint surface for alpha1 = 1..7.
long long golden_K2(int alpha1);
/// alpha2 of the starred case with this alpha1.
long long golden_alpha2(int alpha1);

/// Builds the type VII surface for one alpha1 and checks every stage output
/// against the expected numbers. Only b = 8 is supported.
ConstructionReport construct_type_vii(const ConstructOptions& opts);

json to_json(const ConstructionReport& r, bool include_timings = true);
std::string summary_text(const ConstructionReport& r);

struct SweepResult {
  std::vector<ConstructionReport> reports;
  bool pass() const;
  /// K^2 per (prime, seed) in run order; empty for a run that failed.
  std::vector<std::vector<std::optional<long long>>> K2_columns() const;
};

SweepResult sweep(const std::vector<std::uint32_t>& primes, const std::vector<std::uint64_t>& seeds,
                  const ConstructOptions& base = {}, const std::vector<int>& alphas = {1, 2, 3, 4, 5, 6, 7});

json to_json(const SweepResult& s, bool include_timings = true);
std::string summary_text(const SweepResult& s);

}  // namespace triplane
