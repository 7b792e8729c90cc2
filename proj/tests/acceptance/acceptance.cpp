// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kernel_suite.hpp"
#include "numerology_suite.hpp"
#include "triplane/pipeline/pipeline.hpp"

using namespace triplane;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string run_name(const ConstructionReport& r) {
  return "seed " + std::to_string(r.inputs.seed) + " alpha1 " + std::to_string(r.inputs.alpha1);
}

std::string dd(const DimDegree& d) { return "(" + std::to_string(d.dim) + ", " + std::to_string(d.degree) + ")"; }

Outcome golden_k2(const SweepResult& sw) {
  Outcome o;
  const auto cols = sw.K2_columns();
  o.require(cols.size() >= 2, "fewer than two seeds");
  for (const auto& col : cols) {
    std::ostringstream got;
    bool same = col.size() == 7;
    for (std::size_t i = 0; i < col.size(); ++i) {
      got << (i ? ", " : "") << (col[i] ? std::to_string(*col[i]) : "failed");
      same = same && col[i] && *col[i] == golden_K2(static_cast<int>(i) + 1);
    }
    o.require(same, "K^2 column (" + got.str() + ")");
  }
  for (const ConstructionReport& r : sw.reports) {
    double total = 0;
    for (const StageRecord& s : r.stages) total += s.seconds;
    o.require(total <= 45 * 60, run_name(r) + " took " + std::to_string(total) + " s");
  }
  return o;
}

Outcome surface_invariants(const SweepResult& sw) {
  Outcome o;
  for (const ConstructionReport& r : sw.reports) {
    o.require(!r.failure, run_name(r) + ": " + r.failure.value_or(""));
    o.require(r.X1.dim == 3 && r.X1.degree == 10, run_name(r) + ": X1 " + dd(r.X1));
    o.require(r.X1_genera == std::vector<long long>{0, 6, 9}, run_name(r) + ": X1 genera differ");
    o.require(r.X1_smooth, run_name(r) + ": X1 is singular");
  }
  return o;
}

Outcome scroll(const SweepResult& sw) {
  Outcome o;
  for (const ConstructionReport& r : sw.reports) {
    o.require(r.locally_free, run_name(r) + ": presentation not locally free");
    o.require(r.Y.dim == 4 && r.Y.degree == 6, run_name(r) + ": Y " + dd(r.Y));
    o.require(r.singY_residual.dim == 1 && r.singY_residual.degree == r.inputs.alpha1,
              run_name(r) + ": residual " + dd(r.singY_residual));
  }
  return o;
}

Outcome cohomology(const SweepResult& sw) {
  Outcome o;
  for (const ConstructionReport& r : sw.reports) {
    const long long s2 = r.h0_S2F_m2.value_or(-1), s3 = r.h0_S3F_m2.value_or(-1);
    o.require(s2 == 0 && s3 == r.inputs.alpha1,
              run_name(r) + ": (h0 S2F(-2), h0 S3F(-2)) = (" + std::to_string(s2) + ", " + std::to_string(s3) + ")");
  }
  const SteinerPresentation P = gen_schwarzenberger_matrix(plane_ring(), 7);
  const long long s = sheaf_sections(sym_power_module(P, 3), -1);
  o.require(s == 12, "b = 7 Schwarzenberger h0 S3F(-1) = " + std::to_string(s));
  return o;
}

Outcome unstable_search() {
  Outcome o;
  const RingPtr T = plane_ring(101);
  const Rng root(101);
  auto timed = [&](const SteinerPresentation& P, const std::string& what) {
    const auto t0 = Clock::now();
    auto lines = unstable_lines(P, LineSearch::Exhaustive);
    const double secs = since(t0);
    o.require(secs <= 120, what + ": search took " + std::to_string(secs) + " s");
    return lines;
  };
  for (int a = 0; a <= 6; ++a) {
    Rng rng = root.substream("generic-" + std::to_string(a));
    const SteinerPresentation P = gen_steiner_matrix(T, 8, a, rng);
    const auto lines = timed(P, "alpha " + std::to_string(a));
    o.require(static_cast<int>(lines.size()) == a,
              "generic alpha " + std::to_string(a) + ": " + std::to_string(lines.size()) + " lines");
  }
  Rng rng = root.substream("logarithmic");
  const auto log_lines = timed(gen_logarithmic_matrix(T, 8, rng), "logarithmic");
  o.require(log_lines.size() == 7, "logarithmic: " + std::to_string(log_lines.size()) + " lines");
  const auto schw = timed(gen_schwarzenberger_matrix(T, 7), "Schwarzenberger");
  const int vr = veronese_rank(T->field(), schw);
  o.require(schw.size() >= 6 && vr <= 5,
            "Schwarzenberger: " + std::to_string(schw.size()) + " lines, Veronese rank " + std::to_string(vr));
  return o;
}

Outcome numerology() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& r : testing::run_numerology_suite()) o.require(r.ok, r.name + ": " + r.detail);
  const double secs = since(t0);
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome kernel() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& r : testing::run_kernel_suite()) o.require(r.ok, r.name + ": " + r.detail);
  const double secs = since(t0);
  o.require(secs <= 300, "took " + std::to_string(secs) + " s");
  return o;
}

Outcome determinism(const SweepResult& sw) {
  Outcome o;
  for (const ConstructionReport& first : sw.reports) {
    if (first.inputs.seed != 1 || first.inputs.alpha1 != 3) continue;
    const ConstructionReport again = construct_type_vii(first.inputs);
    o.require(to_json(first, false).dump(2) == to_json(again, false).dump(2), "alpha1 3 seed 1 reports differ");
    return o;
  }
  o.require(false, "no alpha1 3 seed 1 run in the sweep");
  return o;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  std::fprintf(stderr, "sweep: alpha1 = 1..7, prime 32003, seeds 1 and 2\n");
  SweepResult sw;
  Outcome sweep_error;
  try {
    sw = sweep({PrimeField::kDefaultPrime}, {1, 2});
    std::fprintf(stderr, "%s(%.0f s)\n", summary_text(sw).c_str(), since(t0));
  } catch (const std::exception& e) {
    sweep_error.require(false, std::string("sweep threw: ") + e.what());
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden K^2 sequence (9, 5, 2, 0, -1, -1, 0) on two seeds", [&] { return sweep_error.pass ? golden_k2(sw) : sweep_error; }},
      {"X1 is smooth with (3, 10, {0, 6, 9})", [&] { return sweep_error.pass ? surface_invariants(sw) : sweep_error; }},
      {"scroll degree 6, local freeness, residual (1, alpha1)", [&] { return sweep_error.pass ? scroll(sw) : sweep_error; }},
      {"sections (0, alpha1) and h0 S3F(-1) = 12 for b = 7", [&] { return sweep_error.pass ? cohomology(sw) : sweep_error; }},
      {"exhaustive unstable lines over F_101", unstable_search},
      {"numerology suite", numerology},
      {"kernel property suite", kernel},
      {"byte-identical repeated reports", [&] { return sweep_error.pass ? determinism(sw) : sweep_error; }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("criterion %zu: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str());
    for (const std::string& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %s (%.0f s)\n", all ? "PASS" : "FAIL", since(t0));
  return all ? 0 : 1;
}
