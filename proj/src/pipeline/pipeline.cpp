#include "triplane/pipeline/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "triplane/core/ops.hpp"
#include "triplane/invariants/invariants.hpp"

namespace triplane {

long long golden_K2(int alpha1) {
  static const long long k2[] = {9, 5, 2, 0, -1, -1, 0};
  if (alpha1 < 1 || alpha1 > 7) throw DomainError("golden_K2: alpha1 must lie in 1..7");
  return k2[alpha1 - 1];
}

long long golden_alpha2(int alpha1) {
  for (const TypeVIICase& c : typeVII_enumerate())
    if (c.alpha1 == alpha1 && c.exists_constructed) return c.alpha2;
  throw DomainError("golden_alpha2: no constructed case with alpha1 = " + std::to_string(alpha1));
}

bool ConstructionReport::pass() const {
  if (failure) return false;
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

using Clock = std::chrono::steady_clock;

DimDegree dim_degree(const HilbertData& h) { return {h.krull_dim, h.degree}; }

std::string dd_string(const DimDegree& d) {
  return "(" + std::to_string(d.dim) + ", " + std::to_string(d.degree) + ")";
}

json dd_json(const DimDegree& d) { return json::array({d.dim, d.degree}); }

/// Runs the stages of one construction and keeps their records.
class Run {
 public:
  Run(ConstructionReport& rep, const ConstructOptions& o) : rep_(rep), o_(o), root_(o.seed) {
    g_.step_budget = o.step_budget;
  }

  const GroebnerOptions& gopts() const { return g_; }

  /// Times one stage body and turns a budget overrun into a StageBudgetExceeded.
  template <class F>
  auto stage(int index, const std::string& name, int attempt, F&& body) -> decltype(body()) {
    StageRecord& r = records_[index];
    r.index = index;
    r.name = name;
    r.attempts = std::max(r.attempts, attempt + 1);
    const auto t0 = Clock::now();
    try {
      auto out = body();
      r.seconds += std::chrono::duration<double>(Clock::now() - t0).count();
      r.ok = true;
      r.detail.clear();
      return out;
    } catch (const StageBudgetExceeded&) {
      throw;
    } catch (const BudgetExceeded& e) {
      throw StageBudgetExceeded(index, name, e);
    }
  }

  void note(int index, const std::string& detail, bool ok) {
    records_[index].detail = detail;
    records_[index].ok = ok;
  }

  /// Repeats `body(rng, attempt)` with fresh substreams of stage `first` until
  /// it returns an empty failure message.
  template <class F>
  bool retry(int first, const std::string& group, F&& body) {
    const Rng stream = root_.substream("stage-" + std::to_string(first));
    std::string why;
    for (int a = 0; a <= o_.max_retries; ++a) {
      Rng rng = stream.substream(static_cast<std::uint64_t>(a));
      why = body(rng, a);
      if (why.empty()) {
        rep_.retries_used += a;
        return true;
      }
    }
    rep_.retries_used += o_.max_retries;
    rep_.failure = group + ": retries exhausted after " + std::to_string(o_.max_retries + 1) +
                   " attempts (seed " + std::to_string(o_.seed) + ", prime " + std::to_string(o_.prime) +
                   "); last failure: " + why;
    return false;
  }

  void finish() {
    for (auto& [i, r] : records_) rep_.stages.push_back(r);
  }

 private:
  ConstructionReport& rep_;
  const ConstructOptions& o_;
  Rng root_;
  GroebnerOptions g_;
  std::map<int, StageRecord> records_;
};

void add_check(ConstructionReport& rep, const std::string& name, json expected, json actual) {
  const bool pass = expected == actual;
  rep.checks.push_back({name, std::move(expected), std::move(actual), pass});
}

/// Spanning set of the degree-d piece of I from its reduced basis.
std::vector<Polynomial> graded_piece(const Ideal& I, int d) {
  const RingPtr& r = I.ring();
  std::vector<Polynomial> span;
  for (const Polynomial& g : I.gb().elements) {
    const int e = d - g.degree();
    if (e < 0) continue;
    for (const Monomial& m : monomials_of_degree(*r, e)) span.push_back(g.mul_term(m, 1));
  }
  return span;
}

bool same_series(const HilbertData& a, const HilbertData& b) { return (a.numerator - b.numerator).is_zero(); }

void run_stages(ConstructionReport& rep, const ConstructOptions& o) {
  Run run(rep, o);
  const GroebnerOptions& g = run.gopts();
  const int b = o.b;
  const RingPtr T = plane_ring(o.prime);
  const RingPtr S = make_ring(o.prime, indexed_names("y", b - 2));
  const RingPtr V = make_ring(o.prime, indexed_names("t", 6));
  const bool exhaustive = o.exhaustive_lines.value_or(o.prime <= 1000);

  // 1-2: presentation and local freeness
  SteinerPresentation P;
  bool ok = run.retry(1, "stages 1-2 (presentation)", [&](Rng& rng, int a) -> std::string {
    try {
      P = run.stage(1, "presentation", a, [&] {
        return o.alpha1 == b - 1 ? gen_logarithmic_matrix(T, b, rng) : gen_steiner_matrix(T, b, o.alpha1, rng);
      });
    } catch (const GenerationError& e) {
      run.note(1, e.what(), false);
      return std::string("stage 1: ") + e.what();
    }
    P.seed = o.seed;
    P.intended_alpha = o.alpha1;
    rep.locally_free = run.stage(2, "local freeness", a, [&] { return is_locally_free(P, g); });
    if (!rep.locally_free) {
      run.note(2, "4x4 minors have a common zero", false);
      return "stage 2: presentation is not locally free";
    }
    return {};
  });
  if (!ok) return run.finish();
  run.stage(2, "local freeness", 0, [&] {
    rep.unstable_candidates = unstable_lines(P, LineSearch::Candidates);
    if (exhaustive) rep.exhaustive_unstable_count = static_cast<int>(unstable_lines(P, LineSearch::Exhaustive).size());
    return 0;
  });
  {
    std::string d = std::to_string(rep.unstable_candidates.size()) + " unstable candidate lines";
    if (rep.exhaustive_unstable_count) d += ", " + std::to_string(*rep.exhaustive_unstable_count) + " by exhaustive search";
    run.note(2, d, true);
  }

  // 3-5: scroll, its singular locus and the residual points
  const PolyMatrix N = run.stage(3, "tensor flip", 0, [&] { return fliptensor(P.matrix, S); });
  const Ideal IY = run.stage(4, "scroll", 0, [&] { return minors(N, 3); });
  rep.Y = run.stage(4, "scroll", 0, [&] { return dim_degree(hilbert(IY, g)); });
  run.note(4, "I_Y " + dd_string(rep.Y), true);
  run.stage(5, "singular locus of the scroll", 0, [&] {
    const Ideal sing = singular_locus(IY, g);
    rep.singY = dim_degree(hilbert(sing, g));
    rep.singY_residual = dim_degree(hilbert(quotient(sing, minors(N, 2), g), g));
    return 0;
  });
  run.note(5, "singular locus " + dd_string(rep.singY) + ", residual " + dd_string(rep.singY_residual), true);

  // 6: two sections of the scroll
  Ideal I12;
  std::vector<Polynomial> cubics;
  ok = run.retry(6, "stage 6 (two sections)", [&](Rng& rng, int a) -> std::string {
    cubics = run.stage(6, "two sections", a, [&] {
      const PolyMatrix NR = N.transpose() * random_scalar_matrix(S, 3, 3, rng);
      const Ideal IS1 = minors(NR.column_block({0, 1}), 2);
      const Ideal IS2 = minors(NR.column_block({0, 2}), 2);
      I12 = intersect(IS1, IS2, g);
      return graded_piece(I12, 3);
    });
    if (cubics.empty()) {
      run.note(6, "intersection has no cubics", false);
      return "stage 6: intersection has no cubics";
    }
    run.note(6, std::to_string(I12.minimal_generators().size()) + " generators", true);
    return {};
  });
  if (!ok) return run.finish();

  // 7-9: residual surface in a cubic section
  Ideal IX1;
  ok = run.retry(7, "stages 7-9 (cubic section)", [&](Rng& rng, int a) -> std::string {
    const Polynomial cubic = run.stage(7, "cubic generator", a, [&] {
      Polynomial c(S);
      for (const Polynomial& s : cubics) c += s.scale(random_scalar(S->field(), rng));
      return c;
    });
    if (cubic.is_zero() || IY.contains(cubic)) {
      run.note(7, "cubic lies on the scroll", false);
      return "stage 7: cubic lies on the scroll";
    }
    const HilbertData h = run.stage(8, "residual surface", a, [&] {
      IX1 = quotient(IY + Ideal(S, {cubic}), I12, g);
      return hilbert(IX1, g);
    });
    rep.X1 = dim_degree(h);
    rep.X1_genera = h.genera;
    run.note(8, "X1 " + dd_string(rep.X1), rep.X1.dim == 3 && rep.X1.degree == 10);
    if (rep.X1.dim != 3 || rep.X1.degree != 10) return "stage 8: X1 has (dim, degree) " + dd_string(rep.X1);
    rep.X1_smooth = run.stage(9, "smoothness", a, [&] { return is_projectively_empty(singular_locus(IX1, g), g); });
    if (!rep.X1_smooth) {
      run.note(9, "X1 is singular", false);
      return "stage 9: X1 is singular";
    }
    return {};
  });
  if (!ok) return run.finish();

  // 10: second adjoint surface
  Ideal IX2;
  ok = run.retry(10, "stage 10 (adjoint map)", [&](Rng& rng, int a) -> std::string {
    const HilbertData h = run.stage(10, "adjoint map", a, [&] {
      const Ideal Q = minors(random_scalar_matrix(S, 2, 3, rng) * N, 2);
      if (Q.generators().size() != 6) return HilbertData{};
      IX2 = ring_map_kernel(Q.generators(), Ideal(S, IX1.minimal_generators()), V, g);
      IX2 = Ideal(V, IX2.minimal_generators());
      return hilbert(IX2, g);
    });
    rep.X2 = dim_degree(h);
    run.note(10, "X2 " + dd_string(rep.X2), rep.X2.dim == 3);
    if (rep.X2.dim != 3) return "stage 10: image has cone dimension " + std::to_string(rep.X2.dim);
    return {};
  });
  if (!ok) return run.finish();

  // 11: canonical module and K^2
  run.stage(11, "canonical module", 0, [&] {
    const HilbertData h = hilbert(IX2, g);
    rep.chi_OX2 = h.euler_characteristic();
    const int codim = V->nvars() - h.krull_dim;
    const GradedModule RX = GradedModule::quotient_ring(IX2);
    const FreeResolution F = free_resolution(RX, codim + 1, g);
    rep.X2_betti = betti_json(F);
    const GradedModule omega = ext_from_resolution(codim, F, -V->nvars(), g);
    rep.K2_X2 = hom_module(omega, RX, g).euler_characteristic() - 1;
    if (o.cross_check_ext && F.length() >= 1) {
      FreeResolution FI{V, std::vector<PolyMatrix>(F.maps.begin() + 1, F.maps.end()), F.minimal};
      rep.ext_shift_agrees = same_series(ext_from_resolution(codim - 1, FI, -V->nvars(), g).hilbert(), omega.hilbert());
    }
    return 0;
  });
  rep.alpha2_derived = rep.K2_X2 + 7 - o.alpha1;
  run.note(11, "chi(O) = " + std::to_string(rep.chi_OX2) + ", K^2 = " + std::to_string(rep.K2_X2), rep.chi_OX2 == 1);

  // 12: sections of symmetric powers
  if (o.section_checks) {
    run.stage(12, "section checks", 0, [&] {
      rep.h0_S2F_m2 = sheaf_sections(sym_power_module(P, 2), -2, g);
      rep.h0_S3F_m2 = sheaf_sections(sym_power_module(P, 3), -2, g);
      return 0;
    });
    run.note(12, "(" + std::to_string(*rep.h0_S2F_m2) + ", " + std::to_string(*rep.h0_S3F_m2) + ")", true);
  }
  run.finish();
}

void golden_checks(ConstructionReport& rep) {
  const int a = rep.inputs.alpha1;
  add_check(rep, "locally_free", true, rep.locally_free);
  add_check(rep, "unstable_candidates", a, static_cast<int>(rep.unstable_candidates.size()));
  if (rep.exhaustive_unstable_count) add_check(rep, "exhaustive_unstable_lines", a, *rep.exhaustive_unstable_count);
  add_check(rep, "Y", json::array({4, 6}), dd_json(rep.Y));
  add_check(rep, "singY_residual", json::array({1, a}), dd_json(rep.singY_residual));
  add_check(rep, "X1", json::array({3, 10}), dd_json(rep.X1));
  add_check(rep, "X1_genera", json::array({0, 6, 9}), rep.X1_genera);
  add_check(rep, "X1_smooth", true, rep.X1_smooth);
  add_check(rep, "X2_cone_dim", 3, rep.X2.dim);
  add_check(rep, "chi_OX2", 1, rep.chi_OX2);
  add_check(rep, "K2_X2", golden_K2(a), rep.K2_X2);
  add_check(rep, "alpha2_derived", golden_alpha2(a), rep.alpha2_derived);
  if (rep.ext_shift_agrees) add_check(rep, "ext_shift", true, *rep.ext_shift_agrees);
  if (rep.h0_S2F_m2) add_check(rep, "h0_S2F_m2", 0, *rep.h0_S2F_m2);
  if (rep.h0_S3F_m2) add_check(rep, "h0_S3F_m2", a, *rep.h0_S3F_m2);
}

}  // namespace

ConstructionReport construct_type_vii(const ConstructOptions& opts) {
  if (opts.b != 8) throw UsageError("construct_type_vii: only b = 8 is supported");
  if (opts.alpha1 < 1 || opts.alpha1 > 7) throw UsageError("construct_type_vii: alpha1 must lie in 1..7");
  if (opts.prime < 5 || !is_prime(opts.prime)) throw UsageError("construct_type_vii: prime must be a prime >= 5");
  if (opts.max_retries < 0) throw UsageError("construct_type_vii: max_retries must be >= 0");
  ConstructionReport rep;
  rep.inputs = opts;
  if (!rep.inputs.exhaustive_lines) rep.inputs.exhaustive_lines = opts.prime <= 1000;
  run_stages(rep, rep.inputs);
  if (!rep.failure) golden_checks(rep);
  return rep;
}

json to_json(const ConstructionReport& r, bool include_timings) {
  json j;
  j["version"] = kReportVersion;
  const ConstructOptions& o = r.inputs;
  j["inputs"] = {{"b", o.b},
                 {"alpha1", o.alpha1},
                 {"prime", o.prime},
                 {"seed", o.seed},
                 {"max_retries", o.max_retries},
                 {"step_budget", o.step_budget},
                 {"exhaustive_lines", o.exhaustive_lines.value_or(false)},
                 {"cross_check_ext", o.cross_check_ext},
                 {"section_checks", o.section_checks}};
  json stages = json::array();
  for (const StageRecord& s : r.stages) {
    json e = {{"index", s.index}, {"name", s.name}, {"attempts", s.attempts}, {"ok", s.ok}, {"detail", s.detail}};
    if (include_timings) e["seconds"] = s.seconds;
    stages.push_back(e);
  }
  j["stages"] = stages;
  json res;
  res["retries_used"] = r.retries_used;
  res["locally_free"] = r.locally_free;
  res["unstable_candidates"] = json::array();
  for (const LineInDualPlane& L : r.unstable_candidates) res["unstable_candidates"].push_back(to_json(L));
  res["exhaustive_unstable_count"] = r.exhaustive_unstable_count ? json(*r.exhaustive_unstable_count) : json();
  res["Y"] = dd_json(r.Y);
  res["singY"] = dd_json(r.singY);
  res["singY_residual"] = dd_json(r.singY_residual);
  res["X1"] = {{"dim", r.X1.dim}, {"degree", r.X1.degree}, {"genera", r.X1_genera}};
  res["X1_smooth"] = r.X1_smooth;
  res["X2"] = {{"dim", r.X2.dim}, {"degree", r.X2.degree}, {"betti", r.X2_betti}};
  res["chi_OX2"] = r.chi_OX2;
  res["K2_X2"] = r.K2_X2;
  res["alpha2_derived"] = r.alpha2_derived;
  res["ext_shift_agrees"] = r.ext_shift_agrees ? json(*r.ext_shift_agrees) : json();
  res["section_checks"] = json::array({r.h0_S2F_m2 ? json(*r.h0_S2F_m2) : json(), r.h0_S3F_m2 ? json(*r.h0_S3F_m2) : json()});
  j["results"] = res;
  json checks = json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["checks"] = checks;
  if (r.failure) j["failure"] = *r.failure;
  j["verdict"] = r.verdict();
  return j;
}

std::string summary_text(const ConstructionReport& r) {
  std::ostringstream os;
  const ConstructOptions& o = r.inputs;
  os << "type VII construction  b = " << o.b << "  alpha1 = " << o.alpha1 << "  prime = " << o.prime
     << "  seed = " << o.seed << "\n";
  for (const StageRecord& s : r.stages) {
    os << "  [" << (s.ok ? "ok" : "!!") << "] " << s.index << " " << s.name;
    if (s.attempts > 1) os << " (attempts " << s.attempts << ")";
    if (!s.detail.empty()) os << ": " << s.detail;
    os << "\n";
  }
  if (r.failure) os << "  failure: " << *r.failure << "\n";
  if (!r.failure) {
    os << "  K^2(X2) = " << r.K2_X2 << "  alpha2 = " << r.alpha2_derived;
    if (o.alpha1 == 6) os << "  (Alexander surface, one 6-secant line)";
    if (o.alpha1 == 7) os << "  (X1 is an Enriques surface of degree 10)";
    os << "\n";
  }
  for (const CheckResult& c : r.checks)
    if (!c.pass) os << "  check " << c.name << ": expected " << c.expected.dump() << ", got " << c.actual.dump() << "\n";
  os << "verdict: " << r.verdict() << "\n";
  return os.str();
}

bool SweepResult::pass() const {
  if (reports.empty()) return false;
  for (const ConstructionReport& r : reports)
    if (!r.pass()) return false;
  return true;
}

std::vector<std::vector<std::optional<long long>>> SweepResult::K2_columns() const {
  std::vector<std::vector<std::optional<long long>>> cols;
  std::pair<std::uint32_t, std::uint64_t> key{0, 0};
  for (const ConstructionReport& r : reports) {
    const std::pair<std::uint32_t, std::uint64_t> k{r.inputs.prime, r.inputs.seed};
    if (cols.empty() || k != key) cols.emplace_back();
    key = k;
    cols.back().push_back(r.failure ? std::nullopt : std::optional<long long>(r.K2_X2));
  }
  return cols;
}

SweepResult sweep(const std::vector<std::uint32_t>& primes, const std::vector<std::uint64_t>& seeds,
                  const ConstructOptions& base, const std::vector<int>& alphas) {
  SweepResult out;
  for (std::uint32_t p : primes)
    for (std::uint64_t s : seeds)
      for (int a : alphas) {
        ConstructOptions o = base;
        o.prime = p;
        o.seed = s;
        o.alpha1 = a;
        out.reports.push_back(construct_type_vii(o));
      }
  return out;
}

json to_json(const SweepResult& s, bool include_timings) {
  json j;
  j["version"] = kReportVersion;
  j["reports"] = json::array();
  for (const ConstructionReport& r : s.reports) j["reports"].push_back(to_json(r, include_timings));
  json cols = json::array();
  for (const auto& col : s.K2_columns()) {
    json c = json::array();
    for (const auto& k : col) c.push_back(k ? json(*k) : json(nullptr));
    cols.push_back(c);
  }
  j["K2_columns"] = cols;
  j["verdict"] = s.pass() ? "PASS" : "FAIL";
  return j;
}

std::string summary_text(const SweepResult& s) {
  std::ostringstream os;
  os << "prime    seed  alpha1  K2  alpha2  X1            smooth  sections  verdict\n";
  for (const ConstructionReport& r : s.reports) {
    char line[200];
    const std::string x1 = r.failure ? "-" : dd_string(r.X1);
    const std::string sec = r.h0_S2F_m2 && r.h0_S3F_m2
                                ? "(" + std::to_string(*r.h0_S2F_m2) + "," + std::to_string(*r.h0_S3F_m2) + ")"
                                : "-";
    std::snprintf(line, sizeof line, "%-8u %-5llu %-7d %-3lld %-7lld %-13s %-7s %-9s %s\n", r.inputs.prime,
                  static_cast<unsigned long long>(r.inputs.seed), r.inputs.alpha1, r.K2_X2, r.alpha2_derived,
                  x1.c_str(), r.X1_smooth ? "yes" : "no", sec.c_str(), r.verdict().c_str());
    os << line;
  }
  os << "verdict: " << (s.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace triplane
