#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "triplane/invariants/invariants.hpp"
#include "triplane/pipeline/pipeline.hpp"

using namespace triplane;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3, kError = 4 };

void emit_json(const std::string& path, const json& j) {
  if (path == "-") std::cout << j.dump(2) << "\n";
  else write_json_file(path, j);
}

std::string hp_string(const HilbertData& h) {
  std::string s;
  for (std::size_t i = h.hilbert_polynomial.size(); i-- > 0;) {
    const Rational& q = h.hilbert_polynomial[i];
    if (q.num == 0) continue;
    if (!s.empty()) s += " + ";
    s += q.to_string();
    if (i > 0) s += i == 1 ? "*t" : "*t^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string list_string(const std::vector<long long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

int cmd_invariants(int b, const std::string& json_path) {
  std::vector<TriplePlaneInvariants> rows = b ? std::vector<TriplePlaneInvariants>{invariant_table(b)} : invariant_table();
  if (!json_path.empty()) {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"type", r.type_label()}, {"b", r.b}, {"h", r.h}, {"K2", r.K2}, {"gH", r.gH},
                   {"branch_degree", r.branch_degree()}, {"cusps", r.cusp_count()}});
    emit_json(json_path, j);
    if (json_path == "-") return kOk;
  }
  std::printf("%-5s %3s %4s %4s %5s %5s %6s\n", "type", "b", "h", "K^2", "g(H)", "deg B", "cusps");
  for (const auto& r : rows)
    std::printf("%-5s %3d %4lld %4lld %5lld %5lld %6lld\n", r.type_label().c_str(), r.b, r.h, r.K2, r.gH,
                r.branch_degree(), r.cusp_count());
  return kOk;
}

int cmd_hilbert(const std::string& file, const std::string& json_path) {
  const Ideal I = ideal_from_json(read_json_file(file));
  const HilbertData h = hilbert(I);
  if (!json_path.empty()) {
    emit_json(json_path, to_json(h));
    if (json_path == "-") return kOk;
  }
  std::cout << "affine cone dimension: " << h.krull_dim << "\n"
            << "degree: " << h.degree << "\n"
            << "Hilbert polynomial: " << hp_string(h) << "\n"
            << "genera: " << list_string(h.genera) << "\n";
  return kOk;
}

int cmd_analyze(const std::string& file, bool exhaustive, bool sections, const std::string& json_path) {
  const SteinerPresentation P = presentation_from_json(read_json_file(file));
  json j;
  std::ostringstream os;
  j["b"] = P.b;
  j["kind"] = to_string(P.kind);
  const bool lf = is_locally_free(P);
  j["locally_free"] = lf;
  os << "Steiner presentation b = " << P.b << " (" << to_string(P.kind) << "), "
     << P.matrix.rows() << "x" << P.matrix.cols() << ", locally free: " << (lf ? "yes" : "no") << "\n";

  json splits = json::array();
  for (const LineInDualPlane& L : P.candidates) {
    const SplittingType t = splitting_type(P, L);
    splits.push_back({{"line", to_json(L)}, {"splitting", {t.first, t.second}}});
    os << "  line " << L.to_string() << ": O(" << t.first << ") + O(" << t.second << ")\n";
  }
  j["candidate_splitting_types"] = splits;
  const auto cand = unstable_lines(P, LineSearch::Candidates);
  j["unstable_candidates"] = cand.size();
  os << "unstable candidate lines: " << cand.size() << " of " << P.candidates.size() << "\n";

  if (exhaustive) {
    const auto lines = unstable_lines(P, LineSearch::Exhaustive);
    json arr = json::array();
    for (const auto& L : lines) arr.push_back(to_json(L));
    j["unstable_lines"] = arr;
    os << "exhaustive search over F_" << P.ring()->field().characteristic() << ": " << lines.size()
       << " unstable lines\n";
    for (const auto& L : lines) os << "  " << L.to_string() << "\n";
    if (lines.size() >= 5) {
      const int r = veronese_rank(P.ring()->field(), lines);
      const bool conic = r <= 5;
      j["veronese_rank"] = r;
      j["on_a_conic"] = conic;
      os << "Veronese rank " << r << ": " << (conic ? "the lines lie on a conic of the dual plane" : "not on a conic")
         << "\n";
    }
  }

  const SteinerCriterion c = steiner_criterion_check(P);
  j["criterion"] = {{"h0_F_m1", c.h0_F_m1}, {"h0_F", c.h0_F},     {"h1_F_m2", c.h1_F_m2},
                    {"h2_F_m2", c.h2_F_m2}, {"chi_F_m2", c.chi_F_m2}, {"ok", c.ok}};
  j["beilinson"] = {{"h0_F", c.h0_F}, {"h1_F_m2", c.h1_F_m2}, {"expected", {P.b - 2, P.b - 4}}};
  os << "Steiner criterion: h0(F(-1)) = " << c.h0_F_m1 << ", h0(F) = " << c.h0_F << ", h1(F(-2)) = " << c.h1_F_m2
     << ", h2(F(-2)) = " << c.h2_F_m2 << " -> " << (c.ok ? "of type F_b" : "NOT of type F_b") << "\n";
  os << "Beilinson numbers: h0(F) = " << c.h0_F << " (b-2 = " << P.b - 2 << "), h1(F(-2)) = " << c.h1_F_m2
     << " (b-4 = " << P.b - 4 << ")\n";

  if (sections) {
    const long long s2 = sheaf_sections(sym_power_module(P, 2), -2);
    const long long s3 = sheaf_sections(sym_power_module(P, 3), -2);
    const long long s3m1 = sheaf_sections(sym_power_module(P, 3), -1);
    j["sections"] = {{"h0_S2F_m2", s2}, {"h0_S3F_m2", s3}, {"h0_S3F_m1", s3m1}};
    os << "sections: h0(S2F(-2)) = " << s2 << ", h0(S3F(-2)) = " << s3 << ", h0(S3F(-1)) = " << s3m1 << "\n";
  }
  if (!json_path.empty()) {
    emit_json(json_path, j);
    if (json_path == "-") return kOk;
  }
  std::cout << os.str();
  return kOk;
}

int cmd_generate(const std::string& kind, int b, int alpha, std::uint32_t prime, std::uint64_t seed,
                 const std::string& out) {
  const RingPtr T = plane_ring(prime);
  Rng rng = Rng(seed).substream("generate");
  SteinerPresentation P;
  const SteinerKind k = steiner_kind_from_string(kind);
  if (k == SteinerKind::Generic) P = gen_steiner_matrix(T, b, alpha, rng);
  else if (k == SteinerKind::Logarithmic) P = gen_logarithmic_matrix(T, b, rng);
  else if (k == SteinerKind::Schwarzenberger) P = gen_schwarzenberger_matrix(T, b);
  else throw UsageError("generate: kind must be generic, logarithmic or schwarzenberger");
  P.seed = seed;
  emit_json(out, to_json(P));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triplane: Gröbner engine and type VII triple plane constructions"};
  app.require_subcommand(1);
  std::string json_path;

  ConstructOptions co;
  bool no_sections = false, no_timings = false, exhaustive = false, no_exhaustive = false;
  auto* construct = app.add_subcommand("construct", "build one type VII surface and check it");
  construct->add_option("--alpha1", co.alpha1, "number of unstable lines, 1..7")->required()->check(CLI::Range(1, 7));
  construct->add_option("--prime", co.prime, "field characteristic")->capture_default_str();
  construct->add_option("--seed", co.seed, "root seed")->capture_default_str();
  construct->add_option("--retries", co.max_retries, "retries per stage group")->capture_default_str();
  construct->add_option("--budget", co.step_budget, "Gröbner step budget per call, 0 = unlimited");
  construct->add_flag("--exhaustive-lines", exhaustive, "force the exhaustive unstable-line search");
  construct->add_flag("--no-exhaustive-lines", no_exhaustive, "skip the exhaustive search");
  construct->add_flag("--no-sections", no_sections, "skip stage 12");
  construct->add_flag("--no-timings", no_timings, "omit timings from the JSON report");
  construct->add_option("--json", json_path, "write the report to PATH ('-' for stdout)");

  std::vector<std::uint32_t> primes{PrimeField::kDefaultPrime};
  std::vector<std::uint64_t> seeds{1};
  std::vector<int> alphas{1, 2, 3, 4, 5, 6, 7};
  auto* sw = app.add_subcommand("sweep", "construct every alpha1 for each prime and seed");
  sw->add_option("--primes", primes, "primes")->delimiter(',');
  sw->add_option("--seeds", seeds, "seeds")->delimiter(',');
  sw->add_option("--alphas", alphas, "alpha1 values")->delimiter(',')->check(CLI::Range(1, 7));
  sw->add_option("--retries", co.max_retries, "retries per stage group");
  sw->add_flag("--no-sections", no_sections, "skip stage 12");
  sw->add_flag("--no-timings", no_timings, "omit timings from the JSON report");
  sw->add_option("--json", json_path, "write the reports to PATH ('-' for stdout)");

  int inv_b = 0;
  auto* inv = app.add_subcommand("invariants", "print the table of numerical invariants");
  inv->add_option("--b", inv_b, "single row")->check(CLI::Range(2, 13));
  inv->add_option("--json", json_path, "write JSON to PATH ('-' for stdout)");

  std::string matrix_file;
  bool an_sections = true;
  auto* an = app.add_subcommand("analyze", "splitting types, unstable lines and cohomology of a presentation");
  an->add_option("--matrix", matrix_file, "presentation or matrix JSON")->required()->check(CLI::ExistingFile);
  an->add_flag("--exhaustive-lines", exhaustive, "search all rational lines (prime <= 1000)");
  an->add_flag("!--no-sections", an_sections, "skip the symmetric power sections");
  an->add_option("--json", json_path, "write JSON to PATH ('-' for stdout)");

  std::string ideal_file;
  auto* hb = app.add_subcommand("hilbert", "Hilbert data of an ideal");
  hb->add_option("--ideal", ideal_file, "ideal JSON")->required()->check(CLI::ExistingFile);
  hb->add_option("--json", json_path, "write JSON to PATH ('-' for stdout)");

  std::string kind = "generic", out = "-";
  int gb = 8, galpha = 0;
  std::uint32_t gprime = PrimeField::kDefaultPrime;
  std::uint64_t gseed = 1;
  auto* gen = app.add_subcommand("generate", "write a Steiner presentation as JSON");
  gen->add_option("--kind", kind, "generic, logarithmic or schwarzenberger")->capture_default_str();
  gen->add_option("--b", gb, "b >= 5")->capture_default_str();
  gen->add_option("--alpha", galpha, "unstable lines for the generic kind")->capture_default_str();
  gen->add_option("--prime", gprime, "field characteristic")->capture_default_str();
  gen->add_option("--seed", gseed, "seed")->capture_default_str();
  gen->add_option("--out", out, "output path ('-' for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    co.section_checks = !no_sections;
    if (exhaustive) co.exhaustive_lines = true;
    if (no_exhaustive) co.exhaustive_lines = false;
    if (*construct) {
      const ConstructionReport r = construct_type_vii(co);
      if (!json_path.empty()) emit_json(json_path, to_json(r, !no_timings));
      if (json_path != "-") std::cout << summary_text(r);
      return r.pass() ? kOk : kFail;
    }
    if (*sw) {
      const SweepResult s = sweep(primes, seeds, co, alphas);
      if (!json_path.empty()) emit_json(json_path, to_json(s, !no_timings));
      if (json_path != "-") std::cout << summary_text(s);
      return s.pass() ? kOk : kFail;
    }
    if (*inv) return cmd_invariants(inv_b, json_path);
    if (*an) return cmd_analyze(matrix_file, exhaustive, an_sections, json_path);
    if (*hb) return cmd_hilbert(ideal_file, json_path);
    if (*gen) return cmd_generate(kind, gb, galpha, gprime, gseed, out);
  } catch (const StageBudgetExceeded& e) {
    std::cerr << "budget exceeded in " << e.what() << "\n";
    return kBudget;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kOk;
}
