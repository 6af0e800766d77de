#include "ginprod/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ginprod/combinatorics.hpp"
#include "ginprod/moments.hpp"
#include "ginprod/montecarlo.hpp"
#include "ginprod/serialize.hpp"
#include "ginprod/wick.hpp"
#include "ginprod/wishart.hpp"

namespace ginprod::verify {

namespace {

CheckResult make_check(std::string name, std::string expected, std::string obtained,
                       std::string tolerance, bool pass) {
  return CheckResult{std::move(name), std::move(expected), std::move(obtained),
                     std::move(tolerance), pass};
}

CheckResult exact_check(std::string name, const std::string& expected,
                        const std::string& obtained) {
  const bool pass = expected == obtained;
  return make_check(std::move(name), expected, obtained, "exact", pass);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Criteria draw disjoint Philox streams by offsetting the base seed, so the
// same sample indices never reuse random numbers across checks.
std::uint64_t criterion_seed(const VerifyOptions& opts, int k, int salt = 0) {
  return opts.seed + 1000003ULL * static_cast<std::uint64_t>(k) +
         770001ULL * static_cast<std::uint64_t>(salt);
}

void write_artifact(const VerifyOptions& opts, const std::string& filename,
                    const std::string& contents) {
  if (opts.artifacts_dir.empty()) return;
  std::filesystem::create_directories(opts.artifacts_dir);
  std::ofstream out(std::filesystem::path(opts.artifacts_dir) / filename);
  out << contents;
}

// --- criterion 1: symbolic goldens for the spectator-variance moments ----

std::vector<CheckResult> criterion_symbolic_goldens() {
  std::vector<CheckResult> checks;

  TracePolynomial e1(2);
  e1.add_term(Partition({1}), -1, 1);
  checks.push_back(exact_check("moment poly of xd is s^2 TrW/N", e1.str(),
                               ginibre_moment_poly(Word::parse("xd")).str()));

  TracePolynomial e2(4);
  e2.add_term(Partition({1, 1}), -2, 1);
  e2.add_term(Partition({2}), -1, 1);
  checks.push_back(exact_check("moment poly of xdxd is s^4 ((TrW)^2/N^2 + TrW^2/N)", e2.str(),
                               ginibre_moment_poly(Word::parse("xdxd")).str()));

  TracePolynomial e3(6);
  e3.add_term(Partition({1, 1, 1}), -3, 1);
  e3.add_term(Partition({1, 2}), -2, 3);
  e3.add_term(Partition({3}), -1, 1);
  e3.add_term(Partition({3}), -3, 1);  // the crossing pairing, two orders down
  checks.push_back(exact_check("moment poly of (xd)^3 including the TrW^3/N^3 term", e3.str(),
                               ginibre_moment_poly(Word::parse("xdxdxd")).str()));
  return checks;
}

// --- criterion 2: finite-N reference value for (xd)^3 at n = 2 -----------

std::vector<CheckResult> criterion_finite_n_golden() {
  NLaurent expected;
  expected.add_term(0, 12);
  expected.add_term(-1, 6);
  expected.add_term(-2, 12);
  expected.add_term(-4, 1);
  const MomentResult r = finite_n_moment_n2(Word::parse("xdxdxd"));
  return {exact_check("finite-N moment of (xd)^3 at n=2, reference value", expected.str(),
                      r.value_n.str())};
}

// --- criterion 3: Wishart oracle agreement --------------------------------

std::vector<CheckResult> criterion_wishart_oracle() {
  std::vector<CheckResult> checks;

  checks.push_back(exact_check("wishart <TrW> = N", "N",
                               wishart_multitrace(Partition({1})).str()));
  checks.push_back(exact_check("wishart <TrW^2> = 2N", "2*N",
                               wishart_multitrace(Partition({2})).str()));
  checks.push_back(exact_check("wishart <TrW^3> = 5N + 1/N", "5*N + 1/N",
                               wishart_multitrace(Partition({3})).str()));

  NLaurent quoted12;  // reference value: N^2 (2 + 2/N + 2/N^2)
  quoted12.add_term(2, 2);
  quoted12.add_term(1, 2);
  quoted12.add_term(0, 2);
  checks.push_back(exact_check("wishart <TrW^2 TrW>, reference value 2N^2 + 2N + 2",
                               quoted12.str(), wishart_multitrace(Partition({1, 2})).str()));

  for (int m = 1; m <= 3; ++m) {
    for (const Partition& p : partitions(m)) {
      checks.push_back(exact_check("delta-formula oracle agreement for " + p.str(),
                                   wishart_low_moments_closed_form(p).str(),
                                   wishart_multitrace(p).str()));
    }
  }
  return checks;
}

// --- criterion 4: multi-Wishart recursion vs Fuss-Catalan ------------------

std::vector<CheckResult> criterion_fuss_catalan_recursion() {
  std::vector<CheckResult> checks;
  int mismatches = 0;
  std::string first;
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      if (multi_wishart_moment(n, m) != fuss_catalan(n, m) && mismatches++ == 0)
        first = "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
  checks.push_back(make_check("multi-Wishart recursion equals FC_n(m), n,m <= 5",
                              "25/25 agree", mismatches ? "mismatch at " + first : "25/25 agree",
                              "exact", mismatches == 0));

  int failures = 0;
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      if (!fc_recursion_check(n, m)) ++failures;
  checks.push_back(make_check("Fuss-Catalan recursion identity, n in 2..5, m <= 5",
                              "20/20 hold", failures ? std::to_string(failures) + " fail" : "20/20 hold",
                              "exact", failures == 0));
  return checks;
}

// --- criterion 5: tc coefficient tables ------------------------------------

std::string tc_map_str(const std::map<Partition, BigInt>& tc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : tc) {
    if (!first) os << ", ";
    first = false;
    os << p.str() << ":" << c.str();
  }
  return os.str();
}

std::vector<CheckResult> criterion_tc_tables() {
  std::vector<CheckResult> checks;

  int mismatches = 0;
  std::string first;
  for (int m = 1; m <= 6; ++m) {
    const auto tc = tc_coefficients(Word::xd_power(m));
    for (const Partition& p : partitions(m)) {
      auto it = tc.find(p);
      const BigInt got = it == tc.end() ? BigInt(0) : it->second;
      if (got != tc_leading(p) && mismatches++ == 0) first = "m=" + std::to_string(m) + " " + p.str();
    }
  }
  checks.push_back(make_check("tc((xd)^m) equals the closed formula for m <= 6",
                              "all partitions agree",
                              mismatches ? "mismatch at " + first : "all partitions agree", "exact",
                              mismatches == 0));

  checks.push_back(exact_check("tc((xd)^3) table", "(1,1,1):1, (1,2):3, (3):1",
                               tc_map_str(tc_coefficients(Word::xd_power(3)))));
  checks.push_back(exact_check(
      "tc((xd)^5) table", "(1,1,1,1,1):1, (1,1,1,2):10, (1,1,3):10, (1,2,2):10, (1,4):5, (2,3):5, (5):1",
      tc_map_str(tc_coefficients(Word::xd_power(5)))));

  const auto tc4 = tc_coefficients(Word::xd_power(4));
  BigInt total = 0;
  for (const auto& [p, c] : tc4) total += c;
  const bool pass =
      tc4.at(Partition({1, 1, 2})) == 6 && total == catalan(4);
  checks.push_back(make_check("tc((xd)^4): (1,1,2) -> 6 and sum rule C_4 = 14",
                              "(1,1,2):6, sum 14",
                              "(1,1,2):" + tc4.at(Partition({1, 1, 2})).str() + ", sum " + total.str(),
                              "exact", pass));
  return checks;
}

// --- criterion 6: genus/crossing dichotomy ---------------------------------

std::vector<CheckResult> criterion_genus_dichotomy() {
  long words = 0, pairings = 0, mismatches = 0;
  std::string first;
  for (int m = 1; m <= 6; ++m) {
    std::vector<Token> tokens(2 * m);
    std::fill(tokens.begin(), tokens.begin() + m, Token::X);
    std::fill(tokens.begin() + m, tokens.end(), Token::XDag);
    do {
      const Word w{tokens};
      const Diagram d(w);
      ++words;
      for (const Pairing& p : enumerate_pairings(d)) {
        ++pairings;
        if ((genus(d, p) == 0) != is_noncrossing(d, p)) {
          if (mismatches++ == 0) first = w.str();
        }
      }
    } while (std::next_permutation(tokens.begin(), tokens.end()));
  }
  std::ostringstream obtained;
  obtained << words << " words, " << pairings << " pairings, " << mismatches << " mismatches";
  return {make_check("genus = 0 iff non-crossing, every pairing of every balanced word m <= 6",
                     "0 mismatches", obtained.str(), "exhaustive", mismatches == 0)};
}

// --- criteria 7/8: table reproduction --------------------------------------

CheckResult table_check(const VerifyOptions& opts, int criterion, int n, int m, int N,
                        std::int64_t samples, double target, double rel_tol,
                        const char* preset) {
  MCConfig cfg;
  cfg.spec = EnsembleSpec::uniform(n);
  cfg.N = N;
  cfg.samples = samples;
  cfg.seed = criterion_seed(opts, criterion, 100 * n + m + (N == 200 ? 17 : 0));
  cfg.threads = opts.threads;
  const Word w = [&] {
    std::vector<Token> t;
    t.insert(t.end(), m, Token::X);
    t.push_back(Token::XDag);
    t.push_back(Token::X);
    t.insert(t.end(), m, Token::XDag);
    return Word{std::move(t)};
  }();

  const Estimate est = estimate_word_moment(w, cfg);
  const double rel = std::abs(est.mean - target) / target;
  std::ostringstream name, obtained;
  name << "x^" << m << " d x d^" << m << " at n=" << n << " (" << preset << ", N=" << N << ", "
       << samples << " samples)";
  obtained << fmt(est.mean) << " +- " << fmt(est.stderr_) << " (rel dev " << fmt(100 * rel)
           << "%)";
  write_artifact(opts, "table_n" + std::to_string(n) + "_m" + std::to_string(m) + "_" + preset + ".csv",
                 estimate_csv(w, cfg, est));
  return make_check(name.str(), fmt(target), obtained.str(),
                    fmt(100 * rel_tol) + "% relative", rel <= rel_tol);
}

std::vector<CheckResult> criterion_table1(const VerifyOptions& opts) {
  std::vector<CheckResult> checks;
  for (int m = 1; m <= 4; ++m) {
    if (!opts.desk_scale)
      checks.push_back(table_check(opts, 7, 2, m, 500, 1500, 3.0, 0.02, "full"));
    checks.push_back(table_check(opts, 7, 2, m, 200, 500, 3.0, 0.03, "desk"));
  }
  return checks;
}

std::vector<CheckResult> criterion_table2(const VerifyOptions& opts) {
  std::vector<CheckResult> checks;
  const int N = opts.desk_scale ? 200 : 500;
  const std::int64_t S = opts.desk_scale ? 500 : 1500;
  const double tol = opts.desk_scale ? 0.03 : 0.02;
  const char* preset = opts.desk_scale ? "desk" : "full";
  for (int n = 3; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m)
      checks.push_back(table_check(opts, 8, n, m, N, S, n + 1.0, tol, preset));
  return checks;
}

// --- criterion 9: radial eigenvalue law ------------------------------------

std::vector<CheckResult> criterion_radial_law(const VerifyOptions& opts) {
  std::vector<CheckResult> checks;
  for (int n = 1; n <= 3; ++n) {
    MCConfig cfg;
    cfg.spec = EnsembleSpec::uniform(n);
    cfg.N = 1000;
    cfg.samples = 1;
    cfg.seed = criterion_seed(opts, 9, n);
    cfg.threads = opts.threads;
    const SpectrumReport rep = eigenvalue_radial_report(cfg);
    write_artifact(opts, "radial_n" + std::to_string(n) + ".csv", spectrum_cdf_csv(rep));
    write_artifact(opts, "radial_density_n" + std::to_string(n) + ".csv",
                   spectrum_density_csv(rep, 50));

    checks.push_back(make_check(
        "radial CDF vs (r/sigma)^(2/" + std::to_string(n) + ") at n=" + std::to_string(n) +
            ", N=1000",
        "sup dev <= 0.03", "sup dev = " + fmt(rep.sup_dev) +
            (rep.skipped ? " (" + std::to_string(rep.skipped) + " skipped)" : ""),
        "0.03 sup-norm", rep.sup_dev <= 0.03));

    const double over = static_cast<double>(std::count_if(
                            rep.radii.begin(), rep.radii.end(),
                            [&](double r) { return r > 1.05 * rep.sigma; })) /
                        static_cast<double>(rep.radii.size());
    checks.push_back(make_check("radial support: fraction |lambda| > 1.05 sigma at n=" +
                                    std::to_string(n),
                                "< 1%", fmt(100 * over) + "%", "1%", over < 0.01));
  }
  return checks;
}

// --- criterion 10: scalar product density ----------------------------------

std::vector<CheckResult> criterion_scalar_density(const VerifyOptions& opts) {
  std::vector<CheckResult> checks;
  const ScalarDensityReport rep =
      scalar_product_density_check(100000, criterion_seed(opts, 10));
  write_artifact(opts, "scalar_density.csv", density_csv(rep));

  checks.push_back(make_check("scalar product density vs quadrature oracle (10^5 samples)",
                              "max dev <= 3 binomial stderr",
                              "max dev = " + fmt(rep.max_dev_sigmas) + " stderr",
                              "3 binomial stderr over bins with >= 100 hits",
                              rep.max_dev_sigmas <= 3.0));
  checks.push_back(make_check("oracle density integrates to 1 over the plane",
                              "|integral - 1| <= 1e-6",
                              "integral = " + fmt(rep.oracle_total_integral), "1e-6",
                              std::abs(rep.oracle_total_integral - 1.0) <= 1e-6));
  checks.push_back(make_check("empirical density rises monotonically toward z = 0", "monotone",
                              rep.density_increases_toward_zero ? "monotone" : "not monotone",
                              "first populated bins", rep.density_increases_toward_zero));
  return checks;
}

// --- criterion 11: quick suite timing ---------------------------------------

std::vector<CheckResult> criterion_quick_timing(const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  for (int k = 1; k <= kNumQuickCriteria; ++k)
    for (const CheckResult& c : run_criterion(k, opts)) failures += !c.pass;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // Self-contained by construction: no network, no data files.
  return {make_check("quick suite (criteria 1-6) runs offline in under 2 minutes",
                     "< 120 s", fmt(secs) + " s", "120 s wall clock", secs < 120.0)};
}

}  // namespace

bool criterion_is_stochastic(int k) { return k >= 7 && k <= 10; }

std::vector<CheckResult> run_criterion(int k, const VerifyOptions& opts) {
  switch (k) {
    case 1: return criterion_symbolic_goldens();
    case 2: return criterion_finite_n_golden();
    case 3: return criterion_wishart_oracle();
    case 4: return criterion_fuss_catalan_recursion();
    case 5: return criterion_tc_tables();
    case 6: return criterion_genus_dichotomy();
    case 7: return criterion_table1(opts);
    case 8: return criterion_table2(opts);
    case 9: return criterion_radial_law(opts);
    case 10: return criterion_scalar_density(opts);
    case 11: return criterion_quick_timing(opts);
    default: throw std::invalid_argument("run_criterion: criterion must be 1..11");
  }
}

VerifyReport run_all(const VerifyOptions& opts) {
  VerifyReport rep;
  const int last = opts.full ? kNumCriteria : kNumQuickCriteria;
  for (int k = 1; k <= last; ++k) {
    if (k == 11 && !opts.full) continue;
    for (CheckResult& c : run_criterion(k, opts)) {
      (c.pass ? rep.passed : rep.failed)++;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

std::string report_json(const VerifyReport& rep, const VerifyOptions& opts, int indent) {
  nlohmann::json j;
  j["mode"] = opts.full ? "full" : "quick";
  j["seed"] = opts.seed;
  j["scale"] = opts.desk_scale ? "desk" : "full";
  j["summary"] = {{"total", rep.passed + rep.failed},
                  {"passed", rep.passed},
                  {"failed", rep.failed}};
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"obtained", c.obtained},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  j["checks"] = std::move(checks);
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace ginprod::verify
