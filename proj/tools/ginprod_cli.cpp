// ginprod: mixed moments of products of complex Gaussian matrices, by three
// routes: exact symbolic Wick contraction, closed-form large-N evaluation,
// and seeded Monte Carlo.  See README.md for the subcommand reference.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ginprod/combinatorics.hpp"
#include "ginprod/moments.hpp"
#include "ginprod/montecarlo.hpp"
#include "ginprod/serialize.hpp"
#include "ginprod/verify.hpp"
#include "ginprod/wick.hpp"
#include "ginprod/wishart.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 2;
constexpr int kExitUsage = 64;
constexpr int kExitCapacity = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

ginprod::EnsembleSpec make_spec(int factors, const std::vector<double>& sigmas) {
  if (sigmas.empty()) return ginprod::EnsembleSpec::uniform(factors);
  ginprod::EnsembleSpec spec;
  spec.n = factors;
  spec.sigmas = sigmas;
  if (static_cast<int>(sigmas.size()) == 1 && factors > 1)
    spec.sigmas.assign(factors, sigmas[0]);
  spec.validate();
  return spec;
}

// ---- moment ---------------------------------------------------------------

struct MomentArgs {
  std::string word;
  int factors = 1;
  bool finite_n = false;
  bool symbolic = false;
  std::vector<double> sigmas;
  std::string format = "json";
  std::string out;
  int cap = 0;
};

int run_moment(const MomentArgs& args) {
  const ginprod::Word w = ginprod::parse_word_pattern(args.word);
  const ginprod::EnsembleSpec spec = make_spec(args.factors, args.sigmas);
  if (args.finite_n && spec.n > 2)
    throw UsageError("--finite-n requires --factors <= 2");

  if (args.symbolic) {
    const int cap = args.cap > 0 ? args.cap : ginprod::kDefaultPairingCap;
    write_output(ginprod::trace_polynomial_json(ginprod::ginibre_moment_poly(w, cap), 2),
                 args.out);
    return kExitOk;
  }

  ginprod::MomentResult result;
  if (args.finite_n) {
    const int cap = args.cap > 0 ? args.cap : ginprod::kDefaultPairingCap;
    result = spec.n == 2 ? ginprod::finite_n_moment_n2(w, cap)
                         : ginprod::finite_n_moment_n1(w, cap);
    result.spec = spec;
  } else {
    const int cap = args.cap > 0 ? args.cap : ginprod::kDefaultPlanarCap;
    result = ginprod::large_n_moment(w, spec, cap);
  }
  write_output(args.format == "csv" ? ginprod::moment_result_csv(result)
                                    : ginprod::moment_result_json(result, 2),
               args.out);
  return kExitOk;
}

// ---- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  int necklaces = 0;
  int partitions_of = 0;
  std::string pairings_word;
  bool classify = false;
};

int run_enumerate(const EnumerateArgs& args) {
  const int selected = (args.necklaces > 0) + (args.partitions_of > 0) +
                       (!args.pairings_word.empty());
  if (selected != 1)
    throw UsageError("choose exactly one of --necklaces, --pairings, --partitions");

  if (args.necklaces > 0) {
    const auto words = ginprod::enumerate_necklaces(args.necklaces);
    for (const auto& w : words) std::cout << w.str() << "\n";
    std::cout << "count: " << words.size()
              << " (formula: " << ginprod::necklace_count(args.necklaces).str() << ")\n";
    return kExitOk;
  }

  if (args.partitions_of > 0) {
    const auto parts = ginprod::partitions(args.partitions_of);
    for (const auto& p : parts) std::cout << p.str() << "\n";
    std::cout << "count: " << parts.size() << "\n";
    return kExitOk;
  }

  const ginprod::Word w = ginprod::parse_word_pattern(args.pairings_word);
  const ginprod::Diagram d(w);
  const auto pairings = ginprod::enumerate_pairings(d);
  int noncrossing = 0;
  for (const auto& p : pairings) {
    for (std::size_t i = 0; i < p.match.size(); ++i)
      std::cout << (i ? " " : "") << i << "->" << p.match[i];
    if (args.classify) {
      const bool nc = ginprod::is_noncrossing(d, p);
      noncrossing += nc;
      std::cout << "  " << (nc ? "non-crossing" : "crossing")
                << " genus=" << ginprod::genus(d, p);
    }
    std::cout << "\n";
  }
  std::cout << "count: " << pairings.size();
  if (args.classify) std::cout << " (" << noncrossing << " non-crossing)";
  std::cout << "\n";
  return kExitOk;
}

// ---- mc / spectrum -----------------------------------------------------------

struct MCArgs {
  std::string word;
  int factors = 1;
  int size = 200;
  std::int64_t samples = 500;
  std::uint64_t seed = 0;
  std::vector<double> sigmas;
  int threads = 0;
  std::string format = "json";
  std::string out;
  int bins = 50;
  std::string density_out;
};

ginprod::MCConfig make_config(const MCArgs& args) {
  ginprod::MCConfig cfg;
  cfg.spec = make_spec(args.factors, args.sigmas);
  cfg.N = args.size;
  cfg.samples = args.samples;
  cfg.seed = args.seed;
  cfg.threads = args.threads;
  cfg.validate();
  return cfg;
}

int run_mc(const MCArgs& args) {
  const ginprod::Word w = ginprod::parse_word_pattern(args.word);
  const ginprod::MCConfig cfg = make_config(args);
  const ginprod::Estimate est = ginprod::estimate_word_moment(w, cfg);
  write_output(args.format == "csv" ? ginprod::estimate_csv(w, cfg, est)
                                    : ginprod::estimate_json(w, cfg, est, 2),
               args.out);
  return kExitOk;
}

int run_spectrum(const MCArgs& args) {
  const ginprod::MCConfig cfg = make_config(args);
  const ginprod::SpectrumReport rep = ginprod::eigenvalue_radial_report(cfg);
  write_output(ginprod::spectrum_cdf_csv(rep), args.out);
  if (!args.density_out.empty())
    write_output(ginprod::spectrum_density_csv(rep, args.bins), args.density_out);
  std::cerr << "eigenvalues: " << rep.radii.size() << ", sup CDF deviation: " << rep.sup_dev
            << (rep.skipped ? ", skipped samples: " + std::to_string(rep.skipped) : "") << "\n";
  return kExitOk;
}

// ---- verify -------------------------------------------------------------------

struct VerifyArgs {
  bool quick = false;
  bool full = false;
  bool desk = false;
  std::uint64_t seed = 42;
  bool seed_given = false;
  int threads = 0;
  std::string json_out;
  std::string artifacts_dir;
};

int run_verify(const VerifyArgs& args) {
  if (args.full && !args.seed_given)
    throw UsageError("verify --full draws samples and requires an explicit --seed");
  ginprod::verify::VerifyOptions opts;
  opts.full = args.full;
  opts.desk_scale = args.desk;
  opts.seed = args.seed;
  opts.threads = args.threads;
  opts.artifacts_dir = args.artifacts_dir;

  const ginprod::verify::VerifyReport rep = ginprod::verify::run_all(opts);
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected
              << ", obtained " << c.obtained << " (tolerance: " << c.tolerance << ")\n";
  }
  std::cout << rep.passed << "/" << rep.passed + rep.failed << " checks passed\n";
  if (!args.json_out.empty()) {
    std::ofstream out(args.json_out);
    out << ginprod::verify::report_json(rep, opts);
  }
  return rep.all_pass() ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed moments of products of Ginibre matrices"};
  app.require_subcommand(1);
  app.set_config("--config", "", "configuration file (key=value)");

  MomentArgs moment_args;
  auto* moment = app.add_subcommand("moment", "evaluate a mixed moment exactly");
  moment->add_option("--word", moment_args.word, "trace word ('xdxd' or 'i,j;i,j' exponent form)")
      ->required();
  moment->add_option("--factors", moment_args.factors, "number of Ginibre factors n")
      ->required()
      ->check(CLI::PositiveNumber);
  moment->add_flag("--finite-n", moment_args.finite_n, "exact finite-N value (factors <= 2)");
  moment->add_flag("--symbolic", moment_args.symbolic,
                   "print the spectator-variance trace polynomial as JSON");
  moment->add_option("--sigma", moment_args.sigmas, "per-factor sigmas (default all 1)")
      ->delimiter(',');
  moment->add_option("--format", moment_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  moment->add_option("--out", moment_args.out, "write output to a file");
  moment->add_option("--cap", moment_args.cap, "override the enumeration cap");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "list necklaces, pairings, or partitions");
  enumerate->add_option("--necklaces", enum_args.necklaces, "weight m: canonical trace words");
  enumerate->add_option("--pairings", enum_args.pairings_word, "word: all Wick pairings");
  enumerate->add_flag("--classify", enum_args.classify, "mark crossing/non-crossing and genus");
  enumerate->add_option("--partitions", enum_args.partitions_of, "weight m: integer partitions");

  MCArgs mc_args;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of a word moment");
  mc->add_option("--word", mc_args.word, "trace word")->required();
  mc->add_option("--factors", mc_args.factors, "number of factors n")
      ->required()
      ->check(CLI::PositiveNumber);
  mc->add_option("--size", mc_args.size, "matrix size N")->check(CLI::PositiveNumber);
  mc->add_option("--samples", mc_args.samples, "sample count")->check(CLI::PositiveNumber);
  mc->add_option("--seed", mc_args.seed, "RNG seed (required: no silent entropy)")->required();
  mc->add_option("--sigma", mc_args.sigmas, "per-factor sigmas")->delimiter(',');
  mc->add_option("--threads", mc_args.threads, "worker threads (0 = all cores)");
  mc->add_option("--format", mc_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  mc->add_option("--out", mc_args.out, "write output to a file");

  MCArgs sp_args;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue radial law of sampled products");
  spectrum->add_option("--factors", sp_args.factors, "number of factors n")
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--size", sp_args.size, "matrix size N")->check(CLI::PositiveNumber);
  spectrum->add_option("--samples", sp_args.samples, "sample count")->check(CLI::PositiveNumber);
  spectrum->add_option("--seed", sp_args.seed, "RNG seed (required)")->required();
  spectrum->add_option("--sigma", sp_args.sigmas, "per-factor sigmas")->delimiter(',');
  spectrum->add_option("--threads", sp_args.threads, "worker threads");
  spectrum->add_option("--bins", sp_args.bins, "bins for the density CSV")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--out", sp_args.out, "radial CDF CSV path");
  spectrum->add_option("--density-out", sp_args.density_out, "binned density CSV path");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_flag("--quick", verify_args.quick, "symbolic criteria only (default)");
  verify->add_flag("--full", verify_args.full, "include the Monte Carlo criteria");
  verify->add_flag("--desk", verify_args.desk, "desk-scale presets for the table checks");
  verify->add_option("--seed", verify_args.seed, "RNG seed for the stochastic criteria")
      ->capture_default_str();
  verify->add_option("--threads", verify_args.threads, "worker threads");
  verify->add_option("--json-out", verify_args.json_out, "write the machine-readable report");
  verify->add_option("--artifacts-dir", verify_args.artifacts_dir,
                     "dump CSV artifacts for the stochastic checks");

  try {
    app.parse(argc, argv);
    verify_args.seed_given = verify->count("--seed") > 0;
    if (moment->parsed()) return run_moment(moment_args);
    if (enumerate->parsed()) return run_enumerate(enum_args);
    if (mc->parsed()) return run_mc(mc_args);
    if (spectrum->parsed()) return run_spectrum(sp_args);
    if (verify->parsed()) return run_verify(verify_args);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ginprod::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
