#include "ginprod/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "ginprod/quadrature.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

extern "C" void openblas_set_num_threads(int);

namespace ginprod {

namespace {

// Parallelism lives at the sample level; BLAS must not add its own.
void pin_blas_single_threaded() {
  static std::once_flag flag;
  std::call_once(flag, [] { openblas_set_num_threads(1); });
}

// Stream tags partition the Philox counter space between consumers.
constexpr std::uint64_t kTagScalarProduct = 1ULL << 32;

int resolve_threads(int requested, std::int64_t samples) {
  int t = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  return static_cast<int>(std::min<std::int64_t>(t, samples));
}

/// Runs fn(sample_index) over [0, samples) on a deterministic block
/// partition; results must be written to per-sample slots by the callee.
template <typename Fn>
void parallel_samples(std::int64_t samples, int threads, const Fn& fn) {
  if (threads <= 1) {
    for (std::int64_t s = 0; s < samples; ++s) fn(s);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const std::int64_t lo = samples * t / threads;
    const std::int64_t hi = samples * (t + 1) / threads;
    pool.emplace_back([lo, hi, &fn] {
      for (std::int64_t s = lo; s < hi; ++s) fn(s);
    });
  }
  for (auto& th : pool) th.join();
}

Eigen::MatrixXcd sample_product(const MCConfig& cfg, std::int64_t sample_index) {
  Eigen::MatrixXcd X;
  for (int f = 0; f < cfg.spec.n; ++f) {
    RandomStream stream(cfg.seed, static_cast<std::uint64_t>(sample_index),
                        static_cast<std::uint64_t>(f));
    Eigen::MatrixXcd A = sample_ginibre(cfg.N, cfg.spec.sigmas[f], stream);
    if (f == 0)
      X = std::move(A);
    else
      X = X * A;  // left-to-right
  }
  return X;
}

// Power cache: powers[k] = X^k, built left to right on demand.  Runs of
// X† reuse the same powers through the adjoint.
class PowerCache {
 public:
  explicit PowerCache(const Eigen::MatrixXcd& X) { powers_.push_back(X); }

  const Eigen::MatrixXcd& power(int k) {
    while (static_cast<int>(powers_.size()) < k) powers_.push_back(powers_.back() * powers_[0]);
    return powers_[k - 1];
  }

 private:
  std::vector<Eigen::MatrixXcd> powers_;
};

struct Run {
  Token token;
  int length;
};

std::vector<Run> token_runs(const std::vector<Token>& tokens) {
  std::vector<Run> runs;
  for (Token t : tokens) {
    if (!runs.empty() && runs.back().token == t)
      ++runs.back().length;
    else
      runs.push_back({t, 1});
  }
  return runs;
}

Eigen::MatrixXcd chain_product(const std::vector<Token>& tokens, PowerCache& cache) {
  const auto runs = token_runs(tokens);
  Eigen::MatrixXcd M;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Eigen::MatrixXcd& P = cache.power(runs[i].length);
    if (i == 0)
      M = runs[i].token == Token::X ? P : Eigen::MatrixXcd(P.adjoint());
    else if (runs[i].token == Token::X)
      M = M * P;
    else
      M = M * P.adjoint();
  }
  return M;
}

}  // namespace

std::complex<double> trace_of_word(const Word& w, const Eigen::MatrixXcd& X) {
  const auto& tokens = w.tokens();
  if (tokens.empty()) throw std::invalid_argument("trace_of_word: empty word");
  PowerCache cache(X);
  if (tokens.size() == 1)
    return tokens[0] == Token::X ? X.trace() : std::conj(X.trace());

  // Cyclic split w ~ s * rc(s): the trace is ||prod(s)||_F^2, one half the
  // matrix products and exactly real.
  const int half = w.size() / 2;
  if (w.size() % 2 == 0) {
    for (int r = 0; r < w.size(); ++r) {
      const Word rotated = w.rotated(r);
      const std::vector<Token> head(rotated.tokens().begin(), rotated.tokens().begin() + half);
      if (Word{head}.conjugate_reversed() ==
          Word{std::vector<Token>(rotated.tokens().begin() + half, rotated.tokens().end())}) {
        return chain_product(head, cache).squaredNorm();
      }
    }
  }

  // Generic word: product of all tokens but the last, then
  // Tr(M L) = sum_{ik} M_ik L_ki without forming the final product.
  const std::vector<Token> head(tokens.begin(), tokens.end() - 1);
  const Eigen::MatrixXcd M = chain_product(head, cache);
  if (tokens.back() == Token::X) return M.cwiseProduct(X.transpose()).sum();
  return M.cwiseProduct(X.conjugate()).sum();
}

namespace {

// Sequential two-pass mean/stddev over the per-sample array; the reduction
// order is fixed, so results do not depend on the thread partition.
std::pair<double, double> mean_and_stderr(const std::vector<double>& xs) {
  const std::int64_t n = static_cast<std::int64_t>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(n);
  if (n < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  return {mean, sd / std::sqrt(static_cast<double>(n))};
}

}  // namespace

void MCConfig::validate() const {
  spec.validate();
  if (N < 1) throw std::invalid_argument("MCConfig: N must be positive");
  if (samples < 1) throw std::invalid_argument("MCConfig: need at least one sample");
}

Eigen::MatrixXcd sample_ginibre(int N, double sigma, RandomStream& stream) {
  if (N < 1) throw std::invalid_argument("sample_ginibre: N must be positive");
  if (!(sigma > 0)) throw std::invalid_argument("sample_ginibre: sigma must be positive");
  const double component_sigma = sigma / std::sqrt(2.0 * N);
  Eigen::MatrixXcd A(N, N);
  // Column-major fill order is part of the reproducibility contract.
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) A(i, j) = stream.next_complex_normal(component_sigma);
  return A;
}

Estimate estimate_word_moment(const Word& w, const MCConfig& cfg) {
  cfg.validate();
  if (w.empty()) throw std::invalid_argument("estimate_word_moment: empty word");
  pin_blas_single_threaded();

  std::vector<double> re(cfg.samples), im(cfg.samples);
  parallel_samples(cfg.samples, resolve_threads(cfg.threads, cfg.samples),
                   [&](std::int64_t s) {
                     const Eigen::MatrixXcd X = sample_product(cfg, s);
                     const std::complex<double> tr = trace_of_word(w, X);
                     re[s] = tr.real() / cfg.N;
                     im[s] = tr.imag() / cfg.N;
                   });

  Estimate est;
  est.samples = cfg.samples;
  std::tie(est.mean, est.stderr_) = mean_and_stderr(re);
  double imag_sum = 0.0;
  for (double x : im) imag_sum += x;
  est.imag_mean = imag_sum / static_cast<double>(cfg.samples);
  return est;
}

double SpectrumReport::theory_cdf(double r) const {
  if (r <= 0.0) return 0.0;
  if (r >= sigma) return 1.0;
  return std::pow(r / sigma, 2.0 / n);
}

SpectrumReport eigenvalue_radial_report(const MCConfig& cfg) {
  cfg.validate();
  pin_blas_single_threaded();

  SpectrumReport rep;
  rep.n = cfg.spec.n;
  rep.sigma = cfg.spec.sigma();

  std::vector<std::vector<double>> radii_per_sample(cfg.samples);
  std::vector<char> failed(cfg.samples, 0);
  parallel_samples(cfg.samples, resolve_threads(cfg.threads, cfg.samples),
                   [&](std::int64_t s) {
                     Eigen::MatrixXcd X = sample_product(cfg, s);
                     std::vector<std::complex<double>> evs(cfg.N);
                     // zgeev balances before the Hessenberg reduction, which
                     // matters for products whose entries span scales.
                     const lapack_int info = LAPACKE_zgeev(
                         LAPACK_COL_MAJOR, 'N', 'N', cfg.N, X.data(), cfg.N, evs.data(),
                         nullptr, 1, nullptr, 1);
                     if (info < 0)
                       throw std::logic_error("eigenvalue_radial_report: bad zgeev argument");
                     if (info > 0) {
                       failed[s] = 1;  // QR did not converge; drop the sample
                       return;
                     }
                     radii_per_sample[s].reserve(cfg.N);
                     for (const auto& ev : evs) radii_per_sample[s].push_back(std::abs(ev));
                   });

  for (std::int64_t s = 0; s < cfg.samples; ++s) {
    rep.skipped += failed[s];
    rep.radii.insert(rep.radii.end(), radii_per_sample[s].begin(), radii_per_sample[s].end());
  }
  std::sort(rep.radii.begin(), rep.radii.end());

  const double M = static_cast<double>(rep.radii.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < rep.radii.size(); ++i) {
    const double F = rep.theory_cdf(rep.radii[i]);
    sup = std::max(sup, std::abs(static_cast<double>(i + 1) / M - F));
    sup = std::max(sup, std::abs(static_cast<double>(i) / M - F));
  }
  rep.sup_dev = sup;
  return rep;
}

namespace {

// Oracle density of z = a b at radius r, for a, b with N(0,1) real and
// imaginary parts: p(r) = (1/4pi) * I(r) with I the Bessel-type integral.
double scalar_density_oracle(double r) {
  return bessel_k0_integral(r) / (4.0 * std::numbers::pi);
}

// Oracle probability of the annulus [r0, r1]: int (1/2) I(r) r dr by
// composite Gauss-Legendre.
double scalar_bin_probability(double r0, double r1) {
  static constexpr double kNodes[] = {-0.9602898564975363, -0.7966664774136267,
                                      -0.5255324099163290, -0.1834346424956498,
                                      0.1834346424956498,  0.5255324099163290,
                                      0.7966664774136267,  0.9602898564975363};
  static constexpr double kWeights[] = {0.1012285362903763, 0.2223810344533745,
                                        0.3137066458778873, 0.3626837833783620,
                                        0.3626837833783620, 0.3137066458778873,
                                        0.2223810344533745, 0.1012285362903763};
  constexpr int kPanels = 4;
  double total = 0.0;
  for (int panel = 0; panel < kPanels; ++panel) {
    const double a = r0 + (r1 - r0) * panel / kPanels;
    const double b = r0 + (r1 - r0) * (panel + 1) / kPanels;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < 8; ++i) {
      const double r = mid + half * kNodes[i];
      if (r <= 0.0) continue;
      total += half * kWeights[i] * 0.5 * bessel_k0_integral(r) * r;
    }
  }
  return total;
}

}  // namespace

ScalarDensityReport scalar_product_density_check(std::int64_t samples, std::uint64_t seed,
                                                 int bins, double r_max,
                                                 std::int64_t min_bin_count) {
  if (samples < 10000)
    throw std::invalid_argument("scalar_product_density_check: need at least 10^4 samples");
  if (bins < 4 || !(r_max > 0))
    throw std::invalid_argument("scalar_product_density_check: bad binning");

  ScalarDensityReport rep;
  rep.samples = samples;
  rep.bins.resize(bins);
  const double width = r_max / bins;

  std::vector<std::int64_t> counts(bins, 0);
  std::int64_t overflow = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    RandomStream stream(seed, static_cast<std::uint64_t>(s), kTagScalarProduct);
    const std::complex<double> a{stream.next_normal(), stream.next_normal()};
    const std::complex<double> b{stream.next_normal(), stream.next_normal()};
    const double r = std::abs(a * b);
    const int bin = static_cast<int>(r / width);
    if (bin >= bins)
      ++overflow;
    else
      ++counts[bin];
  }
  rep.overflow_count = overflow;

  const double S = static_cast<double>(samples);
  for (int i = 0; i < bins; ++i) {
    DensityBin& b = rep.bins[i];
    b.center = (i + 0.5) * width;
    b.width = width;
    b.count = counts[i];
    const double area = 2.0 * std::numbers::pi * b.center * width;
    b.density = static_cast<double>(counts[i]) / (S * area);
    try {
      b.theory_density = scalar_density_oracle(b.center);
      b.probability = scalar_bin_probability(i * width, (i + 1) * width);
    } catch (const QuadratureError&) {
      throw QuadratureError("scalar_product_density_check: quadrature failed in the bin at |z| = " +
                            std::to_string(b.center));
    }
    if (counts[i] >= min_bin_count && b.probability > 0.0) {
      const double stderr_bin = std::sqrt(b.probability * (1.0 - b.probability) / S);
      b.dev_sigmas = std::abs(static_cast<double>(counts[i]) / S - b.probability) / stderr_bin;
      rep.max_dev_sigmas = std::max(rep.max_dev_sigmas, b.dev_sigmas);
    }
  }

  // The K_0-type log divergence at the origin: the empirical density should
  // rise monotonically toward r = 0 across the first populated bins.
  rep.density_increases_toward_zero = true;
  for (int i = 0; i + 1 < std::min(bins, 4); ++i) {
    if (rep.bins[i].count < min_bin_count || rep.bins[i + 1].count < min_bin_count) continue;
    if (rep.bins[i].density <= rep.bins[i + 1].density) rep.density_increases_toward_zero = false;
  }

  // Normalization of the oracle itself: int_0^inf (1/2) I(r) r dr = 1.
  rep.oracle_total_integral = adaptive_simpson(
      [](double r) { return r > 0 ? 0.5 * bessel_k0_integral(r) * r : 0.0; }, 0.0, 60.0, 1e-9);
  return rep;
}

double log_multivariate_gamma(int N, double a) {
  if (N < 1) throw std::invalid_argument("log_multivariate_gamma: N must be positive");
  if (!(a > N - 1))
    throw std::domain_error("log_multivariate_gamma: requires a > N - 1");
  double acc = 0.5 * N * (N - 1) * std::log(std::numbers::pi);
  for (int k = 1; k <= N; ++k) acc += std::lgamma(a - k + 1);
  return acc;
}

}  // namespace ginprod
