#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "ginprod/moments.hpp"
#include "ginprod/rng.hpp"
#include "ginprod/word.hpp"

namespace ginprod {

struct MCConfig {
  EnsembleSpec spec;
  int N = 200;
  std::int64_t samples = 500;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

/// Monte Carlo estimate.  Bit-for-bit reproducible from (config, seed):
/// per-sample values come from counter-based substreams and are reduced in
/// sample order, so the thread count cannot change the result.
struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;   // sample standard deviation / sqrt(samples)
  double imag_mean = 0.0; // sanity statistic; the exact expectation is real
  std::int64_t samples = 0;
};

/// N x N matrix with independent complex Gaussian entries,
/// Re and Im each N(0, sigma^2 / 2N), so E|entry|^2 = sigma^2 / N.
Eigen::MatrixXcd sample_ginibre(int N, double sigma, RandomStream& stream);

/// Tr of the word evaluated on a concrete matrix (X† = adjoint).  Exact
/// trace identities keep the matrix-product count low: powers inside token
/// runs are cached, and a word that is cyclically of the form s * rc(s)
/// (rc = reverse-conjugate) is evaluated as the squared Frobenius norm of
/// the product over s, which is exactly its trace and manifestly real.
std::complex<double> trace_of_word(const Word& w, const Eigen::MatrixXcd& X);

/// Sample mean/stderr of (1/N) Re Tr of the word evaluated on
/// X = A_1 ... A_n (fresh factors per sample, products left to right).
Estimate estimate_word_moment(const Word& w, const MCConfig& cfg);

/// Eigenvalue radial statistics of sampled products against the large-N law:
/// the radial CDF of the eigenvalue density is F(r) = (r/sigma)^{2/n} for
/// r <= sigma.
struct SpectrumReport {
  std::vector<double> radii;  // sorted |lambda| over all samples
  int n = 1;                  // factor count
  double sigma = 1.0;
  double sup_dev = 0.0;       // sup |empirical CDF - F|
  int skipped = 0;            // samples dropped on eigensolver failure
  double theory_cdf(double r) const;
};

SpectrumReport eigenvalue_radial_report(const MCConfig& cfg);

struct DensityBin {
  double center = 0.0;
  double width = 0.0;
  std::int64_t count = 0;
  double density = 0.0;         // count / (samples * 2 pi r dr)
  double theory_density = 0.0;  // quadrature oracle at the bin center
  double probability = 0.0;     // oracle bin probability
  double dev_sigmas = 0.0;      // |count/S - P| / binomial stderr
};

/// Radial histogram of z = a*b (a, b complex Gaussians with unit-variance
/// real and imaginary parts) against the quadrature oracle density
/// (1/4pi) I(|z|), I as in bessel_k0_integral.  Deviations are measured in
/// binomial standard errors, over bins with >= min_bin_count hits.
struct ScalarDensityReport {
  std::vector<DensityBin> bins;
  std::int64_t samples = 0;
  double oracle_total_integral = 0.0;  // integral of the oracle density over the plane
  double max_dev_sigmas = 0.0;
  bool density_increases_toward_zero = false;
  std::int64_t overflow_count = 0;  // samples beyond the binned range
};

ScalarDensityReport scalar_product_density_check(std::int64_t samples, std::uint64_t seed,
                                                 int bins = 60, double r_max = 6.0,
                                                 std::int64_t min_bin_count = 100);

/// log Gamma_N(a) = (N(N-1)/2) log pi + sum_{k=1}^N log Gamma(a - k + 1),
/// for a > N - 1 (throws std::domain_error otherwise).
double log_multivariate_gamma(int N, double a);

}  // namespace ginprod
