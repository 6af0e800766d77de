#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace ginprod {

/// Philox4x64 with 10 rounds (Salmon et al., "Parallel Random Numbers: As
/// Easy as 1, 2, 3"; the variant used by NumPy).  Pure function of
/// (counter, key), which is what makes per-sample substreams trivial:
/// partitioning work across threads cannot change any stream's output.
struct Philox4x64 {
  using Counter = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  /// One 256-bit block of output.
  static Counter block(Counter ctr, Key key);
};

/// Stream of doubles / normals carved out of the Philox counter space.
///
/// Counter layout: { block index, stream tag, sample index, 0 }, key
/// { seed, fixed salt }.  Distinct (seed, sample, tag) triples give
/// non-overlapping streams by construction.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t sample_index, std::uint64_t stream_tag);

  std::uint64_t next_u64();

  /// Uniform on (0, 1] (never 0, so log() is safe).
  double next_uniform();

  /// Standard normal via Box-Muller; generated in pairs.
  double next_normal();

  /// Re + i*Im with independent N(0, component_sigma^2) parts.
  std::complex<double> next_complex_normal(double component_sigma);

 private:
  void refill();

  Philox4x64::Counter counter_;
  Philox4x64::Key key_;
  Philox4x64::Counter buffer_{};
  int buffer_pos_ = 4;  // empty
  double spare_normal_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ginprod
