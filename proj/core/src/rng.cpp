#include "ginprod/rng.hpp"

#include <cmath>
#include <numbers>

namespace ginprod {

namespace {

// Philox4x64 round constants (Salmon et al. 2011, Table 2).
constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t* hi) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  *hi = static_cast<std::uint64_t>(p >> 64);
  return static_cast<std::uint64_t>(p);
}

}  // namespace

Philox4x64::Counter Philox4x64::block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint64_t hi0, hi1;
    const std::uint64_t lo0 = mulhilo(kMul0, ctr[0], &hi0);
    const std::uint64_t lo1 = mulhilo(kMul1, ctr[2], &hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

namespace {
// Key salt distinguishing this application's streams from a bare seed.
constexpr std::uint64_t kKeySalt = 0x67696E70726F6431ULL;
}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t sample_index,
                           std::uint64_t stream_tag)
    : counter_{0, stream_tag, sample_index, 0}, key_{seed, kKeySalt} {}

void RandomStream::refill() {
  buffer_ = Philox4x64::block(counter_, key_);
  ++counter_[0];  // block index within the stream; cannot collide across streams
  buffer_pos_ = 0;
}

std::uint64_t RandomStream::next_u64() {
  if (buffer_pos_ >= 4) refill();
  return buffer_[buffer_pos_++];
}

double RandomStream::next_uniform() {
  // 53-bit mantissa, shifted into (0, 1].
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::next_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_normal_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(th);
  have_spare_ = true;
  return r * std::cos(th);
}

std::complex<double> RandomStream::next_complex_normal(double component_sigma) {
  const double re = next_normal();
  const double im = next_normal();
  return {component_sigma * re, component_sigma * im};
}

}  // namespace ginprod
