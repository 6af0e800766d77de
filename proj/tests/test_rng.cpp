#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "ginprod/rng.hpp"

using namespace ginprod;

TEST_SUITE("rng") {
  TEST_CASE("Philox4x64-10 known-answer vectors") {
    // Cross-checked against an independent implementation of the same
    // generator (NumPy's Philox bit generator produces these exact blocks).
    using C = Philox4x64::Counter;
    using K = Philox4x64::Key;

    CHECK(Philox4x64::block(C{0, 0, 0, 0}, K{0, 0}) ==
          C{0x16554d9eca36314cULL, 0xdb20fe9d672d0fdcULL, 0xd7e772cee186176bULL,
            0x7e68b68aec7ba23bULL});
    CHECK(Philox4x64::block(C{1, 0, 0, 0}, K{0, 0}) ==
          C{0x02f4ba6408e4d89bULL, 0x3dd62b0b9ca8c5b2ULL, 0x1c8667a55d902e79ULL,
            0x907d7a052fd5b4dcULL});
    CHECK(Philox4x64::block(C{2, 2, 3, 4}, K{0x123456789abcdefULL, 0x7edcba987654321ULL}) ==
          C{0x0cba7eeaa7014854ULL, 0xdb738dff39e911a3ULL, 0x5793db2bbbceb8b6ULL,
            0x5d1ea6046bb68f71ULL});
    CHECK(Philox4x64::block(C{8, 11, 13, 17}, K{0xdeadbeefULL, 1}) ==
          C{0xb28da807270ca6b4ULL, 0x70b46753451b208cULL, 0x41f220563c41535fULL,
            0x5fadcb88d6c09dc1ULL});
    CHECK(Philox4x64::block(C{0, 1, 0, 0}, K{42, 0}) ==
          C{0x13fe1ddbb29d354cULL, 0xdc10850029c437f2ULL, 0xaa996df8af642547ULL,
            0x580ac26f823b6147ULL});
    CHECK(Philox4x64::block(C{1, 1, 0, 0}, K{42, 0}) ==
          C{0x34dd631ca2a22da1ULL, 0x3d471dd82828a5caULL, 0xc74573649e2c1cabULL,
            0xd1e0749f87255bc6ULL});
  }

  TEST_CASE("streams are deterministic and distinct") {
    RandomStream a(7, 3, 0), a2(7, 3, 0), b(7, 4, 0), c(7, 3, 1), d(8, 3, 0);
    std::vector<std::uint64_t> va, va2, vb, vc, vd;
    for (int i = 0; i < 64; ++i) {
      va.push_back(a.next_u64());
      va2.push_back(a2.next_u64());
      vb.push_back(b.next_u64());
      vc.push_back(c.next_u64());
      vd.push_back(d.next_u64());
    }
    CHECK(va == va2);
    CHECK(va != vb);
    CHECK(va != vc);
    CHECK(va != vd);
    CHECK(vb != vc);
  }

  TEST_CASE("uniforms live in (0, 1]") {
    RandomStream s(123, 0, 0);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const double u = s.next_uniform();
      CHECK(u > 0.0);
      CHECK(u <= 1.0);
      lo = std::min(lo, u);
      hi = std::max(hi, u);
      sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(lo < 0.001);
    CHECK(hi > 0.999);
  }

  TEST_CASE("Box-Muller normals have the right low moments") {
    RandomStream s(99, 0, 0);
    const int n = 200000;
    double m1 = 0, m2 = 0, m3 = 0, m4 = 0;
    for (int i = 0; i < n; ++i) {
      const double z = s.next_normal();
      m1 += z;
      m2 += z * z;
      m3 += z * z * z;
      m4 += z * z * z * z;
    }
    m1 /= n; m2 /= n; m3 /= n; m4 /= n;
    CHECK(m1 == doctest::Approx(0.0).epsilon(1).scale(0.01));
    CHECK(m2 == doctest::Approx(1.0).epsilon(0.02));
    CHECK(m3 == doctest::Approx(0.0).epsilon(1).scale(0.05));
    CHECK(m4 == doctest::Approx(3.0).epsilon(0.05));
  }

  TEST_CASE("complex normals: component variance and independence of parts") {
    RandomStream s(5, 1, 2);
    const int n = 100000;
    const double sigma = 0.75;
    double re2 = 0, im2 = 0, cross = 0;
    for (int i = 0; i < n; ++i) {
      const auto z = s.next_complex_normal(sigma);
      re2 += z.real() * z.real();
      im2 += z.imag() * z.imag();
      cross += z.real() * z.imag();
    }
    CHECK(re2 / n == doctest::Approx(sigma * sigma).epsilon(0.03));
    CHECK(im2 / n == doctest::Approx(sigma * sigma).epsilon(0.03));
    CHECK(cross / n == doctest::Approx(0.0).epsilon(1).scale(0.01));
  }
}
