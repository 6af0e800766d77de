#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ginprod/combinatorics.hpp"
#include "ginprod/wick.hpp"

using namespace ginprod;

namespace {

// Independent oracle: Catalan numbers from the convolution recurrence
// C_{n+1} = sum_i C_i C_{n-i}.
std::vector<BigInt> catalan_by_recurrence(int up_to) {
  std::vector<BigInt> c{1};
  for (int n = 0; n < up_to; ++n) {
    BigInt next = 0;
    for (int i = 0; i <= n; ++i) next += c[i] * c[n - i];
    c.push_back(next);
  }
  return c;
}

// Independent oracle: totient by direct coprimality count.
long totient_brute(long d) {
  auto gcd = [](long a, long b) {
    while (b) {
      const long t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  long count = 0;
  for (long j = 1; j <= d; ++j) count += gcd(j, d) == 1;
  return count;
}

// Independent oracle: rotation classes of balanced words by brute-force
// canonicalization over plain strings ('a' for X, 'b' for X†, so the default
// character order matches X < X†).
std::set<std::string> rotation_classes_brute(int m) {
  std::string word(m, 'a');
  word += std::string(m, 'b');
  std::sort(word.begin(), word.end());
  std::set<std::string> classes;
  do {
    std::string least = word;
    for (std::size_t r = 1; r < word.size(); ++r) {
      const std::string rot = word.substr(r) + word.substr(0, r);
      if (rot < least) least = rot;
    }
    classes.insert(least);
  } while (std::next_permutation(word.begin(), word.end()));
  return classes;
}

// Independent oracle: partition counts from the bounded-part recurrence
// p(n, k) = p(n, k-1) + p(n-k, k).
long partition_count_oracle(int n) {
  std::vector<std::vector<long>> p(n + 1, std::vector<long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][k] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      p[i][k] = p[i][k - 1] + (i >= k ? p[i - k][k] : 0);
  return p[n][n];
}

}  // namespace

TEST_SUITE("combinatorics") {
  TEST_CASE("catalan: pinned values and recurrence oracle") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    const auto oracle = catalan_by_recurrence(20);
    for (int m = 0; m <= 20; ++m) CHECK(catalan(m) == oracle[m]);
  }

  TEST_CASE("fuss_catalan: pinned values and Catalan reduction") {
    CHECK(fuss_catalan(2, 2) == 3);
    CHECK(fuss_catalan(2, 3) == 12);
    CHECK(fuss_catalan(2, 4) == 55);
    CHECK(fuss_catalan(3, 4) == 140);
    for (int n = 0; n <= 6; ++n) CHECK(fuss_catalan(n, 1) == 1);
    for (int n = 0; n <= 6; ++n) CHECK(fuss_catalan(n, 0) == 1);
    for (int m = 0; m <= 20; ++m) CHECK(fuss_catalan(1, m) == catalan(m));
    CHECK(fuss_catalan(6, 10) == 6503352856LL);
    // beyond 64 bits
    CHECK(fuss_catalan(6, 20) == BigInt("6836064539925118356600"));
  }

  TEST_CASE("totient: pinned values and brute-force oracle") {
    CHECK(totient(1) == 1);
    CHECK(totient(3) == 2);
    CHECK(totient(12) == 4);
    for (long d = 1; d <= 60; ++d) CHECK(totient(d) == totient_brute(d));
  }

  TEST_CASE("necklace_count matches the brute-force rotation-class oracle") {
    CHECK(necklace_count(1) == 1);
    CHECK(necklace_count(2) == 2);
    CHECK(necklace_count(3) == 4);
    for (int m = 1; m <= 8; ++m)
      CHECK(necklace_count(m) == BigInt(static_cast<long>(rotation_classes_brute(m).size())));
  }

  TEST_CASE("necklace_count lower bound binom(2m, m)/(2m)") {
    for (int m = 1; m <= 12; ++m)
      CHECK(necklace_count(m) * (2 * m) >= binomial(2L * m, m));
  }

  TEST_CASE("enumerate_necklaces: canonical representatives in order") {
    const auto n1 = enumerate_necklaces(1);
    REQUIRE(n1.size() == 1);
    CHECK(n1[0].str() == "xd");

    const auto n2 = enumerate_necklaces(2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0].str() == "xxdd");
    CHECK(n2[1].str() == "xdxd");

    const auto n3 = enumerate_necklaces(3);
    REQUIRE(n3.size() == 4);
    CHECK(n3[0].str() == "xxxddd");
    CHECK(n3[3].str() == "xdxdxd");

    for (int m = 1; m <= 8; ++m) {
      const auto words = enumerate_necklaces(m);
      CHECK(BigInt(static_cast<long>(words.size())) == necklace_count(m));
      const auto oracle = rotation_classes_brute(m);
      for (const Word& w : words) {
        std::string key = w.str();
        for (char& c : key) c = (c == 'x') ? 'a' : 'b';
        CHECK(oracle.count(key) == 1);
        CHECK(w == w.canonical_rotation());
      }
    }
  }

  TEST_CASE("partitions: order, contents, counts") {
    const auto p1 = partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].parts() == std::vector<int>{1});

    const auto p3 = partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<int>{1, 1, 1});
    CHECK(p3[1].parts() == std::vector<int>{1, 2});
    CHECK(p3[2].parts() == std::vector<int>{3});

    CHECK(partitions(6).size() == 11);
    for (int m = 1; m <= 12; ++m) {
      const auto ps = partitions(m);
      CHECK(static_cast<long>(ps.size()) == partition_count_oracle(m));
      CHECK(std::is_sorted(ps.begin(), ps.end()));
      for (const Partition& p : ps) CHECK(p.weight() == m);
    }
  }

  TEST_CASE("tc_leading: pinned values") {
    CHECK(tc_leading(Partition({1, 2})) == 3);
    CHECK(tc_leading(Partition({2, 2})) == 2);
    CHECK(tc_leading(Partition({1, 3})) == 4);
    CHECK(tc_leading(Partition({1, 1, 1, 1})) == 1);
    // The formula gives 6 here; the Wick-engine cross-check below and the
    // sum rule both confirm it.
    CHECK(tc_leading(Partition({1, 1, 2})) == 6);
  }

  TEST_CASE("tc_leading: sum rule over partitions equals Catalan") {
    for (int m = 1; m <= 7; ++m) {
      BigInt total = 0;
      for (const Partition& p : partitions(m)) total += tc_leading(p);
      CHECK(total == catalan(m));
    }
  }

  TEST_CASE("tc_leading agrees with the Wick-engine enumeration") {
    for (int m = 1; m <= 6; ++m) {
      const auto tc = tc_coefficients(Word::xd_power(m));
      for (const Partition& p : partitions(m)) {
        const auto it = tc.find(p);
        const BigInt enumerated = it == tc.end() ? BigInt(0) : it->second;
        CHECK(enumerated == tc_leading(p));
      }
    }
  }
}
