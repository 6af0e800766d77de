#include "ginprod/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ginprod {

Partition Partition::sorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

namespace {

void emit_partitions(int remaining, int min_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int m) {
  if (m < 1) throw std::invalid_argument("partitions: m must be positive");
  std::vector<Partition> out;
  std::vector<int> acc;
  // Parts are chosen weakly increasing with the smallest first, so the
  // emission order is already lexicographic: (1,1,1) < (1,2) < (3).
  emit_partitions(m, 1, acc, out);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step: r is binom(n, i+1) * falling tail
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt catalan(int m) {
  if (m < 0) throw std::invalid_argument("catalan: m must be nonnegative");
  BigInt r = binomial(2L * m, m);
  r /= m + 1;
  return r;
}

BigInt fuss_catalan(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("fuss_catalan: arguments must be nonnegative");
  BigInt r = binomial(static_cast<long>(n + 1) * m, m);
  r /= static_cast<long>(n) * m + 1;
  return r;
}

long totient(long d) {
  if (d < 1) throw std::invalid_argument("totient: d must be positive");
  long result = d;
  long x = d;
  for (long p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      result -= result / p;
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

BigInt necklace_count(int m) {
  if (m < 1) throw std::invalid_argument("necklace_count: m must be positive");
  BigInt sum = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    sum += BigInt(totient(d)) * binomial(2L * m / d, m / d);
  }
  assert(sum % (2 * m) == 0);
  return sum / (2 * m);
}

std::vector<Word> enumerate_necklaces(int m) {
  if (m < 1) throw std::invalid_argument("enumerate_necklaces: m must be positive");
  // Walk all balanced words in lexicographic order (X < X†) and keep the
  // ones equal to their canonical rotation; the output is then itself
  // lexicographically sorted.
  std::vector<Token> tokens(2 * m);
  std::fill(tokens.begin(), tokens.begin() + m, Token::X);
  std::fill(tokens.begin() + m, tokens.end(), Token::XDag);
  std::vector<Word> out;
  do {
    Word w{tokens};
    if (w == w.canonical_rotation()) out.push_back(std::move(w));
  } while (std::next_permutation(tokens.begin(), tokens.end()));
  return out;
}

BigInt tc_leading(const Partition& p) {
  const int m = p.weight();
  const int k = p.length();
  if (m < 1) throw std::invalid_argument("tc_leading: partition must be nonempty");
  // m! / ((m-k+1)! * prod_j f_j!) -- an integer (it counts pairings), so the
  // divisions below are exact.
  BigInt num = 1;
  for (int i = m - k + 2; i <= m; ++i) num *= i;  // m!/(m-k+1)!
  BigInt den = 1;
  int run = 1;
  const auto& parts = p.parts();
  for (std::size_t i = 1; i <= parts.size(); ++i) {
    if (i < parts.size() && parts[i] == parts[i - 1]) {
      ++run;
    } else {
      den *= factorial(run);
      run = 1;
    }
  }
  assert(num % den == 0);
  return num / den;
}

}  // namespace ginprod
