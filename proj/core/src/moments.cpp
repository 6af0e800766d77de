#include "ginprod/moments.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ginprod/combinatorics.hpp"
#include "ginprod/wishart.hpp"

namespace ginprod {

EnsembleSpec EnsembleSpec::uniform(int n, double sigma) {
  EnsembleSpec spec;
  spec.n = n;
  spec.sigmas.assign(n, sigma);
  return spec;
}

void EnsembleSpec::validate() const {
  if (n < 1) throw std::invalid_argument("EnsembleSpec: need at least one factor");
  if (static_cast<int>(sigmas.size()) != n)
    throw std::invalid_argument("EnsembleSpec: need one sigma per factor");
  for (double s : sigmas)
    if (!(s > 0)) throw std::invalid_argument("EnsembleSpec: sigmas must be positive");
}

double EnsembleSpec::sigma() const {
  double p = 1.0;
  for (double s : sigmas) p *= s;
  return p;
}

double MomentResult::numeric() const {
  if (mode != MomentMode::LargeN)
    throw std::logic_error("MomentResult::numeric: finite-N results need a concrete N");
  return value.convert_to<double>() * std::pow(spec.sigma(), sigma_power);
}

double MomentResult::numeric_at(long n_size) const {
  const BigRational v =
      mode == MomentMode::FiniteN ? value_n.evaluate(n_size) : value;
  return v.convert_to<double>() * std::pow(spec.sigma(), sigma_power);
}

namespace {

bool is_alternating_word(const Word& w) {
  return w.balanced() && w.canonical_rotation() == Word::xd_power(w.weight());
}

}  // namespace

MomentResult large_n_moment(const Word& w, const EnsembleSpec& spec, int cap) {
  spec.validate();
  MomentResult result;
  result.mode = MomentMode::LargeN;
  result.word = w;
  result.spec = spec;
  result.sigma_power = w.size();
  if (!w.balanced()) {
    result.value = 0;
    result.tc_provenance = "none";
    return result;
  }

  const int m = w.weight();
  if (m > cap)
    throw CapacityError("large_n_moment: weight " + std::to_string(m) +
                        " exceeds the planar enumeration cap " + std::to_string(cap));
  std::map<Partition, BigInt> tc;
  if (is_alternating_word(w)) {
    for (const Partition& p : partitions(m)) tc.emplace(p, tc_leading(p));
    result.tc_provenance = "formula";
  } else {
    tc = tc_coefficients(w, cap);
    result.tc_provenance = "enumeration";
  }

  BigInt sum = 0;
  for (const auto& [p, c] : tc) {
    BigInt prod = c;
    for (int part : p.parts()) prod *= fuss_catalan(spec.n - 1, part);
    sum += prod;
  }
  result.value = BigRational(sum);
  return result;
}

MomentResult finite_n_moment_n2(const Word& w, int cap) {
  MomentResult result;
  result.mode = MomentMode::FiniteN;
  result.word = w;
  result.spec = EnsembleSpec::uniform(2);
  result.sigma_power = w.size();
  if (!w.balanced()) return result;  // zero

  const TracePolynomial poly = ginibre_moment_poly(w, cap);
  NLaurent value;
  for (const auto& [key, c] : poly.terms()) {
    const Partition p(key.first);
    value += wishart_multitrace(p, cap).scaled(c, key.second);
  }
  result.value_n = std::move(value);
  return result;
}

MomentResult finite_n_moment_n1(const Word& w, int cap) {
  MomentResult result;
  result.mode = MomentMode::FiniteN;
  result.word = w;
  result.spec = EnsembleSpec::uniform(1);
  result.sigma_power = w.size();
  if (!w.balanced()) return result;  // zero
  result.value_n = ginibre_moment_poly(w, cap).substitute_identity();
  return result;
}

BigInt multi_wishart_moment(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("multi_wishart_moment: n and m must be positive");
  if (n == 1) return catalan(m);

  static std::mutex mutex;
  static std::map<std::pair<int, int>, BigInt> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({n, m}); it != memo.end()) return it->second;
  }
  BigInt sum = 0;
  for (const Partition& p : partitions(m)) {
    BigInt prod = tc_leading(p);
    for (int part : p.parts()) prod *= multi_wishart_moment(n - 1, part);
    sum += prod;
  }
  std::lock_guard lock(mutex);
  return memo.emplace(std::make_pair(n, m), std::move(sum)).first->second;
}

bool fc_recursion_check(int n, int m) {
  if (n < 2) throw std::invalid_argument("fc_recursion_check: n must be >= 2");
  if (m < 1) throw std::invalid_argument("fc_recursion_check: m must be positive");
  BigInt sum = 0;
  for (const Partition& p : partitions(m)) {
    BigInt prod = tc_leading(p);
    for (int part : p.parts()) prod *= fuss_catalan(n - 2, part);
    sum += prod;
  }
  return sum == fuss_catalan(n - 1, m);
}

Word parse_word_pattern(const std::string& pattern) {
  const bool exponent_form =
      pattern.find_first_of("0123456789,;") != std::string::npos;
  if (!exponent_form) return Word::parse(pattern);

  std::vector<Token> tokens;
  std::istringstream in(pattern);
  std::string block;
  while (std::getline(in, block, ';')) {
    std::istringstream pair_in(block);
    std::string a, b;
    if (!std::getline(pair_in, a, ',') || !std::getline(pair_in, b) || a.empty() || b.empty())
      throw std::invalid_argument("parse_word_pattern: expected 'i,j' blocks separated by ';'");
    const int i = std::stoi(a);
    const int j = std::stoi(b);
    if (i < 0 || j < 0)
      throw std::invalid_argument("parse_word_pattern: exponents must be nonnegative");
    tokens.insert(tokens.end(), i, Token::X);
    tokens.insert(tokens.end(), j, Token::XDag);
  }
  if (tokens.empty()) throw std::invalid_argument("parse_word_pattern: empty word");
  return Word{std::move(tokens)};
}

}  // namespace ginprod
