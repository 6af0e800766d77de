#pragma once

#include <string>
#include <vector>

#include "ginprod/rational.hpp"
#include "ginprod/wick.hpp"
#include "ginprod/word.hpp"

namespace ginprod {

/// The product ensemble X = A_1 ... A_n of independent Ginibre factors,
/// entry variance sigma_i^2 / N each.  Every exact formula depends on the
/// sigmas only through the product sigma = sigma_1 ... sigma_n; per-factor
/// values matter only for sampling.
struct EnsembleSpec {
  int n = 1;
  std::vector<double> sigmas;  // size n, all > 0

  static EnsembleSpec uniform(int n, double sigma = 1.0);
  void validate() const;
  double sigma() const;  // product of the sigmas
};

enum class MomentMode { LargeN, FiniteN };

/// Result of a moment evaluation.  Exact values are computed at sigma = 1
/// with the sigma^{2m} prefactor recorded in `sigma_power`; `numeric()`
/// applies the spec's sigma.
struct MomentResult {
  MomentMode mode = MomentMode::LargeN;
  Word word;
  EnsembleSpec spec;
  int sigma_power = 0;
  BigRational value;      // LargeN mode
  NLaurent value_n;       // FiniteN mode
  std::string tc_provenance;  // "formula", "enumeration", or "" (finite-N)

  double numeric() const;                 // LargeN
  double numeric_at(long n_size) const;   // FiniteN, concrete N
};

/// Large-N mixed moment of the n-factor product ensemble:
///   sigma^{2m} * sum_partitions tc_{i,j}(m_1..m_k) * prod_a FC_{n-1}(m_a).
/// tc comes from the closed formula for words cyclically equal to (X X†)^m
/// and from non-crossing enumeration otherwise.  Unbalanced words evaluate
/// to exact zero; overweight words throw CapacityError.
MomentResult large_n_moment(const Word& w, const EnsembleSpec& spec,
                            int cap = kDefaultPlanarCap);

/// Exact finite-N moment for n = 2: every trace monomial of the spectator
/// polynomial is averaged against the Wishart measure, keeping the
/// monomial's N-power.  Exact in N; sigma tracked via sigma_power.
MomentResult finite_n_moment_n2(const Word& w, int cap = kDefaultPairingCap);

/// Exact finite-N moment for a single Ginibre factor (identity spectator):
/// the full genus expansion sum_pairings N^{-2g}.
MomentResult finite_n_moment_n1(const Word& w, int cap = kDefaultPairingCap);

/// Large-N normalized moment (1/N) <Tr W_(n)^m> of a product of n
/// independent Wishart matrices, by the trace-structure recursion with base
/// case (1/N) <Tr W_(1)^m> = C_m.  Equals FC_n(m).
BigInt multi_wishart_moment(int n, int m);

/// Check the Fuss-Catalan recursion
///   FC_{n-1}(m) = sum_partitions tc_{1^m,1^m}(m_1..m_k) prod_a FC_{n-2}(m_a)
/// (n >= 2; FC_0 == 1).
bool fc_recursion_check(int n, int m);

/// Accepts either the string form ("xxdxdd") or the exponent form
/// "i_1,j_1;i_2,j_2;..." meaning X^{i_1} (X†)^{j_1} X^{i_2} ...
Word parse_word_pattern(const std::string& pattern);

}  // namespace ginprod
