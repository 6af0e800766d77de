#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ginprod/partition.hpp"
#include "ginprod/rational.hpp"
#include "ginprod/word.hpp"

namespace ginprod {

// Exact Wick contraction of trace diagrams in X, X† with the propagator
//
//     <X_ij X†_kl> = (sigma^2 / N) delta_il W_jk
//
// where W is a fixed Hermitian positive-definite spectator.  A balanced
// diagram of weight m (m insertions of each of X, X†) contracts to
//
//     (1/N^L) <prod_loops Tr(...)>  =  sigma^{2m} / N^{m+L}
//                                      * sum_pairings N^{#delta-loops}
//                                      * prod Tr W^{cycle length}
//
// with L the number of trace loops.  Each pairing deposits one Kronecker
// delta and one W per propagator; the deltas and W's tile the index slots
// into disjoint cycles, a cycle through j W's giving Tr W^j and a pure
// delta cycle giving a free index sum N.

/// Position of a token inside a diagram.
struct Pos {
  int loop = 0;
  int offset = 0;
  friend bool operator==(const Pos&, const Pos&) = default;
  friend auto operator<=>(const Pos&, const Pos&) = default;
};

/// Perfect matching of X-positions to X†-positions.  `match[i] = j` pairs
/// the i-th X position with the j-th X† position, both in (loop, offset)
/// lexicographic order.
struct Pairing {
  std::vector<int> match;
  int size() const { return static_cast<int>(match.size()); }
};

/// One contracted pairing: coeff * N^{n_power} * prod_a Tr W^{m_a}, with the
/// sigma^{2m} prefactor tracked as an exponent.
struct TraceMonomial {
  Partition partition;
  int n_power = 0;
  BigRational coeff = 1;
  int sigma_power = 0;
};

/// Exact-in-N value of a contracted diagram: a polynomial in {Tr W^j, 1/N}
/// with exact rational coefficients and sigma^{2m} tracked separately.
class TracePolynomial {
 public:
  using Key = std::pair<std::vector<int>, int>;  // (partition parts, n_power)

  TracePolynomial() = default;
  explicit TracePolynomial(int sigma_power) : sigma_power_(sigma_power) {}

  void add(const TraceMonomial& mono);
  void add_term(const Partition& p, int n_power, const BigRational& c);

  int sigma_power() const { return sigma_power_; }
  void set_sigma_power(int s) { sigma_power_ = s; }

  const std::map<Key, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coefficient(const Partition& p, int n_power) const;

  /// Substitute Tr W^j -> N for every j (identity spectator, Tr 1 = N).
  /// The sigma prefactor is not applied.
  NLaurent substitute_identity() const;

  friend bool operator==(const TracePolynomial&, const TracePolynomial&) = default;

  std::string str() const;

 private:
  int sigma_power_ = 0;
  std::map<Key, BigRational> terms_;  // nonzero coefficients only
};

inline constexpr int kDefaultPairingCap = 8;   // m! enumeration: 8! = 40320
inline constexpr int kDefaultPlanarCap = 12;   // Catalan-many: C_12 = 208012

/// All m! pairings of a balanced diagram, in lexicographic order of the
/// match vector.  Unbalanced diagrams pair to nothing (the moment vanishes
/// by Wick's theorem) and yield an empty list.
/// Throws CapacityError when the weight exceeds `cap`.
std::vector<Pairing> enumerate_pairings(const Diagram& d, int cap = kDefaultPairingCap);

/// Only the non-crossing pairings of a single-loop word (Catalan-many for
/// the alternating word); same ordering conventions as enumerate_pairings.
std::vector<Pairing> enumerate_noncrossing_pairings(const Word& w, int cap = kDefaultPlanarCap);

/// Contract one pairing of a diagram into its trace monomial.
TraceMonomial contract(const Diagram& d, const Pairing& p);

/// Exact mixed moment with spectator variance matrix:
/// (1/N) <Tr O(X W^{1/2}, W^{1/2} X†)> as a TracePolynomial, exact in N.
/// Unbalanced words give the zero polynomial.
TracePolynomial ginibre_moment_poly(const Word& w, int cap = kDefaultPairingCap);

/// True iff no two chords of the pairing interleave around the circle.
/// Defined for single-loop diagrams only; throws std::invalid_argument for
/// multi-loop input.
bool is_noncrossing(const Diagram& d, const Pairing& p);

/// Genus g >= 0 of a single-loop pairing: its contraction contributes at
/// relative order N^{-2g} in the normalized moment; g = 0 exactly for the
/// non-crossing pairings.
int genus(const Diagram& d, const Pairing& p);

/// Leading-order (genus-0) trace-structure coefficients tc_{i,j}: for each
/// partition, the number of non-crossing pairings whose contraction produces
/// that trace monomial.
std::map<Partition, BigInt> tc_coefficients(const Word& w, int cap = kDefaultPlanarCap);

}  // namespace ginprod
