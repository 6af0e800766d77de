#pragma once

#include <vector>

#include "ginprod/partition.hpp"
#include "ginprod/rational.hpp"
#include "ginprod/word.hpp"

namespace ginprod {

BigInt binomial(long n, long k);
BigInt factorial(int n);

/// Catalan number C_m = binom(2m, m) / (m+1).
BigInt catalan(int m);

/// Fuss-Catalan number FC_n(m) = binom((n+1)m, m) / (nm+1).
/// FC_1(m) = C_m, FC_n(0) = 1, FC_0(m) = 1.
BigInt fuss_catalan(int n, int m);

/// Euler's totient.
long totient(long d);

/// Number of 2-ary necklaces with m beads of each colour,
///   N_{2m} = (1/2m) sum_{d|m} phi(d) binom(2m/d, m/d),
/// i.e. the number of cyclic-rotation classes of balanced words = the number
/// of inequivalent weight-m trace operators.
BigInt necklace_count(int m);

/// One canonical representative (lexicographically least rotation, X < X†)
/// per rotation class of balanced weight-m words, in lexicographic order.
std::vector<Word> enumerate_necklaces(int m);

/// Leading-order trace-monomial coefficient for the alternating word,
///   tc_{1^m,1^m}(m_1,...,m_k) = m! / ((m-k+1)! * prod_j f_j!),
/// f_j = multiplicity of j among the parts.  Counts the non-crossing
/// pairings of (X X†)^m whose contraction produces Tr W^{m_1}...Tr W^{m_k}.
BigInt tc_leading(const Partition& p);

}  // namespace ginprod
