#pragma once

#include "ginprod/partition.hpp"
#include "ginprod/rational.hpp"
#include "ginprod/wick.hpp"

namespace ginprod {

// Exact finite-N expectation values of multi-trace observables in the square
// complex Wishart ensemble P(W) ∝ exp(-N Tr W) on positive-definite
// Hermitian W, realized as W = A A† with A an N x N Ginibre matrix of
// entry variance 1/N.

/// <Tr W^{m_1} ... Tr W^{m_k}>_W exactly in N, by Wick contraction of the
/// multi-loop diagram [(A A†)^{m_1}, ..., (A A†)^{m_k}] with identity
/// spectator.  Memoized by partition; safe to call concurrently.
/// Throws CapacityError when weight(p) exceeds `cap`.
NLaurent wishart_multitrace(const Partition& p, int cap = kDefaultPairingCap);

/// Independent oracle for weights <= 3: the same expectation computed by
/// index-summing the closed-form delta expansions of <W_ij>, <W_ij W_kl>,
/// <W_ij W_kl W_pq> (a sum over permutations with N^{cycles - m} weights).
/// Throws std::invalid_argument for weight > 3 (no printed formula) and
/// for the empty partition.
NLaurent wishart_low_moments_closed_form(const Partition& p);

}  // namespace ginprod
