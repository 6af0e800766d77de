#include "ginprod/wishart.hpp"

#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace ginprod {

namespace {

NLaurent wishart_multitrace_uncached(const Partition& p, int cap) {
  // Realize W = A A† and contract the multi-loop diagram
  // [(A A†)^{m_1}, ..., (A A†)^{m_k}] with identity spectator: every index
  // cycle, W-bearing or not, closes to a factor N.  The engine normalizes by
  // 1/N^L, so the raw expectation carries N^L back.
  std::vector<Word> loops;
  loops.reserve(p.parts().size());
  for (int part : p.parts()) loops.push_back(Word::xd_power(part));
  const Diagram d{loops};
  NLaurent value;
  for (const Pairing& pairing : enumerate_pairings(d, cap)) {
    const TraceMonomial mono = contract(d, pairing);
    value.add_term(mono.n_power + mono.partition.length() + static_cast<int>(loops.size()),
                   mono.coeff);
  }
  return value;
}

}  // namespace

NLaurent wishart_multitrace(const Partition& p, int cap) {
  if (p.empty()) throw std::invalid_argument("wishart_multitrace: partition must be nonempty");
  if (p.weight() > cap)
    throw CapacityError("wishart_multitrace: weight " + std::to_string(p.weight()) +
                        " exceeds the pairing enumeration cap " + std::to_string(cap));

  // The same partitions recur in every finite-N moment; contraction cost is
  // factorial in the weight, so cache by partition.
  static std::shared_mutex mutex;
  static std::map<std::vector<int>, NLaurent> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(p.parts()); it != memo.end()) return it->second;
  }
  NLaurent value = wishart_multitrace_uncached(p, cap);
  std::unique_lock lock(mutex);
  return memo.emplace(p.parts(), std::move(value)).first->second;
}

namespace {

// Delta expansions of the low Wishart moments, one permutation term each:
// <W_{i_1 j_1} ... W_{i_m j_m}> = sum_terms N^{power} prod_a delta_{i_a, j_{perm(a)}}.
struct DeltaTerm {
  std::array<int, 3> perm;
  int power;
};

// <W_ij> = delta_ij
constexpr DeltaTerm kOnePoint[] = {
    {{0, 0, 0}, 0},
};

// <W_ij W_kl> = delta_ij delta_kl + (1/N) delta_il delta_kj
constexpr DeltaTerm kTwoPoint[] = {
    {{0, 1, 0}, 0},
    {{1, 0, 0}, -1},
};

// <W_ij W_kl W_pq> = delta_ij delta_kl delta_pq
//   + (1/N)  (delta_pq delta_il delta_kj + delta_kq delta_pl delta_ij
//             + delta_kl delta_iq delta_pj)
//   + (1/N^2)(delta_iq delta_pl delta_kj + delta_il delta_kq delta_pj)
constexpr DeltaTerm kThreePoint[] = {
    {{0, 1, 2}, 0},
    {{1, 0, 2}, -1},  // delta_pq delta_il delta_kj
    {{0, 2, 1}, -1},  // delta_kq delta_pl delta_ij
    {{2, 1, 0}, -1},  // delta_kl delta_iq delta_pj
    {{2, 0, 1}, -2},  // delta_iq delta_pl delta_kj
    {{1, 2, 0}, -2},  // delta_il delta_kq delta_pj
};

int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

}  // namespace

NLaurent wishart_low_moments_closed_form(const Partition& p) {
  if (p.empty())
    throw std::invalid_argument("wishart_low_moments_closed_form: partition must be nonempty");
  const int m = p.weight();
  if (m > 3)
    throw std::invalid_argument(
        "wishart_low_moments_closed_form: only weights <= 3 have closed-form expansions");

  const DeltaTerm* table = m == 1 ? kOnePoint : m == 2 ? kTwoPoint : kThreePoint;
  const int n_terms = m == 1 ? 1 : m == 2 ? 2 : 6;

  // Index slots of the trace structure: Tr W^{m_a} chains its W factors
  // cyclically, so factor t of part a has i_t = slot r, j_t = slot r+1 mod m_a.
  std::vector<int> i_slot(m), j_slot(m);
  int t = 0, base = 0;
  for (int part : p.parts()) {
    for (int r = 0; r < part; ++r, ++t) {
      i_slot[t] = base + r;
      j_slot[t] = base + (r + 1) % part;
    }
    base += part;
  }

  NLaurent value;
  for (int term = 0; term < n_terms; ++term) {
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    int classes = m;
    for (int a = 0; a < m; ++a) {
      const int u = find_root(parent, i_slot[a]);
      const int v = find_root(parent, j_slot[table[term].perm[a]]);
      if (u != v) {
        parent[u] = v;
        --classes;
      }
    }
    value.add_term(table[term].power + classes, 1);
  }
  return value;
}

}  // namespace ginprod
