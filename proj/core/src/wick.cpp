#include "ginprod/wick.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ginprod {

void TracePolynomial::add(const TraceMonomial& mono) {
  add_term(mono.partition, mono.n_power, mono.coeff);
}

void TracePolynomial::add_term(const Partition& p, int n_power, const BigRational& c) {
  if (c == 0) return;
  Key key{p.parts(), n_power};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRational TracePolynomial::coefficient(const Partition& p, int n_power) const {
  auto it = terms_.find(Key{p.parts(), n_power});
  return it == terms_.end() ? BigRational(0) : it->second;
}

NLaurent TracePolynomial::substitute_identity() const {
  NLaurent out;
  for (const auto& [key, c] : terms_)
    out.add_term(key.second + static_cast<int>(key.first.size()), c);
  return out;
}

std::string TracePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  if (sigma_power_ != 0) os << "s^" << sigma_power_ << " * (";
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*N^" << key.second;
    for (int part : key.first) os << "*TrW^" << part;
  }
  if (sigma_power_ != 0) os << ")";
  return os.str();
}

namespace {

std::vector<Pos> token_positions(const Diagram& d, Token which) {
  std::vector<Pos> out;
  for (int i = 0; i < static_cast<int>(d.loops.size()); ++i) {
    const auto& tokens = d.loops[i].tokens();
    for (int q = 0; q < static_cast<int>(tokens.size()); ++q)
      if (tokens[q] == which) out.push_back({i, q});
  }
  return out;  // already (loop, offset) lexicographic
}

}  // namespace

std::vector<Pairing> enumerate_pairings(const Diagram& d, int cap) {
  if (!d.balanced()) return {};
  for (const auto& w : d.loops)
    if (w.empty()) throw std::invalid_argument("enumerate_pairings: empty loop");
  const int m = d.count_x();
  if (m > cap)
    throw CapacityError("enumerate_pairings: weight " + std::to_string(m) +
                        " exceeds the pairing enumeration cap " + std::to_string(cap));
  std::vector<int> match(m);
  std::iota(match.begin(), match.end(), 0);
  std::vector<Pairing> out;
  do {
    out.push_back(Pairing{match});
  } while (std::next_permutation(match.begin(), match.end()));
  return out;
}

namespace {

// Index-slot bookkeeping for one contraction.  Slot (i, q) is the summation
// index between token q and token q+1 (cyclically) of loop i.  A propagator
// joining X at position a to X† at position b contributes
//   delta edge: (row slot of a, column slot of b)
//   W edge:     (column slot of a, row slot of b)
// Every slot then carries exactly two edge endpoints, so delta and W edges
// tile the slots into disjoint cycles.
struct Edge {
  int a;
  int b;
  bool w;
};

struct CycleCounts {
  int delta_loops = 0;        // cycles with no W edge -> factor N each
  std::vector<int> w_cycles;  // W-edge counts of the other cycles
};

CycleCounts contract_cycles(const Diagram& d, const Pairing& p) {
  const auto xs = token_positions(d, Token::X);
  const auto ds = token_positions(d, Token::XDag);
  if (static_cast<int>(xs.size()) != p.size() || xs.size() != ds.size())
    throw std::invalid_argument("contract: pairing does not fit the diagram");

  std::vector<int> base(d.loops.size() + 1, 0);
  for (std::size_t i = 0; i < d.loops.size(); ++i) base[i + 1] = base[i] + d.loops[i].size();
  const int n_slots = base.back();

  auto col_slot = [&](Pos t) { return base[t.loop] + t.offset; };
  auto row_slot = [&](Pos t) {
    const int len = d.loops[t.loop].size();
    return base[t.loop] + (t.offset + len - 1) % len;
  };

  std::vector<Edge> edges;
  edges.reserve(2 * xs.size());
  for (int i = 0; i < p.size(); ++i) {
    const Pos a = xs[i];
    const Pos b = ds[p.match[i]];
    edges.push_back({row_slot(a), col_slot(b), false});
    edges.push_back({col_slot(a), row_slot(b), true});
  }

  // adjacency: the two (edge, endpoint) incidences of every slot
  std::vector<std::array<std::pair<int, int>, 2>> adj(n_slots);
  std::vector<int> deg(n_slots, 0);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].a][deg[edges[e].a]++] = {e, 0};
    adj[edges[e].b][deg[edges[e].b]++] = {e, 1};
  }
  for (int s = 0; s < n_slots; ++s) assert(deg[s] == 2);

  CycleCounts counts;
  std::vector<bool> used(edges.size(), false);
  for (int e0 = 0; e0 < static_cast<int>(edges.size()); ++e0) {
    if (used[e0]) continue;
    int w_in_cycle = 0;
    int e = e0, side = 0;
    while (!used[e]) {
      used[e] = true;
      w_in_cycle += edges[e].w;
      const int exit_side = 1 - side;
      const int exit_slot = exit_side == 0 ? edges[e].a : edges[e].b;
      const auto& entries = adj[exit_slot];
      const auto next = (entries[0] == std::pair<int, int>{e, exit_side}) ? entries[1] : entries[0];
      e = next.first;
      side = next.second;
    }
    if (w_in_cycle == 0)
      ++counts.delta_loops;
    else
      counts.w_cycles.push_back(w_in_cycle);
  }
  return counts;
}

}  // namespace

TraceMonomial contract(const Diagram& d, const Pairing& p) {
  const int m = d.count_x();
  const int n_loops = static_cast<int>(d.loops.size());
  CycleCounts counts = contract_cycles(d, p);
  TraceMonomial mono;
  mono.partition = Partition::sorted(std::move(counts.w_cycles));
  mono.n_power = counts.delta_loops - m - n_loops;
  mono.coeff = 1;
  mono.sigma_power = d.total_insertions();
  return mono;
}

TracePolynomial ginibre_moment_poly(const Word& w, int cap) {
  TracePolynomial poly(w.size());
  if (!w.balanced()) return poly;  // <Tr X^k> = 0 by Wick's theorem
  const Diagram d(w);
  for (const Pairing& p : enumerate_pairings(d, cap)) poly.add(contract(d, p));
  return poly;
}

bool is_noncrossing(const Diagram& d, const Pairing& p) {
  if (d.loops.size() != 1)
    throw std::invalid_argument("is_noncrossing: defined for single-loop diagrams only");
  const auto xs = token_positions(d, Token::X);
  const auto ds = token_positions(d, Token::XDag);
  std::vector<std::pair<int, int>> chords;
  chords.reserve(p.size());
  for (int i = 0; i < p.size(); ++i) {
    int u = xs[i].offset, v = ds[p.match[i]].offset;
    if (u > v) std::swap(u, v);
    chords.emplace_back(u, v);
  }
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const auto [a, b] = chords[i];
      const auto [c, e] = chords[j];
      const bool c_inside = a < c && c < b;
      const bool e_inside = a < e && e < b;
      if (c_inside != e_inside) return false;
    }
  return true;
}

int genus(const Diagram& d, const Pairing& p) {
  if (d.loops.size() != 1)
    throw std::invalid_argument("genus: defined for single-loop diagrams only");
  if (!d.balanced()) throw std::invalid_argument("genus: diagram must be balanced");
  const TraceMonomial mono = contract(d, p);
  // With Tr W^j -> N the monomial sits at relative order N^{n_power + k};
  // the deficit from 0 is twice the genus.
  const int rel = mono.n_power + mono.partition.length();
  assert(rel <= 0 && rel % 2 == 0);
  return -rel / 2;
}

namespace {

void noncrossing_rec(std::vector<std::vector<int>>& segments, const std::vector<Token>& tokens,
                     std::vector<int>& partner, const std::function<void()>& emit) {
  if (segments.empty()) {
    emit();
    return;
  }
  std::vector<int> seg = std::move(segments.back());
  segments.pop_back();
  if (seg.empty()) {
    noncrossing_rec(segments, tokens, partner, emit);
    segments.push_back(std::move(seg));
    return;
  }

  const int p0 = seg[0];
  int balance = 0;  // X minus X† count strictly between p0 and the candidate
  for (std::size_t j = 1; j < seg.size(); ++j) {
    const int q = seg[j];
    if (tokens[q] != tokens[p0] && balance == 0) {
      std::vector<int> inside(seg.begin() + 1, seg.begin() + j);
      std::vector<int> outside(seg.begin() + j + 1, seg.end());
      partner[p0] = q;
      partner[q] = p0;
      segments.push_back(std::move(outside));
      segments.push_back(std::move(inside));
      noncrossing_rec(segments, tokens, partner, emit);
      segments.pop_back();
      segments.pop_back();
      partner[p0] = partner[q] = -1;
    }
    balance += (tokens[q] == tokens[p0]) ? 1 : -1;
  }
  segments.push_back(std::move(seg));
}

}  // namespace

std::vector<Pairing> enumerate_noncrossing_pairings(const Word& w, int cap) {
  if (!w.balanced()) return {};
  const int m = w.weight();
  if (m > cap)
    throw CapacityError("enumerate_noncrossing_pairings: weight " + std::to_string(m) +
                        " exceeds the planar enumeration cap " + std::to_string(cap));

  const auto& tokens = w.tokens();
  std::vector<int> x_index_of(tokens.size(), -1), d_index_of(tokens.size(), -1);
  int nx = 0, nd = 0;
  for (std::size_t q = 0; q < tokens.size(); ++q) {
    if (tokens[q] == Token::X)
      x_index_of[q] = nx++;
    else
      d_index_of[q] = nd++;
  }

  std::vector<int> partner(tokens.size(), -1);
  std::vector<std::vector<int>> segments;
  std::vector<int> all(tokens.size());
  std::iota(all.begin(), all.end(), 0);
  segments.push_back(std::move(all));

  std::vector<Pairing> out;
  auto emit = [&] {
    Pairing p;
    p.match.assign(m, -1);
    for (std::size_t q = 0; q < tokens.size(); ++q)
      if (tokens[q] == Token::X) p.match[x_index_of[q]] = d_index_of[partner[q]];
    out.push_back(std::move(p));
  };
  noncrossing_rec(segments, tokens, partner, emit);
  std::sort(out.begin(), out.end(),
            [](const Pairing& a, const Pairing& b) { return a.match < b.match; });
  return out;
}

std::map<Partition, BigInt> tc_coefficients(const Word& w, int cap) {
  std::map<Partition, BigInt> out;
  if (!w.balanced()) return out;
  const Diagram d(w);
  for (const Pairing& p : enumerate_noncrossing_pairings(w, cap)) {
    TraceMonomial mono = contract(d, p);
    assert(mono.n_power + mono.partition.length() == 0);  // planar
    out[mono.partition] += 1;
  }
  return out;
}

}  // namespace ginprod
