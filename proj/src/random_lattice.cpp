#include "kuga/random_lattice.hpp"

#include <algorithm>
#include <random>

namespace kuga {

namespace {

// Bounded draw straight from the engine; distributions are not portable
// across standard libraries and the generator must be byte-stable.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat draw_rat(std::mt19937_64& rng, long span, long max_den) {
  return rat(draw(rng, -span, span), draw(rng, 1, max_den));
}

// Greedy filtration by slope values at epsilon0/2; false when any step has a
// tie that survives the rank comparison. The library's filtration must never
// need the id tie-break on corpus lattices.
bool value_greedy_is_unique(const SubobjectLattice& L) {
  Rat e = epsilon0(L) / 2;
  std::optional<int> cur;
  while (!cur || *cur != L.top()) {
    std::vector<int> cands;
    std::vector<Rat> values;
    for (const LatticeNode& n : L.nodes()) {
      if (cur) {
        if (!L.lt(*cur, n.id) || L.node(*cur).rank >= n.rank) continue;
        values.push_back(L.quotient_slope_poly(*cur, n.id).eval(e));
      } else {
        values.push_back(L.slope_poly(n.id).eval(e));
      }
      cands.push_back(n.id);
    }
    if (cands.empty()) return false;
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
      if (values[i] > values[best]) best = i;
    int winner = -1;
    int winner_rank = -1;
    int ties_at_top_rank = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (values[i] != values[best]) continue;
      int r = L.node(cands[i]).rank;
      if (r > winner_rank) {
        winner_rank = r;
        winner = cands[i];
        ties_at_top_rank = 1;
      } else if (r == winner_rank) {
        ++ties_at_top_rank;
      }
    }
    if (ties_at_top_rank != 1) return false;
    cur = winner;
  }
  return true;
}

SubobjectLattice attempt(std::mt19937_64& rng, int max_nodes) {
  int count = static_cast<int>(draw(rng, 3, std::max(3, max_nodes)));
  int top_rank = static_cast<int>(draw(rng, 6, 14));
  int top_id = count;

  std::vector<LatticeNode> nodes;
  for (int i = 1; i < count; ++i) {
    LatticeNode n;
    n.id = i;
    n.rank = static_cast<int>(draw(rng, 1, top_rank - 1));
    n.degrees = {draw_rat(rng, 60, 5), draw_rat(rng, 30, 4)};
    nodes.push_back(std::move(n));
  }
  LatticeNode top;
  top.id = top_id;
  top.rank = top_rank;
  top.degrees = {draw_rat(rng, 60, 5), draw_rat(rng, 30, 4)};
  nodes.push_back(std::move(top));

  // Every proper node gets at least one strictly-larger-rank parent, plus a
  // sprinkle of extra containments.
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < count; ++i) {
    std::vector<int> larger;
    for (int j = 1; j < count; ++j)
      if (nodes[j - 1].rank > nodes[i - 1].rank) larger.push_back(j);
    larger.push_back(top_id);
    edges.emplace_back(i, larger[draw(rng, 0, static_cast<long>(larger.size()) - 1)]);
    for (int j : larger)
      if (j != top_id && draw(rng, 0, 4) == 0) edges.emplace_back(i, j);
  }
  return SubobjectLattice::build(std::move(nodes), std::move(edges), top_id);
}

} // namespace

SubobjectLattice random_coherent_lattice(std::uint64_t seed, int max_nodes) {
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 2000; ++tries) {
    try {
      SubobjectLattice L = attempt(rng, max_nodes);
      Outcome<FiltrationResult> hn = hn_filtration(L);
      if (!is_ok(hn)) continue;
      if (!value_greedy_is_unique(L)) continue;
      return L;
    } catch (const Error&) {
      continue;
    }
  }
  fail(errc::invalid_input, "random lattice generation failed to converge");
}

} // namespace kuga
