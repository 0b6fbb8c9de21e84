#include "kuga/filtration.hpp"

#include <algorithm>
#include <set>

namespace kuga {

PerturbationSpec PerturbationSpec::twist(int functional_index, int functional_count) {
  if (functional_index < 0 || functional_index >= functional_count)
    fail(errc::out_of_range, "twist functional index out of range");
  PerturbationSpec spec;
  spec.rows.emplace_back(functional_count, Rat(0));
  spec.rows[0][functional_index] = 1;
  return spec;
}

PerturbationSpec PerturbationSpec::staircase(int functional_count) {
  PerturbationSpec spec;
  for (int v = 1; v < functional_count; ++v) {
    spec.rows.emplace_back(functional_count, Rat(0));
    spec.rows.back()[v] = 1;
  }
  return spec;
}

int SubobjectLattice::index(int id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return static_cast<int>(i);
  fail(errc::unknown_node, "no node with id " + std::to_string(id));
}

bool SubobjectLattice::has_node(int id) const {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [&](const LatticeNode& n) { return n.id == id; });
}

const LatticeNode& SubobjectLattice::node(int id) const { return nodes_[index(id)]; }

bool SubobjectLattice::leq(int a, int b) const { return leq_[index(a)][index(b)] != 0; }

SubobjectLattice SubobjectLattice::build(std::vector<LatticeNode> nodes,
                                         std::vector<std::pair<int, int>> edges, int top,
                                         std::vector<std::vector<Rat>> functionals,
                                         std::optional<PerturbationSpec> perturbation) {
  SubobjectLattice L;
  if (nodes.empty()) fail(errc::invalid_input, "lattice needs at least one node");
  L.nodes_ = std::move(nodes);
  L.edges_ = std::move(edges);
  L.top_ = top;
  L.degree_dim_ = static_cast<int>(L.nodes_.front().degrees.size());

  std::set<int> seen;
  for (const LatticeNode& n : L.nodes_) {
    if (!seen.insert(n.id).second)
      fail(errc::invalid_input, "duplicate node id " + std::to_string(n.id));
    if (n.rank < 1) fail(errc::invalid_input, "node ranks must be positive");
    if (static_cast<int>(n.degrees.size()) != L.degree_dim_)
      fail(errc::invalid_input, "degree vectors must share one length");
  }
  if (!seen.count(top)) fail(errc::unknown_node, "top node missing from lattice");

  if (functionals.empty()) {
    // Identity: one functional per degree coordinate.
    for (int i = 0; i < L.degree_dim_; ++i) {
      std::vector<Rat> row(L.degree_dim_, Rat(0));
      row[i] = 1;
      functionals.push_back(std::move(row));
    }
  }
  for (const auto& row : functionals)
    if (static_cast<int>(row.size()) != L.degree_dim_)
      fail(errc::invalid_input, "functional row length must match degree vectors");
  L.functionals_ = std::move(functionals);

  int k = static_cast<int>(L.functionals_.size());
  L.perturbation_ = perturbation ? std::move(*perturbation) : PerturbationSpec::staircase(k);
  for (const auto& row : L.perturbation_.rows)
    if (static_cast<int>(row.size()) != k)
      fail(errc::invalid_input, "perturbation row length must match functional count");

  // Transitive reflexive closure of the containment edges.
  std::size_t m = L.nodes_.size();
  L.leq_.assign(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) L.leq_[i][i] = 1;
  for (const auto& [sub, super] : L.edges_) {
    if (!seen.count(sub) || !seen.count(super))
      fail(errc::unknown_node, "edge references a missing node");
    if (sub == super) fail(errc::invalid_input, "self-loop in containment edges");
    L.leq_[L.index(sub)][L.index(super)] = 1;
  }
  for (std::size_t via = 0; via < m; ++via)
    for (std::size_t a = 0; a < m; ++a)
      if (L.leq_[a][via])
        for (std::size_t b = 0; b < m; ++b)
          if (L.leq_[via][b]) L.leq_[a][b] = 1;

  int top_idx = L.index(top);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && L.leq_[a][b] && L.leq_[b][a])
        fail(errc::invalid_input, "containment contains a cycle");
    }
    if (!L.leq_[a][top_idx])
      fail(errc::invalid_input, "node " + std::to_string(L.nodes_[a].id) +
                                    " is not contained in the top node");
  }

  // Rank is strictly monotone along strict containment, except for pairs
  // whose degree difference every functional annihilates.
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !L.leq_[a][b]) continue;
      const LatticeNode& na = L.nodes_[a];
      const LatticeNode& nb = L.nodes_[b];
      if (na.rank > nb.rank)
        fail(errc::invalid_input, "rank decreases along containment");
      if (na.rank == nb.rank && !L.mu_equivalent(na.id, nb.id))
        fail(errc::invalid_input,
             "equal-rank containment must be annihilated by every functional");
    }
  }
  return L;
}

std::vector<Rat> SubobjectLattice::functional_values(int id) const {
  const LatticeNode& n = node(id);
  std::vector<Rat> out;
  out.reserve(functionals_.size());
  for (const auto& row : functionals_) {
    Rat acc(0);
    for (int i = 0; i < degree_dim_; ++i) acc += row[i] * n.degrees[i];
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

SlopePolynomial poly_from_values(const std::vector<Rat>& fvals, const Rat& rank,
                                 const PerturbationSpec& spec) {
  std::vector<Rat> coeffs(spec.rows.size() + 1, Rat(0));
  for (const Rat& v : fvals) coeffs[0] += v;
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    Rat acc(0);
    for (std::size_t j = 0; j < fvals.size(); ++j) acc += spec.rows[r][j] * fvals[j];
    coeffs[r + 1] = std::move(acc);
  }
  for (Rat& c : coeffs) c /= rank;
  return SlopePolynomial(std::move(coeffs));
}

} // namespace

SlopePolynomial SubobjectLattice::slope_poly(int id) const {
  return slope_poly(id, perturbation_);
}

SlopePolynomial SubobjectLattice::slope_poly(int id, const PerturbationSpec& spec) const {
  return poly_from_values(functional_values(id), Rat(node(id).rank), spec);
}

SlopePolynomial SubobjectLattice::quotient_slope_poly(int sub, int super) const {
  return quotient_slope_poly(sub, super, perturbation_);
}

SlopePolynomial SubobjectLattice::quotient_slope_poly(int sub, int super,
                                                      const PerturbationSpec& spec) const {
  if (!lt(sub, super)) fail(errc::precondition, "quotient needs strict containment");
  const LatticeNode& a = node(sub);
  const LatticeNode& b = node(super);
  if (a.rank >= b.rank) fail(errc::precondition, "quotient needs a strict rank drop");
  std::vector<Rat> va = functional_values(sub);
  std::vector<Rat> vb = functional_values(super);
  for (std::size_t i = 0; i < vb.size(); ++i) vb[i] -= va[i];
  return poly_from_values(vb, Rat(b.rank - a.rank), spec);
}

bool SubobjectLattice::mu_equivalent(int g, int f) const {
  if (!leq(g, f)) fail(errc::invalid_input, "mu-equivalence needs g contained in f");
  const LatticeNode& a = node(g);
  const LatticeNode& b = node(f);
  if (a.rank != b.rank) return false;
  for (const auto& row : functionals_) {
    Rat acc(0);
    for (int i = 0; i < degree_dim_; ++i) acc += row[i] * (b.degrees[i] - a.degrees[i]);
    if (acc != 0) return false;
  }
  return true;
}

SubobjectLattice SubobjectLattice::dual() const {
  const LatticeNode& t = node(top_);
  std::vector<LatticeNode> dnodes;
  for (const LatticeNode& n : nodes_) {
    if (n.id == top_) continue;
    LatticeNode d;
    d.id = n.id;
    d.rank = t.rank - n.rank;
    if (d.rank == 0) {
      // A node mu-equivalent to the top dualizes to a torsion quotient; it
      // has no place in the dual subobject lattice.
      continue;
    }
    d.degrees.reserve(degree_dim_);
    for (int i = 0; i < degree_dim_; ++i) d.degrees.push_back(n.degrees[i] - t.degrees[i]);
    dnodes.push_back(std::move(d));
  }
  LatticeNode dtop;
  dtop.id = top_;
  dtop.rank = t.rank;
  dtop.degrees.reserve(degree_dim_);
  for (int i = 0; i < degree_dim_; ++i) dtop.degrees.push_back(-t.degrees[i]);
  dnodes.push_back(std::move(dtop));

  std::set<int> kept;
  for (const LatticeNode& n : dnodes) kept.insert(n.id);
  std::vector<std::pair<int, int>> dedges;
  for (const LatticeNode& n : dnodes)
    if (n.id != top_) dedges.emplace_back(n.id, top_);
  for (const auto& [sub, super] : edges_) {
    if (sub == top_ || super == top_) continue;
    if (kept.count(sub) && kept.count(super)) dedges.emplace_back(super, sub);
  }
  return build(std::move(dnodes), std::move(dedges), top_, functionals_, perturbation_);
}

Rat epsilon0(const SubobjectLattice& lattice) {
  return epsilon0(lattice, lattice.default_perturbation());
}

Rat epsilon0(const SubobjectLattice& lattice, const PerturbationSpec& spec) {
  std::vector<SlopePolynomial> polys;
  for (const LatticeNode& n : lattice.nodes()) polys.push_back(lattice.slope_poly(n.id, spec));
  for (const LatticeNode& a : lattice.nodes()) {
    for (const LatticeNode& b : lattice.nodes()) {
      if (a.id == b.id || !lattice.lt(a.id, b.id) || a.rank >= b.rank) continue;
      polys.push_back(lattice.quotient_slope_poly(a.id, b.id, spec));
    }
  }
  std::sort(polys.begin(), polys.end(),
            [](const SlopePolynomial& x, const SlopePolynomial& y) {
              return SlopePolynomial::lex_compare(x, y) < 0;
            });
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());

  Rat eps(1);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      SlopePolynomial diff = polys[i] - polys[j];
      if (diff.degree() < 1) continue; // constant sign, no crossing
      PositiveRootBound root = smallest_positive_root(diff);
      if (!root.has_root) continue;
      Rat cand = root.value / 2;
      if (cand < eps) eps = cand;
    }
  }
  return eps;
}

namespace {

// One greedy step: lex-maximal quotient slope above `current` (or the node
// slope itself when current is the zero subobject), ties by maximal rank then
// smallest id, verified to dominate every slope-equal candidate.
Outcome<int> destabilizer_step(const SubobjectLattice& L, const PerturbationSpec& spec,
                               std::optional<int> current) {
  std::vector<int> cands;
  std::vector<SlopePolynomial> polys;
  for (const LatticeNode& n : L.nodes()) {
    if (current) {
      if (!L.lt(*current, n.id)) continue;
      if (L.node(*current).rank >= n.rank) continue; // torsion quotient, no step
      polys.push_back(L.quotient_slope_poly(*current, n.id, spec));
    } else {
      polys.push_back(L.slope_poly(n.id, spec));
    }
    cands.push_back(n.id);
  }
  if (cands.empty())
    return Diagnostic{"no admissible subobject above node " +
                      (current ? std::to_string(*current) : std::string("0"))};
  std::size_t best = lex_max(polys);
  int winner = cands[best];
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (SlopePolynomial::lex_compare(polys[i], polys[best]) != 0) continue;
    const LatticeNode& n = L.node(cands[i]);
    const LatticeNode& w = L.node(winner);
    if (n.rank > w.rank || (n.rank == w.rank && n.id < w.id)) winner = n.id;
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (SlopePolynomial::lex_compare(polys[i], polys[best]) == 0 &&
        !L.leq(cands[i], winner)) {
      return Diagnostic{
          "input not HN-coherent: node " + std::to_string(cands[i]) +
          " has maximal slope but is not contained in node " + std::to_string(winner) +
          " (a join node is probably missing)"};
    }
  }
  return winner;
}

} // namespace

Outcome<int> max_destabilizer(const SubobjectLattice& lattice) {
  return max_destabilizer(lattice, lattice.default_perturbation());
}

Outcome<int> max_destabilizer(const SubobjectLattice& lattice, const PerturbationSpec& spec) {
  return destabilizer_step(lattice, spec, std::nullopt);
}

Outcome<FiltrationResult> hn_filtration(const SubobjectLattice& lattice) {
  return hn_filtration(lattice, lattice.default_perturbation());
}

Outcome<FiltrationResult> hn_filtration(const SubobjectLattice& lattice,
                                        const PerturbationSpec& spec) {
  FiltrationResult result;
  result.kind = FiltrationKind::harder_narasimhan;
  result.epsilon0 = epsilon0(lattice, spec);
  std::optional<int> current;
  while (!current || *current != lattice.top()) {
    if (current && lattice.mu_equivalent(*current, lattice.top())) {
      // Only a torsion quotient separates us from the top; close the chain.
      result.chain.back() = lattice.top();
      break;
    }
    Outcome<int> step = destabilizer_step(lattice, spec, current);
    if (!is_ok(step)) return diagnostic(step);
    int next = value(step);
    result.quotient_slopes.push_back(current
                                         ? lattice.quotient_slope_poly(*current, next, spec)
                                         : lattice.slope_poly(next, spec));
    result.chain.push_back(next);
    current = next;
  }
  for (std::size_t i = 1; i < result.quotient_slopes.size(); ++i) {
    if (SlopePolynomial::lex_compare(result.quotient_slopes[i - 1],
                                     result.quotient_slopes[i]) <= 0)
      return Diagnostic{"input not HN-coherent: quotient slopes fail to decrease strictly"};
  }
  return result;
}

Outcome<FiltrationResult> weak_jh(const SubobjectLattice& lattice) {
  return weak_jh(lattice, lattice.default_perturbation());
}

Outcome<FiltrationResult> weak_jh(const SubobjectLattice& lattice,
                                  const PerturbationSpec& spec) {
  Rat top_base = lattice.slope_poly(lattice.top(), spec).coeff(0);
  for (const LatticeNode& n : lattice.nodes())
    if (lattice.slope_poly(n.id, spec).coeff(0) > top_base)
      fail(errc::precondition, "weak JH filtration needs a semistable top at epsilon 0");
  Outcome<FiltrationResult> hn = hn_filtration(lattice, spec);
  if (!is_ok(hn)) return diagnostic(hn);
  FiltrationResult result = value(hn);
  result.kind = FiltrationKind::weak_jordan_hoelder;
  for (const SlopePolynomial& q : result.quotient_slopes)
    if (q.coeff(0) != top_base)
      return Diagnostic{"quotient slopes at epsilon 0 are not all equal to the top slope"};
  return result;
}

bool is_semistable(const SubobjectLattice& lattice, int id, const Rat& eps) {
  return is_semistable(lattice, id, eps, lattice.default_perturbation());
}

bool is_semistable(const SubobjectLattice& lattice, int id, const Rat& eps,
                   const PerturbationSpec& spec) {
  Rat own = lattice.slope_poly(id, spec).eval(eps);
  for (const LatticeNode& n : lattice.nodes()) {
    if (n.id == id || !lattice.lt(n.id, id)) continue;
    if (lattice.slope_poly(n.id, spec).eval(eps) > own) return false;
  }
  return true;
}

bool is_stable(const SubobjectLattice& lattice, int id, const Rat& eps) {
  return is_stable(lattice, id, eps, lattice.default_perturbation());
}

bool is_stable(const SubobjectLattice& lattice, int id, const Rat& eps,
               const PerturbationSpec& spec) {
  Rat own = lattice.slope_poly(id, spec).eval(eps);
  int rank = lattice.node(id).rank;
  for (const LatticeNode& n : lattice.nodes()) {
    if (n.id == id || !lattice.lt(n.id, id) || n.rank >= rank) continue;
    if (lattice.slope_poly(n.id, spec).eval(eps) >= own) return false;
  }
  return true;
}

Outcome<int> socle(const SubobjectLattice& lattice) {
  Rat top_base = lattice.slope_poly(lattice.top()).coeff(0);
  for (const LatticeNode& n : lattice.nodes())
    if (lattice.slope_poly(n.id).coeff(0) > top_base)
      fail(errc::precondition, "socle needs a semistable top at epsilon 0");

  // Minimal nodes among those of maximal base slope.
  std::vector<int> maximal_slope;
  for (const LatticeNode& n : lattice.nodes())
    if (lattice.slope_poly(n.id).coeff(0) == top_base) maximal_slope.push_back(n.id);
  std::vector<int> generators;
  for (int a : maximal_slope) {
    bool minimal = std::none_of(maximal_slope.begin(), maximal_slope.end(),
                                [&](int b) { return b != a && lattice.lt(b, a); });
    if (minimal) generators.push_back(a);
  }

  // Their join: the unique minimal common upper bound.
  std::vector<int> bounds;
  for (const LatticeNode& n : lattice.nodes()) {
    bool above_all = std::all_of(generators.begin(), generators.end(),
                                 [&](int g) { return lattice.leq(g, n.id); });
    if (above_all) bounds.push_back(n.id);
  }
  std::vector<int> minimal_bounds;
  for (int a : bounds) {
    bool minimal = std::none_of(bounds.begin(), bounds.end(),
                                [&](int b) { return b != a && lattice.lt(b, a); });
    if (minimal) minimal_bounds.push_back(a);
  }
  if (minimal_bounds.size() != 1)
    return Diagnostic{"lattice not closed under joins: no unique join of the "
                      "maximal-slope subobjects"};
  return minimal_bounds.front();
}

Outcome<int> cosocle(const SubobjectLattice& lattice) { return socle(lattice.dual()); }

SubobjectLattice chern_lattice(const FactorProfile& profile, const std::vector<ChernNode>& nodes,
                               std::vector<std::pair<int, int>> edges, int top,
                               std::optional<PerturbationSpec> perturbation) {
  profile.validate();
  int s = profile.factor_count();
  std::vector<LatticeNode> plain;
  plain.reserve(nodes.size());
  for (const ChernNode& n : nodes) {
    if (n.c1.size() != s) fail(errc::invalid_input, "chern vector length does not match profile");
    plain.push_back(LatticeNode{n.id, n.rank, n.c1.coeffs});
  }
  // Functional iota pairs a degree vector with the iota-th component slope
  // weight, so that the sum over all functionals is the sheaf slope.
  std::vector<std::vector<Rat>> functionals;
  for (int i = 0; i < s; ++i) {
    std::vector<Rat> row(s, Rat(0));
    row[i] = component_slope(profile, SheafClass{1, ChernVector::unit(s, i)}, i);
    functionals.push_back(std::move(row));
  }
  return SubobjectLattice::build(std::move(plain), std::move(edges), top,
                                 std::move(functionals), std::move(perturbation));
}

} // namespace kuga
