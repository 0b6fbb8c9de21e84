#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kuga/chow.hpp"
#include "kuga/poly.hpp"

namespace kuga {

// A saturated subobject: rank plus a degree vector. Degrees pair with the
// lattice's slope functionals; they are either abstract or the coefficients
// of a Chern vector when the lattice is tied to a factor profile.
struct LatticeNode {
  int id = 0;
  int rank = 0;
  std::vector<Rat> degrees;
};

// Non-fatal finding: the input lattice is not coherent enough to carry the
// requested computation. Reported, never silently worked around.
struct Diagnostic {
  std::string message;
};

template <typename T>
using Outcome = std::variant<T, Diagnostic>;

template <typename T>
bool is_ok(const Outcome<T>& o) { return std::holds_alternative<T>(o); }

template <typename T>
const T& value(const Outcome<T>& o) { return std::get<T>(o); }

template <typename T>
const Diagnostic& diagnostic(const Outcome<T>& o) { return std::get<Diagnostic>(o); }

// Weights for the t^1, t^2, .. corrections of the slope polynomial; one row
// of functional weights per power of t. An empty spec keeps slopes constant.
struct PerturbationSpec {
  std::vector<std::vector<Rat>> rows;

  static PerturbationSpec none() { return {}; }
  // Single t-linear twist by one functional: mu + t * mu_iota.
  static PerturbationSpec twist(int functional_index, int functional_count);
  // t^v weight on functional v, for v = 1..k-1. Makes the lexicographic order
  // on slope polynomials refine the base slope by each functional in turn,
  // which is the canonical tie-breaking family for file-driven lattices.
  static PerturbationSpec staircase(int functional_count);
};

// Finite model of the poset of saturated subobjects of a fixed top object.
// The zero subobject is implicit. Slopes are linear functionals of the degree
// vector divided by rank; the base slope is the sum over all functionals.
class SubobjectLattice {
public:
  static SubobjectLattice build(std::vector<LatticeNode> nodes,
                                std::vector<std::pair<int, int>> edges, int top,
                                std::vector<std::vector<Rat>> functionals = {},
                                std::optional<PerturbationSpec> perturbation = std::nullopt);

  const std::vector<LatticeNode>& nodes() const { return nodes_; }
  const LatticeNode& node(int id) const;
  bool has_node(int id) const;
  int top() const { return top_; }
  int degree_dim() const { return degree_dim_; }
  const std::vector<std::vector<Rat>>& functionals() const { return functionals_; }
  const PerturbationSpec& default_perturbation() const { return perturbation_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Containment; reflexive. lt is the strict version.
  bool leq(int a, int b) const;
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  // Pairings f_j . degrees(id) for every functional j.
  std::vector<Rat> functional_values(int id) const;

  // Slope polynomial of a node as a standalone object (degree / rank).
  SlopePolynomial slope_poly(int id) const;
  SlopePolynomial slope_poly(int id, const PerturbationSpec& spec) const;

  // Slope polynomial of the quotient super/sub. Requires sub < super with a
  // strict rank drop.
  SlopePolynomial quotient_slope_poly(int sub, int super) const;
  SlopePolynomial quotient_slope_poly(int sub, int super, const PerturbationSpec& spec) const;

  // Equal rank and degree difference annihilated by every functional.
  bool mu_equivalent(int g, int f) const;

  // Order-dual lattice: node id stands for the dual of the quotient by it,
  // the old top's id stands for the dual of the whole object. Degrees negate
  // accordingly; functionals and perturbation carry over.
  SubobjectLattice dual() const;

private:
  SubobjectLattice() = default;
  int index(int id) const;

  std::vector<LatticeNode> nodes_;
  std::vector<std::pair<int, int>> edges_;
  int top_ = 0;
  int degree_dim_ = 0;
  std::vector<std::vector<Rat>> functionals_;
  PerturbationSpec perturbation_;
  std::vector<std::vector<char>> leq_; // strict-or-equal, by index
};

enum class FiltrationKind { harder_narasimhan, weak_jordan_hoelder };

struct FiltrationResult {
  FiltrationKind kind = FiltrationKind::harder_narasimhan;
  std::vector<int> chain; // G_1 .. G_k = top; the zero subobject is implicit
  std::vector<SlopePolynomial> quotient_slopes;
  Rat epsilon0;
};

// Certified perturbation radius: for every pair of distinct slope polynomials
// arising in the lattice (node slopes and quotient slopes), the sign of their
// difference on (0, epsilon0] matches the lexicographic comparison. Computed
// by root isolation; 1 when nothing crosses.
Rat epsilon0(const SubobjectLattice& lattice);
Rat epsilon0(const SubobjectLattice& lattice, const PerturbationSpec& spec);

// The lex-maximal subobject; ties broken by maximal rank, then smallest id.
// The returned node must dominate every slope-equal node, otherwise the
// lattice is not HN-coherent and a diagnostic is returned.
Outcome<int> max_destabilizer(const SubobjectLattice& lattice);
Outcome<int> max_destabilizer(const SubobjectLattice& lattice, const PerturbationSpec& spec);

// Unique filtration with strictly decreasing quotient slopes at every
// epsilon in (0, epsilon0].
Outcome<FiltrationResult> hn_filtration(const SubobjectLattice& lattice);
Outcome<FiltrationResult> hn_filtration(const SubobjectLattice& lattice,
                                        const PerturbationSpec& spec);

// For a top that is semistable at epsilon = 0: the filtration that has all
// quotient slopes equal at 0 and is the HN filtration for small epsilon > 0.
Outcome<FiltrationResult> weak_jh(const SubobjectLattice& lattice);
Outcome<FiltrationResult> weak_jh(const SubobjectLattice& lattice, const PerturbationSpec& spec);

// Stability of a node against its sub-nodes at a fixed epsilon. Stability
// quantifies over subobjects of strictly smaller rank; semistability over all.
bool is_semistable(const SubobjectLattice& lattice, int id, const Rat& eps);
bool is_semistable(const SubobjectLattice& lattice, int id, const Rat& eps,
                   const PerturbationSpec& spec);
bool is_stable(const SubobjectLattice& lattice, int id, const Rat& eps);
bool is_stable(const SubobjectLattice& lattice, int id, const Rat& eps,
               const PerturbationSpec& spec);

// Join of the minimal nodes of maximal base slope. Requires a semistable top;
// a missing or ambiguous join yields a diagnostic.
Outcome<int> socle(const SubobjectLattice& lattice);

// socle of the dual lattice; the returned id names a node of dual(lattice).
Outcome<int> cosocle(const SubobjectLattice& lattice);

// A subobject carrying a Chern vector instead of abstract degrees.
struct ChernNode {
  int id = 0;
  int rank = 0;
  ChernVector c1;
};

// Lattice whose slope functionals are the component slopes of the profile:
// the base slope of a node is its sheaf slope, and twisting by functional
// iota perturbs in the direction of the iota-th factor.
SubobjectLattice chern_lattice(const FactorProfile& profile, const std::vector<ChernNode>& nodes,
                               std::vector<std::pair<int, int>> edges, int top,
                               std::optional<PerturbationSpec> perturbation = std::nullopt);

} // namespace kuga
