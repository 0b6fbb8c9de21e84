#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kuga/higgs.hpp"

namespace kuga {

// The five families of irreducible domain factors that carry admissible
// weight-one representations, keyed by Dynkin type.
enum class Family { a, b, c, d_fork, d_end };

const char* family_str(Family f);
Family family_from_str(const std::string& s);

struct DomainFactor {
  Family family = Family::a;
  int p = 0; // a(p, q) only
  int q = 0;
  int n = 0; // b, c, d families

  static DomainFactor a(int p, int q);
  static DomainFactor b(int n);
  static DomainFactor c(int n);
  static DomainFactor d_fork(int n);
  static DomainFactor d_end(int n);
  void validate() const;
  std::string str() const;
};

// One admissible representation with its weight-space dimensions (l, l').
struct RepEntry {
  std::string label;
  Int l;
  Int lp;
  std::optional<Int> predicted_length; // set for the ball families
  bool dims_derived = false; // dimensions not stated in the source table; standard values
  std::string convention;    // note when two (l, l') orderings are in use
};

// The full catalogue for one factor:
//   a(p,q), q>1 : the standard representation, (p, q);
//   a(p,1)      : the j-th wedge powers, (C(p,j), C(p,j-1)), j = 1..p;
//   b(n)        : the spin representation, (2^{n-1}, 2^{n-1});
//   c(n)        : the standard representation, (n, n);
//   d_fork(n)   : the standard representation, (n, n);
//   d_end(n)    : the half-spin representation, (2^{n-2}, 2^{n-2}).
std::vector<RepEntry> admissible_reps(const DomainFactor& factor);

// Independent oracle for the b(n) entry: enumerate the index subsets of the
// spinor basis and split them by membership of the last index.
std::pair<Int, Int> spin_weight_spaces(int n);

// The k-th wedge family on a rank-n ball factor, with the Higgs-side data
// needed by the certifier. rep carries the group-ordering Hodge pair
// (C(n,k-1), C(n,k)); higgs carries the bundle-ordering ranks
// (C(n,k), C(n,k-1)) with exact Chern data satisfying the equality.
struct Su1nWedge {
  RepEntry rep;
  FactorProfile profile; // single factor of rank n
  HiggsData higgs;
};

Su1nWedge su1n_wedge_entry(int n, int k);

// The k = 1 wedge family: Hodge pieces of ranks (n, 1) with Chern classes
// (1/(n+1), -1/(n+1)) on a single rank-n factor.
HiggsData standard_ball_higgs(int n);
FactorProfile standard_ball_profile(int n);

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

Partition conjugate_partition(const Partition& lambda);
bool is_partition(const Partition& lambda);

// Dimension of the Schur functor S_lambda of a d-dimensional space via the
// hook content formula; zero when lambda has more than d rows.
Int schur_dim(const Partition& lambda, int d);

// Wedge power of a tensor product of a rank-2 and a rank-n space:
// the multiplicity-one pairs (lambda, lambda') with lambda running over the
// partitions of r with at most 2 rows and n columns and lambda' conjugate.
std::vector<std::pair<Partition, Partition>> cauchy_wedge(int r, int n);

// All positive integer pairs (l', n) with sigma = l l' (n+1) / ((l+l') n).
// For sigma < l the solutions are finite; see the bound derivation in
// repcat.cpp. For sigma = l they form the family l' = l n.
struct DiophantineSolutions {
  long l = 0;
  long sigma = 0;
  std::vector<std::pair<long, long>> pairs; // (l', n), finite part
  bool parametric = false;                  // the family (l n, n) for every n
  long n_bound = 0;                         // search bound used for the finite part
};

DiophantineSolutions diophantine_solutions(long l, long sigma);

enum class LowRankVerdict { forced, open, not_covered };

const char* low_rank_verdict_str(LowRankVerdict v);

// Status of the length condition for the Hodge pair (l, l') on a rank-n ball
// candidate, per the low-rank analysis. Symmetric in l and l'.
LowRankVerdict low_rank_verdict(long l, long lp, long n);

} // namespace kuga
