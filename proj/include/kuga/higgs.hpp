#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kuga/chow.hpp"

namespace kuga {

// One Hodge piece of a weight-one summand: rank and first Chern class.
struct HodgePiece {
  int rank = 0;
  ChernVector c1;
};

// Rank/degree shadow of a weight-one Higgs summand. The Higgs field itself is
// modeled only by its support: the set of factors it maps into nontrivially.
struct HiggsData {
  HodgePiece p10;
  HodgePiece p01;
  std::vector<int> support; // 0-based factor indices, kept sorted and unique
  bool unitary = false;
  std::optional<long> observed_length;
  std::string label;

  // Named invariant violations; empty means the summand is well-formed.
  // c1(p10) + c1(p01) = 0, unitary <=> empty support, support indices valid,
  // rank 0 forces a zero Chern class.
  std::vector<std::string> invariant_violations(const FactorProfile& profile) const;
};

// mu(log-cotangent) - (mu(E10) - mu(E01)). Zero is the Arakelov equality;
// positive is strict inequality; negative input is inconsistent.
Rat arakelov_defect(const FactorProfile& profile, const HiggsData& v);

// Equivalent form of the equality: ((l + l') / l') mu(E10) = mu(F_iota).
// Agrees with arakelov_defect == 0 whenever c1(p10) + c1(p01) = 0.
bool restated_equality(const FactorProfile& profile, const HiggsData& v, int iota);

struct PurityResult {
  enum class Kind { pure, unitary, violates_purity, equality_fails };
  Kind kind;
  int index = -1; // 0-based factor index, set only for kind == pure
  std::string message() const;
};

// Purity bookkeeping: an equality summand must be supported on exactly one
// factor; anything else is diagnosed, not silently accepted.
PurityResult purity_check(const FactorProfile& profile, const HiggsData& v);

struct WedgeRow {
  int m = 0;
  Int piece_rank;     // rank of the (l-m, m) wedge piece: C(l,m) C(l',m)
  Int det_piece_rank; // rank of the det-generated subbundle piece: C(n+m-1, m)
  Rat slope;          // l mu(E10) - m mu(F_iota)
};

// Rank and slope table of the wedge Higgs bundle pieces for m = 0..min(l,l').
// Requires the Arakelov equality; the slope column is an arithmetic
// progression with step -mu(log-cotangent).
struct WedgeTable {
  std::vector<WedgeRow> rows;
  Rat step;
};

WedgeTable wedge_table(const FactorProfile& profile, const HiggsData& v, int iota);

// Candidate value for the iterated-Higgs-field length under the equality:
// l l' (n+1) / ((l+l') n).
Rat length_bound(long l, long lp, long n);

// Degree of the det-generated subbundle truncated at sigma, as the explicit
// sum over m of C(n+m-1,m) (l l'/(l+l') - m).
Rat degree_sum(long l, long lp, long n, long sigma);

// The same degree in closed form:
// (l l'/(n(l+l')) - sigma/(n+1)) (sigma+1) C(sigma+n, sigma+1).
// Kept as an independent route; tests compare the two on a full grid.
Rat degree_sum_closed(long l, long lp, long n, long sigma);

// True when the m-th iterated Higgs map cannot be injective for rank reasons:
// C(n+m-1,m) > C(l,m) C(l',m).
bool theta_injectivity_obstruction(long l, long lp, long n, long m);

enum class Cond2Status {
  vacuous_unitary, // unitary summand
  vacuous_type_a,  // purity factor of type A
  vacuous_type_c,  // purity factor of type C
  not_evaluated,   // no purity index (equality fails); nothing to check
  pass,
  fail,
};

const char* cond2_status_str(Cond2Status s);

struct SummandCertificate {
  std::string label;
  bool unitary = false;
  std::optional<Rat> defect; // absent for unitary summands
  std::optional<int> purity_index;
  std::optional<FactorType> purity_type;
  bool cond1 = false;
  Cond2Status cond2 = Cond2Status::not_evaluated;
  std::optional<Rat> bound; // evaluated length bound for type-B purity
  std::optional<long> observed_length;
  std::vector<std::string> notes;       // why condition 2 passed or failed
  std::vector<std::string> diagnostics; // input inconsistencies

  bool cond2_pass() const { return cond2 != Cond2Status::fail; }
  bool pass() const { return cond1 && cond2_pass(); }
};

struct Certificate {
  std::vector<SummandCertificate> summands;
  bool cond1_all = true;
  bool cond2_all = true;
  bool has_diagnostics = false;

  bool pass() const { return cond1_all && cond2_all; }
};

// Checks every summand against the two certification conditions:
//   1. unitary, or the Arakelov equality holds;
//   2. for type-B purity, the length bound is an admissible integer (and
//      matches the observed length when one is supplied).
// Inconsistent summands contribute diagnostics instead of silent verdicts.
Certificate certify(const FactorProfile& profile, const std::vector<HiggsData>& summands);

} // namespace kuga
