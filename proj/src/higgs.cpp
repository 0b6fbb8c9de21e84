#include "kuga/higgs.hpp"

#include <algorithm>

namespace kuga {

std::vector<std::string> HiggsData::invariant_violations(const FactorProfile& profile) const {
  std::vector<std::string> out;
  int s = profile.factor_count();
  if (p10.c1.size() != s || p01.c1.size() != s)
    out.push_back("chern vector length does not match profile");
  else if (!(p10.c1 + p01.c1).is_zero())
    out.push_back("c1(p10) + c1(p01) = 0 violated");
  if (p10.rank < 0 || p01.rank < 0) out.push_back("negative rank");
  if (p10.rank == 0 && !p10.c1.is_zero()) out.push_back("rank-zero p10 with nonzero c1");
  if (p01.rank == 0 && !p01.c1.is_zero()) out.push_back("rank-zero p01 with nonzero c1");
  if (!unitary && (p10.rank < 1 || p01.rank < 1))
    out.push_back("non-unitary summand needs positive Hodge piece ranks");
  for (int i : support)
    if (i < 0 || i >= s) out.push_back("support index out of range");
  if (unitary != support.empty())
    out.push_back("unitary <=> empty support violated");
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end())
    out.push_back("support indices must be sorted and unique");
  return out;
}

Rat arakelov_defect(const FactorProfile& profile, const HiggsData& v) {
  profile.validate();
  if (v.unitary) fail(errc::not_applicable, "defect is not defined for unitary summands");
  if (v.p10.rank < 1 || v.p01.rank < 1)
    fail(errc::invalid_input, "both Hodge pieces need positive rank");
  Rat mu10 = slope(profile, SheafClass{v.p10.rank, v.p10.c1});
  Rat mu01 = slope(profile, SheafClass{v.p01.rank, v.p01.c1});
  return log_cotangent_slope(profile) - (mu10 - mu01);
}

bool restated_equality(const FactorProfile& profile, const HiggsData& v, int iota) {
  profile.validate();
  if (v.unitary) fail(errc::not_applicable, "equality is not defined for unitary summands");
  if (v.p10.rank < 1 || v.p01.rank < 1)
    fail(errc::invalid_input, "both Hodge pieces need positive rank");
  if (iota < 0 || iota >= profile.factor_count())
    fail(errc::out_of_range, "factor index out of range");
  Rat mu10 = slope(profile, SheafClass{v.p10.rank, v.p10.c1});
  Rat lhs = Rat(v.p10.rank + v.p01.rank) / Rat(v.p01.rank) * mu10;
  return lhs == factor_slope(profile, iota);
}

std::string PurityResult::message() const {
  switch (kind) {
    case Kind::pure: return "pure of type " + std::to_string(index + 1);
    case Kind::unitary: return "unitary";
    case Kind::violates_purity:
      return "violates purity: equality with support on several factors";
    case Kind::equality_fails: return "equality fails, purity not forced";
  }
  return "";
}

PurityResult purity_check(const FactorProfile& profile, const HiggsData& v) {
  profile.validate();
  if (v.unitary) return {PurityResult::Kind::unitary};
  if (arakelov_defect(profile, v) != 0) return {PurityResult::Kind::equality_fails};
  if (v.support.size() != 1) return {PurityResult::Kind::violates_purity};
  return {PurityResult::Kind::pure, v.support.front()};
}

WedgeTable wedge_table(const FactorProfile& profile, const HiggsData& v, int iota) {
  profile.validate();
  if (iota < 0 || iota >= profile.factor_count())
    fail(errc::out_of_range, "factor index out of range");
  if (v.unitary || arakelov_defect(profile, v) != 0)
    fail(errc::precondition, "wedge table requires the Arakelov equality");
  long l = v.p10.rank;
  long lp = v.p01.rank;
  long n = profile.dims[iota];
  Rat mu10 = slope(profile, SheafClass{v.p10.rank, v.p10.c1});
  Rat mu_omega = factor_slope(profile, iota);
  WedgeTable table;
  table.step = -mu_omega;
  long cap = std::min(l, lp);
  for (long m = 0; m <= cap; ++m) {
    WedgeRow row;
    row.m = static_cast<int>(m);
    row.piece_rank = binomial(l, m) * binomial(lp, m);
    row.det_piece_rank = binomial(n + m - 1, m);
    row.slope = Rat(l) * mu10 - Rat(m) * mu_omega;
    table.rows.push_back(std::move(row));
  }
  return table;
}

Rat length_bound(long l, long lp, long n) {
  if (l < 1 || lp < 1 || n < 1) fail(errc::invalid_input, "length bound needs l, l', n >= 1");
  return Rat(l) * Rat(lp) * Rat(n + 1) / (Rat(l + lp) * Rat(n));
}

Rat degree_sum(long l, long lp, long n, long sigma) {
  if (l < 1 || lp < 1 || n < 1) fail(errc::invalid_input, "degree sum needs l, l', n >= 1");
  if (sigma < 0 || sigma > std::min(l, lp))
    fail(errc::out_of_range, "sigma must lie in [0, min(l, l')]");
  Rat ratio = Rat(l) * Rat(lp) / Rat(l + lp);
  Rat acc(0);
  for (long m = 0; m <= sigma; ++m)
    acc += Rat(binomial(n + m - 1, m)) * (ratio - Rat(m));
  return acc;
}

Rat degree_sum_closed(long l, long lp, long n, long sigma) {
  if (l < 1 || lp < 1 || n < 1) fail(errc::invalid_input, "degree sum needs l, l', n >= 1");
  if (sigma < 0 || sigma > std::min(l, lp))
    fail(errc::out_of_range, "sigma must lie in [0, min(l, l')]");
  Rat lead = Rat(l) * Rat(lp) / (Rat(n) * Rat(l + lp)) - Rat(sigma) / Rat(n + 1);
  return lead * Rat(sigma + 1) * Rat(binomial(sigma + n, sigma + 1));
}

bool theta_injectivity_obstruction(long l, long lp, long n, long m) {
  if (l < 1 || lp < 1 || n < 1) fail(errc::invalid_input, "obstruction needs l, l', n >= 1");
  if (m < 1 || m > std::min(l, lp))
    fail(errc::out_of_range, "m must lie in [1, min(l, l')]");
  return binomial(n + m - 1, m) > binomial(l, m) * binomial(lp, m);
}

const char* cond2_status_str(Cond2Status s) {
  switch (s) {
    case Cond2Status::vacuous_unitary: return "vacuous (unitary)";
    case Cond2Status::vacuous_type_a: return "vacuous (type A)";
    case Cond2Status::vacuous_type_c: return "vacuous (type C)";
    case Cond2Status::not_evaluated: return "not evaluated (no purity factor)";
    case Cond2Status::pass: return "PASS";
    case Cond2Status::fail: return "FAIL";
  }
  return "?";
}

// Length-condition check for a type-B purity factor. Feasibility means: the
// bound is a nonnegative integer, at most min(l, l'), and no iterated-Higgs
// rank obstruction fires at or below it. A supplied observed length must
// equal the bound on top of that.
static void check_condition2(const FactorProfile& profile, const HiggsData& v, int iota,
                             SummandCertificate& cert) {
  long l = v.p10.rank;
  long lp = v.p01.rank;
  long n = profile.dims[iota];
  Rat bound = length_bound(l, lp, n);
  cert.bound = bound;
  long cap = std::min(l, lp);
  if (!is_integral(bound)) {
    cert.cond2 = Cond2Status::fail;
    cert.notes.push_back("length bound " + rat_str(bound) + " is not an integer");
    return;
  }
  if (bound < 0 || bound > Rat(cap)) {
    cert.cond2 = Cond2Status::fail;
    cert.notes.push_back("length bound " + rat_str(bound) + " exceeds min(l, l') = " +
                         std::to_string(cap));
    return;
  }
  long b = static_cast<long>(rat_floor(bound).get_si());
  for (long m = 1; m <= b; ++m) {
    if (theta_injectivity_obstruction(l, lp, n, m)) {
      cert.cond2 = Cond2Status::fail;
      cert.notes.push_back(
          "rank obstruction at m = " + std::to_string(m) + ": " +
          binomial(n + m - 1, m).get_str() + " > " +
          Int(binomial(l, m) * binomial(lp, m)).get_str());
      return;
    }
  }
  if (v.observed_length && *v.observed_length != b) {
    cert.cond2 = Cond2Status::fail;
    cert.notes.push_back("observed length " + std::to_string(*v.observed_length) +
                         " differs from bound " + std::to_string(b));
    return;
  }
  cert.cond2 = Cond2Status::pass;
  cert.notes.push_back(v.observed_length
                           ? "observed length equals the bound " + std::to_string(b)
                           : "bound " + std::to_string(b) + " is feasible");
}

Certificate certify(const FactorProfile& profile, const std::vector<HiggsData>& summands) {
  profile.validate();
  Certificate out;
  for (const HiggsData& v : summands) {
    SummandCertificate cert;
    cert.label = v.label;
    cert.unitary = v.unitary;
    cert.observed_length = v.observed_length;
    cert.diagnostics = v.invariant_violations(profile);
    if (!cert.diagnostics.empty()) {
      // Verdicts on inconsistent data would be meaningless; report and move on.
      cert.cond1 = false;
      cert.cond2 = Cond2Status::not_evaluated;
      out.summands.push_back(std::move(cert));
      out.has_diagnostics = true;
      out.cond1_all = false;
      continue;
    }
    if (v.unitary) {
      cert.cond1 = true;
      cert.cond2 = Cond2Status::vacuous_unitary;
      out.summands.push_back(std::move(cert));
      continue;
    }
    Rat defect = arakelov_defect(profile, v);
    cert.defect = defect;
    cert.cond1 = defect == 0;
    if (defect < 0)
      cert.diagnostics.push_back("negative defect: input violates the slope inequality");
    PurityResult purity = purity_check(profile, v);
    if (purity.kind == PurityResult::Kind::violates_purity)
      cert.diagnostics.push_back(purity.message());
    if (purity.kind == PurityResult::Kind::pure) {
      cert.purity_index = purity.index;
      cert.purity_type = profile.types[purity.index];
      switch (profile.types[purity.index]) {
        case FactorType::A: cert.cond2 = Cond2Status::vacuous_type_a; break;
        case FactorType::C: cert.cond2 = Cond2Status::vacuous_type_c; break;
        case FactorType::B: check_condition2(profile, v, purity.index, cert); break;
      }
    } else {
      cert.cond2 = Cond2Status::not_evaluated;
    }
    out.cond1_all = out.cond1_all && cert.cond1;
    out.cond2_all = out.cond2_all && cert.cond2_pass();
    out.has_diagnostics = out.has_diagnostics || !cert.diagnostics.empty();
    out.summands.push_back(std::move(cert));
  }
  return out;
}

} // namespace kuga
