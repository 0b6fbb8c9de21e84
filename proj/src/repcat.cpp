#include "kuga/repcat.hpp"

#include <algorithm>

namespace kuga {

const char* family_str(Family f) {
  switch (f) {
    case Family::a: return "a";
    case Family::b: return "b";
    case Family::c: return "c";
    case Family::d_fork: return "d_fork";
    case Family::d_end: return "d_end";
  }
  return "?";
}

Family family_from_str(const std::string& s) {
  if (s == "a") return Family::a;
  if (s == "b") return Family::b;
  if (s == "c") return Family::c;
  if (s == "d_fork") return Family::d_fork;
  if (s == "d_end") return Family::d_end;
  fail(errc::parse, "unknown family '" + s + "'");
}

DomainFactor DomainFactor::a(int p, int q) { return {Family::a, p, q, 0}; }
DomainFactor DomainFactor::b(int n) { return {Family::b, 0, 0, n}; }
DomainFactor DomainFactor::c(int n) { return {Family::c, 0, 0, n}; }
DomainFactor DomainFactor::d_fork(int n) { return {Family::d_fork, 0, 0, n}; }
DomainFactor DomainFactor::d_end(int n) { return {Family::d_end, 0, 0, n}; }

void DomainFactor::validate() const {
  switch (family) {
    case Family::a:
      if (p < 1 || q < 1 || p < q) fail(errc::invalid_input, "a(p,q) needs p >= q >= 1");
      return;
    case Family::b:
      if (n < 2) fail(errc::invalid_input, "b(n) needs n >= 2");
      return;
    case Family::c:
      if (n < 1) fail(errc::invalid_input, "c(n) needs n >= 1");
      return;
    case Family::d_fork:
    case Family::d_end:
      if (n < 4) fail(errc::invalid_input, "d(n) needs n >= 4");
      return;
  }
}

std::string DomainFactor::str() const {
  if (family == Family::a)
    return "a(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return std::string(family_str(family)) + "(" + std::to_string(n) + ")";
}

static Int pow2(int e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

std::vector<RepEntry> admissible_reps(const DomainFactor& factor) {
  factor.validate();
  std::vector<RepEntry> out;
  switch (factor.family) {
    case Family::a:
      if (factor.q > 1) {
        out.push_back({"standard", Int(factor.p), Int(factor.q), std::nullopt, false, ""});
      } else {
        // Wedge powers of the standard representation. The weight spaces can
        // be read in two orders: the wedge index j pairs C(p,j) with
        // C(p,j-1), while the group SU(C(p,j-1), C(p,j)) lists them the
        // other way around. Both orders appear downstream, so flag it.
        for (int j = 1; j <= factor.p; ++j) {
          RepEntry e;
          e.label = "wedge^" + std::to_string(j);
          e.l = binomial(factor.p, j);
          e.lp = binomial(factor.p, j - 1);
          e.predicted_length = binomial(factor.p - 1, j - 1);
          e.convention = "weight-space order; the group order swaps (l, l')";
          out.push_back(std::move(e));
        }
      }
      return out;
    case Family::b:
      out.push_back({"spin", pow2(factor.n - 1), pow2(factor.n - 1), std::nullopt, false, ""});
      return out;
    case Family::c:
      out.push_back({"standard", Int(factor.n), Int(factor.n), std::nullopt, false, ""});
      return out;
    case Family::d_fork:
      out.push_back({"standard", Int(factor.n), Int(factor.n), std::nullopt, false, ""});
      return out;
    case Family::d_end:
      // Standard half-spin dimensions; flagged as derived since the
      // classification lists this case without explicit numbers.
      out.push_back({"half-spin", pow2(factor.n - 2), pow2(factor.n - 2), std::nullopt, true, ""});
      return out;
  }
  return out;
}

std::pair<Int, Int> spin_weight_spaces(int n) {
  if (n < 1) fail(errc::invalid_input, "spin weight spaces need n >= 1");
  if (n > 24) fail(errc::invalid_input, "subset enumeration capped at n = 24");
  Int without(0), with(0);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (mask & (1ul << (n - 1))) ++with;
    else ++without;
  }
  return {without, with};
}

FactorProfile standard_ball_profile(int n) {
  if (n < 1) fail(errc::invalid_input, "ball dimension must be positive");
  FactorProfile profile;
  profile.dims = {n};
  profile.types = {n == 1 ? FactorType::A : FactorType::B};
  if (n > 1) profile.c2_ratios[0] = Rat(n) / Rat(2 * (n + 1));
  return profile;
}

HiggsData standard_ball_higgs(int n) { return su1n_wedge_entry(n, 1).higgs; }

Su1nWedge su1n_wedge_entry(int n, int k) {
  if (n < 1) fail(errc::invalid_input, "ball dimension must be positive");
  if (k < 1 || k > n) fail(errc::out_of_range, "wedge index must lie in [1, n]");
  Su1nWedge entry;
  entry.rep.label = "su(1," + std::to_string(n) + ") wedge^" + std::to_string(k);
  entry.rep.l = binomial(n, k - 1);
  entry.rep.lp = binomial(n, k);
  entry.rep.predicted_length = binomial(n - 1, k - 1);
  entry.rep.convention = "group order; the Hodge bundle ranks are (C(n,k), C(n,k-1))";
  entry.profile = standard_ball_profile(n);

  // Bundle data. The standard family twists the factor by the (n+1)-st root
  // of its determinant: ranks (n, 1) with Chern classes (1/(n+1), -1/(n+1)).
  // Its k-th wedge keeps the weight-one shape with
  //   p10 = wedge^k of the rank-n piece, p01 = wedge^{k-1} tensored by the
  //   rank-one piece,
  // so c1(p10) = C(n-1,k-1)/(n+1) and c1(p01) is its negative.
  Rat c = Rat(binomial(n - 1, k - 1)) / Rat(n + 1);
  Int r10 = binomial(n, k);
  Int r01 = binomial(n, k - 1);
  if (!r10.fits_sint_p() || !r01.fits_sint_p())
    fail(errc::invalid_input, "wedge ranks exceed the bundle-data range");
  HiggsData h;
  h.label = entry.rep.label;
  h.p10.rank = static_cast<int>(r10.get_si());
  h.p10.c1 = ChernVector{{c}};
  h.p01.rank = static_cast<int>(r01.get_si());
  h.p01.c1 = ChernVector{{-c}};
  h.support = {0};
  h.unitary = false;
  entry.higgs = std::move(h);
  return entry;
}

bool is_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1) return false;
    if (i > 0 && lambda[i] > lambda[i - 1]) return false;
  }
  return true;
}

Partition conjugate_partition(const Partition& lambda) {
  Partition out;
  if (lambda.empty()) return out;
  for (int col = 1; col <= lambda[0]; ++col) {
    int rows = 0;
    for (int part : lambda)
      if (part >= col) ++rows;
    out.push_back(rows);
  }
  return out;
}

Int schur_dim(const Partition& lambda, int d) {
  if (!is_partition(lambda)) fail(errc::invalid_input, "not a partition");
  if (d < 0) fail(errc::invalid_input, "negative dimension");
  if (static_cast<int>(lambda.size()) > d) return 0;
  // Hook content formula: product over cells of (d + content) / hook length.
  Partition conj = conjugate_partition(lambda);
  Int num(1), den(1);
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      num *= Int(d + j - i);
      int hook = (lambda[i] - j) + (conj[j] - i) - 1;
      den *= Int(hook);
    }
  }
  return num / den; // exact by the formula
}

std::vector<std::pair<Partition, Partition>> cauchy_wedge(int r, int n) {
  if (n < 1) fail(errc::invalid_input, "cauchy_wedge needs n >= 1");
  if (r < 0 || r > 2 * n) fail(errc::out_of_range, "wedge degree must lie in [0, 2n]");
  std::vector<std::pair<Partition, Partition>> out;
  // Partitions of r with at most two rows and at most n columns; the second
  // space takes the conjugate shape.
  for (int first = r; first * 2 >= r; --first) {
    int second = r - first;
    if (first > n || second > first) continue;
    Partition lambda;
    if (first > 0) lambda.push_back(first);
    if (second > 0) lambda.push_back(second);
    out.emplace_back(lambda, conjugate_partition(lambda));
  }
  return out;
}

DiophantineSolutions diophantine_solutions(long l, long sigma) {
  if (l < 1 || sigma < 1 || sigma > l)
    fail(errc::invalid_input, "diophantine search needs 1 <= sigma <= l");
  DiophantineSolutions out;
  out.l = l;
  out.sigma = sigma;
  if (sigma == l) {
    // l' (l(n+1) - sigma n) = sigma l n degenerates to l' = l n: one solution
    // for every n.
    out.parametric = true;
    return out;
  }
  // Rearranging sigma = l l' (n+1) / ((l+l') n) gives
  //   l' = sigma l n / (g n + l)   with g = l - sigma >= 1,
  // and multiplying out,
  //   (g n + l)(sigma l - g l') = sigma l^2.
  // Both factors on the left are positive integers, so g n + l divides
  // sigma l^2; in particular n <= (sigma l^2 - l) / g.
  long g = l - sigma;
  Int bound = (Int(sigma) * l * l - l) / g;
  if (bound > 50000000) fail(errc::invalid_input, "diophantine search bound too large");
  out.n_bound = bound.get_si();
  for (long n = 1; n <= out.n_bound; ++n) {
    Int den = Int(g) * n + l;
    Int num = Int(sigma) * l * n;
    if (num % den != 0) continue;
    out.pairs.emplace_back(Int(num / den).get_si(), n);
  }
  // Re-verify each candidate against the original equation.
  for (auto [lp, n] : out.pairs) {
    Rat check = Rat(l) * Rat(lp) * Rat(n + 1) / (Rat(l + lp) * Rat(n));
    if (check != sigma) fail(errc::invalid_input, "diophantine re-verification failed");
  }
  return out;
}

const char* low_rank_verdict_str(LowRankVerdict v) {
  switch (v) {
    case LowRankVerdict::forced: return "forced";
    case LowRankVerdict::open: return "open";
    case LowRankVerdict::not_covered: return "not-covered";
  }
  return "?";
}

LowRankVerdict low_rank_verdict(long l, long lp, long n) {
  if (l < 1 || lp < 1 || n < 1) fail(errc::invalid_input, "verdict needs l, l', n >= 1");
  if (l > lp) std::swap(l, lp); // the condition is symmetric in (l, l')
  if (n == 1) return LowRankVerdict::forced;
  if (lp == n * l) return LowRankVerdict::forced;
  if (n >= 3 && l <= 3) return LowRankVerdict::forced;
  if (n == 2 && l <= 3 && lp != 5) return LowRankVerdict::forced;
  if (n == 2 && l == 3 && lp == 5) return LowRankVerdict::open;
  return LowRankVerdict::not_covered;
}

} // namespace kuga
