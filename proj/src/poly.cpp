#include "kuga/poly.hpp"

#include <algorithm>

namespace kuga {

SlopePolynomial::SlopePolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

SlopePolynomial SlopePolynomial::constant(const Rat& v) {
  return SlopePolynomial(std::vector<Rat>{v});
}

void SlopePolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat SlopePolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rat SlopePolynomial::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

SlopePolynomial SlopePolynomial::operator+(const SlopePolynomial& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return SlopePolynomial(std::move(r));
}

SlopePolynomial SlopePolynomial::operator-(const SlopePolynomial& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return SlopePolynomial(std::move(r));
}

SlopePolynomial SlopePolynomial::scaled(const Rat& a) const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= a;
  return SlopePolynomial(std::move(r));
}

int SlopePolynomial::lex_compare(const SlopePolynomial& a, const SlopePolynomial& b) {
  std::size_t len = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < len; ++i) {
    Rat ca = i < a.c_.size() ? a.c_[i] : Rat(0);
    Rat cb = i < b.c_.size() ? b.c_[i] : Rat(0);
    if (ca < cb) return -1;
    if (ca > cb) return 1;
  }
  return 0;
}

std::string SlopePolynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (!out.empty()) {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    bool unit = a == 1 && i > 0;
    if (!unit) out += rat_str(a);
    if (i == 1) out += unit ? "t" : "*t";
    else if (i > 1) out += (unit ? "t^" : "*t^") + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::size_t lex_max(const std::vector<SlopePolynomial>& polys) {
  if (polys.empty()) fail(errc::invalid_input, "lex_max on empty list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < polys.size(); ++i)
    if (SlopePolynomial::lex_compare(polys[i], polys[best]) > 0) best = i;
  return best;
}

namespace {

// Root counting works on primitive integer polynomials; only signs matter,
// so every remainder in the Sturm chain is rescaled back to primitive form.
using QPoly = std::vector<Rat>;

QPoly qtrim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly to_primitive(const QPoly& p) {
  Int lcm(1);
  for (const Rat& c : p) {
    Int den(mpq_denref(c.get_mpq_t()));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  Int content(0);
  std::vector<Int> zs;
  for (const Rat& c : p) {
    Rat scaled = c * Rat(lcm);
    Int z(mpq_numref(scaled.get_mpq_t()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    zs.push_back(std::move(z));
  }
  QPoly out;
  out.reserve(zs.size());
  for (Int& z : zs) {
    if (content > 1) z /= content;
    out.emplace_back(Rat(std::move(z)));
  }
  return qtrim(std::move(out));
}

Rat qeval(const QPoly& p, const Rat& t) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly qrem(QPoly a, const QPoly& b) {
  while (!a.empty() && a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = qtrim(std::move(a));
  }
  return a;
}

QPoly qdiv_exact(QPoly a, const QPoly& b) {
  QPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (!a.empty() && a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    quot[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = qtrim(std::move(a));
  }
  return qtrim(std::move(quot));
}

QPoly qderiv(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  return d;
}

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(to_primitive(p));
  QPoly d = to_primitive(qderiv(chain[0]));
  if (d.empty()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    QPoly r = qrem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(to_primitive(std::move(r)));
  }
  return chain;
}

int sign_changes(const std::vector<QPoly>& chain, const Rat& x) {
  int changes = 0;
  int last = 0;
  for (const QPoly& p : chain) {
    int s = sgn(qeval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Distinct real roots in (a, b]; requires a squarefree chain head.
int roots_in(const std::vector<QPoly>& chain, const Rat& a, const Rat& b) {
  return sign_changes(chain, a) - sign_changes(chain, b);
}

// Positive divisors of |z|, capped; empty means "give up on exact candidates".
std::vector<Int> small_divisors(Int z, std::size_t cap) {
  if (z < 0) z = -z;
  std::vector<Int> out;
  if (z == 0 || z > Int(100000000)) return out;
  unsigned long v = z.get_ui();
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
      if (out.size() > cap) return {};
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

PositiveRootBound smallest_positive_root(const SlopePolynomial& p) {
  QPoly q = to_primitive(qtrim(p.coeffs()));
  // Powers of t only contribute the root 0.
  std::size_t shift = 0;
  while (shift < q.size() && q[shift] == 0) ++shift;
  q.erase(q.begin(), q.begin() + shift);
  if (q.size() < 2) return {};

  // Linear crossings dominate in practice; solve them directly.
  if (q.size() == 2) {
    Rat root = -q[0] / q[1];
    if (root > 0) return {true, true, root};
    return {};
  }

  // Squarefree part so that Sturm counting is valid.
  {
    std::vector<QPoly> pre = sturm_chain(q);
    const QPoly& g = pre.back();
    if (g.size() > 1) q = to_primitive(qdiv_exact(q, g));
  }
  std::vector<QPoly> chain = sturm_chain(q);

  // Cauchy bounds: every root r satisfies lower < |r| < upper with
  //   upper = 1 + max |a_i| / |a_d|,  lower = |a_0| / (|a_0| + max_{i>0} |a_i|).
  Rat lead = abs(q.back());
  Rat a0 = abs(q.front());
  Rat maxabs(0), maxabs_tail(0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rat a = abs(q[i]);
    if (i + 1 < q.size() && a > maxabs) maxabs = a;
    if (i > 0 && a > maxabs_tail) maxabs_tail = a;
  }
  Rat upper = Rat(1) + maxabs / lead;
  Rat lower = a0 / (a0 + maxabs_tail);

  if (roots_in(chain, Rat(0), upper) == 0) return {};

  // Exact rational candidates num/den with num | a_0, den | a_d.
  Int a0_int(mpq_numref(q.front().get_mpq_t()));
  Int ad_int(mpq_numref(q.back().get_mpq_t()));
  std::vector<Int> nums = small_divisors(a0_int, 64);
  std::vector<Int> dens = small_divisors(ad_int, 64);
  if (!nums.empty() && !dens.empty()) {
    bool found = false;
    Rat best;
    for (const Int& num : nums) {
      for (const Int& den : dens) {
        Rat cand = Rat(num) / Rat(den);
        if (qeval(q, cand) != 0) continue;
        if (!found || cand < best) {
          best = cand;
          found = true;
        }
      }
    }
    // The candidate wins only if no (necessarily irrational) root is smaller.
    if (found && roots_in(chain, Rat(0), best) == 1) return {true, true, best};
  }

  // Bisection on (lo, hi]: no roots in (0, lo], at least one in (lo, hi].
  Rat lo = lower, hi = upper;
  for (int iter = 0; iter < 64; ++iter) {
    Rat mid = (lo + hi) / 2;
    if (qeval(q, mid) == 0) {
      if (roots_in(chain, Rat(0), mid) == 1) return {true, true, mid};
      hi = mid;
      continue;
    }
    if (roots_in(chain, Rat(0), mid) == 0) lo = mid;
    else hi = mid;
    if (hi - lo < lo / 4) break;
  }
  return {true, false, lo};
}

} // namespace kuga
