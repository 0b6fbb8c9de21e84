#include "kuga/chow.hpp"

#include <algorithm>
#include <numeric>

namespace kuga {

char factor_type_char(FactorType t) {
  switch (t) {
    case FactorType::A: return 'A';
    case FactorType::B: return 'B';
    case FactorType::C: return 'C';
  }
  return '?';
}

FactorType factor_type_from_char(char c) {
  switch (c) {
    case 'A': return FactorType::A;
    case 'B': return FactorType::B;
    case 'C': return FactorType::C;
  }
  fail(errc::parse, std::string("unknown factor type '") + c + "'");
}

int FactorProfile::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

void FactorProfile::validate() const {
  if (dims.empty()) fail(errc::invalid_input, "profile needs at least one factor");
  if (types.size() != dims.size())
    fail(errc::invalid_input, "profile types/dims length mismatch");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 1) fail(errc::invalid_input, "factor rank must be positive");
    bool rank_one = dims[i] == 1;
    bool type_a = types[i] == FactorType::A;
    if (rank_one != type_a)
      fail(errc::invalid_input, "type A factors are exactly the rank-one factors");
  }
  for (const auto& [i, ratio] : c2_ratios) {
    if (i < 0 || i >= factor_count())
      fail(errc::invalid_input, "c2 ratio index out of range");
    (void)ratio;
  }
}

ChernVector ChernVector::zero(int s) { return ChernVector{std::vector<Rat>(s, Rat(0))}; }

ChernVector ChernVector::unit(int s, int i) {
  ChernVector v = zero(s);
  v.coeffs.at(i) = 1;
  return v;
}

ChernVector ChernVector::ones(int s) { return ChernVector{std::vector<Rat>(s, Rat(1))}; }

bool ChernVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& a) { return a == 0; });
}

ChernVector ChernVector::operator+(const ChernVector& o) const {
  if (coeffs.size() != o.coeffs.size())
    fail(errc::invalid_input, "chern vector length mismatch");
  ChernVector r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

ChernVector ChernVector::operator-() const {
  ChernVector r = *this;
  for (auto& a : r.coeffs) a = -a;
  return r;
}

ChernVector ChernVector::scaled(const Rat& a) const {
  ChernVector r = *this;
  for (auto& x : r.coeffs) x *= a;
  return r;
}

ClassPolynomial ClassPolynomial::linear(const ChernVector& v) {
  ClassPolynomial p;
  for (int i = 0; i < v.size(); ++i) {
    if (v.coeffs[i] == 0) continue;
    std::vector<int> e(v.size(), 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), v.coeffs[i]);
  }
  return p;
}

void ClassPolynomial::add_term(std::vector<int> exponents, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(exponents), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassPolynomial ClassPolynomial::operator+(const ClassPolynomial& o) const {
  ClassPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ClassPolynomial ClassPolynomial::operator*(const ClassPolynomial& o) const {
  ClassPolynomial r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      // The constant 1 from pow() carries an empty exponent tuple; pad it.
      if (!ea.empty() && !eb.empty() && ea.size() != eb.size())
        fail(errc::invalid_input, "polynomial variable count mismatch");
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

ClassPolynomial ClassPolynomial::pow(int e) const {
  if (e < 0) fail(errc::invalid_input, "negative polynomial power");
  bool linear_form = !terms_.empty();
  for (const auto& [exps, c] : terms_) {
    (void)c;
    if (std::accumulate(exps.begin(), exps.end(), 0) != 1) {
      linear_form = false;
      break;
    }
  }
  if (linear_form && e >= 2) {
    // Powers of linear forms expand multinomially; enumerating the
    // compositions of e directly avoids the intermediate products.
    std::vector<std::pair<std::vector<int>, Rat>> base(terms_.begin(), terms_.end());
    ClassPolynomial r;
    std::vector<int> parts(base.size(), 0);
    auto rec = [&](auto self, std::size_t i, int left) -> void {
      if (i + 1 == base.size()) {
        parts[i] = left;
        Int coeff = factorial(e);
        Rat value(1);
        for (std::size_t j = 0; j < base.size(); ++j) {
          coeff /= factorial(parts[j]);
          Rat p(1);
          for (int k = 0; k < parts[j]; ++k) p *= base[j].second;
          value *= p;
        }
        std::vector<int> exps(base.front().first.size(), 0);
        for (std::size_t j = 0; j < base.size(); ++j)
          for (std::size_t v = 0; v < exps.size(); ++v)
            exps[v] += parts[j] * base[j].first[v];
        r.add_term(std::move(exps), value * Rat(coeff));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        parts[i] = k;
        self(self, i + 1, left - k);
      }
    };
    rec(rec, 0, e);
    return r;
  }
  ClassPolynomial r;
  r.add_term({}, Rat(1)); // empty exponent vector: the constant 1
  ClassPolynomial base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Rat top_intersection(const FactorProfile& profile, const std::vector<int>& exponents) {
  profile.validate();
  if (static_cast<int>(exponents.size()) != profile.factor_count())
    fail(errc::invalid_input, "exponent tuple length mismatch");
  int total = 0;
  for (int e : exponents) {
    if (e < 0) fail(errc::invalid_input, "negative exponent");
    total += e;
  }
  if (total != profile.total_dim())
    fail(errc::invalid_input, "exponent degree does not match the total dimension");
  for (int i = 0; i < profile.factor_count(); ++i)
    if (exponents[i] != profile.dims[i]) return 0;
  return 1;
}

Rat evaluate_monomial_sum(const FactorProfile& profile, const ClassPolynomial& poly) {
  profile.validate();
  int n = profile.total_dim();
  Rat acc(0);
  for (const auto& [e, c] : poly.terms()) {
    // The constant-1 polynomial from pow() carries an empty exponent tuple;
    // it only shows up for n = 0 which the profile invariants exclude.
    std::vector<int> exps = e;
    if (exps.empty()) exps.assign(profile.factor_count(), 0);
    if (static_cast<int>(exps.size()) != profile.factor_count())
      fail(errc::invalid_input, "polynomial variable count mismatch");
    int deg = std::accumulate(exps.begin(), exps.end(), 0);
    if (deg != n)
      fail(errc::invalid_input, "polynomial is not homogeneous of degree n");
    acc += c * top_intersection(profile, exps);
  }
  return acc;
}

// Weight of the iota-component of the slope. Expanding
//   c1(omega)^{n-1} = (x_1 + .. + x_s)^{n-1}
// the only monomials that pair nontrivially with an x_iota are the ones with
// exponents (n_1, .., n_iota - 1, .., n_s), and the multinomial coefficient of
// that monomial is (n-1)! / (n_1! .. (n_iota - 1)! .. n_s!).
static Rat component_weight(const FactorProfile& profile, int iota) {
  int n = profile.total_dim();
  Rat w(factorial(n - 1));
  for (int j = 0; j < profile.factor_count(); ++j) {
    int d = profile.dims[j] - (j == iota ? 1 : 0);
    w /= Rat(factorial(d));
  }
  return w;
}

Rat slope(const FactorProfile& profile, const SheafClass& f) {
  profile.validate();
  if (f.rank < 1) fail(errc::invalid_input, "sheaf class rank must be positive");
  if (f.c1.size() != profile.factor_count())
    fail(errc::invalid_input, "chern vector length does not match profile");
  if (f.c1.is_zero()) return 0;
  int n = profile.total_dim();
  ClassPolynomial p = ClassPolynomial::linear(f.c1) *
                      ClassPolynomial::linear(ChernVector::ones(profile.factor_count())).pow(n - 1);
  return evaluate_monomial_sum(profile, p) / Rat(f.rank);
}

Rat component_slope(const FactorProfile& profile, const SheafClass& f, int iota) {
  profile.validate();
  if (iota < 0 || iota >= profile.factor_count())
    fail(errc::out_of_range, "factor index out of range");
  if (f.rank < 1) fail(errc::invalid_input, "sheaf class rank must be positive");
  if (f.c1.size() != profile.factor_count())
    fail(errc::invalid_input, "chern vector length does not match profile");
  return f.c1.coeffs[iota] * component_weight(profile, iota) / Rat(f.rank);
}

Rat perturbed_slope(const FactorProfile& profile, const SheafClass& f, int iota, const Rat& eps) {
  return slope(profile, f) + eps * component_slope(profile, f, iota);
}

bool yau_ball_test(const FactorProfile& profile, int i) {
  profile.validate();
  if (i < 0 || i >= profile.factor_count())
    fail(errc::out_of_range, "factor index out of range");
  if (profile.types[i] != FactorType::B)
    fail(errc::invalid_input, "ball criterion only applies to type-B factors");
  auto it = profile.c2_ratios.find(i);
  if (it == profile.c2_ratios.end())
    fail(errc::data_missing, "no c2 ratio supplied for factor");
  Rat n_i(profile.dims[i]);
  return Rat(2) * (n_i + 1) * it->second == n_i;
}

Rat factor_slope(const FactorProfile& profile, int i) {
  profile.validate();
  if (i < 0 || i >= profile.factor_count())
    fail(errc::out_of_range, "factor index out of range");
  SheafClass omega_i{profile.dims[i], ChernVector::unit(profile.factor_count(), i)};
  return slope(profile, omega_i);
}

Rat log_cotangent_slope(const FactorProfile& profile) {
  profile.validate();
  SheafClass full{profile.total_dim(), ChernVector::ones(profile.factor_count())};
  return slope(profile, full);
}

} // namespace kuga
