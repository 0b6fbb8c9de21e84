#pragma once

#include <map>
#include <vector>

#include "kuga/rational.hpp"

namespace kuga {

// Trichotomy for a stable direct factor of the log-cotangent bundle:
//   A — invertible (rank one),
//   B — every symmetric power stable,
//   C — some symmetric power unstable.
enum class FactorType { A, B, C };

char factor_type_char(FactorType t);
FactorType factor_type_from_char(char c);

// The decomposition of the log-cotangent bundle into stable factors,
// recorded by ranks and types only. Factor indices are 0-based in code and
// 1-based in every file format and report.
struct FactorProfile {
  std::vector<int> dims;
  std::vector<FactorType> types;
  // For a type-B factor i, the ratio c2(F_i).H / c1(F_i)^2.H against the fixed
  // top classes. The calculus has no geometric input, so the caller supplies it.
  std::map<int, Rat> c2_ratios;

  int factor_count() const { return static_cast<int>(dims.size()); }
  int total_dim() const;

  // Enforces: at least one factor, every rank >= 1, and type A exactly for
  // the rank-one factors.
  void validate() const;
};

// A first Chern class expanded in the basis c1(F_1), .., c1(F_s) of the
// profile's factors. The class of the log-canonical polarization is the
// all-ones vector (the determinants of the factors multiply out to it).
struct ChernVector {
  std::vector<Rat> coeffs;

  static ChernVector zero(int s);
  static ChernVector unit(int s, int i);
  static ChernVector ones(int s);

  int size() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;

  ChernVector operator+(const ChernVector& o) const;
  ChernVector operator-() const;
  ChernVector scaled(const Rat& a) const;
  bool operator==(const ChernVector& o) const = default;
};

// The rank / first-Chern-class shadow of a torsion free sheaf; the unit all
// slope computations act on.
struct SheafClass {
  int rank = 1;
  ChernVector c1;
};

// Homogeneous rational polynomial in the classes x_1..x_s, kept as a monomial
// map. Only used to feed top_intersection linearly.
class ClassPolynomial {
public:
  ClassPolynomial() = default;
  static ClassPolynomial linear(const ChernVector& v);

  void add_term(std::vector<int> exponents, const Rat& coeff);
  ClassPolynomial operator+(const ClassPolynomial& o) const;
  ClassPolynomial operator*(const ClassPolynomial& o) const;
  ClassPolynomial pow(int e) const;

  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

private:
  std::map<std::vector<int>, Rat> terms_;
};

// Top intersection number of x_1^{e_1}..x_s^{e_s} under the normalization
// x_1^{n_1}..x_s^{n_s} := 1. Any exponent above the factor rank kills the
// monomial (the classes are numerically trivial in higher powers), so the
// value is 1 for the exponent tuple equal to dims and 0 for every other
// tuple of total degree n.
Rat top_intersection(const FactorProfile& profile, const std::vector<int>& exponents);

// Linear extension of top_intersection to a homogeneous degree-n polynomial.
Rat evaluate_monomial_sum(const FactorProfile& profile, const ClassPolynomial& poly);

// mu(F) = c1(F).c1(omega)^{n-1} / rk(F) under the normalization above.
Rat slope(const FactorProfile& profile, const SheafClass& f);

// The summand of mu(F) supported on factor iota, scaled so that the component
// slopes add up to slope() exactly. See the weight derivation in chow.cpp.
Rat component_slope(const FactorProfile& profile, const SheafClass& f, int iota);

// mu + eps * mu_iota; eps = 0 recovers slope().
Rat perturbed_slope(const FactorProfile& profile, const SheafClass& f, int iota, const Rat& eps);

// Chern-number criterion for a type-B factor to be a ball factor:
// 2(n_i+1) c2 = n_i c1^2 against the fixed top classes, evaluated through the
// caller-supplied c2 ratio.
bool yau_ball_test(const FactorProfile& profile, int i);

// mu(F_i) for a single factor; the same rational for every i.
Rat factor_slope(const FactorProfile& profile, int i);

// mu of the full log-cotangent class (rank n, all-ones c1). Coincides with
// factor_slope for every factor.
Rat log_cotangent_slope(const FactorProfile& profile);

} // namespace kuga
