#pragma once

#include <vector>

#include "kuga/rational.hpp"

namespace kuga {

// Dense univariate rational polynomial in the perturbation parameter t.
// Degrees stay below the dimension bound, so no sparse representation.
class SlopePolynomial {
public:
  SlopePolynomial() = default;
  explicit SlopePolynomial(std::vector<Rat> coeffs);
  static SlopePolynomial constant(const Rat& v);

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  Rat coeff(int i) const;
  bool is_zero() const { return c_.empty(); }

  Rat eval(const Rat& t) const;

  SlopePolynomial operator+(const SlopePolynomial& o) const;
  SlopePolynomial operator-(const SlopePolynomial& o) const;
  SlopePolynomial scaled(const Rat& a) const;

  bool operator==(const SlopePolynomial& o) const { return c_ == o.c_; }

  // Order by coefficients c0, c1, ...; for distinct polynomials this matches
  // the pointwise order at every sufficiently small t > 0.
  static int lex_compare(const SlopePolynomial& a, const SlopePolynomial& b);

  std::string str() const; // "2 + 3t - t^2" style, for reports

private:
  void trim();
  std::vector<Rat> c_;
};

// Index of the lexicographically maximal polynomial; first index on exact
// duplicates. Rejects an empty list.
std::size_t lex_max(const std::vector<SlopePolynomial>& polys);

struct PositiveRootBound {
  bool has_root = false;
  bool exact = false; // value is the smallest positive root itself
  Rat value;          // the root, or a positive lower bound strictly below it
};

// Smallest positive real root of p, if any. Rational roots are found exactly
// (divisor candidates of the primitive integer form); irrational ones yield a
// certified lower bound via Sturm counts and bisection: p has no root in
// (0, value].
PositiveRootBound smallest_positive_root(const SlopePolynomial& p);

} // namespace kuga
