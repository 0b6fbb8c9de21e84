#pragma once

#include <gmpxx.h>

#include <string>

#include "kuga/errors.hpp"

namespace kuga {

// All arithmetic in the library is exact. Rationals are GMP-backed; every
// equality test in the certification pipeline is an exact comparison.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) fail(errc::invalid_input, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q" with nonzero q. Used by all file formats.
Rat parse_rat(const std::string& text);

// Canonical form: "p" when the denominator is one, "p/q" otherwise.
std::string rat_str(const Rat& q);

bool is_integral(const Rat& q);

// Floor/ceil to Int for search bounds.
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

Int binomial(long n, long k);
Int binomial(const Int& n, long k);
Int factorial(long n);

} // namespace kuga
