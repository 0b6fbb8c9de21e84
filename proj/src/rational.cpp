#include "kuga/rational.hpp"

#include <cctype>

namespace kuga {

Rat parse_rat(const std::string& text) {
  if (text.empty()) fail(errc::parse, "empty rational literal");
  // mpq_set_str accepts whitespace and bases we do not want; pre-validate.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (text[i] == '-' || text[i] == '+') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) fail(errc::parse, "malformed rational '" + text + "'");
  if (num_end != text.size()) {
    if (text[num_end] != '/') fail(errc::parse, "malformed rational '" + text + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size())
      fail(errc::parse, "malformed rational '" + text + "'");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    fail(errc::parse, "malformed rational '" + text + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    fail(errc::parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool is_integral(const Rat& q) { return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0; }

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int binomial(const Int& n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  if (n < 0) fail(errc::invalid_input, "factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

} // namespace kuga
