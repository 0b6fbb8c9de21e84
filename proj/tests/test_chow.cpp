#include <doctest.h>

#include <random>

#include "kuga/chow.hpp"

using namespace kuga;

namespace {

FactorProfile make_profile(std::vector<int> dims) {
  FactorProfile p;
  for (int d : dims) p.types.push_back(d == 1 ? FactorType::A : FactorType::B);
  p.dims = std::move(dims);
  return p;
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

TEST_CASE("profile invariants") {
  CHECK_THROWS_AS(FactorProfile{}.validate(), Error);
  FactorProfile bad = make_profile({2, 1});
  bad.types = {FactorType::A, FactorType::A}; // rank-2 factor cannot be type A
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.types = {FactorType::B, FactorType::B}; // rank-1 factor must be type A
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK_NOTHROW(make_profile({2, 1}).validate());
}

TEST_CASE("top intersection vanishes away from the rank tuple") {
  FactorProfile p = make_profile({2, 3});
  CHECK(top_intersection(p, {2, 3}) == 1);
  CHECK(top_intersection(p, {3, 2}) == 0);
  CHECK(top_intersection(p, {0, 5}) == 0);
  CHECK_THROWS_AS(top_intersection(p, {2, 2}), Error);
  CHECK_THROWS_AS(top_intersection(p, {2}), Error);

  FactorProfile q = make_profile({1, 1});
  CHECK(top_intersection(q, {1, 1}) == 1);
  CHECK(top_intersection(q, {2, 0}) == 0);

  // Exhaustive: nonzero exactly once among all degree-n exponent tuples.
  int hits = 0;
  for (int a = 0; a <= 5; ++a) {
    int b = 5 - a;
    if (top_intersection(p, {a, b}) != 0) ++hits;
  }
  CHECK(hits == 1);
}

TEST_CASE("monomial sums evaluate multinomially") {
  FactorProfile two_lines = make_profile({1, 1});
  ClassPolynomial omega = ClassPolynomial::linear(ChernVector::ones(2));
  CHECK(evaluate_monomial_sum(two_lines, omega.pow(2)) == 2);

  FactorProfile plane = make_profile({2});
  ClassPolynomial x = ClassPolynomial::linear(ChernVector::ones(1));
  CHECK(evaluate_monomial_sum(plane, x.pow(2)) == 1);

  FactorProfile mixed = make_profile({1, 2});
  ClassPolynomial w = ClassPolynomial::linear(ChernVector::ones(2));
  CHECK(evaluate_monomial_sum(mixed, w.pow(3)) == 3);

  // Non-homogeneous input is rejected.
  ClassPolynomial junk = w.pow(3) + w;
  CHECK_THROWS_AS(evaluate_monomial_sum(mixed, junk), Error);
}

TEST_CASE("slope basics") {
  // Oracle route: expand c1(F) c1(omega)^{n-1} through evaluate_monomial_sum
  // and divide by the rank.
  auto slope_by_expansion = [](const FactorProfile& p, const SheafClass& f) -> Rat {
    ClassPolynomial expanded =
        ClassPolynomial::linear(f.c1) *
        ClassPolynomial::linear(ChernVector::ones(p.factor_count())).pow(p.total_dim() - 1);
    return evaluate_monomial_sum(p, expanded) / Rat(f.rank);
  };

  FactorProfile plane = make_profile({2});
  SheafClass omega1{2, ChernVector::ones(1)};
  CHECK(slope(plane, omega1) == slope_by_expansion(plane, omega1));
  CHECK(slope(plane, omega1) == rat(1, 2)); // x.x = x^2 = 1 over rank 2

  // Two rank-one factors: c1(Omega^1).c1(omega) = (x1+x2)^2 = 2 over rank 2.
  FactorProfile two_lines = make_profile({1, 1});
  SheafClass full{2, ChernVector::ones(2)};
  CHECK(slope(two_lines, full) == 1);
  CHECK(slope(two_lines, full) == slope_by_expansion(two_lines, full));

  SheafClass zero{5, ChernVector::zero(1)};
  CHECK(slope(plane, zero) == 0);

  // mu(omega) = n mu(Omega^1) across dimensions.
  for (int n = 1; n <= 6; ++n) {
    FactorProfile p = make_profile({n});
    SheafClass omega{1, ChernVector::ones(1)};
    CHECK(slope(p, omega) == Rat(n) * log_cotangent_slope(p));
  }
}

TEST_CASE("factor slopes coincide") {
  for (auto dims : {std::vector<int>{1, 2}, {2, 3}, {1, 1, 3}, {2, 2, 2, 1}}) {
    FactorProfile p = make_profile(dims);
    Rat common = log_cotangent_slope(p);
    for (int i = 0; i < p.factor_count(); ++i) CHECK(factor_slope(p, i) == common);
  }
}

TEST_CASE("component slopes decompose the slope") {
  FactorProfile p = make_profile({1, 1});
  SheafClass f{1, ChernVector::unit(2, 0)};
  CHECK(component_slope(p, f, 0) == slope(p, f));
  CHECK(component_slope(p, f, 1) == 0);
  CHECK_THROWS_AS(component_slope(p, f, 2), Error);

  // component_slope(Omega_i, iota) is nonzero exactly for iota = i.
  for (auto dims : {std::vector<int>{1, 2}, {2, 3}, {1, 1, 3}, {2, 1, 2}}) {
    FactorProfile q = make_profile(dims);
    for (int i = 0; i < q.factor_count(); ++i) {
      SheafClass omega_i{q.dims[i], ChernVector::unit(q.factor_count(), i)};
      for (int iota = 0; iota < q.factor_count(); ++iota)
        CHECK((component_slope(q, omega_i, iota) != 0) == (iota == i));
    }
  }
}

TEST_CASE("additivity on random classes") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 400; ++trial) {
    int s = static_cast<int>(draw(rng, 1, 4));
    std::vector<int> dims;
    int total = 0;
    for (int i = 0; i < s; ++i) {
      int d = static_cast<int>(draw(rng, 1, 3));
      if (total + d > 8) d = 1;
      dims.push_back(d);
      total += d;
    }
    FactorProfile p = make_profile(dims);
    SheafClass f;
    f.rank = static_cast<int>(draw(rng, 1, 9));
    for (int i = 0; i < s; ++i)
      f.c1.coeffs.push_back(rat(draw(rng, -40, 40), draw(rng, 1, 7)));
    Rat total_slope = slope(p, f);
    Rat sum(0);
    for (int iota = 0; iota < s; ++iota) sum += component_slope(p, f, iota);
    CHECK(sum == total_slope);

    // Linearity of the slope in c1.
    Rat alpha = rat(draw(rng, -12, 12), draw(rng, 1, 5));
    SheafClass scaled{f.rank, f.c1.scaled(alpha)};
    CHECK(slope(p, scaled) == alpha * total_slope);
  }
}

TEST_CASE("perturbed slope") {
  FactorProfile p = make_profile({1, 2});
  SheafClass f{3, ChernVector{{rat(1, 2), rat(-2, 3)}}};
  CHECK(perturbed_slope(p, f, 0, Rat(0)) == slope(p, f));
  for (int i = 0; i < 2; ++i) {
    SheafClass omega_i{p.dims[i], ChernVector::unit(2, i)};
    Rat eps = rat(3, 7);
    CHECK(perturbed_slope(p, omega_i, i, eps) ==
          slope(p, omega_i) + eps * component_slope(p, omega_i, i));
    // Twisting along the other factor leaves factor slopes unchanged.
    int other = 1 - i;
    CHECK(perturbed_slope(p, omega_i, other, eps) == slope(p, omega_i));
  }
}

TEST_CASE("ball criterion") {
  for (int n = 2; n <= 10; ++n) {
    FactorProfile p = make_profile({n});
    p.c2_ratios[0] = Rat(n) / Rat(2 * (n + 1));
    CHECK(yau_ball_test(p, 0));
    p.c2_ratios[0] += 1;
    CHECK_FALSE(yau_ball_test(p, 0));
    p.c2_ratios[0] = Rat(n) / Rat(2 * (n + 1)) + Rat(1, 1000000);
    CHECK_FALSE(yau_ball_test(p, 0));
  }
  FactorProfile p = make_profile({2});
  p.c2_ratios[0] = rat(1, 3);
  CHECK(yau_ball_test(p, 0)); // 2 * 3 * (1/3) = 2 = n

  FactorProfile missing = make_profile({2});
  CHECK_THROWS_AS(yau_ball_test(missing, 0), Error);
  FactorProfile wrong_type = make_profile({1});
  CHECK_THROWS_AS(yau_ball_test(wrong_type, 0), Error);
}
