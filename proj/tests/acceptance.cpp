// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cli_runner.hpp"
#include "kuga/higgs.hpp"
#include "kuga/json_io.hpp"
#include "kuga/random_lattice.hpp"
#include "kuga/repcat.hpp"

using namespace kuga;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

// Value-greedy filtration at a fixed epsilon; the oracle for criterion 4.
// Fails if any step's (value, rank) argmax is ambiguous.
std::vector<int> greedy_chain_at(const SubobjectLattice& L, const Rat& eps) {
  std::vector<int> chain;
  int cur = -1;
  while (chain.empty() || chain.back() != L.top()) {
    int best = -1, best_rank = -1, ties = 0;
    Rat best_val;
    for (const LatticeNode& n : L.nodes()) {
      if (cur >= 0 && (!L.lt(cur, n.id) || L.node(cur).rank >= n.rank)) continue;
      Rat v = cur < 0 ? L.slope_poly(n.id).eval(eps)
                      : L.quotient_slope_poly(cur, n.id).eval(eps);
      if (best < 0 || v > best_val) {
        best = n.id;
        best_val = v;
        best_rank = n.rank;
        ties = 1;
      } else if (v == best_val) {
        if (n.rank > best_rank) {
          best = n.id;
          best_rank = n.rank;
          ties = 1;
        } else if (n.rank == best_rank) {
          ++ties;
        }
      }
    }
    expect(best >= 0, "greedy step found no candidate");
    expect(ties == 1, "greedy step is ambiguous: filtration not unique");
    chain.push_back(best);
    cur = best;
  }
  return chain;
}

void criterion1() {
  DiophantineSolutions s = diophantine_solutions(3, 2);
  expect(!s.parametric, "solution set should be finite");
  expect(s.pairs.size() == 3, "expected exactly three solutions");
  expect(s.pairs[0] == std::pair<long, long>(3, 3), "missing (3, 3)");
  expect(s.pairs[1] == std::pair<long, long>(4, 6), "missing (4, 6)");
  expect(s.pairs[2] == std::pair<long, long>(5, 15), "missing (5, 15)");
  // The rank obstruction at m = 2 removes the last two: 21 > 18, 120 > 30.
  expect(binomial(6 + 1, 2) == 21 && binomial(3, 2) * binomial(4, 2) == 18,
         "rank counts for (4, 6)");
  expect(theta_injectivity_obstruction(3, 4, 6, 2), "(4, 6) must be obstructed");
  expect(binomial(15 + 1, 2) == 120 && binomial(3, 2) * binomial(5, 2) == 30,
         "rank counts for (5, 15)");
  expect(theta_injectivity_obstruction(3, 5, 15, 2), "(5, 15) must be obstructed");
  expect(!theta_injectivity_obstruction(3, 3, 3, 2), "(3, 3) must survive");
}

void criterion2() {
  int cases = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      Su1nWedge w = su1n_wedge_entry(n, k);
      expect(arakelov_defect(w.profile, w.higgs) == 0,
             "defect nonzero at n=" + std::to_string(n) + " k=" + std::to_string(k));
      long l = w.higgs.p10.rank, lp = w.higgs.p01.rank;
      Rat bound = length_bound(l, lp, n);
      expect(is_integral(bound), "length bound must be integral");
      expect(bound == Rat(*w.rep.predicted_length), "length bound mismatch");
      expect(degree_sum(l, lp, n, rat_floor(bound).get_si()) == 0,
             "degree sum must vanish at the bound");
      ++cases;
    }
  }
  expect(cases == 36, "expected 36 wedge cases");
}

void criterion3() {
  long cases = 0;
  for (long l = 1; l <= 12; ++l)
    for (long lp = 1; lp <= 12; ++lp)
      for (long n = 1; n <= 10; ++n)
        for (long sigma = 0; sigma <= std::min(l, lp); ++sigma) {
          if (degree_sum(l, lp, n, sigma) != degree_sum_closed(l, lp, n, sigma))
            throw Failure{"degree sum mismatch at (" + std::to_string(l) + "," +
                          std::to_string(lp) + "," + std::to_string(n) + "," +
                          std::to_string(sigma) + ")"};
          ++cases;
        }
  // Full grid: 10 * sum over l, lp of (min(l, lp) + 1) = 7940 cases.
  expect(cases == 7940, "grid size changed");
}

void criterion4() {
  int built = 0;
  for (std::uint64_t seed = 1; built < 500; ++seed) {
    SubobjectLattice L = random_coherent_lattice(seed, 20);
    ++built;
    Outcome<FiltrationResult> r = hn_filtration(L);
    expect(is_ok(r), "filtration diagnostic on a generated lattice");
    const FiltrationResult& f = value(r);
    expect(greedy_chain_at(L, f.epsilon0 / 2) == f.chain,
           "filtration differs from the value oracle at epsilon0/2");
    for (int k = 1; k <= 10; ++k) {
      Rat eps = f.epsilon0 * Rat(k) / Rat(10);
      expect(greedy_chain_at(L, eps) == f.chain,
             "filtration is epsilon-dependent at sample " + std::to_string(k));
    }
  }
}

void criterion5() {
  std::mt19937_64 rng(20260810);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    int s = static_cast<int>(draw(1, 4));
    FactorProfile p;
    for (int i = 0; i < s; ++i) {
      int d = static_cast<int>(draw(1, 3));
      p.dims.push_back(d);
      p.types.push_back(d == 1 ? FactorType::A : FactorType::B);
    }
    SheafClass f;
    f.rank = static_cast<int>(draw(1, 9));
    for (int i = 0; i < s; ++i)
      f.c1.coeffs.push_back(rat(draw(-40, 40), draw(1, 7)));
    Rat sum(0);
    for (int iota = 0; iota < s; ++iota) sum += component_slope(p, f, iota);
    expect(sum == slope(p, f), "component slopes do not add up");
  }
  // All profiles with s <= 4 factors of rank <= 4: factor classes pair
  // nontrivially with their own component only.
  std::function<void(std::vector<int>&)> scan = [&](std::vector<int>& dims) {
    if (!dims.empty()) {
      FactorProfile p;
      p.dims = dims;
      for (int d : dims) p.types.push_back(d == 1 ? FactorType::A : FactorType::B);
      for (int i = 0; i < p.factor_count(); ++i) {
        SheafClass omega_i{p.dims[i], ChernVector::unit(p.factor_count(), i)};
        for (int iota = 0; iota < p.factor_count(); ++iota)
          expect((component_slope(p, omega_i, iota) != 0) == (iota == i),
                 "component support of a factor class is wrong");
      }
    }
    if (dims.size() == 4) return;
    for (int d = 1; d <= 4; ++d) {
      dims.push_back(d);
      scan(dims);
      dims.pop_back();
    }
  };
  std::vector<int> dims;
  scan(dims);
}

void criterion6() {
  for (int n = 1; n <= 12; ++n) {
    auto [without, with] = spin_weight_spaces(n);
    Int half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    expect(without == half && with == half, "spin weight spaces are not 2^(n-1)");
  }
  for (int p = 1; p <= 8; ++p) {
    auto reps = admissible_reps(DomainFactor::a(p, 1));
    expect(static_cast<int>(reps.size()) == p, "a(p,1) catalogue size");
    for (int j = 1; j <= p; ++j) {
      expect(reps[j - 1].l == binomial(p, j), "a(p,1) first weight space");
      expect(reps[j - 1].lp == binomial(p, j - 1), "a(p,1) second weight space");
    }
  }
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= 2 * n; ++r) {
      Int sum(0);
      for (const auto& [lambda, conj] : cauchy_wedge(r, n))
        sum += schur_dim(lambda, 2) * schur_dim(conj, n);
      expect(sum == binomial(2 * n, r), "wedge rank identity fails");
    }
}

void criterion7() {
  for (int n = 2; n <= 10; ++n) {
    FactorProfile p;
    p.dims = {n};
    p.types = {FactorType::B};
    p.c2_ratios[0] = Rat(n) / Rat(2 * (n + 1));
    expect(yau_ball_test(p, 0), "exact ratio must pass");
    for (long num : {1L, -1L, 7L}) {
      FactorProfile q = p;
      q.c2_ratios[0] += rat(num, 1000);
      expect(!yau_ball_test(q, 0), "perturbed ratio must fail");
    }
  }
}

void criterion8() {
  using kuga_test::fixture;
  using kuga_test::run_cli;
  auto ball = run_cli("certify " + fixture("ball_su1n.json"));
  expect(ball.exit_code == 0, "ball fixture must certify with exit 0");
  expect(ball.output == read_file(fixture("golden/certify_ball.txt")),
         "ball certificate differs from the golden output");
  auto excluded = run_cli("certify " + fixture("ex86_excluded.json"));
  expect(excluded.exit_code == 1, "excluded fixture must exit 1");
  expect(excluded.output.find("condition 2") != std::string::npos,
         "failure must name condition 2");
  expect(excluded.output == read_file(fixture("golden/certify_ex86.txt")),
         "excluded certificate differs from the golden output");
}

} // namespace

int main() {
  struct Criterion {
    int number;
    const char* what;
    long budget_ms;
    std::function<void()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "diophantine solutions and rank obstruction", 1000, criterion1},
      {2, "wedge families: defect, degree sum, integral bound", 1000, criterion2},
      {3, "degree sum equals its closed form on the full grid", 5000, criterion3},
      {4, "filtrations match the value oracle on 500 random lattices", 30000, criterion4},
      {5, "component slopes decompose the slope", 2000, criterion5},
      {6, "weight-space tables and wedge rank identity", 2000, criterion6},
      {7, "ball criterion accepts exactly the exact ratio", 1000, criterion7},
      {8, "end-to-end certification against golden outputs", 10000, criterion8},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.run();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.what;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (verdict == "PASS" && ms > c.budget_ms) {
      verdict = "FAIL";
      detail = "exceeded the " + std::to_string(c.budget_ms) + " ms budget";
      ++failures;
    }
    std::cout << "criterion " << c.number << ": " << verdict << " - " << c.what << " ("
              << ms << " ms)";
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
