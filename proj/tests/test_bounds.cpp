// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "adiclp/bounds.hpp"
#include "oracles.hpp"

using namespace adiclp;
using namespace adiclp::testing;

namespace {

IntMat im(size_t m, size_t n, std::vector<long> v) {
  IntMat A(m, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) A(i, j) = v[i * n + j];
  return A;
}

IntVec iv(std::vector<long> v) {
  IntVec r;
  for (long x : v) r.push_back(Int(x));
  return r;
}

}  // namespace

TEST_CASE("log enclosures are certified and tight") {
  Rat tol(Int(1), int_pow(2, 40));
  Interval l2 = ln_enclosure(Rat(2), tol);
  CHECK(l2.lo > Rat(6931, 10000));
  CHECK(l2.hi < Rat(6932, 10000));
  CHECK(l2.width() <= tol * Rat(4));
  Interval l1 = ln_enclosure(Rat(1), tol);
  CHECK(l1.lo == Rat(0));
  CHECK(l1.hi == Rat(0));
  Interval lhalf = ln_enclosure(Rat(1, 2), tol);
  CHECK(lhalf.hi < Rat(0));
  CHECK(lhalf.lo == -l2.hi);
  Interval big = ln_enclosure(Rat(1000), tol);
  CHECK(big.lo > Rat(69, 10));
  CHECK(big.hi < Rat(691, 100));
  // exact powers of two through log2
  Interval four = log2_enclosure(Rat(4), tol);
  CHECK(four.lo == Rat(2));
  CHECK(four.hi == Rat(2));
  CHECK(log2_enclosure(Rat(1, 8), tol).lo == Rat(-3));
  Interval e = euler_e_enclosure(tol);
  CHECK(e.lo > Rat(271828, 100000));
  CHECK(e.hi < Rat(271829, 100000));
}

TEST_CASE("kappa of equality systems") {
  {
    KappaResult r = kappa_equations(im(1, 1, {2}), iv({1}), 2);
    REQUIRE(r.kappa.has_value());
    CHECK(*r.kappa == 1);
  }
  {
    KappaResult r = kappa_equations(im(1, 1, {3}), iv({1}), 2);
    CHECK_FALSE(r.kappa.has_value());
    CHECK(r.reason == "no p-adic solution");
  }
  {
    KappaResult r = kappa_equations(im(1, 1, {6}), iv({3}), 2);
    REQUIRE(r.kappa.has_value());
    CHECK(*r.kappa == 1);
    CHECK(gcd_minors(im(1, 1, {6})) % int_pow(2, *r.kappa) == 0);
  }
  {
    KappaResult r = kappa_equations(im(1, 1, {0}), iv({1}), 2);
    CHECK_FALSE(r.kappa.has_value());
    CHECK(r.reason == "no rational solution");
  }
}

TEST_CASE("kappa divisibility on random solvable systems") {
  std::mt19937 rng(81);
  std::uniform_int_distribution<size_t> nd(1, 3);
  std::uniform_int_distribution<long> ent(-3, 3), numd(-8, 8);
  std::uniform_int_distribution<int> expd(0, 3);
  for (int t = 0; t < 150; ++t) {
    size_t n = nd(rng), m = nd(rng);
    IntMat A = random_int_mat(rng, m, n, -3, 3);
    // dyadic-solvable by construction
    RatVec x0(n);
    for (size_t j = 0; j < n; ++j) x0[j] = Rat(numd(rng), int_pow(2, expd(rng)));
    RatVec bx = mat_vec(to_rat(A), x0);
    Int lam = 1;
    for (const Rat& v : bx) lam = lcm(lam, v.den());
    // scale rows so b is integral while keeping solvability over dyadics
    // (lam is a power of two, so scaling preserves the dyadic solution x0/1)
    IntMat As(m, n);
    IntVec bs(m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) As(i, j) = A(i, j) * lam;
      bs[i] = (bx[i] * Rat(lam)).num();
    }
    KappaResult r = kappa_equations(As, bs, 2);
    REQUIRE(r.kappa.has_value());
    IntMat kept = As.select_rows(independent_rows(As));
    CHECK(gcd_minors(kept) % int_pow(2, *r.kappa) == 0);
  }
}

TEST_CASE("fractionality ceiling by exact power comparison") {
  CHECK(xi_upper_bound(1, 3, 2) == 7);
  CHECK(xi_upper_bound(1, 1, 2) == 2);
  CHECK(xi_upper_bound(1, 1, 1031) == 1);
}

TEST_CASE("exact fractionality by enumeration") {
  CHECK_FALSE(xi_exact_bruteforce(im(2, 1, {3, -3}), iv({1, -1}), 2, 10).has_value());
  {
    auto k = xi_exact_bruteforce(im(2, 1, {2, -2}), iv({1, -1}), 2, 10);
    REQUIRE(k.has_value());
    CHECK(*k == 1);
  }
  {
    auto k = xi_exact_bruteforce(im(2, 1, {3, -1}), iv({1, 0}), 2, 10);
    REQUIRE(k.has_value());
    CHECK(*k == 0);  // x = 0 is integral and feasible
  }
  CHECK_THROWS_AS(xi_exact_bruteforce(im(1, 1, {1}), iv({1}), 2, 3), std::invalid_argument);
}

TEST_CASE("support bound formulas") {
  {
    SupportReport rep = support_bounds(im(4, 4, std::vector<long>(16, 1)), 1);
    REQUIRE(rep.bound_dyadic.has_value());
    // 4 (1 + ln 4 / (2 ln 3 - 1)) = 8.63169...
    CHECK(*rep.bound_dyadic > Rat(86316, 10000));
    CHECK(*rep.bound_dyadic < Rat(86318, 10000));
    CHECK(rep.bound_lp_general == rep.bound_dyadic);
    CHECK_FALSE(rep.bound_01.has_value());
    CHECK_FALSE(rep.bound_ls.has_value());  // ln(sqrt(4)) < e
  }
  {
    SupportReport rep = support_bounds(im(4, 4, std::vector<long>(16, 1)), 0);
    REQUIRE(rep.bound_01.has_value());
    CHECK(*rep.bound_01 == Rat(12));  // 4 (1 + log2 4), exactly
    REQUIRE(rep.bound_lp_k0.has_value());
  }
  {
    SupportReport rep = support_bounds(im(1, 1, {1}), 0);
    REQUIRE(rep.bound_01.has_value());
    CHECK(*rep.bound_01 == Rat(1));
  }
  {
    // large norm activates the linear-system branch
    SupportReport rep = support_bounds(im(1, 2, {1000, 999}), 1);
    REQUIRE(rep.bound_ls.has_value());
    CHECK(*rep.bound_ls > Rat(1));
  }
}

TEST_CASE("minimal support by brute force") {
  {
    // eg-5.3 with n = 4: unique ILP optimum is all ones
    ExampleSpec spec;
    spec.kind = ExampleSpec::Kind::Eg53;
    spec.n = 4;
    GeneratedInstance g = gen_example(spec);
    auto s = min_support_bruteforce(g.A, g.b, g.w, g.L);
    REQUIRE(s.has_value());
    CHECK(*s == 4);
  }
  {
    auto s = min_support_bruteforce(im(1, 2, {1, 1}), iv({1}), std::nullopt, AdicClass::dyadic());
    REQUIRE(s.has_value());
    CHECK(*s == 1);
  }
  {
    // eg-5.1 with k = 1: full support is forced
    ExampleSpec spec;
    spec.kind = ExampleSpec::Kind::Eg51;
    spec.k = 1;
    spec.n = 2;
    GeneratedInstance g = gen_example(spec);
    CHECK(g.A == im(1, 2, {5, 3}));
    auto s = min_support_bruteforce(g.A, g.b, g.w, g.L);
    REQUIRE(s.has_value());
    CHECK(*s == 2);
  }
}

TEST_CASE("example generators") {
  {
    ExampleSpec spec;
    spec.kind = ExampleSpec::Kind::Eg53;
    spec.n = 3;
    GeneratedInstance g = gen_example(spec);
    CHECK(g.A == im(1, 3, {1, 2, 4}));
    CHECK(g.b == iv({7}));
    REQUIRE(g.w.has_value());
    CHECK(*g.w == iv({1, 1, 1}));
    CHECK(g.L.kind() == AdicClass::Kind::Integers);
  }
  {
    ExampleSpec spec;
    spec.kind = ExampleSpec::Kind::KroneckerExtended;
    spec.base = ExampleSpec::Kind::Eg53;
    spec.n = 3;
    spec.m = 2;
    GeneratedInstance g = gen_example(spec);
    CHECK(g.A == im(2, 6, {1, 0, 2, 0, 4, 0, 0, 1, 0, 2, 0, 4}));
    CHECK(g.b == iv({7, 7}));
  }
  {
    ExampleSpec spec;
    spec.kind = ExampleSpec::Kind::Eg51Resigned;
    spec.k = 1;
    spec.n = 2;
    GeneratedInstance g = gen_example(spec);
    CHECK(g.A == im(1, 2, {5, -3}));
    REQUIRE(g.w.has_value());
    // the resigned system keeps a nonnegative integral solution
    bool found = false;
    for (long x1 = 0; x1 <= 20 && !found; ++x1)
      for (long x2 = 0; x2 <= 20 && !found; ++x2)
        found = (5 * x1 - 3 * x2 == 1);
    CHECK(found);
  }
  {
    ExampleSpec spec;
    spec.kind = ExampleSpec::Kind::Eg51;
    spec.k = 0;
    spec.n = 2;
    GeneratedInstance g = gen_example(spec);
    CHECK(g.A == im(1, 2, {3, 2}));  // q = (2, 3)
    CHECK(g.L.kind() == AdicClass::Kind::Integers);
  }
}

TEST_CASE("kernel-norm determinant inequality") {
  {
    SiegelReport r = siegel_check(im(1, 2, {1, 2}));
    CHECK(r.det_gram == 5);
    CHECK(r.gcd == 1);
    CHECK(r.ell == 2);
    CHECK(r.holds);
  }
  {
    SiegelReport r = siegel_check(im(1, 2, {1, 1}));
    CHECK(r.det_gram == 2);
    CHECK(r.ell == 1);
    CHECK(r.holds);
  }
  {
    SiegelReport r = siegel_check(im(1, 3, {1, 2, 4}));
    CHECK(r.det_gram == 21);
    CHECK(r.ell == 2);
    CHECK(r.holds);  // 21 >= (2^2 * 1)^2 = 16
  }
  CHECK_THROWS_AS(siegel_check(im(2, 2, {1, 2, 2, 4})), std::invalid_argument);
}

TEST_CASE("minor lower bounds on generated instances") {
  {
    DetLowerBoundReport r = det_lower_bound_check(im(1, 2, {5, 3}), 1);
    CHECK(r.bound_all == 3);
    CHECK(r.bound_witness == 5);
    CHECK(r.holds_all);
    CHECK(r.holds_witness);
    CHECK(r.witness_cols == std::vector<size_t>{0});
    CHECK(r.witness_minor == 5);
  }
  {
    DetLowerBoundReport r = det_lower_bound_check(im(1, 3, {35, 21, 15}), 1);
    CHECK(r.bound_all == 15);
    CHECK(r.bound_witness == 35);
    CHECK(r.holds_all);
    CHECK(r.holds_witness);
    CHECK(r.witness_cols == std::vector<size_t>{0});
  }
  {
    // square nonsingular: exponent n - m = 0, everything is trivially true
    DetLowerBoundReport r = det_lower_bound_check(im(2, 2, {2, 0, 0, 3}), 1);
    CHECK(r.bound_all == 1);
    CHECK(r.holds_all);
    CHECK(r.holds_witness);
  }
}

TEST_CASE("restriction optima are monotone in the denominator exponent") {
  std::mt19937 rng(91);
  for (int t = 0; t < 20; ++t) {
    // bounded region: random rows plus a box
    IntMat A(6, 2);
    IntVec b(6);
    for (size_t i = 0; i < 2; ++i) {
      for (size_t j = 0; j < 2; ++j) A(i, j) = random_int_vec(rng, 1, -3, 3)[0];
      b[i] = random_int_vec(rng, 1, -2, 4)[0];
    }
    A(2, 0) = 1;
    b[2] = 3;
    A(3, 0) = -1;
    b[3] = 3;
    A(4, 1) = 1;
    b[4] = 3;
    A(5, 1) = -1;
    b[5] = 3;
    IntVec c = random_int_vec(rng, 2, -3, 3);
    std::optional<Rat> prev;
    for (unsigned long k = 0; k <= 4; ++k) {
      IntMat Ak = A;
      IntVec bk(6);
      Int pk = int_pow(2, k);
      for (size_t i = 0; i < 6; ++i) bk[i] = b[i] * pk;
      std::optional<Rat> opt = ilp_max_bruteforce(Ak, bk, c);
      std::optional<Rat> scaled;
      if (opt) scaled = *opt / Rat(pk);
      if (prev) {
        REQUIRE(scaled.has_value());  // feasibility is inherited upward
        CHECK(*scaled >= *prev);
      }
      if (scaled) prev = scaled;
    }
  }
}
