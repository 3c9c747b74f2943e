// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "adiclp/lpcore.hpp"
#include "oracles.hpp"

using namespace adiclp;
using namespace adiclp::testing;

namespace {

RatMat rm(size_t m, size_t n, std::vector<long> v) {
  RatMat A(m, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) A(i, j) = Rat(v[i * n + j]);
  return A;
}

RatVec rv(std::vector<long> v) {
  RatVec r;
  for (long x : v) r.push_back(Rat(x));
  return r;
}

RatVec slacks(const LpInstance& inst, const RatVec& x) {
  RatVec s = mat_vec(inst.A, x);
  for (size_t i = 0; i < s.size(); ++i) s[i] = inst.b[i] - s[i];
  return s;
}

// The full pair contract: feasibility both sides, equal objectives, and per
// row exactly one of positive multiplier / positive slack.
void check_strict_pair(const LpInstance& inst, const LpOutcome& out) {
  REQUIRE(out.optimal());
  const auto& opt = out.as_optimal();
  RatVec sl = slacks(inst, opt.x);
  for (const Rat& s : sl) CHECK(s.sign() >= 0);
  for (const Rat& v : opt.y) CHECK(v.sign() >= 0);
  RatVec aty = transpose_vec(inst.A, opt.y);
  for (size_t j = 0; j < inst.c.size(); ++j) CHECK(aty[j] == inst.c[j]);
  CHECK(dot(inst.c, opt.x) == dot(inst.b, opt.y));
  for (size_t i = 0; i < sl.size(); ++i) {
    bool mult = opt.y[i].sign() > 0, slack = sl[i].sign() > 0;
    CHECK(mult != slack);
  }
}

}  // namespace

TEST_CASE("one-variable optima with strict complementarity") {
  {
    LpInstance inst{rm(1, 1, {1}), rv({1}), rv({1})};  // max x : x <= 1
    LpOutcome out = solve_lp(inst);
    check_strict_pair(inst, out);
    CHECK(out.as_optimal().x == rv({1}));
    CHECK(out.as_optimal().y == rv({1}));
  }
  {
    LpInstance inst{rm(2, 1, {1, 1}), rv({1, 2}), rv({1})};  // max x : x <= 1, x <= 2
    LpOutcome out = solve_lp(inst);
    check_strict_pair(inst, out);
    CHECK(out.as_optimal().x == rv({1}));
    CHECK(out.as_optimal().y == rv({1, 0}));
    CHECK(slacks(inst, out.as_optimal().x)[1] == Rat(1));
    CHECK(optimal_face_indices(inst, out.as_optimal()) == std::vector<size_t>{0});
  }
}

TEST_CASE("triangle instance where all rows bind") {
  LpInstance inst{rm(3, 2, {1, 0, 0, 1, 1, 1}), rv({1, 1, 2}), rv({1, 1})};
  LpOutcome out = solve_lp(inst);
  check_strict_pair(inst, out);
  CHECK(out.as_optimal().x == rv({1, 1}));
  // every row is tight at the unique optimum, so the whole support shows up
  CHECK(optimal_face_indices(inst, out.as_optimal()) == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("no implicit equalities when the objective is zero and slack exists") {
  LpInstance inst{rm(1, 1, {1}), rv({1}), rv({0})};  // max 0 : x <= 1
  LpOutcome out = solve_lp(inst);
  check_strict_pair(inst, out);
  CHECK(optimal_face_indices(inst, out.as_optimal()).empty());
}

TEST_CASE("infeasible and unbounded certificates") {
  {
    // x <= 0, -x <= -1
    LpInstance inst{rm(2, 1, {1, -1}), rv({0, -1}), rv({0})};
    LpOutcome out = solve_lp(inst);
    REQUIRE(out.infeasible());
    const RatVec& u = out.as_infeasible().u;
    for (const Rat& v : u) CHECK(v.sign() >= 0);
    RatVec atu = transpose_vec(inst.A, u);
    for (const Rat& v : atu) CHECK(v.is_zero());
    CHECK(dot(inst.b, u).sign() < 0);
  }
  {
    // max x : -x <= 0
    LpInstance inst{rm(1, 1, {-1}), rv({0}), rv({1})};
    LpOutcome out = solve_lp(inst);
    REQUIRE(out.unbounded());
    const auto& ub = out.as_unbounded();
    RatVec sl = slacks(inst, ub.x);
    for (const Rat& s : sl) CHECK(s.sign() >= 0);
    RatVec Ar = mat_vec(inst.A, ub.r);
    for (const Rat& v : Ar) CHECK(v.sign() <= 0);
    CHECK(dot(inst.c, ub.r).sign() > 0);
  }
  {
    // no rows at all: max over R^1 of x
    LpInstance inst{RatMat(0, 1), {}, rv({1})};
    LpOutcome out = solve_lp(inst);
    REQUIRE(out.unbounded());
    CHECK(dot(inst.c, out.as_unbounded().r).sign() > 0);
  }
}

TEST_CASE("classification and value agree with Fourier-Motzkin") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<size_t> nd(1, 3), md(1, 5);
  for (int t = 0; t < 250; ++t) {
    size_t n = nd(rng), m = md(rng);
    LpInstance inst{to_rat(random_int_mat(rng, m, n, -4, 4)),
                    to_rat(random_int_vec(rng, m, -4, 4)),
                    to_rat(random_int_vec(rng, n, -4, 4))};
    FmResult ref = fm_solve_max(inst.A, inst.b, inst.c);
    LpOutcome out = solve_lp(inst);
    if (ref.status == FmStatus::Infeasible) {
      CHECK(out.infeasible());
    } else if (ref.status == FmStatus::Unbounded) {
      CHECK(out.unbounded());
    } else {
      REQUIRE(out.optimal());
      CHECK(dot(inst.c, out.as_optimal().x) == ref.value);
      check_strict_pair(inst, out);
    }
  }
}

TEST_CASE("strict complementarity matches the face computed independently") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<size_t> nd(1, 2), md(2, 6);
  int done = 0;
  while (done < 60) {
    size_t n = nd(rng), m = md(rng);
    LpInstance inst{to_rat(random_int_mat(rng, m, n, -3, 3)),
                    to_rat(random_int_vec(rng, m, -3, 3)),
                    to_rat(random_int_vec(rng, n, -3, 3))};
    FmResult ref = fm_solve_max(inst.A, inst.b, inst.c);
    if (ref.status != FmStatus::Optimal) continue;
    ++done;
    LpOutcome out = solve_lp(inst);
    check_strict_pair(inst, out);
    // reference face membership: the max of slack_i over the optimal face
    RatMat Af(m + 2, n);
    RatVec bf(m + 2);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) Af(i, j) = inst.A(i, j);
      bf[i] = inst.b[i];
    }
    for (size_t j = 0; j < n; ++j) {
      Af(m, j) = inst.c[j];
      Af(m + 1, j) = -inst.c[j];
    }
    bf[m] = ref.value;
    bf[m + 1] = -ref.value;
    for (size_t i = 0; i < m; ++i) {
      RatVec obj(n, Rat(0));
      for (size_t j = 0; j < n; ++j) obj[j] = -inst.A(i, j);
      FmResult sl = fm_solve_max(Af, bf, obj);
      REQUIRE(sl.status != FmStatus::Infeasible);
      bool always_tight =
          sl.status == FmStatus::Optimal && sl.value + inst.b[i] == Rat(0);
      CHECK(always_tight == (out.as_optimal().y[i].sign() > 0));
    }
  }
}

TEST_CASE("determinism of repeated solves") {
  std::mt19937 rng(107);
  for (int t = 0; t < 40; ++t) {
    LpInstance inst{to_rat(random_int_mat(rng, 4, 2, -4, 4)), to_rat(random_int_vec(rng, 4, -4, 4)),
                    to_rat(random_int_vec(rng, 2, -4, 4))};
    LpOutcome a = solve_lp(inst), b = solve_lp(inst);
    CHECK(a.value.index() == b.value.index());
    if (a.optimal()) {
      CHECK(a.as_optimal().x == b.as_optimal().x);
      CHECK(a.as_optimal().y == b.as_optimal().y);
    }
  }
}

TEST_CASE("vertex purification") {
  // x >= 0, x1 + x2 <= 1 as inequality rows
  RatMat A = rm(3, 2, {-1, 0, 0, -1, 1, 1});
  RatVec b = rv({0, 0, 1});
  {
    RatVec x0{Rat(1, 4), Rat(1, 4)};
    RatVec v = purify_to_vertex(A, b, rv({0, 0}), x0);
    RatVec Av = mat_vec(A, v);
    int tight = 0;
    for (size_t i = 0; i < 3; ++i)
      if (Av[i] == b[i]) ++tight;
    CHECK(tight >= 2);
  }
  {
    RatVec x0{Rat(0), Rat(0)};
    CHECK(purify_to_vertex(A, b, rv({0, 0}), x0) == x0);  // already a vertex
  }
  {
    // unit square, interior start, two steps to a corner
    RatMat As = rm(4, 2, {1, 0, 0, 1, -1, 0, 0, -1});
    RatVec bs = rv({1, 1, 0, 0});
    RatVec v = purify_to_vertex(As, bs, rv({0, 0}), RatVec{Rat(1, 2), Rat(1, 2)});
    for (const Rat& c : v) CHECK((c == Rat(0) || c == Rat(1)));
  }
  {
    // objective must not increase under the minimization reading
    RatVec x0{Rat(1, 3), Rat(1, 3)};
    RatVec c = rv({1, 1});
    RatVec v = purify_to_vertex(A, b, c, x0);
    CHECK(dot(c, v) <= dot(c, x0));
  }
}

TEST_CASE("mixed rows compile to canonical form and duals fold back") {
  // max x1 + x2 : x1 + x2 = 1, x1 - x2 >= -3, x >= 0
  MixedLp mixed;
  mixed.A = rm(2, 2, {1, 1, 1, -1});
  mixed.b = rv({1, -3});
  mixed.rel = {Rel::Eq, Rel::Ge};
  mixed.c = rv({1, 1});
  mixed.nonneg = {1, 1};
  CanonicalMap map;
  LpInstance canon = to_canonical(mixed, &map);
  CHECK(canon.A.rows() == 5);  // 1 + 2 + 2 sign rows... Eq gives 2, Ge gives 1
  LpOutcome out = simplex_solve(canon);
  REQUIRE(out.optimal());
  CHECK(dot(canon.c, out.as_optimal().x) == Rat(1));
  // folded multipliers satisfy the value identity against the user rows
  // together with the sign-row multipliers on rhs 0
  RatVec yu = fold_dual_to_user(mixed, map, out.as_optimal().y);
  CHECK(yu[0] * mixed.b[0] + yu[1] * mixed.b[1] == Rat(1));
  CHECK(yu[1].sign() <= 0);  // Ge row folds to a nonpositive multiplier
}
