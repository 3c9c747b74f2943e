// SPDX-License-Identifier: Apache-2.0
#include "adiclp/adicfeas.hpp"

#include <cassert>
#include <stdexcept>

namespace adiclp {

namespace {

void bump(LfpStats* stats) {
  if (stats) ++stats->lp_engine_calls;
}

Int ceil_row_norm2(const IntMat& A, size_t i) {
  Int s = 0;
  for (size_t j = 0; j < A.cols(); ++j) s += A(i, j) * A(i, j);
  Int g = int_sqrt(s);
  if (g * g < s) ++g;
  return g;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

std::pair<IntMat, IntVec> Polyhedron::inequality_view() const {
  if (form == Form::Inequality) return {A, b};
  size_t m = A.rows(), n = A.cols();
  IntMat V(2 * m + n, n);
  IntVec w(2 * m + n, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      V(i, j) = A(i, j);
      V(m + i, j) = -A(i, j);
    }
  for (size_t i = 0; i < m; ++i) {
    w[i] = b[i];
    w[m + i] = -b[i];
  }
  for (size_t j = 0; j < n; ++j) V(2 * m + j, j) = -1;
  return {std::move(V), std::move(w)};
}

std::vector<size_t> implicit_equalities(const Polyhedron& P, LfpStats* stats) {
  if (P.form != Polyhedron::Form::Inequality)
    throw std::invalid_argument("implicit_equalities: inequality form required");
  LpInstance rel{to_rat(P.A), to_rat(P.b), RatVec(P.A.cols(), Rat(0))};
  bump(stats);
  LpOutcome out = solve_lp(rel);
  if (!out.optimal()) throw std::invalid_argument("implicit_equalities: empty polyhedron");
  return optimal_face_indices(rel, out.as_optimal());
}

InnerBall inscribed_ball(const Polyhedron& P, const std::vector<size_t>& eq_set,
                         LfpStats* stats) {
  size_t n = P.A.cols(), m = P.A.rows();
  std::vector<bool> in_eq(P.form == Polyhedron::Form::Inequality ? m : n, false);
  for (size_t i : eq_set) in_eq[i] = true;

  if (P.form == Polyhedron::Form::Inequality) {
    // Variables (zeta, e): maximize e subject to
    //   row_i zeta = b_i                 (i implicit equality)
    //   row_i zeta + gamma_i e <= b_i    (gamma_i = ceil ||row_i||_2)
    //   e <= 1
    MixedLp lp;
    lp.A = RatMat(m + 1, n + 1);
    lp.b.assign(m + 1, Rat(0));
    lp.rel.assign(m + 1, Rel::Le);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) lp.A(i, j) = Rat(P.A(i, j));
      lp.b[i] = Rat(P.b[i]);
      if (in_eq[i])
        lp.rel[i] = Rel::Eq;
      else
        lp.A(i, n) = Rat(ceil_row_norm2(P.A, i));
    }
    lp.A(m, n) = Rat(1);
    lp.b[m] = Rat(1);
    lp.c.assign(n + 1, Rat(0));
    lp.c[n] = Rat(1);
    bump(stats);
    LpOutcome out = solve_mixed(lp);
    if (!out.optimal()) throw std::logic_error("inscribed_ball: ball LP must have an optimum");
    RatVec z(out.as_optimal().x.begin(), out.as_optimal().x.begin() + n);
    Rat eps = out.as_optimal().x[n];
    if (eps.sign() <= 0) throw std::logic_error("inscribed_ball: radius must be positive");
    return InnerBall{std::move(z), std::move(eps), Norm::Euclidean};
  }

  // Standard equality form; eq_set holds the implicitly-zero columns.
  // Variables (zeta over free columns, e): maximize e subject to
  //   D zeta = b, e <= zeta_j, e <= 1.
  std::vector<size_t> free_cols;
  for (size_t j = 0; j < n; ++j)
    if (!in_eq[j]) free_cols.push_back(j);
  size_t f = free_cols.size();
  MixedLp lp;
  lp.A = RatMat(m + f + 1, f + 1);
  lp.b.assign(m + f + 1, Rat(0));
  lp.rel.assign(m + f + 1, Rel::Le);
  for (size_t i = 0; i < m; ++i) {
    for (size_t k = 0; k < f; ++k) lp.A(i, k) = Rat(P.A(i, free_cols[k]));
    lp.b[i] = Rat(P.b[i]);
    lp.rel[i] = Rel::Eq;
  }
  for (size_t k = 0; k < f; ++k) {
    lp.A(m + k, k) = Rat(-1);
    lp.A(m + k, f) = Rat(1);
  }
  lp.A(m + f, f) = Rat(1);
  lp.b[m + f] = Rat(1);
  lp.c.assign(f + 1, Rat(0));
  lp.c[f] = Rat(1);
  bump(stats);
  LpOutcome out = solve_mixed(lp);
  if (!out.optimal()) throw std::logic_error("inscribed_ball: box LP must have an optimum");
  RatVec z(n, Rat(0));
  for (size_t k = 0; k < f; ++k) z[free_cols[k]] = out.as_optimal().x[k];
  Rat eps = out.as_optimal().x[f];
  if (eps.sign() <= 0) throw std::logic_error("inscribed_ball: radius must be positive");
  return InnerBall{std::move(z), std::move(eps), Norm::Infinity};
}

unsigned long choose_rounding_exponent(const std::vector<IntVec>& dirs, const Rat& eps, Norm norm,
                                       const Int& p) {
  if (dirs.empty()) return 0;
  Int l(static_cast<long>(dirs.size()));
  if (norm == Norm::Infinity) {
    Int maxn = 0;
    for (const auto& d : dirs)
      for (const auto& v : d)
        if (abs(v) > maxn) maxn = abs(v);
    // least r with p^r * eps >= l * maxn
    Int lhs = eps.num(), rhs = l * maxn * eps.den();
    unsigned long r = 0;
    while (lhs < rhs) {
      lhs *= p;
      ++r;
    }
    return r;
  }
  Int maxsq = 0;
  for (const auto& d : dirs) {
    Int s = 0;
    for (const auto& v : d) s += v * v;
    if (s > maxsq) maxsq = s;
  }
  // least r with (p^r * eps)^2 >= l^2 * maxsq
  Int lhs = eps.num() * eps.num(), rhs = l * l * maxsq * eps.den() * eps.den();
  unsigned long r = 0;
  while (lhs < rhs) {
    lhs *= p * p;
    ++r;
  }
  return r;
}

RatVec round_to_adic(const AffineDescription& aff, const InnerBall& ball, const Int& p) {
  size_t n = aff.anchor.size(), l = aff.dirs.size();
  if (l == 0) throw std::invalid_argument("round_to_adic: no directions");
  unsigned long r = choose_rounding_exponent(aff.dirs, ball.radius, ball.norm, p);
  RatMat D(n, l);
  for (size_t k = 0; k < l; ++k)
    for (size_t i = 0; i < n; ++i) D(i, k) = Rat(aff.dirs[k][i]);
  RatVec rhs(n);
  for (size_t i = 0; i < n; ++i) rhs[i] = ball.center[i] - aff.anchor[i];
  SolveResult sol = solve_or_farkas(D, rhs);
  if (!sol.solved()) throw std::logic_error("round_to_adic: ball center not in the affine hull");
  Int pr = int_pow(p, r);
  RatVec rho(n, Rat(0));
  for (size_t k = 0; k < l; ++k) {
    Rat beta((sol.x()[k] * Rat(pr)).floor(), pr);
    if (beta.is_zero()) continue;
    for (size_t i = 0; i < n; ++i) rho[i] += beta * Rat(aff.dirs[k][i]);
  }
  return rho;
}

LfpResult lfp_solve(const Polyhedron& P, const AdicClass& L, LfpStats* stats) {
  if (P.form != Polyhedron::Form::Inequality)
    throw std::invalid_argument("lfp_solve: inequality form required");
  if (!L.dense()) throw std::invalid_argument("lfp_solve: dense number set required");
  size_t m = P.A.rows(), n = P.A.cols();

  // Step 1: implicit equalities from a strictly complementary pair for
  // max{0 : Ax <= b}.
  LpInstance rel{to_rat(P.A), to_rat(P.b), RatVec(n, Rat(0))};
  bump(stats);
  LpOutcome out = solve_lp(rel);
  if (out.infeasible()) return LfpResult{LfpResult::RealInfeasible{out.as_infeasible().u}};
  const RatVec& ybar = out.as_optimal().y;
  std::vector<size_t> eq;
  for (size_t i = 0; i < m; ++i)
    if (ybar[i].sign() > 0) eq.push_back(i);

  // Step 2: a point of aff(P) in L^n, or the certificate.
  IntMat Aeq = P.A.select_rows(eq);
  IntVec beq(eq.size());
  for (size_t k = 0; k < eq.size(); ++k) beq[k] = P.b[eq[k]];
  AdicSolveResult adic = solve_in_adic(Aeq, beq, L);
  if (adic.real_infeasible())
    throw std::logic_error("lfp_solve: implicit equalities inconsistent on a nonempty polyhedron");
  if (adic.adic_infeasible()) {
    RatVec ubar(m, Rat(0));
    for (size_t k = 0; k < eq.size(); ++k) ubar[eq[k]] = adic.adic_cert()[k];
    return LfpResult{LfpResult::AdicInfeasible{ybar, std::move(ubar)}};
  }
  RatVec z = adic.x();
  std::vector<IntVec> dirs = kernel_basis(Aeq);
  if (dirs.empty()) return LfpResult{LfpResult::Point{std::move(z)}};

  // Steps 3 and 4: inscribed ball, then round toward its center.
  InnerBall ball = inscribed_ball(P, eq, stats);
  RatVec rho = round_to_adic(AffineDescription{z, dirs}, ball, L.p());
  return LfpResult{LfpResult::Point{add(z, rho)}};
}

LfpResult lfp_solve_std(const Polyhedron& P, const AdicClass& L, LfpStats* stats) {
  if (P.form != Polyhedron::Form::StdEquality)
    throw std::invalid_argument("lfp_solve_std: standard equality form required");
  if (!L.dense()) throw std::invalid_argument("lfp_solve_std: dense number set required");
  size_t m = P.A.rows(), n = P.A.cols();
  auto [V, w] = P.inequality_view();

  // Step 1 on the view system; the sign rows of the strictly complementary
  // dual expose the implicitly-zero columns.
  LpInstance rel{to_rat(V), to_rat(w), RatVec(n, Rat(0))};
  bump(stats);
  LpOutcome out = solve_lp(rel);
  if (out.infeasible()) return LfpResult{LfpResult::RealInfeasible{out.as_infeasible().u}};
  const RatVec& ybar = out.as_optimal().y;
  std::vector<size_t> zero_cols;
  for (size_t j = 0; j < n; ++j)
    if (ybar[2 * m + j].sign() > 0) zero_cols.push_back(j);

  // Step 2: Algorithm B on Ax = b plus x_j = 0 for the implicit zeros.
  IntMat M(m + zero_cols.size(), n);
  IntVec rhs(m + zero_cols.size(), 0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) M(i, j) = P.A(i, j);
    rhs[i] = P.b[i];
  }
  for (size_t k = 0; k < zero_cols.size(); ++k) M(m + k, zero_cols[k]) = 1;
  AdicSolveResult adic = solve_in_adic(M, rhs, L);
  if (adic.real_infeasible())
    throw std::logic_error("lfp_solve_std: affine hull inconsistent on a nonempty polyhedron");
  if (adic.adic_infeasible()) {
    RatVec ubar(2 * m + n, Rat(0));
    for (size_t i = 0; i < m; ++i) ubar[i] = adic.adic_cert()[i];
    for (size_t k = 0; k < zero_cols.size(); ++k)
      ubar[2 * m + zero_cols[k]] = -adic.adic_cert()[m + k];
    return LfpResult{LfpResult::AdicInfeasible{ybar, std::move(ubar)}};
  }
  RatVec z = adic.x();
  std::vector<IntVec> dirs = kernel_basis(M);
  if (dirs.empty()) return LfpResult{LfpResult::Point{std::move(z)}};

  InnerBall ball = inscribed_ball(P, zero_cols, stats);
  RatVec rho = round_to_adic(AffineDescription{z, dirs}, ball, L.p());
  return LfpResult{LfpResult::Point{add(z, rho)}};
}

}  // namespace adiclp
