// SPDX-License-Identifier: Apache-2.0
#include "adiclp/adiclp.hpp"

#include <stdexcept>

namespace adiclp {

namespace {

void track(LlpStats* stats, const LfpStats& s) {
  if (!stats) return;
  ++stats->lfp_calls;
  if (s.lp_engine_calls > stats->max_lp_calls_per_lfp)
    stats->max_lp_calls_per_lfp = s.lp_engine_calls;
}

Polyhedron with_rows(const IntMat& V, const IntVec& w, const IntMat& extraA,
                     const IntVec& extrab) {
  size_t m = V.rows(), k = extraA.rows(), n = V.cols();
  IntMat A(m + k, n);
  IntVec b(m + k);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) A(i, j) = V(i, j);
    b[i] = w[i];
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < n; ++j) A(m + i, j) = extraA(i, j);
    b[m + i] = extrab[i];
  }
  return Polyhedron{std::move(A), std::move(b), Polyhedron::Form::Inequality};
}

/// P cut with c^T x >= threshold, denominators cleared.
Polyhedron shaved(const IntMat& V, const IntVec& w, const IntVec& c, const Rat& threshold) {
  Int lam = threshold.den();
  IntMat extraA(1, V.cols());
  for (size_t j = 0; j < V.cols(); ++j) extraA(0, j) = -lam * c[j];
  IntVec extrab{Int(-threshold.num())};
  return with_rows(V, w, extraA, extrab);
}

}  // namespace

const char* LlpOutcome::tag() const {
  if (o1_real()) return "o1r";
  if (o1_adic()) return "o1a";
  if (o2()) return "o2";
  if (o3()) return "o3";
  return "o4";
}

LlpOutcome llp_solve(const LlpInstance& inst, const Rat& eps, LlpStats* stats) {
  if (eps.sign() <= 0) throw std::invalid_argument("llp_solve: eps must be positive");
  auto [V, w] = inst.P.inequality_view();
  size_t m = V.rows(), n = V.cols();
  if (inst.c.size() != n) throw std::invalid_argument("llp_solve: objective dimension mismatch");
  Polyhedron Pineq{V, w, Polyhedron::Form::Inequality};

  LfpStats s1;
  LfpResult feas = lfp_solve(Pineq, inst.L, &s1);
  track(stats, s1);
  if (feas.real_infeasible()) return LlpOutcome{LlpOutcome::O1Real{feas.as_real().y}};
  if (feas.adic_infeasible())
    return LlpOutcome{LlpOutcome::O1Adic{feas.as_adic().ybar, feas.as_adic().ubar}};
  RatVec xf = feas.point();

  LpInstance rel{to_rat(V), to_rat(w), to_rat(inst.c)};
  if (stats) ++stats->direct_lp_calls;
  LpOutcome out = solve_lp(rel);
  if (out.infeasible()) throw std::logic_error("llp_solve: relaxation infeasible after L-point");
  if (out.unbounded()) {
    // Scale the rational ray to an integral one.
    const RatVec& r = out.as_unbounded().r;
    Int lam = 1;
    for (const auto& v : r) lam = lcm(lam, v.den());
    IntVec ri(n);
    for (size_t j = 0; j < n; ++j) ri[j] = (r[j] * Rat(lam)).num();
    return LlpOutcome{LlpOutcome::O2{std::move(xf), std::move(ri)}};
  }

  const RatVec& xstar = out.as_optimal().x;
  const RatVec& ystar = out.as_optimal().y;
  Rat tau = dot(to_rat(inst.c), xstar);

  // Optimal face F: tighten the support rows of ystar.
  std::vector<size_t> eq;
  for (size_t i = 0; i < m; ++i)
    if (ystar[i].sign() > 0) eq.push_back(i);
  IntMat negA(eq.size(), n);
  IntVec negb(eq.size());
  for (size_t k = 0; k < eq.size(); ++k) {
    for (size_t j = 0; j < n; ++j) negA(k, j) = -V(eq[k], j);
    negb[k] = -w[eq[k]];
  }
  Polyhedron F = with_rows(V, w, negA, negb);
  LfpStats s2;
  LfpResult face = lfp_solve(F, inst.L, &s2);
  track(stats, s2);
  if (face.feasible()) return LlpOutcome{LlpOutcome::O3{face.point(), ystar}};
  if (face.real_infeasible())
    throw std::logic_error("llp_solve: optimal face empty despite an optimal relaxation");

  // Fold the face certificate back onto the original rows.
  const RatVec& uf = face.as_adic().ubar;
  RatVec ubar(m, Rat(0));
  for (size_t i = 0; i < m; ++i) ubar[i] = uf[i];
  for (size_t k = 0; k < eq.size(); ++k) ubar[eq[k]] -= uf[m + k];

  Polyhedron Feps = shaved(V, w, inst.c, tau - eps);
  LfpStats s3;
  LfpResult approx = lfp_solve(Feps, inst.L, &s3);
  track(stats, s3);
  if (!approx.feasible())
    throw std::logic_error("llp_solve: eps-shaved polyhedron must contain an L-point");
  return LlpOutcome{LlpOutcome::O4{xstar, ystar, std::move(ubar), approx.point(), eps}};
}

LlpInstance dual_of(const LlpInstance& inst) {
  auto [V, w] = inst.P.inequality_view();
  size_t m = V.rows(), n = V.cols();
  // min{w^T y : V^T y = c, y >= 0} recast as a canonical max problem.
  IntMat A(2 * n + m, m);
  IntVec b(2 * n + m, 0);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < m; ++i) {
      A(j, i) = V(i, j);
      A(n + j, i) = -V(i, j);
    }
    b[j] = inst.c[j];
    b[n + j] = -inst.c[j];
  }
  for (size_t i = 0; i < m; ++i) A(2 * n + i, i) = -1;
  IntVec cd(m);
  for (size_t i = 0; i < m; ++i) cd[i] = -w[i];
  return LlpInstance{std::move(cd), Polyhedron{std::move(A), std::move(b)}, inst.L};
}

RatVec epsilon_approximate(const LlpInstance& inst, const RatVec& xstar, const Rat& eps,
                           LlpStats* stats) {
  if (eps.sign() <= 0) throw std::invalid_argument("epsilon_approximate: eps must be positive");
  auto [V, w] = inst.P.inequality_view();
  Rat tau = dot(to_rat(inst.c), xstar);
  Polyhedron Feps = shaved(V, w, inst.c, tau - eps);
  LfpStats s;
  LfpResult res = lfp_solve(Feps, inst.L, &s);
  track(stats, s);
  if (!res.feasible())
    throw std::logic_error("epsilon_approximate: shaved polyhedron must contain an L-point");
  return res.point();
}

std::optional<RatVec> lp_via_llp(const IntMat& A, const IntVec& b, const AdicClass& L,
                                 const LlpSolverFn& solver) {
  size_t m = A.rows(), n = A.cols();
  if (b.size() != m) throw std::invalid_argument("lp_via_llp: dimension mismatch");
  // inf{t : A x + b t = b, x >= 0, t >= 0} over L, with eps below the
  // resolution of any vertex of the lifted polyhedron.
  IntMat Ab(m, n + 1);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) Ab(i, j) = A(i, j);
    Ab(i, n) = b[i];
  }
  unsigned long sz = 0;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) sz += encoding_size(Rat(A(i, j))).bits;
    sz += encoding_size(Rat(b[i])).bits;
  }
  Rat eps(Int(1), int_pow(2, 2 * sz));
  IntVec c(n + 1, 0);
  c[n] = -1;  // max -t
  LlpInstance inst{std::move(c), Polyhedron{std::move(Ab), b, Polyhedron::Form::StdEquality}, L};
  LlpOutcome out = solver ? solver(inst, eps) : llp_solve(inst, eps);

  auto x_part = [n](const RatVec& v) { return RatVec(v.begin(), v.begin() + n); };
  if (out.o3()) {
    const RatVec& xd = out.as_o3().xd;
    if (xd[n].is_zero()) return x_part(xd);
    return std::nullopt;
  }
  if (out.o4()) {
    const RatVec& xe = out.as_o4().xeps;
    if (xe[n] > eps) return std::nullopt;
    auto [V, w] = inst.P.inequality_view();
    RatVec tsel(n + 1, Rat(0));
    tsel[n] = Rat(1);
    RatVec vertex = purify_to_vertex(to_rat(V), to_rat(w), tsel, xe);
    if (!vertex[n].is_zero())
      throw std::logic_error("lp_via_llp: purified vertex must have t = 0");
    return x_part(vertex);
  }
  throw std::logic_error("lp_via_llp: lifted instance cannot be infeasible or unbounded");
}

}  // namespace adiclp
