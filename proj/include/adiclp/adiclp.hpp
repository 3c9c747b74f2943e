// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "adiclp/adicfeas.hpp"

namespace adiclp {

/// sup{c^T x : x in P, x in L^n} with integral data; min is handled by
/// negating c. Certificate vectors are indexed by the rows of
/// P.inequality_view().
struct LlpInstance {
  IntVec c;
  Polyhedron P;
  AdicClass L;
};

struct LlpStats {
  int lfp_calls = 0;
  int max_lp_calls_per_lfp = 0;
  int direct_lp_calls = 0;
};

struct LlpOutcome {
  struct O1Real {
    RatVec u;
  };
  struct O1Adic {
    RatVec ybar, ubar;
  };
  struct O2 {
    RatVec xf;  // feasible point in L^n
    IntVec r;   // A r <= 0, c^T r > 0
  };
  struct O3 {
    RatVec xd;     // optimal solution in L^n
    RatVec ystar;  // dual witness: A^T y = c, y >= 0, b^T y = c^T xd
  };
  struct O4 {
    RatVec xstar;  // relaxation optimum, generally outside L^n
    RatVec ystar;
    RatVec ubar;
    RatVec xeps;  // feasible in L^n, c^T xeps >= c^T xstar - eps
    Rat eps;
  };
  std::variant<O1Real, O1Adic, O2, O3, O4> value;

  bool o1_real() const { return std::holds_alternative<O1Real>(value); }
  bool o1_adic() const { return std::holds_alternative<O1Adic>(value); }
  bool o1() const { return o1_real() || o1_adic(); }
  bool o2() const { return std::holds_alternative<O2>(value); }
  bool o3() const { return std::holds_alternative<O3>(value); }
  bool o4() const { return std::holds_alternative<O4>(value); }
  const O1Real& as_o1_real() const { return std::get<O1Real>(value); }
  const O1Adic& as_o1_adic() const { return std::get<O1Adic>(value); }
  const O2& as_o2() const { return std::get<O2>(value); }
  const O3& as_o3() const { return std::get<O3>(value); }
  const O4& as_o4() const { return std::get<O4>(value); }
  const char* tag() const;
};

inline Rat default_epsilon() { return Rat(Int(1), int_pow(2, 20)); }

LlpOutcome llp_solve(const LlpInstance& inst, const Rat& eps = default_epsilon(),
                     LlpStats* stats = nullptr);

/// Dual in the same canonical shape: variables per canonical primal row,
/// equality rows split into inequality pairs and sign constraints appended,
/// objective negated so the dual is again a max problem.
LlpInstance dual_of(const LlpInstance& inst);

/// Feasible point of P in L^n within eps of the relaxation optimum value
/// c^T xstar, found by one more feasibility solve on the shaved polyhedron.
RatVec epsilon_approximate(const LlpInstance& inst, const RatVec& xstar, const Rat& eps,
                           LlpStats* stats = nullptr);

using LlpSolverFn = std::function<LlpOutcome(const LlpInstance&, const Rat&)>;

/// Rational feasibility of {x >= 0 : A x = b} through a blackbox solver
/// restricted to L, plus vertex purification on the near-feasible outcome.
/// A must have full row rank.
std::optional<RatVec> lp_via_llp(const IntMat& A, const IntVec& b, const AdicClass& L,
                                 const LlpSolverFn& solver = {});

}  // namespace adiclp
