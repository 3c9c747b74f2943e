// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "adiclp/linalg.hpp"
#include "adiclp/lpcore.hpp"
#include "adiclp/matrix.hpp"
#include "adiclp/rational.hpp"

namespace adiclp {

/// Integral polyhedron, either {x : A x <= b} or {x >= 0 : A x = b}.
struct Polyhedron {
  enum class Form { Inequality, StdEquality };
  IntMat A;
  IntVec b;
  Form form = Form::Inequality;

  /// The inequality encoding every certificate is indexed against:
  /// the data itself for inequality form, ([A; -A; -I], [b; -b; 0]) for
  /// standard equality form.
  std::pair<IntMat, IntVec> inequality_view() const;
};

struct LfpStats {
  int lp_engine_calls = 0;
};

/// Result of the L-feasibility problem. Certificate vectors are indexed by
/// the rows of the polyhedron's inequality view.
struct LfpResult {
  struct Point {
    RatVec x;  // in L^n, feasible
  };
  struct RealInfeasible {
    RatVec y;  // y >= 0, A^T y = 0, b^T y < 0
  };
  struct AdicInfeasible {
    RatVec ybar;  // ybar >= 0, A^T ybar = 0, b^T ybar = 0
    RatVec ubar;  // supp(ubar) in supp(ybar), A^T ubar integral, b^T ubar outside L
  };
  std::variant<Point, RealInfeasible, AdicInfeasible> value;

  bool feasible() const { return std::holds_alternative<Point>(value); }
  bool real_infeasible() const { return std::holds_alternative<RealInfeasible>(value); }
  bool adic_infeasible() const { return std::holds_alternative<AdicInfeasible>(value); }
  const RatVec& point() const { return std::get<Point>(value).x; }
  const RealInfeasible& as_real() const { return std::get<RealInfeasible>(value); }
  const AdicInfeasible& as_adic() const { return std::get<AdicInfeasible>(value); }
};

enum class Norm { Euclidean, Infinity };

struct InnerBall {
  RatVec center;
  Rat radius;  // > 0
  Norm norm = Norm::Euclidean;
};

struct AffineDescription {
  RatVec anchor;              // point of the affine hull, entries in L
  std::vector<IntVec> dirs;   // independent integral spanning directions
};

/// Rows of A x <= b that hold with equality on all of P. P must be nonempty
/// and in inequality form.
std::vector<size_t> implicit_equalities(const Polyhedron& P, LfpStats* stats = nullptr);

/// Largest ball inside P centered on aff(P). For inequality form this is the
/// Euclidean ball LP with integer ceilings of the row norms; for standard
/// equality form the index set is over columns and the ball is an inf-norm
/// box on the positive coordinates.
InnerBall inscribed_ball(const Polyhedron& P, const std::vector<size_t>& eq_set,
                         LfpStats* stats = nullptr);

/// Least r >= 0 with p^r * eps >= l * max_i ||d^i||, by exact integer
/// comparison (squared for the Euclidean norm).
unsigned long choose_rounding_exponent(const std::vector<IntVec>& dirs, const Rat& eps, Norm norm,
                                       const Int& p);

/// p-adic combination rho = sum_i floor(p^r a_i)/p^r * d^i steering the
/// anchor toward the ball center; anchor + rho stays in the ball.
RatVec round_to_adic(const AffineDescription& aff, const InnerBall& ball, const Int& p);

LfpResult lfp_solve(const Polyhedron& P, const AdicClass& L, LfpStats* stats = nullptr);
LfpResult lfp_solve_std(const Polyhedron& P, const AdicClass& L, LfpStats* stats = nullptr);

}  // namespace adiclp
