// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "adiclp/matrix.hpp"

namespace adiclp {

/// max c^T x subject to A x <= b, x free.
struct LpInstance {
  RatMat A;
  RatVec b;
  RatVec c;
};

struct LpOutcome {
  struct Infeasible {
    RatVec u;  // u >= 0, A^T u = 0, b^T u < 0
  };
  struct Unbounded {
    RatVec x;  // feasible point
    RatVec r;  // A r <= 0, c^T r > 0
  };
  struct Optimal {
    RatVec x;
    RatVec y;  // A^T y = c, y >= 0, b^T y = c^T x
  };
  std::variant<Infeasible, Unbounded, Optimal> value;

  bool infeasible() const { return std::holds_alternative<Infeasible>(value); }
  bool unbounded() const { return std::holds_alternative<Unbounded>(value); }
  bool optimal() const { return std::holds_alternative<Optimal>(value); }
  const Infeasible& as_infeasible() const { return std::get<Infeasible>(value); }
  const Unbounded& as_unbounded() const { return std::get<Unbounded>(value); }
  const Optimal& as_optimal() const { return std::get<Optimal>(value); }
};

/// Two-phase primal simplex with Bland's rule, exact rationals throughout.
/// Returns a basic optimal pair; the dual may vanish on rows that are tight
/// on the whole optimal face.
LpOutcome simplex_solve(const LpInstance& inst);

/// Full solve: in the optimal case (x, y) is a strictly complementary pair,
/// i.e. supp(y) = {i : row_i(A) x' = b_i for every optimal x'} and x has
/// positive slack in every other row.
LpOutcome solve_lp(const LpInstance& inst);

/// Implicit equalities of the optimal face, supp(y) of the strictly
/// complementary dual.
std::vector<size_t> optimal_face_indices(const LpInstance& inst, const LpOutcome::Optimal& opt);

/// Walks from a feasible point to a vertex without increasing c^T x
/// (minimization reading). Requires {x : A x <= b} to contain a vertex.
RatVec purify_to_vertex(const RatMat& A, const RatVec& b, const RatVec& c, const RatVec& x0);

// --- Mixed-form input -------------------------------------------------------

enum class Rel : uint8_t { Le, Eq, Ge };

/// Rows with relations and per-variable sign flags; compiled to the canonical
/// A x <= b form before solving (equality rows become two inequalities,
/// nonnegative variables become -x_j <= 0 rows).
struct MixedLp {
  RatMat A;
  RatVec b;
  std::vector<Rel> rel;
  RatVec c;
  std::vector<uint8_t> nonneg;  // size n, 1 = x_j >= 0
};

/// Canonical row layout: user rows expanded in order (Eq contributes its <=
/// copy then its negated copy), then one -x_j <= 0 row per nonneg variable in
/// ascending j.
struct CanonicalMap {
  // For user row i: canonical index of the forward copy, and of the negated
  // copy when rel == Eq (SIZE_MAX otherwise).
  std::vector<size_t> fwd;
  std::vector<size_t> neg;
  std::vector<size_t> sign_rows;  // canonical indices of the nonneg rows
};

LpInstance to_canonical(const MixedLp& mixed, CanonicalMap* map = nullptr);

/// Multipliers against the user's rows: Le rows get y >= 0, Ge rows y <= 0,
/// Eq rows a free multiplier (forward minus negated copy).
RatVec fold_dual_to_user(const MixedLp& mixed, const CanonicalMap& map, const RatVec& y_canonical);

LpOutcome solve_mixed(const MixedLp& mixed);

}  // namespace adiclp
