// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "adiclp/matrix.hpp"
#include "adiclp/rational.hpp"

namespace adiclp {

/// Result of solving a rational linear system: either a solution of
/// A x = b, or a multiplier u with A^T u = 0 and b^T u != 0.
struct SolveResult {
  struct Solution {
    RatVec x;
  };
  struct Farkas {
    RatVec u;
  };
  std::variant<Solution, Farkas> value;

  bool solved() const { return std::holds_alternative<Solution>(value); }
  const RatVec& x() const { return std::get<Solution>(value).x; }
  const RatVec& u() const { return std::get<Farkas>(value).u; }
};

SolveResult solve_or_farkas(const RatMat& A, const RatVec& b);

/// A_kept * U = (B 0) with U unimodular and B lower triangular with
/// positive diagonal; entries left of each pivot are reduced into
/// [0, pivot). kept_rows lists the first maximal independent row set in
/// input order; removed rows are the rest.
struct HnfResult {
  IntMat U;                       // n x n, |det| = 1
  IntMat B;                       // r x r
  std::vector<size_t> kept_rows;  // size r
  size_t zero_cols = 0;           // n - r
};

HnfResult hermite_normal_form(const IntMat& A);

/// gcd of all order-m minors of a full-row-rank matrix, as |det(B)|.
Int gcd_minors(const IntMat& A);

/// Lattice basis of ker(A) over the integers: the columns of U under the
/// zero block of the Hermite normal form.
std::vector<IntVec> kernel_basis(const IntMat& A);

/// Outcome of solving A x = b over a number set L.
struct AdicSolveResult {
  struct Solution {
    RatVec x;  // entries all in L
  };
  struct Farkas {
    RatVec u;  // A^T u = 0, b^T u != 0: no real solution
  };
  struct AdicCertificate {
    RatVec u;  // A^T u integral, b^T u outside L: no solution in L^n
  };
  std::variant<Solution, Farkas, AdicCertificate> value;

  bool solved() const { return std::holds_alternative<Solution>(value); }
  bool real_infeasible() const { return std::holds_alternative<Farkas>(value); }
  bool adic_infeasible() const { return std::holds_alternative<AdicCertificate>(value); }
  const RatVec& x() const { return std::get<Solution>(value).x; }
  const RatVec& farkas() const { return std::get<Farkas>(value).u; }
  const RatVec& adic_cert() const { return std::get<AdicCertificate>(value).u; }
};

AdicSolveResult solve_in_adic(const IntMat& A, const IntVec& b, const AdicClass& L);

/// Exact determinant by fraction-free elimination.
Int det(const IntMat& A);

/// Indices of the first maximal linearly independent row set, in input order.
std::vector<size_t> independent_rows(const IntMat& A);
std::vector<size_t> independent_rows(const RatMat& A);

size_t rank(const IntMat& A);

}  // namespace adiclp
