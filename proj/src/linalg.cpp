// SPDX-License-Identifier: Apache-2.0
#include "adiclp/linalg.hpp"

#include <cassert>

namespace adiclp {

namespace {

template <class T>
std::vector<size_t> independent_rows_impl(const Mat<T>& A) {
  RatMat W(A.rows(), A.cols());
  for (size_t i = 0; i < A.rows(); ++i)
    for (size_t j = 0; j < A.cols(); ++j) W(i, j) = Rat(A(i, j));
  std::vector<size_t> kept;
  std::vector<size_t> pivot_col;
  for (size_t i = 0; i < A.rows(); ++i) {
    // Reduce row i by the pivots of previously kept rows.
    for (size_t k = 0; k < kept.size(); ++k) {
      size_t r = kept[k], c = pivot_col[k];
      if (W(i, c).is_zero()) continue;
      Rat f = W(i, c) / W(r, c);
      for (size_t j = 0; j < A.cols(); ++j) W(i, j) -= f * W(r, j);
    }
    size_t c = 0;
    while (c < A.cols() && W(i, c).is_zero()) ++c;
    if (c < A.cols()) {
      kept.push_back(i);
      pivot_col.push_back(c);
    }
  }
  return kept;
}

void col_combine(IntMat& M, size_t ci, size_t cj, const Int& s, const Int& t, const Int& a,
                 const Int& b) {
  // (col_ci, col_cj) <- (s*col_ci + t*col_cj, -b*col_ci + a*col_cj), det = sa+tb = 1.
  for (size_t r = 0; r < M.rows(); ++r) {
    Int x = M(r, ci), y = M(r, cj);
    M(r, ci) = s * x + t * y;
    M(r, cj) = a * y - b * x;
  }
}

void col_swap(IntMat& M, size_t ci, size_t cj) {
  for (size_t r = 0; r < M.rows(); ++r) std::swap(M(r, ci), M(r, cj));
}

void col_negate(IntMat& M, size_t c) {
  for (size_t r = 0; r < M.rows(); ++r) M(r, c) = -M(r, c);
}

void col_axpy(IntMat& M, size_t dst, size_t src, const Int& q) {
  // col_dst -= q * col_src
  for (size_t r = 0; r < M.rows(); ++r) M(r, dst) -= q * M(r, src);
}

}  // namespace

std::vector<size_t> independent_rows(const IntMat& A) { return independent_rows_impl(A); }
std::vector<size_t> independent_rows(const RatMat& A) { return independent_rows_impl(A); }

size_t rank(const IntMat& A) { return independent_rows(A).size(); }

Int det(const IntMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("det: square matrix required");
  size_t n = A.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; all divisions are exact.
  IntMat W = A;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (W(k, k) == 0) {
      size_t r = k + 1;
      while (r < n && W(r, k) == 0) ++r;
      if (r == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(W(k, j), W(r, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int num = W(i, j) * W(k, k) - W(i, k) * W(k, j);
        mpz_divexact(W(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = W(k, k);
  }
  return sign > 0 ? W(n - 1, n - 1) : Int(-W(n - 1, n - 1));
}

SolveResult solve_or_farkas(const RatMat& A, const RatVec& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_or_farkas: dimension mismatch");
  size_t m = A.rows(), n = A.cols();
  RatMat W(m, n + 1);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) W(i, j) = A(i, j);
    W(i, n) = b[i];
  }
  RatMat M = RatMat::identity(m);  // row-operation record: W = M * [A | b]
  std::vector<std::pair<size_t, size_t>> pivots;
  size_t next = 0;
  for (size_t col = 0; col < n && next < m; ++col) {
    size_t r = next;
    while (r < m && W(r, col).is_zero()) ++r;
    if (r == m) continue;
    if (r != next)
      for (size_t j = 0; j <= n; ++j) {
        std::swap(W(r, j), W(next, j));
        if (j < m) std::swap(M(r, j), M(next, j));
      }
    for (size_t i = next + 1; i < m; ++i) {
      if (W(i, col).is_zero()) continue;
      Rat f = W(i, col) / W(next, col);
      for (size_t j = col; j <= n; ++j) W(i, j) -= f * W(next, j);
      for (size_t j = 0; j < m; ++j) M(i, j) -= f * M(next, j);
    }
    pivots.emplace_back(next, col);
    ++next;
  }
  for (size_t i = next; i < m; ++i)
    if (!W(i, n).is_zero()) return SolveResult{SolveResult::Farkas{M.row(i)}};
  RatVec x(n, Rat(0));
  for (size_t k = pivots.size(); k-- > 0;) {
    auto [r, c] = pivots[k];
    Rat s = W(r, n);
    for (size_t j = c + 1; j < n; ++j) s -= W(r, j) * x[j];
    x[c] = s / W(r, c);
  }
  return SolveResult{SolveResult::Solution{std::move(x)}};
}

HnfResult hermite_normal_form(const IntMat& A) {
  std::vector<size_t> kept = independent_rows(A);
  IntMat W = A.select_rows(kept);
  size_t r = W.rows(), n = A.cols();
  IntMat U = IntMat::identity(n);
  for (size_t i = 0; i < r; ++i) {
    size_t j0 = i;
    while (j0 < n && W(i, j0) == 0) ++j0;
    assert(j0 < n && "full row rank after row selection");
    if (j0 != i) {
      col_swap(W, i, j0);
      col_swap(U, i, j0);
    }
    for (size_t j = i + 1; j < n; ++j) {
      if (W(i, j) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), W(i, i).get_mpz_t(),
                 W(i, j).get_mpz_t());
      Int a = W(i, i) / g, b = W(i, j) / g;
      col_combine(W, i, j, s, t, a, b);
      col_combine(U, i, j, s, t, a, b);
    }
    if (W(i, i) < 0) {
      col_negate(W, i);
      col_negate(U, i);
    }
    // Reduce entries left of the pivot into [0, pivot) right away; this is
    // what keeps intermediate entries from blowing up.
    for (size_t j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), W(i, j).get_mpz_t(), W(i, i).get_mpz_t());
      if (q != 0) {
        col_axpy(W, j, i, q);
        col_axpy(U, j, i, q);
      }
    }
  }
  IntMat B(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) B(i, j) = W(i, j);
  return HnfResult{std::move(U), std::move(B), std::move(kept), n - r};
}

Int gcd_minors(const IntMat& A) {
  HnfResult h = hermite_normal_form(A);
  if (h.kept_rows.size() != A.rows())
    throw std::invalid_argument("gcd_minors: rank-deficient input");
  Int g = 1;
  for (size_t i = 0; i < h.B.rows(); ++i) g *= h.B(i, i);
  return abs(g);
}

std::vector<IntVec> kernel_basis(const IntMat& A) {
  HnfResult h = hermite_normal_form(A);
  size_t n = A.cols(), rnk = h.kept_rows.size();
  std::vector<IntVec> basis;
  basis.reserve(h.zero_cols);
  for (size_t j = rnk; j < n; ++j) basis.push_back(h.U.col(j));
  return basis;
}

AdicSolveResult solve_in_adic(const IntMat& A, const IntVec& b, const AdicClass& L) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_in_adic: dimension mismatch");
  SolveResult rat = solve_or_farkas(to_rat(A), to_rat(b));
  if (!rat.solved()) return AdicSolveResult{AdicSolveResult::Farkas{rat.u()}};

  HnfResult h = hermite_normal_form(A);
  size_t r = h.kept_rows.size(), n = A.cols();
  RatVec z(r);
  for (size_t i = 0; i < r; ++i) {
    Rat s = Rat(b[h.kept_rows[i]]);
    for (size_t j = 0; j < i; ++j) s -= Rat(h.B(i, j)) * z[j];
    z[i] = s / Rat(h.B(i, i));
  }
  for (size_t i = 0; i < r; ++i) {
    if (L.contains(z[i])) continue;
    // u = B^{-T} e_i over the kept rows, zeros elsewhere.
    RatVec uk(r, Rat(0));
    for (size_t k = r; k-- > 0;) {
      Rat s = (k == i) ? Rat(1) : Rat(0);
      for (size_t j = k + 1; j < r; ++j) s -= Rat(h.B(j, k)) * uk[j];
      uk[k] = s / Rat(h.B(k, k));
    }
    RatVec u(A.rows(), Rat(0));
    for (size_t k = 0; k < r; ++k) u[h.kept_rows[k]] = uk[k];
    return AdicSolveResult{AdicSolveResult::AdicCertificate{std::move(u)}};
  }
  RatVec zfull(n, Rat(0));
  for (size_t i = 0; i < r; ++i) zfull[i] = z[i];
  RatVec x(n, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < r; ++j) x[i] += Rat(h.U(i, j)) * zfull[j];
  return AdicSolveResult{AdicSolveResult::Solution{std::move(x)}};
}

}  // namespace adiclp
