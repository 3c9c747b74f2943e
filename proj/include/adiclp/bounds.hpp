// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adiclp/adicfeas.hpp"

namespace adiclp {

// --- Certified rational enclosures ------------------------------------------

/// Closed rational interval certified to contain a real value. All operations
/// round outward, so upper bounds read off .hi are sound.
struct Interval {
  Rat lo, hi;
  Interval() = default;
  Interval(const Rat& v) : lo(v), hi(v) {}
  Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  Rat width() const { return hi - lo; }
  friend Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
};

/// Natural log of a positive rational via the atanh series with an explicit
/// tail bound; width at most 2*tol.
Interval ln_enclosure(const Rat& x, const Rat& tol);

/// log2 with an exact fast path when x is a power of two.
Interval log2_enclosure(const Rat& x, const Rat& tol);

Interval euler_e_enclosure(const Rat& tol);

// --- Fractionality ------------------------------------------------------------

struct KappaResult {
  std::optional<unsigned long> kappa;
  std::string reason;  // set when kappa is absent
};

/// Least k with a 1/p^k-integral solution of A x = b, from the diagonal
/// system of the Hermite transform; absent when no rational or no p-adic
/// solution exists.
KappaResult kappa_equations(const IntMat& A, const IntVec& b, const Int& p);

/// Least k with p^{2k} >= n^2 * (a^2 (n+1))^{2n+1}, the integer form of the
/// fractionality ceiling.
unsigned long xi_upper_bound(unsigned long n, const Int& a_norm, const Int& p);

/// Least k <= k_max such that A z <= p^k b has an integral solution, by
/// lattice-point enumeration inside exact relaxation bounds. The relaxation
/// must be bounded.
std::optional<unsigned long> xi_exact_bruteforce(const IntMat& A, const IntVec& b, const Int& p,
                                                 unsigned long k_max);

struct FractionalityReport {
  std::optional<unsigned long> kappa;
  std::string kappa_reason;
  unsigned long xi_bound = 0;
  std::optional<unsigned long> xi_exact;
};

// --- Support size ---------------------------------------------------------------

struct SupportReport {
  size_t m = 0, n = 0;
  Int a_norm;
  // Certified rational upper bounds; absent when the formula's hypothesis
  // does not apply to (k, A).
  std::optional<Rat> bound_ls;
  std::optional<Rat> bound_lp_general;
  std::optional<Rat> bound_lp_k0;
  std::optional<Rat> bound_dyadic;
  std::optional<Rat> bound_01;
  std::optional<size_t> min_support;
};

/// Evaluates the closed-form support bounds for the [p_k]-adic setting
/// (k = 0 means integers, k = 1 dyadic).
SupportReport support_bounds(const IntMat& A, unsigned k);

/// Minimal support size over solutions of A x = b restricted to L: solutions
/// of the free system when w is absent, optimal solutions of
/// min{w^T x : Ax = b, x >= 0} when w is given. Brute force over supports.
std::optional<size_t> min_support_bruteforce(const IntMat& A, const IntVec& b,
                                             const std::optional<IntVec>& w, const AdicClass& L,
                                             size_t n_max = 8);

// --- Example generators -----------------------------------------------------------

struct ExampleSpec {
  enum class Kind { Eg51, Eg51Resigned, Eg53, KroneckerExtended };
  Kind kind = Kind::Eg51;
  Kind base = Kind::Eg51;  // payload for KroneckerExtended
  unsigned k = 1;          // [p_k] index for the prime family
  unsigned n = 2;
  unsigned m = 1;  // Kronecker block count
  std::vector<Int> primes;  // optional override of q_1..q_n
};

struct GeneratedInstance {
  IntMat A;
  IntVec b;
  std::optional<IntVec> w;
  AdicClass L = AdicClass::integers();
};

GeneratedInstance gen_example(const ExampleSpec& spec);

// --- Inequality checkers ------------------------------------------------------------

struct SiegelReport {
  Int det_gram;  // det(A A^T)
  Int gcd;
  Int ell;       // min inf-norm of a nonzero integral kernel vector
  bool holds = false;  // det_gram >= (ell^{n-m} * gcd)^2
};

/// Squared form of the kernel-norm determinant inequality; ell is computed by
/// box enumeration when not supplied.
SiegelReport siegel_check(const IntMat& A, std::optional<Int> ell = std::nullopt);

struct DetLowerBoundReport {
  Int gcd;
  Int bound_all;      // every nonzero order-m minor is >= gcd * bound_all
  Int bound_witness;  // some minor is >= gcd * bound_witness
  bool holds_all = false;
  bool holds_witness = false;
  std::vector<size_t> witness_cols;
  Int witness_minor;
  Int min_nonzero_minor;
};

/// Exhaustive order-m minor check of the prime-product lower bounds for the
/// [p_k] setting. n <= 8.
DetLowerBoundReport det_lower_bound_check(const IntMat& A, unsigned k);

// --- Desk-scale integer programming oracles ------------------------------------------

/// max{c^T z : A z <= b, z integral} by enumeration inside exact relaxation
/// bounds; nullopt when no integer point exists. Throws when the relaxation
/// is unbounded or empty in some coordinate direction.
std::optional<Rat> ilp_max_bruteforce(const IntMat& A, const IntVec& b, const IntVec& c);

/// Visits integer points of {x >= 0 : A x = b} for nonnegative A whose
/// columns each contain a positive entry. Stops early when the callback
/// returns false.
void ilp_points_eq_nonneg(const IntMat& A, const IntVec& b,
                          const std::function<bool(const IntVec&)>& visit);

}  // namespace adiclp
