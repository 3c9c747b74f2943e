// SPDX-License-Identifier: Apache-2.0
#include "adiclp/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace adiclp {

// --- Interval arithmetic ------------------------------------------------------

Interval operator*(const Interval& a, const Interval& b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return {lo, hi};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo.sign() <= 0 && b.hi.sign() >= 0)
    throw std::domain_error("Interval: division by an interval containing zero");
  Interval inv{Rat(1) / b.hi, Rat(1) / b.lo};
  return a * inv;
}

namespace {

// 2*atanh(y) for 0 <= y < 1 with tail bound y^{2J+3} / ((2J+3)(1-y^2)).
Interval two_atanh(const Rat& y, const Rat& tol) {
  Rat y2 = y * y;
  Rat term = y;  // y^{2j+1}
  Rat sum = 0;
  unsigned long j = 0;
  for (;;) {
    sum += term / Rat(static_cast<long>(2 * j + 1));
    term *= y2;
    ++j;
    Rat tail = term / (Rat(static_cast<long>(2 * j + 1)) * (Rat(1) - y2));
    if (tail <= tol) {
      Rat lo = sum * Rat(2);
      Rat hi = (sum + tail) * Rat(2);
      return {lo, hi};
    }
  }
}

Interval ln2(const Rat& tol) { return two_atanh(Rat(1, 3), tol); }

}  // namespace

Interval ln_enclosure(const Rat& x, const Rat& tol) {
  if (x.sign() <= 0) throw std::domain_error("ln_enclosure: positive argument required");
  if (x == Rat(1)) return {Rat(0), Rat(0)};
  if (x < Rat(1)) {
    Interval n = ln_enclosure(Rat(1) / x, tol);
    return {-n.hi, -n.lo};
  }
  // x = 2^k * m with m in [1,2)
  Rat m = x;
  long k = 0;
  while (m >= Rat(2)) {
    m /= Rat(2);
    ++k;
  }
  Rat inner_tol = tol / Rat(4);
  Interval res{Rat(0), Rat(0)};
  if (k > 0) {
    Interval l2 = ln2(inner_tol / Rat(k));
    res = Interval{l2.lo * Rat(k), l2.hi * Rat(k)};
  }
  if (m != Rat(1)) {
    Rat y = (m - Rat(1)) / (m + Rat(1));
    res = res + two_atanh(y, inner_tol);
  }
  return res;
}

Interval log2_enclosure(const Rat& x, const Rat& tol) {
  if (x.sign() <= 0) throw std::domain_error("log2_enclosure: positive argument required");
  // Exact when numerator and denominator are both powers of two.
  Int num = x.num(), den = x.den();
  if (num > 0 && mpz_popcount(num.get_mpz_t()) == 1 && mpz_popcount(den.get_mpz_t()) == 1) {
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    return {Rat(e), Rat(e)};
  }
  Rat inner = tol / Rat(8);
  return ln_enclosure(x, inner) / ln2(inner);
}

Interval euler_e_enclosure(const Rat& tol) {
  Rat sum = 1, term = 1;
  unsigned long j = 1;
  for (;;) {
    term /= Rat(static_cast<long>(j));
    sum += term;
    ++j;
    // Remaining tail is below 2 * first omitted term.
    Rat tail = term / Rat(static_cast<long>(j)) * Rat(2);
    if (tail <= tol) return {sum, sum + tail};
  }
}

// --- Fractionality -------------------------------------------------------------

KappaResult kappa_equations(const IntMat& A, const IntVec& b, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("kappa_equations: p must be prime");
  SolveResult rat = solve_or_farkas(to_rat(A), to_rat(b));
  if (!rat.solved()) return {std::nullopt, "no rational solution"};
  HnfResult h = hermite_normal_form(A);
  size_t r = h.kept_rows.size();
  RatVec z(r);
  for (size_t i = 0; i < r; ++i) {
    Rat s(b[h.kept_rows[i]]);
    for (size_t j = 0; j < i; ++j) s -= Rat(h.B(i, j)) * z[j];
    z[i] = s / Rat(h.B(i, i));
  }
  unsigned long kappa = 0;
  for (const Rat& zi : z) {
    Int d = zi.den();
    unsigned long e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (d != 1) return {std::nullopt, "no p-adic solution"};
    kappa = std::max(kappa, e);
  }
  return {kappa, {}};
}

unsigned long xi_upper_bound(unsigned long n, const Int& a_norm, const Int& p) {
  if (n < 1 || a_norm < 1) throw std::invalid_argument("xi_upper_bound: n, a_norm >= 1");
  if (!is_prime(p)) throw std::invalid_argument("xi_upper_bound: p must be prime");
  Int rhs = Int(n) * Int(n) * int_pow(a_norm * a_norm * Int(n + 1), 2 * n + 1);
  Int lhs = 1, p2 = p * p;
  unsigned long k = 0;
  while (lhs < rhs) {
    lhs *= p2;
    ++k;
  }
  return k;
}

namespace {

// Exact coordinate range of {x : Ax <= b}; throws on an unbounded direction,
// nullopt when the region is empty.
std::optional<std::pair<RatVec, RatVec>> coordinate_bounds(const IntMat& A, const IntVec& b) {
  size_t n = A.cols();
  RatVec lo(n), hi(n);
  LpInstance inst{to_rat(A), to_rat(b), RatVec(n, Rat(0))};
  for (size_t j = 0; j < n; ++j) {
    for (int dir = 0; dir < 2; ++dir) {
      inst.c.assign(n, Rat(0));
      inst.c[j] = dir == 0 ? Rat(1) : Rat(-1);
      LpOutcome out = simplex_solve(inst);
      if (out.infeasible()) return std::nullopt;
      if (out.unbounded()) throw std::invalid_argument("coordinate_bounds: unbounded region");
      Rat v = out.as_optimal().x[j];
      (dir == 0 ? hi : lo)[j] = v;
    }
  }
  return std::make_pair(lo, hi);
}

// Odometer over the integer box [lo, hi]; stops when visit returns false.
void enumerate_box(const IntVec& lo, const IntVec& hi,
                   const std::function<bool(const IntVec&)>& visit) {
  size_t n = lo.size();
  for (size_t j = 0; j < n; ++j)
    if (lo[j] > hi[j]) return;
  IntVec z = lo;
  for (;;) {
    if (!visit(z)) return;
    size_t j = 0;
    while (j < n && z[j] == hi[j]) {
      z[j] = lo[j];
      ++j;
    }
    if (j == n) return;
    ++z[j];
  }
}

bool sat_leq(const IntMat& A, const IntVec& z, const IntVec& rhs) {
  for (size_t i = 0; i < A.rows(); ++i) {
    Int s = 0;
    for (size_t j = 0; j < A.cols(); ++j) s += A(i, j) * z[j];
    if (s > rhs[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<unsigned long> xi_exact_bruteforce(const IntMat& A, const IntVec& b, const Int& p,
                                                 unsigned long k_max) {
  if (A.cols() > 4) throw std::invalid_argument("xi_exact_bruteforce: n <= 4");
  auto bounds = coordinate_bounds(A, b);
  if (!bounds) return std::nullopt;
  size_t n = A.cols();
  for (unsigned long k = 0; k <= k_max; ++k) {
    Rat pk(int_pow(p, k));
    IntVec lo(n), hi(n), rhs(b.size());
    for (size_t j = 0; j < n; ++j) {
      lo[j] = (bounds->first[j] * pk).ceil();
      hi[j] = (bounds->second[j] * pk).floor();
    }
    for (size_t i = 0; i < b.size(); ++i) rhs[i] = b[i] * pk.num();
    bool found = false;
    enumerate_box(lo, hi, [&](const IntVec& z) {
      if (sat_leq(A, z, rhs)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return k;
  }
  return std::nullopt;
}

// --- Support bounds ---------------------------------------------------------------

SupportReport support_bounds(const IntMat& A, unsigned k) {
  SupportReport rep;
  rep.m = A.rows();
  rep.n = A.cols();
  rep.a_norm = max_abs(A);
  if (rep.a_norm == 0) throw std::invalid_argument("support_bounds: A must be nonzero");
  Rat tol(Int(1), int_pow(2, 48));
  Rat m_rat(Int(rep.m)), a_rat(rep.a_norm);
  Int p_next = nth_prime(k + 1);
  Rat ma2 = m_rat * a_rat * a_rat;

  // General optimal-support bound: m (1 + ln(m a^2) / (2 ln p_{k+1} - 1)).
  {
    Interval lnp = ln_enclosure(Rat(p_next), tol);
    Interval denom = Interval(Rat(2)) * lnp - Interval(Rat(1));
    Interval val =
        Interval(m_rat) * (Interval(Rat(1)) + ln_enclosure(ma2, tol) / denom);
    rep.bound_lp_general = val.hi;
    if (k == 1) rep.bound_dyadic = val.hi;
  }

  if (k == 0) {
    // max(4 a^2, m (1 + log2 a + log2(m a) (1 + log2 a)/(1 + 2 log2 a))).
    Interval l2a = log2_enclosure(a_rat, tol);
    Interval l2ma = log2_enclosure(m_rat * a_rat, tol);
    Interval frac = (Interval(Rat(1)) + l2a) / (Interval(Rat(1)) + Interval(Rat(2)) * l2a);
    Interval val = Interval(m_rat) * (Interval(Rat(1)) + l2a + l2ma * frac);
    Rat cap = Rat(4) * a_rat * a_rat;
    rep.bound_lp_k0 = std::max(cap, val.hi);
    if (rep.a_norm == 1) {
      Interval l2m = log2_enclosure(m_rat, tol);
      rep.bound_01 = (Interval(m_rat) * (Interval(Rat(1)) + l2m)).hi;
    }
  }

  // Linear-system bound: r = floor(n'/m) <= max(1 + 2e, 1 + (2+2/e) Y / ln Y)
  // where Y = ln(sqrt(m) a) = ln(m a^2)/2, valid once Y >= e.
  {
    Interval e = euler_e_enclosure(tol);
    Interval Y = ln_enclosure(ma2, tol) / Interval(Rat(2));
    if (Y.lo >= e.hi) {
      Interval lnY{ln_enclosure(Y.lo, tol).lo, ln_enclosure(Y.hi, tol).hi};
      Interval coef = Interval(Rat(2)) + Interval(Rat(2)) / e;
      Interval r_formula = Interval(Rat(1)) + coef * Y / lnY;
      Rat r_cap = (Interval(Rat(1)) + Interval(Rat(2)) * e).hi;
      Rat r_hi = std::max(r_cap, r_formula.hi);
      rep.bound_ls = m_rat * (r_hi + Rat(1));
    }
  }
  return rep;
}

namespace {

// Ascending-size support enumeration; visit gets ascending column indices and
// returns true when the restricted system is acceptable.
std::optional<size_t> first_feasible_support(size_t n,
                                             const std::function<bool(const std::vector<size_t>&)>& ok) {
  for (size_t s = 0; s <= n; ++s) {
    std::vector<size_t> idx(s);
    // lexicographically first s-subset
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      if (ok(idx)) return s;
      if (s == 0) break;
      // next combination
      size_t i = s;
      while (i-- > 0) {
        if (idx[i] != i + n - s) {
          ++idx[i];
          for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) goto next_size;
      }
    }
  next_size:;
  }
  return std::nullopt;
}

}  // namespace

std::optional<size_t> min_support_bruteforce(const IntMat& A, const IntVec& b,
                                             const std::optional<IntVec>& w, const AdicClass& L,
                                             size_t n_max) {
  size_t m = A.rows(), n = A.cols();
  if (n > n_max) throw std::invalid_argument("min_support_bruteforce: too many columns");

  if (!w) {
    // Free linear system A x = b over L; restricted feasibility is exactly
    // the adic equation solver on the selected columns.
    AdicSolveResult full = solve_in_adic(A, b, L);
    if (!full.solved()) throw std::invalid_argument("min_support_bruteforce: instance infeasible");
    return first_feasible_support(n, [&](const std::vector<size_t>& S) {
      return solve_in_adic(A.select_cols(S), b, L).solved();
    });
  }

  if (L.kind() == AdicClass::Kind::Integers) {
    // Optimal ILP support by exhaustive enumeration.
    std::optional<Rat> best;
    std::optional<size_t> best_support;
    ilp_points_eq_nonneg(A, b, [&](const IntVec& z) {
      Rat val(0);
      size_t supp = 0;
      for (size_t j = 0; j < n; ++j) {
        val += Rat(Int((*w)[j] * z[j]));
        if (z[j] != 0) ++supp;
      }
      if (!best || val < *best) {
        best = val;
        best_support = supp;
      } else if (val == *best && supp < *best_support) {
        best_support = supp;
      }
      return true;
    });
    if (!best) throw std::invalid_argument("min_support_bruteforce: instance infeasible");
    return best_support;
  }

  // Dense L: minimum support among optimal solutions of
  // min{w^T x : Ax = b, x >= 0, x in L^n}; optimal value equals the
  // relaxation optimum whenever it is attained at all.
  MixedLp relax;
  relax.A = to_rat(A);
  relax.b = to_rat(b);
  relax.rel.assign(m, Rel::Eq);
  relax.c.assign(n, Rat(0));
  for (size_t j = 0; j < n; ++j) relax.c[j] = Rat(Int(-(*w)[j]));  // max -w
  relax.nonneg.assign(n, 1);
  LpOutcome out = solve_mixed(relax);
  if (out.infeasible()) throw std::invalid_argument("min_support_bruteforce: instance infeasible");
  {
    Polyhedron fullP{A, b, Polyhedron::Form::StdEquality};
    LfpResult feas = lfp_solve_std(fullP, L);
    if (!feas.feasible())
      throw std::invalid_argument("min_support_bruteforce: instance infeasible");
  }
  if (out.unbounded()) return std::nullopt;  // no optimal solutions at all
  Rat vstar = -dot(relax.c, out.as_optimal().x);

  return first_feasible_support(n, [&](const std::vector<size_t>& S) {
    IntMat AS = A.select_cols(S);
    bool w_zero = true;
    for (size_t j : S)
      if ((*w)[j] != 0) w_zero = false;
    size_t rows = m + ((w_zero && vstar.is_zero()) ? 0 : 1);
    IntMat M(rows, S.size());
    IntVec rhs(rows);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < S.size(); ++j) M(i, j) = AS(i, j);
      rhs[i] = b[i];
    }
    if (rows > m) {
      Int lam = vstar.den();
      for (size_t j = 0; j < S.size(); ++j) M(m, j) = lam * (*w)[S[j]];
      rhs[m] = vstar.num();
    }
    Polyhedron PS{std::move(M), std::move(rhs), Polyhedron::Form::StdEquality};
    return lfp_solve_std(PS, L).feasible();
  });
}

// --- Example generators --------------------------------------------------------------

namespace {

GeneratedInstance gen_base(const ExampleSpec& spec) {
  unsigned n = spec.n, k = spec.k;
  if (n < 1 || n > 16 || k > 16) throw std::invalid_argument("gen_example: params out of range");
  GeneratedInstance out;
  switch (spec.kind) {
    case ExampleSpec::Kind::Eg51:
    case ExampleSpec::Kind::Eg51Resigned: {
      std::vector<Int> q = spec.primes;
      if (q.empty())
        for (unsigned i = 1; i <= n; ++i) q.push_back(nth_prime(k + i));
      if (q.size() != n) throw std::invalid_argument("gen_example: need n primes");
      Int pk1 = nth_prime(k + 1);
      for (size_t i = 0; i < q.size(); ++i) {
        if (!is_prime(q[i]) || q[i] < pk1)
          throw std::invalid_argument("gen_example: primes must be distinct and >= p_{k+1}");
        for (size_t j = i + 1; j < q.size(); ++j)
          if (q[i] == q[j]) throw std::invalid_argument("gen_example: primes must be distinct");
      }
      Int Q = 1;
      for (const Int& qi : q) Q *= qi;
      out.A = IntMat(1, n);
      for (unsigned j = 0; j < n; ++j) out.A(0, j) = Q / q[j];
      if (spec.kind == ExampleSpec::Kind::Eg51Resigned) {
        out.A(0, n - 1) = -out.A(0, n - 1);
        out.w = IntVec(n, 0);
      }
      out.b = IntVec{Int(1)};
      out.L = (k == 0) ? AdicClass::integers() : AdicClass::bracket(nth_prime(k));
      return out;
    }
    case ExampleSpec::Kind::Eg53: {
      out.A = IntMat(1, n);
      Int v = 1;
      for (unsigned j = 0; j < n; ++j) {
        out.A(0, j) = v;
        v *= 2;
      }
      out.b = IntVec{v - 1};  // 2^n - 1
      out.w = IntVec(n, 1);
      out.L = AdicClass::integers();
      return out;
    }
    default:
      throw std::invalid_argument("gen_example: kronecker base cannot be kronecker");
  }
}

}  // namespace

GeneratedInstance gen_example(const ExampleSpec& spec) {
  if (spec.kind != ExampleSpec::Kind::KroneckerExtended) return gen_base(spec);
  ExampleSpec base_spec = spec;
  base_spec.kind = spec.base;
  GeneratedInstance base = gen_base(base_spec);
  unsigned m = spec.m;
  size_t n = base.A.cols();
  if (m < 1 || n * m > 64) throw std::invalid_argument("gen_example: n*m too large");
  GeneratedInstance out;
  out.A = IntMat(m, n * m);
  for (size_t j = 0; j < n; ++j)
    for (unsigned i = 0; i < m; ++i) out.A(i, j * m + i) = base.A(0, j);
  out.b = IntVec(m, base.b[0]);
  if (base.w) {
    out.w = IntVec(n * m);
    for (size_t j = 0; j < n; ++j)
      for (unsigned i = 0; i < m; ++i) (*out.w)[j * m + i] = (*base.w)[j];
  }
  out.L = base.L;
  return out;
}

// --- Inequality checkers --------------------------------------------------------------

SiegelReport siegel_check(const IntMat& A, std::optional<Int> ell) {
  size_t m = A.rows(), n = A.cols();
  if (independent_rows(A).size() != m) throw std::invalid_argument("siegel_check: rank-deficient");
  SiegelReport rep;
  IntMat G(m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Int s = 0;
      for (size_t t = 0; t < n; ++t) s += A(i, t) * A(j, t);
      G(i, j) = s;
    }
  rep.det_gram = det(G);
  rep.gcd = gcd_minors(A);
  if (ell) {
    rep.ell = *ell;
  } else {
    std::vector<IntVec> basis = kernel_basis(A);
    if (basis.empty()) {
      rep.ell = 1;
    } else {
      Int M = 0;
      for (const auto& d : basis) {
        Int dn = 0;
        for (const auto& v : d) dn = std::max(dn, Int(abs(v)));
        M = (M == 0) ? dn : std::min(M, dn);
      }
      // A kernel vector attaining the minimum lies in the [-M, M] box.
      IntVec lo(n, Int(-M)), hi(n, M);
      Int best = M;
      enumerate_box(lo, hi, [&](const IntVec& z) {
        bool zero = true;
        Int norm = 0;
        for (const auto& v : z) {
          if (v != 0) zero = false;
          norm = std::max(norm, Int(abs(v)));
        }
        if (zero || norm >= best) return true;
        for (size_t i = 0; i < m; ++i) {
          Int s = 0;
          for (size_t j = 0; j < n; ++j) s += A(i, j) * z[j];
          if (s != 0) return true;
        }
        best = norm;
        return true;
      });
      rep.ell = best;
    }
  }
  Int rhs = int_pow(rep.ell, static_cast<unsigned long>(n - m)) * rep.gcd;
  rep.holds = rep.det_gram >= rhs * rhs;
  return rep;
}

DetLowerBoundReport det_lower_bound_check(const IntMat& A, unsigned k) {
  size_t m = A.rows(), n = A.cols();
  if (n > 8) throw std::invalid_argument("det_lower_bound_check: n <= 8");
  if (independent_rows(A).size() != m)
    throw std::invalid_argument("det_lower_bound_check: rank-deficient");
  DetLowerBoundReport rep;
  rep.gcd = gcd_minors(A);
  auto prime_product_bound = [&](unsigned shift) {
    Int bound = 1;
    if (n < 2 * m) {
      bound = int_pow(nth_prime(k + 1 + shift), static_cast<unsigned long>(n - m));
    } else {
      size_t r = n / m;
      for (size_t i = 1; i + 1 <= r; ++i)
        bound *= int_pow(nth_prime(k + i + shift), static_cast<unsigned long>(m));
      bound *= int_pow(nth_prime(k + r + shift), static_cast<unsigned long>(n - m * r));
    }
    return bound;
  };
  rep.bound_all = prime_product_bound(0);
  rep.bound_witness = prime_product_bound(1);

  rep.holds_all = true;
  rep.holds_witness = false;
  std::vector<size_t> cols(m);
  for (size_t i = 0; i < m; ++i) cols[i] = i;
  bool first_minor = true;
  for (;;) {
    Int minor = det(A.select_cols(cols));
    if (minor != 0) {
      Int a = abs(minor);
      if (first_minor || a < rep.min_nonzero_minor) {
        rep.min_nonzero_minor = a;
        first_minor = false;
      }
      if (a < rep.gcd * rep.bound_all) rep.holds_all = false;
      if (!rep.holds_witness && a >= rep.gcd * rep.bound_witness) {
        rep.holds_witness = true;
        rep.witness_cols = cols;
        rep.witness_minor = a;
      }
    }
    // next m-combination of [0, n)
    size_t i = m;
    bool done = true;
    while (i-- > 0) {
      if (cols[i] != i + n - m) {
        ++cols[i];
        for (size_t j = i + 1; j < m; ++j) cols[j] = cols[j - 1] + 1;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return rep;
}

// --- ILP oracles ------------------------------------------------------------------------

std::optional<Rat> ilp_max_bruteforce(const IntMat& A, const IntVec& b, const IntVec& c) {
  auto bounds = coordinate_bounds(A, b);
  if (!bounds) return std::nullopt;
  size_t n = A.cols();
  IntVec lo(n), hi(n);
  for (size_t j = 0; j < n; ++j) {
    lo[j] = bounds->first[j].ceil();
    hi[j] = bounds->second[j].floor();
  }
  std::optional<Rat> best;
  enumerate_box(lo, hi, [&](const IntVec& z) {
    if (!sat_leq(A, z, b)) return true;
    Rat val(0);
    for (size_t j = 0; j < n; ++j) val += Rat(Int(c[j] * z[j]));
    if (!best || val > *best) best = val;
    return true;
  });
  return best;
}

void ilp_points_eq_nonneg(const IntMat& A, const IntVec& b,
                          const std::function<bool(const IntVec&)>& visit) {
  size_t m = A.rows(), n = A.cols();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j)
      if (A(i, j) < 0) throw std::invalid_argument("ilp_points_eq_nonneg: A must be nonnegative");
  for (size_t j = 0; j < n; ++j) {
    bool pos = false;
    for (size_t i = 0; i < m; ++i) pos = pos || A(i, j) > 0;
    if (!pos) throw std::invalid_argument("ilp_points_eq_nonneg: zero column");
  }
  IntVec z(n, 0);
  bool stop = false;
  // Depth-first with remainder pruning; every column has a positive entry so
  // each level has a finite cap.
  std::function<void(size_t, const IntVec&)> rec = [&](size_t j, const IntVec& rem) {
    if (stop) return;
    for (size_t i = 0; i < m; ++i)
      if (rem[i] < 0) return;
    if (j == n) {
      for (size_t i = 0; i < m; ++i)
        if (rem[i] != 0) return;
      if (!visit(z)) stop = true;
      return;
    }
    Int cap = -1;
    for (size_t i = 0; i < m; ++i) {
      if (A(i, j) == 0) continue;
      Int c = rem[i] / A(i, j);
      cap = (cap < 0) ? c : std::min(cap, c);
    }
    for (Int v = 0; v <= cap && !stop; ++v) {
      z[j] = v;
      IntVec next = rem;
      for (size_t i = 0; i < m; ++i) next[i] -= A(i, j) * v;
      rec(j + 1, next);
    }
    z[j] = 0;
  };
  rec(0, b);
}

}  // namespace adiclp
