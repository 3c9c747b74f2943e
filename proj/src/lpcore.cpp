// SPDX-License-Identifier: Apache-2.0
#include "adiclp/lpcore.hpp"

#include <cassert>
#include <stdexcept>

#include "adiclp/linalg.hpp"

namespace adiclp {

namespace {

// Dense tableau for max{c^T xt : M xt = rhs, xt >= 0} built from the
// canonical inequality form with variables [x+ (n) | x- (n) | s (m)].
// Rows with negative b are scaled by -1 and receive an artificial column.
class Tableau {
 public:
  Tableau(const LpInstance& inst)
      : m_(inst.A.rows()), n_(inst.A.cols()), ncols_(2 * n_ + m_) {
    rows_.reserve(m_);
    rhs_.reserve(m_);
    basic_.reserve(m_);
    size_t n_art = 0;
    for (size_t i = 0; i < m_; ++i)
      if (inst.b[i].sign() < 0) ++n_art;
    size_t art0 = ncols_;
    ncols_ += n_art;
    size_t next_art = art0;
    for (size_t i = 0; i < m_; ++i) {
      RatVec row(ncols_, Rat(0));
      int sigma = inst.b[i].sign() < 0 ? -1 : 1;
      for (size_t j = 0; j < n_; ++j) {
        Rat a = sigma < 0 ? -inst.A(i, j) : inst.A(i, j);
        row[j] = a;
        row[n_ + j] = -a;
      }
      row[2 * n_ + i] = Rat(sigma);
      Rat r = sigma < 0 ? -inst.b[i] : inst.b[i];
      size_t basis_col;
      if (sigma < 0) {
        basis_col = next_art++;
        row[basis_col] = Rat(1);
      } else {
        basis_col = 2 * n_ + i;
      }
      rows_.push_back(std::move(row));
      rhs_.push_back(std::move(r));
      basic_.push_back(basis_col);
    }
    art0_ = art0;
  }

  bool needs_phase1() const { return ncols_ > art0_; }

  // Runs Bland's rule to optimality on the objective currently loaded in rc_.
  // Returns false when an unbounded direction is found (entering column kept
  // in last_entering_).
  bool optimize() {
    for (;;) {
      size_t enter = ncols_;
      for (size_t j = 0; j < limit_; ++j)
        if (rc_[j].sign() > 0) {
          enter = j;
          break;
        }
      if (enter == ncols_) return true;
      size_t leave = rows_.size();
      Rat best;
      for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter].sign() <= 0) continue;
        Rat ratio = rhs_[r] / rows_[r][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basic_[r] < basic_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_.size()) {
        last_entering_ = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  void pivot(size_t r, size_t j) {
    Rat piv = rows_[r][j];
    for (auto& v : rows_[r]) v /= piv;
    rhs_[r] /= piv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][j].is_zero()) continue;
      Rat f = rows_[i][j];
      for (size_t k = 0; k < ncols_; ++k) rows_[i][k] -= f * rows_[r][k];
      rhs_[i] -= f * rhs_[r];
    }
    if (!rc_[j].is_zero()) {
      Rat f = rc_[j];
      for (size_t k = 0; k < ncols_; ++k) rc_[k] -= f * rows_[r][k];
      obj_ += f * rhs_[r];
    }
    basic_[r] = j;
  }

  void load_phase1() {
    // max -(sum of artificials)
    RatVec cost(ncols_, Rat(0));
    for (size_t j = art0_; j < ncols_; ++j) cost[j] = Rat(-1);
    load_objective(cost, /*limit=*/ncols_);
  }

  void load_phase2(const RatVec& c) {
    RatVec cost(ncols_, Rat(0));
    for (size_t j = 0; j < n_; ++j) {
      cost[j] = c[j];
      cost[n_ + j] = -c[j];
    }
    load_objective(cost, /*limit=*/art0_);
  }

  // Pivots basic artificials out; rows where that is impossible are redundant
  // and get dropped.
  void drop_artificials() {
    for (size_t r = rows_.size(); r-- > 0;) {
      if (basic_[r] < art0_) continue;
      size_t j = 0;
      while (j < art0_ && rows_[r][j].is_zero()) ++j;
      if (j < art0_) {
        pivot(r, j);
      } else {
        rows_.erase(rows_.begin() + r);
        rhs_.erase(rhs_.begin() + r);
        basic_.erase(basic_.begin() + r);
      }
    }
  }

  const Rat& objective() const { return obj_; }

  RatVec primal_x() const {
    RatVec x(n_, Rat(0));
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (basic_[r] < n_)
        x[basic_[r]] += rhs_[r];
      else if (basic_[r] < 2 * n_)
        x[basic_[r] - n_] -= rhs_[r];
    }
    return x;
  }

  // Multiplier per original row, read off the slack reduced costs.
  RatVec dual_y() const {
    RatVec y(m_, Rat(0));
    for (size_t i = 0; i < m_; ++i) y[i] = -rc_[2 * n_ + i];
    return y;
  }

  RatVec ray() const {
    RatVec r(n_, Rat(0));
    size_t j = last_entering_;
    if (j < n_)
      r[j] += Rat(1);
    else if (j < 2 * n_)
      r[j - n_] -= Rat(1);
    for (size_t i = 0; i < rows_.size(); ++i) {
      size_t bj = basic_[i];
      if (bj < n_)
        r[bj] -= rows_[i][j];
      else if (bj < 2 * n_)
        r[bj - n_] += rows_[i][j];
    }
    return r;
  }

 private:
  void load_objective(const RatVec& cost, size_t limit) {
    rc_ = cost;
    limit_ = limit;
    obj_ = Rat(0);
    for (size_t r = 0; r < rows_.size(); ++r) {
      size_t bj = basic_[r];
      if (cost[bj].is_zero()) continue;
      Rat f = cost[bj];
      for (size_t k = 0; k < ncols_; ++k) rc_[k] -= f * rows_[r][k];
      obj_ += f * rhs_[r];
    }
  }

  size_t m_, n_, ncols_, art0_ = 0, limit_ = 0;
  std::vector<RatVec> rows_;
  RatVec rhs_;
  std::vector<size_t> basic_;
  RatVec rc_;
  Rat obj_;
  size_t last_entering_ = 0;
};

RatVec average(const std::vector<RatVec>& pts) {
  assert(!pts.empty());
  RatVec avg(pts[0].size(), Rat(0));
  for (const auto& p : pts)
    for (size_t j = 0; j < p.size(); ++j) avg[j] += p[j];
  Rat k(static_cast<long>(pts.size()));
  for (auto& v : avg) v /= k;
  return avg;
}

RatVec slacks(const LpInstance& inst, const RatVec& x) {
  RatVec s = mat_vec(inst.A, x);
  for (size_t i = 0; i < s.size(); ++i) s[i] = inst.b[i] - s[i];
  return s;
}

}  // namespace

LpOutcome simplex_solve(const LpInstance& inst) {
  if (inst.b.size() != inst.A.rows() || inst.c.size() != inst.A.cols())
    throw std::invalid_argument("simplex_solve: dimension mismatch");
  Tableau t(inst);
  if (t.needs_phase1()) {
    t.load_phase1();
    bool bounded = t.optimize();
    assert(bounded && "phase 1 objective is bounded by zero");
    (void)bounded;
    if (t.objective().sign() < 0) {
      // At phase-1 optimality the slack reduced costs give the Farkas vector.
      return LpOutcome{LpOutcome::Infeasible{t.dual_y()}};
    }
    t.drop_artificials();
  }
  t.load_phase2(inst.c);
  if (!t.optimize()) {
    return LpOutcome{LpOutcome::Unbounded{t.primal_x(), t.ray()}};
  }
  return LpOutcome{LpOutcome::Optimal{t.primal_x(), t.dual_y()}};
}

LpOutcome solve_lp(const LpInstance& inst) {
  LpOutcome base = simplex_solve(inst);
  if (!base.optimal()) return base;
  const auto& opt = base.as_optimal();
  const RatVec& x0 = opt.x;
  const RatVec& y0 = opt.y;
  Rat tau = dot(inst.c, x0);
  size_t m = inst.A.rows(), n = inst.A.cols();
  RatVec sl0 = slacks(inst, x0);

  std::vector<RatVec> xs{x0};
  std::vector<RatVec> ys{y0};
  std::vector<bool> in_face(m, false);
  for (size_t i = 0; i < m; ++i)
    if (y0[i].sign() > 0) in_face[i] = true;

  // Rows with zero multiplier and zero slack are ambiguous: maximize their
  // slack over the optimal face to decide.
  for (size_t i = 0; i < m; ++i) {
    if (y0[i].sign() > 0 || sl0[i].sign() > 0) continue;
    MixedLp aux;
    aux.A = inst.A;
    aux.b = inst.b;
    aux.rel.assign(m, Rel::Le);
    // append c^T x = tau
    RatMat A2(m + 1, n);
    for (size_t r = 0; r < m; ++r)
      for (size_t j = 0; j < n; ++j) A2(r, j) = inst.A(r, j);
    for (size_t j = 0; j < n; ++j) A2(m, j) = inst.c[j];
    aux.A = std::move(A2);
    aux.b.push_back(tau);
    aux.rel.push_back(Rel::Eq);
    aux.c.assign(n, Rat(0));
    for (size_t j = 0; j < n; ++j) aux.c[j] = -inst.A(i, j);
    aux.nonneg.assign(n, 0);
    LpOutcome res = solve_mixed(aux);
    if (res.unbounded()) {
      RatVec w = res.as_unbounded().x;
      const RatVec& ray = res.as_unbounded().r;
      for (size_t j = 0; j < n; ++j) w[j] += ray[j];
      xs.push_back(std::move(w));
    } else if (res.optimal()) {
      Rat sigma = inst.b[i] + dot(aux.c, res.as_optimal().x);
      if (sigma.sign() > 0)
        xs.push_back(res.as_optimal().x);
      else
        in_face[i] = true;
    } else {
      throw std::logic_error("solve_lp: auxiliary face LP infeasible");
    }
  }

  // For each face row missing from supp(y0), maximize y_i over the dual
  // optimal face to obtain a positive witness.
  for (size_t i = 0; i < m; ++i) {
    if (!in_face[i] || y0[i].sign() > 0) continue;
    MixedLp aux;
    aux.A = RatMat(n + 1, m);
    aux.b.assign(n + 1, Rat(0));
    aux.rel.assign(n + 1, Rel::Eq);
    for (size_t r = 0; r < n; ++r) {
      for (size_t jc = 0; jc < m; ++jc) aux.A(r, jc) = inst.A(jc, r);
      aux.b[r] = inst.c[r];
    }
    for (size_t jc = 0; jc < m; ++jc) aux.A(n, jc) = inst.b[jc];
    aux.b[n] = tau;
    aux.c.assign(m, Rat(0));
    aux.c[i] = Rat(1);
    aux.nonneg.assign(m, 1);
    LpOutcome res = solve_mixed(aux);
    if (res.unbounded()) {
      RatVec w = res.as_unbounded().x;
      const RatVec& ray = res.as_unbounded().r;
      for (size_t j = 0; j < m; ++j) w[j] += ray[j];
      ys.push_back(std::move(w));
    } else if (res.optimal()) {
      if (res.as_optimal().x[i].sign() <= 0)
        throw std::logic_error("solve_lp: dual face witness should be positive");
      ys.push_back(res.as_optimal().x);
    } else {
      throw std::logic_error("solve_lp: auxiliary dual LP infeasible");
    }
  }

  return LpOutcome{LpOutcome::Optimal{average(xs), average(ys)}};
}

std::vector<size_t> optimal_face_indices(const LpInstance& inst, const LpOutcome::Optimal& opt) {
  (void)inst;
  std::vector<size_t> idx;
  for (size_t i = 0; i < opt.y.size(); ++i)
    if (opt.y[i].sign() > 0) idx.push_back(i);
  return idx;
}

RatVec purify_to_vertex(const RatMat& A, const RatVec& b, const RatVec& c, const RatVec& x0) {
  size_t m = A.rows(), n = A.cols();
  RatVec x = x0;
  for (;;) {
    std::vector<size_t> tight;
    RatVec sl = mat_vec(A, x);
    for (size_t i = 0; i < m; ++i) {
      sl[i] = b[i] - sl[i];
      if (sl[i].sign() < 0) throw std::invalid_argument("purify_to_vertex: infeasible start");
      if (sl[i].is_zero()) tight.push_back(i);
    }
    // Integral kernel direction of the tight rows; row scaling keeps the
    // kernel unchanged, so clear denominators first.
    IntMat T(tight.size(), n);
    for (size_t k = 0; k < tight.size(); ++k) {
      Int l = 1;
      for (size_t j = 0; j < n; ++j) l = lcm(l, A(tight[k], j).den());
      for (size_t j = 0; j < n; ++j) {
        Rat v = A(tight[k], j) * Rat(l);
        T(k, j) = v.num();
      }
    }
    std::vector<IntVec> kern = kernel_basis(T);
    if (kern.empty()) return x;
    RatVec d(n);
    for (size_t j = 0; j < n; ++j) d[j] = Rat(kern[0][j]);
    if (dot(c, d).sign() > 0)
      for (auto& v : d) v = -v;

    auto max_step = [&](const RatVec& dir, bool& blocked) -> Rat {
      Rat lam;
      blocked = false;
      RatVec Ad = mat_vec(A, dir);
      for (size_t i = 0; i < m; ++i) {
        if (Ad[i].sign() <= 0) continue;
        Rat ratio = sl[i] / Ad[i];
        if (!blocked || ratio < lam) {
          lam = ratio;
          blocked = true;
        }
      }
      return lam;
    };
    bool blocked = false;
    Rat lam = max_step(d, blocked);
    if (!blocked) {
      if (dot(c, d).sign() < 0)
        throw std::runtime_error("purify_to_vertex: improving ray, polyhedron unbounded");
      for (auto& v : d) v = -v;
      lam = max_step(d, blocked);
      if (!blocked) throw std::runtime_error("purify_to_vertex: polyhedron contains a line");
    }
    for (size_t j = 0; j < n; ++j) x[j] += lam * d[j];
  }
}

LpInstance to_canonical(const MixedLp& mixed, CanonicalMap* map) {
  size_t m = mixed.A.rows(), n = mixed.A.cols();
  if (mixed.rel.size() != m || mixed.b.size() != m || mixed.c.size() != n)
    throw std::invalid_argument("to_canonical: dimension mismatch");
  size_t rows = 0;
  for (Rel r : mixed.rel) rows += (r == Rel::Eq) ? 2 : 1;
  size_t nn = 0;
  if (!mixed.nonneg.empty())
    for (size_t j = 0; j < n; ++j) nn += mixed.nonneg[j] ? 1 : 0;
  LpInstance inst;
  inst.A = RatMat(rows + nn, n);
  inst.b.assign(rows + nn, Rat(0));
  inst.c = mixed.c;
  CanonicalMap local;
  local.fwd.assign(m, SIZE_MAX);
  local.neg.assign(m, SIZE_MAX);
  size_t k = 0;
  for (size_t i = 0; i < m; ++i) {
    int s = (mixed.rel[i] == Rel::Ge) ? -1 : 1;
    local.fwd[i] = k;
    for (size_t j = 0; j < n; ++j) inst.A(k, j) = s < 0 ? -mixed.A(i, j) : mixed.A(i, j);
    inst.b[k] = s < 0 ? -mixed.b[i] : mixed.b[i];
    ++k;
    if (mixed.rel[i] == Rel::Eq) {
      local.neg[i] = k;
      for (size_t j = 0; j < n; ++j) inst.A(k, j) = -mixed.A(i, j);
      inst.b[k] = -mixed.b[i];
      ++k;
    }
  }
  if (!mixed.nonneg.empty())
    for (size_t j = 0; j < n; ++j)
      if (mixed.nonneg[j]) {
        local.sign_rows.push_back(k);
        inst.A(k, j) = Rat(-1);
        ++k;
      }
  if (map) *map = std::move(local);
  return inst;
}

RatVec fold_dual_to_user(const MixedLp& mixed, const CanonicalMap& map, const RatVec& y) {
  RatVec out(mixed.A.rows(), Rat(0));
  for (size_t i = 0; i < mixed.A.rows(); ++i) {
    switch (mixed.rel[i]) {
      case Rel::Le:
        out[i] = y[map.fwd[i]];
        break;
      case Rel::Ge:
        out[i] = -y[map.fwd[i]];
        break;
      case Rel::Eq:
        out[i] = y[map.fwd[i]] - y[map.neg[i]];
        break;
    }
  }
  return out;
}

LpOutcome solve_mixed(const MixedLp& mixed) { return simplex_solve(to_canonical(mixed)); }

}  // namespace adiclp
