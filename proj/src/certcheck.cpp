// SPDX-License-Identifier: Apache-2.0
#include "adiclp/certcheck.hpp"

#include <stdexcept>

namespace adiclp {

namespace {

using json = nlohmann::json;

struct Checker {
  const IntMat& A;
  const IntVec& b;
  const AdicClass& L;
  std::string violated;

  bool fail(const char* label) {
    if (violated.empty()) violated = label;
    return false;
  }

  void shape(const RatVec& v, size_t want, const char* what) {
    if (v.size() != want)
      throw std::invalid_argument(std::string("certificate shape mismatch: ") + what);
  }

  bool nonneg(const RatVec& v, const char* label) {
    for (const auto& e : v)
      if (e.sign() < 0) return fail(label);
    return true;
  }

  bool support_subset(const RatVec& u, const RatVec& y, const char* label) {
    for (size_t i = 0; i < u.size(); ++i)
      if (!u[i].is_zero() && y[i].is_zero()) return fail(label);
    return true;
  }

  RatVec At(const RatVec& v) const { return transpose_vec(to_rat(A), v); }

  bool combo_zero(const RatVec& v, const char* label) {
    for (const auto& e : At(v))
      if (!e.is_zero()) return fail(label);
    return true;
  }

  bool combo_equals(const RatVec& v, const IntVec& c, const char* label) {
    RatVec t = At(v);
    for (size_t j = 0; j < t.size(); ++j)
      if (t[j] != Rat(c[j])) return fail(label);
    return true;
  }

  bool combo_integral(const RatVec& v, const char* label) {
    for (const auto& e : At(v))
      if (!e.is_integer()) return fail(label);
    return true;
  }

  Rat bdot(const RatVec& v) const { return dot(to_rat(b), v); }

  bool point_feasible(const RatVec& x, const char* label) {
    RatVec Ax = mat_vec(to_rat(A), x);
    for (size_t i = 0; i < Ax.size(); ++i)
      if (Ax[i] > Rat(b[i])) return fail(label);
    return true;
  }

  bool member(const RatVec& x, const char* label) {
    for (const auto& e : x)
      if (!L.contains(e)) return fail(label);
    return true;
  }
};

Verdict run_checks(const IntMat& A, const IntVec& b, const IntVec* c, const AdicClass& L,
                   const Certificate& cert) {
  Checker k{A, b, L, {}};
  size_t m = A.rows(), n = A.cols();
  auto need_c = [&]() -> const IntVec& {
    if (!c) throw std::invalid_argument("certificate species needs an objective");
    return *c;
  };

  bool ok = std::visit(
      [&](const auto& ct) -> bool {
        using T = std::decay_t<decltype(ct)>;
        if constexpr (std::is_same_v<T, CertRealInfeasibility>) {
          k.shape(ct.y, m, "y");
          return k.nonneg(ct.y, "y >= 0") && k.combo_zero(ct.y, "A^T y = 0") &&
                 (k.bdot(ct.y).sign() < 0 || k.fail("b^T y < 0"));
        } else if constexpr (std::is_same_v<T, CertAdicInfeasibility>) {
          k.shape(ct.ybar, m, "ybar");
          k.shape(ct.ubar, m, "ubar");
          return k.support_subset(ct.ubar, ct.ybar, "supp(ubar) subseteq supp(ybar)") &&
                 k.nonneg(ct.ybar, "ybar >= 0") && k.combo_zero(ct.ybar, "A^T ybar = 0") &&
                 (k.bdot(ct.ybar).is_zero() || k.fail("b^T ybar = 0")) &&
                 k.combo_integral(ct.ubar, "A^T ubar integral") &&
                 (!L.contains(k.bdot(ct.ubar)) || k.fail("b^T ubar not in L"));
        } else if constexpr (std::is_same_v<T, CertUnboundedness>) {
          const IntVec& obj = need_c();
          k.shape(ct.x, n, "x");
          k.shape(ct.r, n, "r");
          if (!k.point_feasible(ct.x, "A x <= b")) return false;
          if (!k.member(ct.x, "membership")) return false;
          for (const auto& e : ct.r)
            if (!e.is_integer()) return k.fail("r integral");
          RatVec Ar = mat_vec(to_rat(A), ct.r);
          for (const auto& e : Ar)
            if (e.sign() > 0) return k.fail("A r <= 0");
          return dot(to_rat(obj), ct.r).sign() > 0 || k.fail("c^T r > 0");
        } else if constexpr (std::is_same_v<T, CertOptimality>) {
          const IntVec& obj = need_c();
          k.shape(ct.x, n, "x");
          k.shape(ct.y, m, "y");
          return k.point_feasible(ct.x, "A x <= b") && k.member(ct.x, "membership") &&
                 k.nonneg(ct.y, "y >= 0") && k.combo_equals(ct.y, obj, "A^T y = c") &&
                 (dot(to_rat(obj), ct.x) == k.bdot(ct.y) || k.fail("c^T x = b^T y"));
        } else if constexpr (std::is_same_v<T, CertUnattainability>) {
          const IntVec& obj = need_c();
          k.shape(ct.xstar, n, "xstar");
          k.shape(ct.ystar, m, "ystar");
          k.shape(ct.ubar, m, "ubar");
          return k.support_subset(ct.ubar, ct.ystar, "supp(ubar) subseteq supp(ystar)") &&
                 k.point_feasible(ct.xstar, "A xstar <= b") && k.nonneg(ct.ystar, "ystar >= 0") &&
                 k.combo_equals(ct.ystar, obj, "A^T ystar = c") &&
                 (dot(to_rat(obj), ct.xstar) == k.bdot(ct.ystar) ||
                  k.fail("c^T xstar = b^T ystar")) &&
                 k.combo_integral(ct.ubar, "A^T ubar integral") &&
                 (!L.contains(k.bdot(ct.ubar)) || k.fail("b^T ubar not in L"));
        } else {
          static_assert(std::is_same_v<T, CertEpsApproximation>);
          const IntVec& obj = need_c();
          k.shape(ct.xbar, n, "xbar");
          if (ct.eps.sign() <= 0) return k.fail("eps > 0");
          return k.point_feasible(ct.xbar, "A xbar <= b") && k.member(ct.xbar, "membership") &&
                 (dot(to_rat(obj), ct.xbar) >= ct.vstar - ct.eps ||
                  k.fail("c^T xbar >= vstar - eps"));
        }
      },
      cert);
  return Verdict{ok, k.violated};
}

}  // namespace

Verdict verify(const Polyhedron& P, const AdicClass& L, const Certificate& cert) {
  auto [V, w] = P.inequality_view();
  return run_checks(V, w, nullptr, L, cert);
}

Verdict verify(const LlpInstance& inst, const Certificate& cert) {
  auto [V, w] = inst.P.inequality_view();
  return run_checks(V, w, &inst.c, inst.L, cert);
}

std::vector<Certificate> outcome_certificates(const LlpInstance& inst, const LlpOutcome& out) {
  std::vector<Certificate> certs;
  if (out.o1_real()) {
    certs.push_back(CertRealInfeasibility{out.as_o1_real().u});
  } else if (out.o1_adic()) {
    certs.push_back(CertAdicInfeasibility{out.as_o1_adic().ybar, out.as_o1_adic().ubar});
  } else if (out.o2()) {
    RatVec r = to_rat(out.as_o2().r);
    certs.push_back(CertUnboundedness{out.as_o2().xf, std::move(r)});
  } else if (out.o3()) {
    certs.push_back(CertOptimality{out.as_o3().xd, out.as_o3().ystar});
  } else {
    const auto& o = out.as_o4();
    certs.push_back(CertUnattainability{o.xstar, o.ystar, o.ubar});
    auto [V, w] = inst.P.inequality_view();
    (void)V;
    Rat vstar = dot(to_rat(w), o.ystar);
    certs.push_back(CertEpsApproximation{o.xeps, o.eps, std::move(vstar)});
  }
  return certs;
}

Verdict verify_outcome(const LlpInstance& inst, const LlpOutcome& out) {
  for (const Certificate& cert : outcome_certificates(inst, out)) {
    Verdict v = verify(inst, cert);
    if (!v.valid) return v;
  }
  return Verdict{true, {}};
}

std::string species_name(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CertRealInfeasibility>) return "real-infeasibility";
        if constexpr (std::is_same_v<T, CertAdicInfeasibility>) return "adic-infeasibility";
        if constexpr (std::is_same_v<T, CertUnboundedness>) return "unboundedness";
        if constexpr (std::is_same_v<T, CertOptimality>) return "optimality";
        if constexpr (std::is_same_v<T, CertUnattainability>) return "unattainability";
        if constexpr (std::is_same_v<T, CertEpsApproximation>) return "eps-approximation";
      },
      cert);
}

namespace {

json vec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.str());
  return a;
}

RatVec vec_from(const json& a) {
  if (!a.is_array()) throw std::invalid_argument("certificate: array of rationals expected");
  RatVec v;
  v.reserve(a.size());
  for (const auto& e : a) v.push_back(Rat::parse(e.get<std::string>()));
  return v;
}

Rat rat_from(const json& e) { return Rat::parse(e.get<std::string>()); }

}  // namespace

json certificate_to_json(const Certificate& cert) {
  json fields;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CertRealInfeasibility>) {
          fields["y"] = vec_json(c.y);
        } else if constexpr (std::is_same_v<T, CertAdicInfeasibility>) {
          fields["ybar"] = vec_json(c.ybar);
          fields["ubar"] = vec_json(c.ubar);
        } else if constexpr (std::is_same_v<T, CertUnboundedness>) {
          fields["x"] = vec_json(c.x);
          fields["r"] = vec_json(c.r);
        } else if constexpr (std::is_same_v<T, CertOptimality>) {
          fields["x"] = vec_json(c.x);
          fields["y"] = vec_json(c.y);
        } else if constexpr (std::is_same_v<T, CertUnattainability>) {
          fields["xstar"] = vec_json(c.xstar);
          fields["ystar"] = vec_json(c.ystar);
          fields["ubar"] = vec_json(c.ubar);
        } else {
          fields["xbar"] = vec_json(c.xbar);
          fields["eps"] = c.eps.str();
          fields["vstar"] = c.vstar.str();
        }
      },
      cert);
  return json{{"species", species_name(cert)}, {"fields", fields}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.contains("species") || !j.contains("fields"))
    throw std::invalid_argument("certificate: species/fields expected");
  std::string s = j["species"].get<std::string>();
  const json& f = j["fields"];
  if (s == "real-infeasibility") return CertRealInfeasibility{vec_from(f.at("y"))};
  if (s == "adic-infeasibility")
    return CertAdicInfeasibility{vec_from(f.at("ybar")), vec_from(f.at("ubar"))};
  if (s == "unboundedness") return CertUnboundedness{vec_from(f.at("x")), vec_from(f.at("r"))};
  if (s == "optimality") return CertOptimality{vec_from(f.at("x")), vec_from(f.at("y"))};
  if (s == "unattainability")
    return CertUnattainability{vec_from(f.at("xstar")), vec_from(f.at("ystar")),
                               vec_from(f.at("ubar"))};
  if (s == "eps-approximation")
    return CertEpsApproximation{vec_from(f.at("xbar")), rat_from(f.at("eps")),
                                rat_from(f.at("vstar"))};
  throw std::invalid_argument("certificate: unknown species \"" + s + "\"");
}

json outcome_to_json(const LlpInstance& inst, const LlpOutcome& out) {
  json doc;
  doc["outcome"] = out.tag();
  json certs = json::array();
  for (const auto& c : outcome_certificates(inst, out)) certs.push_back(certificate_to_json(c));
  doc["certificates"] = std::move(certs);
  if (out.o2()) doc["point"] = vec_json(out.as_o2().xf);
  if (out.o3()) doc["point"] = vec_json(out.as_o3().xd);
  if (out.o4()) doc["point"] = vec_json(out.as_o4().xeps);
  return doc;
}

}  // namespace adiclp
