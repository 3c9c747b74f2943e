// SPDX-License-Identifier: Apache-2.0
#include "adiclp/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "adiclp/bounds.hpp"
#include "adiclp/certcheck.hpp"
#include "adiclp/problemfile.hpp"

namespace adiclp {

namespace {

using json = nlohmann::json;

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  return parse_problem(in);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  return json::parse(in);
}

int cmd_solve(const std::string& path, const std::string& eps_flag, bool compact,
              std::ostream& out, std::ostream& err) {
  ProblemFile pf;
  LlpInstance inst{{}, Polyhedron{}, AdicClass::dyadic()};
  try {
    pf = load_problem(path);
    if (!pf.L.dense()) throw std::invalid_argument("solve needs a dense class (not integer)");
    inst = to_instance(pf);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  Rat eps = default_epsilon();
  if (pf.eps) eps = *pf.eps;
  if (!eps_flag.empty()) {
    try {
      eps = Rat::parse(eps_flag);
    } catch (const std::exception& e) {
      err << "error: bad --eps: " << e.what() << "\n";
      return 2;
    }
  }
  LlpStats stats;
  LlpOutcome res = llp_solve(inst, eps, &stats);
  json doc = outcome_to_json(inst, res);
  if (res.o3()) {
    Rat v = dot(to_rat(inst.c), res.as_o3().xd);
    doc["value"] = (pf.minimize ? -v : v).str();
  } else if (res.o4()) {
    Rat v = dot(to_rat(inst.c), res.as_o4().xstar);
    doc["value"] = (pf.minimize ? -v : v).str();
  }
  if (pf.objective) doc["sense"] = pf.minimize ? "min" : "max";
  if (compact) {
    out << doc.dump() << "\n";
  } else {
    out << "outcome " << res.tag() << "\n" << doc.dump(2) << "\n";
  }
  if (res.o1_real()) return 10;
  if (res.o1_adic()) return 11;
  if (res.o2()) return 12;
  if (res.o3()) return 13;
  return 14;
}

int cmd_check(const std::string& inst_path, const std::string& cert_path, std::ostream& out,
              std::ostream& err) {
  LlpInstance inst{{}, Polyhedron{}, AdicClass::dyadic()};
  json doc;
  try {
    inst = to_instance(load_problem(inst_path));
    doc = load_json(cert_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    std::vector<Certificate> certs;
    if (doc.contains("species")) {
      certs.push_back(certificate_from_json(doc));
    } else if (doc.contains("certificates")) {
      for (const auto& c : doc["certificates"]) certs.push_back(certificate_from_json(c));
    } else {
      throw std::invalid_argument("certificate document needs species or certificates");
    }
    for (const auto& cert : certs) {
      Verdict v = verify(inst, cert);
      if (!v.valid) {
        err << "invalid: " << v.first_violated << "\n";
        return 20;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << "valid\n";
  return 0;
}

int cmd_hnf(const std::string& path, std::ostream& out, std::ostream& err) {
  IntMat A;
  try {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    A = read_int_matrix(in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  HnfResult h = hermite_normal_form(A);
  out << "B\n";
  write_matrix(out, h.B);
  out << "U\n";
  write_matrix(out, h.U);
  out << "kept";
  for (size_t i : h.kept_rows) out << ' ' << i;
  out << "\nzero_cols " << h.zero_cols << "\n";
  return 0;
}

// The [p_k] index of a class, when it has one.
std::optional<unsigned> bracket_index(const AdicClass& L) {
  if (L.kind() == AdicClass::Kind::Integers) return 0;
  if (L.p() == 2) return 1;  // dyadic == [2]-adic
  if (L.kind() == AdicClass::Kind::BracketPAdic) {
    for (unsigned k = 1; k <= 64; ++k)
      if (nth_prime(k) == L.p()) return k;
  }
  return std::nullopt;
}

int cmd_bounds(const std::string& path, bool want_min_support, long xi_kmax, std::ostream& out,
               std::ostream& err) {
  ProblemFile pf;
  try {
    pf = load_problem(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  json doc;
  bool all_eq = !pf.rows.empty();
  for (const auto& r : pf.rows) all_eq = all_eq && r.rel == Rel::Eq;
  IntMat A(pf.rows.size(), pf.nvars);
  IntVec b(pf.rows.size());
  for (size_t i = 0; i < pf.rows.size(); ++i) {
    for (size_t j = 0; j < pf.nvars; ++j) A(i, j) = pf.rows[i].a[j];
    b[i] = pf.rows[i].rhs;
  }
  try {
    if (all_eq) {
      json fr;
      if (pf.L.dense()) {
        KappaResult kr = kappa_equations(A, b, pf.L.p());
        if (kr.kappa)
          fr["kappa"] = *kr.kappa;
        else
          fr["kappa"] = kr.reason;
        fr["xi_bound"] = xi_upper_bound(A.cols(), std::max(Int(1), max_abs(A)), pf.L.p());
      }
      if (!fr.empty()) doc["fractionality"] = fr;

      if (auto k = bracket_index(pf.L)) {
        SupportReport rep = support_bounds(A, *k);
        json sr;
        sr["m"] = rep.m;
        sr["n"] = rep.n;
        sr["a_norm"] = rep.a_norm.get_str();
        auto put = [&](const char* name, const std::optional<Rat>& v) {
          if (v) sr[name] = v->str();
        };
        put("bound_ls", rep.bound_ls);
        put("bound_lp_general", rep.bound_lp_general);
        put("bound_lp_k0", rep.bound_lp_k0);
        put("bound_dyadic", rep.bound_dyadic);
        put("bound_01", rep.bound_01);
        if (want_min_support) {
          std::optional<IntVec> w;
          if (pf.objective) {
            w = *pf.objective;
            if (!pf.minimize)
              for (auto& v : *w) v = -v;
          }
          auto ms = min_support_bruteforce(A, b, w, pf.L);
          if (ms) sr["min_support"] = *ms;
        }
        doc["support"] = sr;
      }
      if (xi_kmax >= 0 && pf.L.dense()) {
        auto [V, wv] = to_instance(pf).P.inequality_view();
        auto xe = xi_exact_bruteforce(V, wv, pf.L.p(), static_cast<unsigned long>(xi_kmax));
        if (xe)
          doc["fractionality"]["xi_exact"] = *xe;
        else
          doc["fractionality"]["xi_exact"] = nullptr;
      }
    } else {
      if (pf.L.dense()) {
        auto [V, wv] = to_instance(pf).P.inequality_view();
        json fr;
        fr["xi_bound"] = xi_upper_bound(V.cols(), std::max(Int(1), max_abs(V)), pf.L.p());
        if (xi_kmax >= 0) {
          auto xe = xi_exact_bruteforce(V, wv, pf.L.p(), static_cast<unsigned long>(xi_kmax));
          if (xe)
            fr["xi_exact"] = *xe;
          else
            fr["xi_exact"] = nullptr;
        }
        doc["fractionality"] = fr;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_gen(const std::string& kind, const std::string& base, unsigned k, unsigned n, unsigned m,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  auto kind_of = [](const std::string& s) -> ExampleSpec::Kind {
    if (s == "eg-5.1") return ExampleSpec::Kind::Eg51;
    if (s == "eg-5.1-resigned") return ExampleSpec::Kind::Eg51Resigned;
    if (s == "eg-5.3") return ExampleSpec::Kind::Eg53;
    if (s == "kronecker-extended") return ExampleSpec::Kind::KroneckerExtended;
    throw std::invalid_argument("unknown kind \"" + s + "\"");
  };
  try {
    ExampleSpec spec;
    spec.kind = kind_of(kind);
    if (spec.kind == ExampleSpec::Kind::KroneckerExtended) spec.base = kind_of(base);
    spec.k = k;
    spec.n = n;
    spec.m = m;
    GeneratedInstance gi = gen_example(spec);

    ProblemFile pf;
    pf.nvars = gi.A.cols();
    pf.L = gi.L;
    if (gi.w) {
      pf.objective = *gi.w;
      pf.minimize = true;
      for (size_t j = 0; j < pf.nvars; ++j) pf.nonneg.push_back(j);
    }
    for (size_t i = 0; i < gi.A.rows(); ++i)
      pf.rows.push_back(ProblemFile::Row{gi.A.row(i), Rel::Eq, gi.b[i]});
    std::string text = render_problem(pf);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path);
      if (!f) throw std::invalid_argument("cannot write \"" + out_path + "\"");
      f << text;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact solvers for linear programs over dyadic, p-adic and [p]-adic rationals"};
  app.require_subcommand(1);

  std::string path, cert_path, eps_flag, out_path;
  bool compact = false, want_min_support = false;
  long xi_kmax = -1;
  std::string kind, base = "eg-5.1";
  unsigned k = 1, n = 2, m = 1;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("file", path)->required();
  solve->add_option("--eps", eps_flag, "approximation slack, e.g. 1/64");
  solve->add_flag("--json", compact, "single-line JSON output");

  auto* check = app.add_subcommand("check", "verify a certificate against an instance");
  check->add_option("instance", path)->required();
  check->add_option("certificate", cert_path)->required();

  auto* hnf = app.add_subcommand("hnf", "Hermite normal form of a matrix file");
  hnf->add_option("file", path)->required();

  auto* bounds = app.add_subcommand("bounds", "fractionality and support-size report");
  bounds->add_option("file", path)->required();
  bounds->add_flag("--min-support", want_min_support, "also brute-force the minimal support");
  bounds->add_option("--xi-exact", xi_kmax, "brute-force xi up to this k");

  auto* gen = app.add_subcommand("gen", "generate a named example instance");
  gen->add_option("--kind", kind)->required();
  gen->add_option("--base", base, "base kind for kronecker-extended");
  gen->add_option("--k", k, "[p_k] family index");
  gen->add_option("--n", n);
  gen->add_option("--m", m, "kronecker block count");
  gen->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (solve->parsed()) return cmd_solve(path, eps_flag, compact, out, err);
  if (check->parsed()) return cmd_check(path, cert_path, out, err);
  if (hnf->parsed()) return cmd_hnf(path, out, err);
  if (bounds->parsed()) return cmd_bounds(path, want_min_support, xi_kmax, out, err);
  if (gen->parsed()) return cmd_gen(kind, base, k, n, m, out_path, out, err);
  return 2;
}

}  // namespace adiclp
