// SPDX-License-Identifier: Apache-2.0
#include "adiclp/problemfile.hpp"

#include <algorithm>
#include <sstream>

namespace adiclp {

bool operator==(const ProblemFile::Row& a, const ProblemFile::Row& b) {
  return a.a == b.a && a.rel == b.rel && a.rhs == b.rhs;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.nvars == b.nvars && a.L.kind() == b.L.kind() && a.L.p() == b.L.p() &&
         a.objective == b.objective && a.minimize == b.minimize && a.rows == b.rows &&
         a.nonneg == b.nonneg && a.eps == b.eps;
}

namespace {

[[noreturn]] void bail(size_t line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

Int parse_int_tok(const std::string& tok, size_t line) {
  try {
    Rat q = Rat::parse(tok);
    if (!q.is_integer()) bail(line, "integer expected, got \"" + tok + "\"");
    return q.num();
  } catch (const std::invalid_argument&) {
    bail(line, "bad number \"" + tok + "\"");
  }
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

}  // namespace

ProblemFile parse_problem(std::istream& in) {
  ProblemFile pf;
  enum { WantVars, WantSet, WantBody, WantTail } state = WantVars;
  bool saw_nonneg = false, saw_eps = false;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> t = tokens_of(raw);
    if (t.empty()) continue;
    if (state == WantVars) {
      if (t[0] != "vars" || t.size() != 2) bail(lineno, "expected \"vars <n>\"");
      long n = 0;
      try {
        n = std::stol(t[1]);
      } catch (const std::exception&) {
        bail(lineno, "bad variable count \"" + t[1] + "\"");
      }
      if (n < 0) bail(lineno, "vars must be nonnegative");
      pf.nvars = static_cast<size_t>(n);
      state = WantSet;
      continue;
    }
    if (state == WantSet) {
      if (t[0] != "set") bail(lineno, "expected \"set <class>\"");
      if (t.size() == 2 && t[1] == "dyadic")
        pf.L = AdicClass::dyadic();
      else if (t.size() == 2 && t[1] == "integer")
        pf.L = AdicClass::integers();
      else if (t.size() == 3 && t[1] == "padic")
        pf.L = AdicClass::padic(parse_int_tok(t[2], lineno));
      else if (t.size() == 3 && t[1] == "bracket")
        pf.L = AdicClass::bracket(parse_int_tok(t[2], lineno));
      else
        bail(lineno, "expected dyadic | padic <p> | bracket <p> | integer");
      state = WantBody;
      continue;
    }
    if ((t[0] == "max" || t[0] == "min")) {
      if (state != WantBody || pf.objective || !pf.rows.empty())
        bail(lineno, "objective must come before the rows");
      if (t.size() != pf.nvars + 1) bail(lineno, "objective needs one coefficient per variable");
      IntVec c(pf.nvars);
      for (size_t j = 0; j < pf.nvars; ++j) c[j] = parse_int_tok(t[1 + j], lineno);
      pf.objective = std::move(c);
      pf.minimize = (t[0] == "min");
      continue;
    }
    if (t[0] == "nonneg") {
      if (state == WantTail && saw_nonneg) bail(lineno, "duplicate nonneg line");
      if (saw_eps) bail(lineno, "nonneg must come before eps");
      for (size_t i = 1; i < t.size(); ++i) {
        Int j = parse_int_tok(t[i], lineno);
        if (j < 1 || j > Int(static_cast<long>(pf.nvars)))
          bail(lineno, "nonneg index out of range");
        pf.nonneg.push_back(j.get_ui() - 1);
      }
      std::sort(pf.nonneg.begin(), pf.nonneg.end());
      pf.nonneg.erase(std::unique(pf.nonneg.begin(), pf.nonneg.end()), pf.nonneg.end());
      saw_nonneg = true;
      state = WantTail;
      continue;
    }
    if (t[0] == "eps") {
      if (t.size() != 2) bail(lineno, "expected \"eps p/q\"");
      Rat e = Rat::parse(t[1]);
      if (e.sign() <= 0) bail(lineno, "eps must be positive");
      pf.eps = e;
      saw_eps = true;
      state = WantTail;
      continue;
    }
    // constraint row: a1 ... an rel b
    if (state == WantTail) bail(lineno, "rows must come before nonneg/eps");
    if (t.size() != pf.nvars + 2) bail(lineno, "row needs n coefficients, a relation and a bound");
    ProblemFile::Row row;
    row.a.resize(pf.nvars);
    for (size_t j = 0; j < pf.nvars; ++j) row.a[j] = parse_int_tok(t[j], lineno);
    const std::string& rel = t[pf.nvars];
    if (rel == "<=")
      row.rel = Rel::Le;
    else if (rel == "=")
      row.rel = Rel::Eq;
    else if (rel == ">=")
      row.rel = Rel::Ge;
    else
      bail(lineno, "relation must be <=, = or >=");
    row.rhs = parse_int_tok(t[pf.nvars + 1], lineno);
    pf.rows.push_back(std::move(row));
  }
  if (state == WantVars) bail(lineno ? lineno : 1, "empty file");
  if (state == WantSet) bail(lineno, "missing \"set\" line");
  return pf;
}

ProblemFile parse_problem_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_problem(ss);
}

std::string render_problem(const ProblemFile& pf) {
  std::ostringstream out;
  out << "vars " << pf.nvars << '\n';
  out << "set " << pf.L.str() << '\n';
  if (pf.objective) {
    out << (pf.minimize ? "min" : "max");
    for (const Int& c : *pf.objective) out << ' ' << c.get_str();
    out << '\n';
  }
  for (const auto& row : pf.rows) {
    for (const Int& a : row.a) out << a.get_str() << ' ';
    out << (row.rel == Rel::Le ? "<=" : row.rel == Rel::Eq ? "=" : ">=");
    out << ' ' << row.rhs.get_str() << '\n';
  }
  if (!pf.nonneg.empty()) {
    out << "nonneg";
    for (size_t j : pf.nonneg) out << ' ' << (j + 1);
    out << '\n';
  }
  if (pf.eps) out << "eps " << pf.eps->str() << '\n';
  return out.str();
}

LlpInstance to_instance(const ProblemFile& pf) {
  size_t n = pf.nvars;
  size_t rows = pf.nonneg.size();
  for (const auto& r : pf.rows) rows += (r.rel == Rel::Eq) ? 2 : 1;
  IntMat A(rows, n);
  IntVec b(rows);
  size_t k = 0;
  for (const auto& r : pf.rows) {
    int s = (r.rel == Rel::Ge) ? -1 : 1;
    for (size_t j = 0; j < n; ++j) A(k, j) = s < 0 ? Int(-r.a[j]) : r.a[j];
    b[k] = s < 0 ? Int(-r.rhs) : r.rhs;
    ++k;
    if (r.rel == Rel::Eq) {
      for (size_t j = 0; j < n; ++j) A(k, j) = -r.a[j];
      b[k] = -r.rhs;
      ++k;
    }
  }
  for (size_t j : pf.nonneg) {
    A(k, j) = -1;
    b[k] = 0;
    ++k;
  }
  IntVec c(n, 0);
  if (pf.objective)
    for (size_t j = 0; j < n; ++j) c[j] = pf.minimize ? Int(-(*pf.objective)[j]) : (*pf.objective)[j];
  return LlpInstance{std::move(c), Polyhedron{std::move(A), std::move(b)}, pf.L};
}

}  // namespace adiclp
