// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adiclp/adiclp.hpp"

namespace adiclp {

/// Line-oriented instance file:
///   vars <n>
///   set dyadic | padic <p> | bracket <p> | integer
///   [max|min c1 ... cn]
///   a1 ... an <=|=|>= b     (any number of rows)
///   [nonneg j1 j2 ...]      (1-based, ascending)
///   [eps p/q]
/// '#' starts a comment; blank lines are skipped.
struct ProblemFile {
  struct Row {
    IntVec a;
    Rel rel = Rel::Le;
    Int rhs;
  };
  size_t nvars = 0;
  AdicClass L = AdicClass::dyadic();
  std::optional<IntVec> objective;
  bool minimize = false;
  std::vector<Row> rows;
  std::vector<size_t> nonneg;  // 0-based internally
  std::optional<Rat> eps;
};

bool operator==(const ProblemFile::Row& a, const ProblemFile::Row& b);
bool operator==(const ProblemFile& a, const ProblemFile& b);

/// Throws std::invalid_argument with "line N: ..." on malformed input.
ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_string(const std::string& text);

std::string render_problem(const ProblemFile& pf);

/// Canonical instance: user rows expand in order (Eq contributes <= then the
/// negated copy), then one -x_j <= 0 row per nonneg index ascending. The
/// objective is negated when the file says min; absent objective means 0.
LlpInstance to_instance(const ProblemFile& pf);

}  // namespace adiclp
