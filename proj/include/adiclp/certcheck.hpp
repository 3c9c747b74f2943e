// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>

#include "adiclp/adiclp.hpp"
#include "json.hpp"

namespace adiclp {

// Every check below is a plain exact identity against the instance's
// canonical inequality rows; no solver is ever invoked here.

struct CertRealInfeasibility {
  RatVec y;
};
struct CertAdicInfeasibility {
  RatVec ybar, ubar;
};
struct CertUnboundedness {
  RatVec x, r;
};
struct CertOptimality {
  RatVec x, y;
};
struct CertUnattainability {
  RatVec xstar, ystar, ubar;
};
struct CertEpsApproximation {
  RatVec xbar;
  Rat eps;
  Rat vstar;  // relaxation value the approximation is measured against
};

using Certificate =
    std::variant<CertRealInfeasibility, CertAdicInfeasibility, CertUnboundedness, CertOptimality,
                 CertUnattainability, CertEpsApproximation>;

struct Verdict {
  bool valid = false;
  std::string first_violated;  // empty when valid
};

/// Feasibility species against a bare polyhedron.
Verdict verify(const Polyhedron& P, const AdicClass& L, const Certificate& cert);

/// Any species against a full instance.
Verdict verify(const LlpInstance& inst, const Certificate& cert);

/// Dispatches per outcome variant; for o4 both the unattainability triple and
/// the eps-approximation (against vstar = b^T ystar) must pass.
Verdict verify_outcome(const LlpInstance& inst, const LlpOutcome& out);

std::string species_name(const Certificate& cert);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json outcome_to_json(const LlpInstance& inst, const LlpOutcome& out);
/// Certificates carried by an outcome, in verification order.
std::vector<Certificate> outcome_certificates(const LlpInstance& inst, const LlpOutcome& out);

}  // namespace adiclp
