#pragma once

#include <string>

#include "qv/harness.hpp"

namespace qv {

// JSON layout: top-level {config, summary, records[]}. Scalars are "p/q"
// strings; points carry (rho, alpha, gamma) plus the derived (q, a, c) and the
// signed shifts (u, v). Keys are emitted sorted, so parse + re-serialize is
// byte-identical.
std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

std::string report_to_csv(const Report& report);

// Identities appear in the order the formulas are presented, not
// alphabetically.
std::string report_to_markdown(const Report& report);

}  // namespace qv
