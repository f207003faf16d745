#pragma once

#include "json.hpp"
#include "kronctrl/controllability.hpp"

namespace kronctrl {

// JSON form of a ControllabilityReport:
//   {
//     "verdict": "controllable" | "uncontrollable" | "oracle_only",
//     "method": "theorem7" | "corollary11" | "corollary12" | "kalman_oracle",
//     "classes": [{"sigma": "p/q", "dim": d, "rank": r, "pass": bool,
//                  "members": [[i, j], ...]}],
//     "conditions": [{"name": ..., "pass": bool}],
//     "witness": ["p/q", ...] | null,
//     "witness_eigenvalue": "p/q" | null,
//     "oracle_controllable": bool | null,
//     "oracle_agreement": bool | null,
//     "note": "..."            (omitted when empty)
//   }
// Rationals are always strings, never floats.

nlohmann::json report_to_json(const ControllabilityReport& r);
/// Throws Error on a document that does not follow the layout above.
ControllabilityReport report_from_json(const nlohmann::json& j);

}  // namespace kronctrl
