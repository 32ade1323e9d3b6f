#pragma once

#include "json.hpp"

#include "modgal/galrep.hpp"
#include "modgal/polyverify.hpp"
#include "modgal/qseries.hpp"
#include "modgal/twist.hpp"

namespace modgal {

using Json = nlohmann::ordered_json;

// {"ell", "N", "k", "coeffs": [a_0, ..., a_n]}
Json to_json(const QExpansion& f);
QExpansion qexpansion_from_json(const Json& j);

// {"ell", "k1", "k2", "i", "bound", "extended_terms", "checks": [[p, lhs, rhs], ...]}
Json to_json(const TwistCertificate& cert);
TwistCertificate certificate_from_json(const Json& j);

// {"k", "ell", "bound", "reducible_candidate", "reducible_j", "dihedral_candidate",
//  "small_image_candidate", "verdict"}
Json to_json(const ScreeningReport& report);
ScreeningReport screening_from_json(const Json& j);

// {"k", "ell", "pmax", "counts": {...}, "failures": [...], "outcomes": [[p, status, observed, predicted], ...]}
// Outcomes are written only when `full` is set.
Json to_json(const VerificationReport& report, bool full);
VerificationReport verification_from_json(const Json& j);

} // namespace modgal
