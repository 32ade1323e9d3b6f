#include "modgal/serialize.hpp"

namespace modgal {

Json to_json(const QExpansion& f) {
    const FormType type = f.form_type().value_or(FormType{});
    Json j;
    j["ell"] = f.ell();
    j["N"] = type.level;
    j["k"] = type.weight;
    j["coeffs"] = std::vector<std::uint64_t>(f.coefficients().begin(), f.coefficients().end());
    return j;
}

QExpansion qexpansion_from_json(const Json& j) {
    std::optional<FormType> type;
    const auto k = j.at("k").get<std::uint64_t>();
    if (k != 0) type = FormType{j.at("N").get<std::uint64_t>(), k, {}};
    return QExpansion(j.at("ell").get<std::uint64_t>(), j.at("coeffs").get<std::vector<std::uint64_t>>(), type);
}

Json to_json(const TwistCertificate& cert) {
    Json checks = Json::array();
    for (const auto& c : cert.checks) checks.push_back({c.p, c.lhs, c.rhs});
    Json j;
    j["ell"] = cert.ell;
    j["k1"] = cert.k1;
    j["k2"] = cert.k2;
    j["i"] = cert.i;
    j["bound"] = cert.bound;
    j["extended_terms"] = cert.extended_terms;
    j["checks"] = std::move(checks);
    return j;
}

TwistCertificate certificate_from_json(const Json& j) {
    TwistCertificate cert;
    cert.ell = j.at("ell").get<std::uint64_t>();
    cert.k1 = j.at("k1").get<std::uint64_t>();
    cert.k2 = j.at("k2").get<std::uint64_t>();
    cert.i = j.at("i").get<std::uint64_t>();
    cert.bound = j.at("bound").get<std::uint64_t>();
    cert.extended_terms = j.at("extended_terms").get<std::uint64_t>();
    for (const auto& c : j.at("checks")) {
        cert.checks.push_back({c.at(0).get<std::uint64_t>(), c.at(1).get<std::uint64_t>(), c.at(2).get<std::uint64_t>()});
    }
    return cert;
}

Json to_json(const ScreeningReport& report) {
    Json j;
    j["k"] = report.k;
    j["ell"] = report.ell;
    j["bound"] = report.bound;
    j["reducible_candidate"] = report.reducible_candidate;
    j["reducible_j"] = report.reducible_j ? Json(*report.reducible_j) : Json(nullptr);
    j["dihedral_candidate"] = report.dihedral_candidate;
    j["small_image_candidate"] = report.small_image_candidate;
    j["verdict"] = report.verdict();
    return j;
}

ScreeningReport screening_from_json(const Json& j) {
    ScreeningReport r;
    r.k = j.at("k").get<std::uint64_t>();
    r.ell = j.at("ell").get<std::uint64_t>();
    r.bound = j.at("bound").get<std::uint64_t>();
    r.reducible_candidate = j.at("reducible_candidate").get<bool>();
    if (!j.at("reducible_j").is_null()) r.reducible_j = j.at("reducible_j").get<std::uint64_t>();
    r.dihedral_candidate = j.at("dihedral_candidate").get<bool>();
    r.small_image_candidate = j.at("small_image_candidate").get<bool>();
    return r;
}

Json to_json(const VerificationReport& report, bool full) {
    Json j;
    j["k"] = report.k;
    j["ell"] = report.ell;
    j["pmax"] = report.pmax;
    j["counts"] = {{"match", report.counts.match},
                   {"ambiguous_pass", report.counts.ambiguous_pass},
                   {"skipped_ramified", report.counts.skipped_ramified},
                   {"skipped_ell", report.counts.skipped_ell},
                   {"fail", report.counts.fail}};
    j["failures"] = report.failures;
    if (full) {
        Json outcomes = Json::array();
        for (const auto& o : report.outcomes) {
            outcomes.push_back({o.p, std::string(to_string(o.status)), o.observed, o.predicted});
        }
        j["outcomes"] = std::move(outcomes);
    }
    return j;
}

VerificationReport verification_from_json(const Json& j) {
    VerificationReport r;
    r.k = j.at("k").get<std::uint64_t>();
    r.ell = j.at("ell").get<std::uint64_t>();
    r.pmax = j.at("pmax").get<std::uint64_t>();
    const Json& c = j.at("counts");
    r.counts.match = c.at("match").get<std::uint64_t>();
    r.counts.ambiguous_pass = c.at("ambiguous_pass").get<std::uint64_t>();
    r.counts.skipped_ramified = c.at("skipped_ramified").get<std::uint64_t>();
    r.counts.skipped_ell = c.at("skipped_ell").get<std::uint64_t>();
    r.counts.fail = c.at("fail").get<std::uint64_t>();
    r.failures = j.at("failures").get<std::vector<std::uint64_t>>();
    if (j.contains("outcomes")) {
        for (const auto& o : j.at("outcomes")) {
            PrimeOutcome out;
            out.p = o.at(0).get<std::uint64_t>();
            out.status = outcome_status_from_string(o.at(1).get<std::string>());
            out.observed = o.at(2).get<DegreePattern>();
            out.predicted = o.at(3).get<std::vector<DegreePattern>>();
            r.outcomes.push_back(std::move(out));
        }
    }
    return r;
}

} // namespace modgal
