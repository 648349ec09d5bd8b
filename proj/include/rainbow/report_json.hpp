#pragma once

// rf-report/1: machine-readable report format.  Fields mirror
// VerificationReport one to one; campaign-specific counters live under
// "details".

#include <json.hpp>

#include "rainbow/verify.hpp"

namespace rainbow {

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["schema"] = "rf-report/1";
    j["campaign"] = r.campaign;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["instances_examined"] = r.instances_examined;
    j["counterexamples"] = r.counterexamples;
    j["extremal_witnesses"] = r.extremal_witnesses;
    j["elapsed_ms"] = r.elapsed_ms;
    j["verdict"] = to_string(r.verdict);
    nlohmann::json details = nlohmann::json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    j["details"] = details;
    return j;
}

} // namespace rainbow
