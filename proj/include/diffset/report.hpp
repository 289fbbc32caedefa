#pragma once

// Machine-readable outcome of one verification step. Rows with
// Outcome::failed drive a nonzero exit from the CLI; informational rows
// record observations (unpinned constants, reported ratios) without judging.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace diffset {

enum class Outcome { passed, failed, informational };

struct VerificationReport {
    std::string suite;
    nlohmann::json instance;  // q, sets or seeds; enough to replay the row
    std::string claim;
    double lhs = 0.0;
    double rhs = 0.0;
    Outcome outcome = Outcome::informational;
    nlohmann::json witness;  // optional certificate / extremal data
    int64_t runtime_ms = 0;

    bool failed() const { return outcome == Outcome::failed; }

    // runtime_ms is excluded by default so that report streams are
    // byte-identical across runs; pass with_runtime=true to include it.
    nlohmann::json to_json(bool with_runtime = false) const {
        nlohmann::json j;
        j["suite"] = suite;
        j["instance"] = instance;
        j["claim"] = claim;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        if (outcome == Outcome::informational)
            j["pass"] = "informational";
        else
            j["pass"] = (outcome == Outcome::passed);
        if (!witness.is_null()) j["witness"] = witness;
        if (with_runtime) j["runtime_ms"] = runtime_ms;
        return j;
    }
};

inline Outcome outcome_of(bool ok) { return ok ? Outcome::passed : Outcome::failed; }

}  // namespace diffset
