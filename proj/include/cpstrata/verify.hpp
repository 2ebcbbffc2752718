#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpstrata/ballmodels.hpp"
#include "cpstrata/chambers.hpp"

namespace cpstrata::verify {

using nlohmann::json;

struct RunConfig {
    int degree_cap = -1;  // -1: each model's default cap
    std::map<std::string, ballmodels::CircleWeights> weights;  // keyed "n:chamber", e.g. "4:C_2"
    chambers::Boundary boundary = chambers::Boundary::Strict;
    std::string output;
    std::string format = "json";  // json | csv | text

    void validate() const;
    ballmodels::CircleWeights weights_for(int n, const std::string& chamber) const;
    int cap_or(int fallback) const { return degree_cap >= 0 ? degree_cap : fallback; }
};

RunConfig config_from_json(const json& j);
json config_to_json(const RunConfig& c);

struct CheckRecord {
    std::string suite;
    std::string name;
    bool pass = false;
    json expected;
    json computed;
    std::string note;
    double seconds = 0;
};

struct SuiteReport {
    std::vector<CheckRecord> checks;

    bool all_pass() const;
    /// Deterministic part of the report: everything except timings.
    json payload() const;
    /// payload plus a separate "timings" object.
    json to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

const std::vector<std::string>& suite_names();  // sorted; "all" is not included

/// Runs one suite, or every suite in name order for "all".
SuiteReport run_verify_suite(const std::string& suite, const RunConfig& cfg);

/// The six capacity vectors, one per four-ball chamber, with their expected labels.
std::vector<std::pair<std::vector<Rational>, std::string>> four_ball_witnesses();

}  // namespace cpstrata::verify
