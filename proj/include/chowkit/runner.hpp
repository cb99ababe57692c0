#pragma once

#include "chowkit/script.hpp"

#include <json.hpp>

#include <optional>

namespace chowkit {

struct RunOptions {
    uint64_t seed = 1;
    uint32_t p = 3;
    uint64_t budget = 2'000'000;
    uint64_t trials = 100;
    bool strict = false;  // uncertified h0 counts as a failure
};

struct QueryResult {
    std::string name;
    nlohmann::json value;    // exact values as strings
    std::string provenance;  // exact | certified | uncertified | stochastic | assumed
    std::optional<uint64_t> seed;
    double runtime_ms = 0.0;
    bool ok = true;
    std::string message;
};

struct Report {
    int schema = 1;
    std::vector<QueryResult> queries;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;

    bool all_ok() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

// Executes the statements in order; deterministic given options.seed.
// Errors carry the statement index/line in the message.
Report run(const Script& script, const RunOptions& options = {});

} // namespace chowkit
