#pragma once

#include "qhpp/surface.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qhpp {

/// One named expectation inside a pipeline, e.g. "types" expected 1092.
struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct PipelineReport {
    std::string pipeline;
    std::vector<std::pair<std::string, long>> stages;
    std::vector<SurfaceCandidate> survivors;
    std::vector<Check> checks;
    std::vector<std::string> mismatches;  // cell-level fixture diffs
    nlohmann::json details = nlohmann::json::object();

    void stage(std::string name, long count) { stages.emplace_back(std::move(name), count); }
    bool check(std::string name, const std::string& expected, const std::string& actual);
    bool check(std::string name, long expected, long actual);
    bool check_true(std::string name, bool ok, const std::string& detail = "");

    bool stages_monotone() const;
    bool matches_fixture() const;
    const Check* find_check(const std::string& name) const;
};

nlohmann::json to_json(const PipelineReport& r);
std::string to_text(const PipelineReport& r);

/// Two-column CSV of the flattened JSON report: JSON pointer, JSON-encoded value.
std::string to_csv(const PipelineReport& r);
std::string to_csv(const nlohmann::json& doc);
/// Parses to_csv output back into the flattened JSON form.
nlohmann::json flat_from_csv(const std::string& csv);

}  // namespace qhpp
