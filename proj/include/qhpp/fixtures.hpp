#pragma once

// Expected tables shipped with the library and row-level diffing against them.

#include "qhpp/hjcf.hpp"
#include "qhpp/surface.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qhpp {

struct ExpectedRow {
    int no = 0;
    std::vector<HjCf> sings;    // canonical forms
    std::vector<HjCf> printed;  // as written in the table
    std::vector<BigInt> orders;
    std::optional<BigInt> q;  // order of the last singularity when the table lists it
    Rational ks2;
    std::string cmp;
    Rational three_e_orb;

    std::vector<HjCf> key() const { return sings; }
};

struct CoefficientColumn {
    HjCf cf;
    std::vector<Rational> dp;
    std::vector<Rational> vu;  // empty when the table omits the row
};

struct TableDiff {
    std::vector<int> matched;           // expected row numbers found among the actual rows
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

class Fixtures {
public:
    /// $QHPP_FIXTURES if set, else the file in the source tree.
    static std::string default_path();
    static Fixtures load();
    static Fixtures load(const std::string& path);

    const nlohmann::json& json() const { return doc_; }
    const std::string& path() const { return path_; }

    std::vector<ExpectedRow> rows(const std::string& table) const;
    std::vector<CoefficientColumn> coefficients(const std::string& table) const;
    std::vector<std::string> coefficient_tables() const;

private:
    nlohmann::json doc_;
    std::string path_;
};

/// Canonical key for a candidate: each singularity in canonical form, in order.
std::vector<HjCf> candidate_key(const SurfaceCandidate& c);

/// Compares survivors with expected rows cell by cell (orders, K^2,
/// direction, 3 e_orb). Extra survivors and missing rows are reported.
TableDiff diff_rows(const std::vector<ExpectedRow>& expected, const std::vector<SurfaceCandidate>& actual);

std::string cf_list_str(const std::vector<HjCf>& cfs);

}  // namespace qhpp
