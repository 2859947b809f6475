#include "qhpp/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#ifndef QHPP_DEFAULT_FIXTURES
#define QHPP_DEFAULT_FIXTURES "fixtures/expected_tables.json"
#endif

namespace qhpp {

std::string Fixtures::default_path() {
    if (const char* env = std::getenv("QHPP_FIXTURES"); env && *env) return env;
    return QHPP_DEFAULT_FIXTURES;
}

Fixtures Fixtures::load() { return load(default_path()); }

Fixtures Fixtures::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file '" + path + "'");
    Fixtures f;
    f.path_ = path;
    try {
        in >> f.doc_;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("fixture file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!f.doc_.contains("tables") || !f.doc_.contains("coefficients"))
        throw std::runtime_error("fixture file '" + path + "' lacks tables/coefficients");
    return f;
}

std::vector<ExpectedRow> Fixtures::rows(const std::string& table) const {
    const auto& t = doc_.at("tables").at(table);
    std::vector<ExpectedRow> out;
    for (const auto& r : t) {
        ExpectedRow row;
        row.no = r.at("no").get<int>();
        for (const auto& s : r.at("sings")) {
            row.printed.push_back(HjCf::parse(s.get<std::string>()));
            row.sings.push_back(row.printed.back().canonical());
        }
        if (r.contains("orders")) {
            for (const auto& o : r["orders"]) row.orders.push_back(BigInt(o.get<long>()));
        } else {
            for (const auto& s : row.sings) row.orders.push_back(s.order());
        }
        if (r.contains("q")) row.q = BigInt(r["q"].get<long>());
        row.ks2 = Rational::parse(r.at("ks2").get<std::string>());
        row.cmp = r.at("cmp").get<std::string>();
        row.three_e_orb = Rational::parse(r.at("three_e_orb").get<std::string>());
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<CoefficientColumn> Fixtures::coefficients(const std::string& table) const {
    std::vector<CoefficientColumn> out;
    for (const auto& c : doc_.at("coefficients").at(table)) {
        CoefficientColumn col{HjCf::parse(c.at("cf").get<std::string>()), {}, {}};
        for (const auto& x : c.at("dp")) col.dp.push_back(Rational::parse(x.get<std::string>()));
        if (c.contains("vu")) {
            for (const auto& x : c["vu"]) col.vu.push_back(Rational::parse(x.get<std::string>()));
        }
        out.push_back(std::move(col));
    }
    return out;
}

std::vector<std::string> Fixtures::coefficient_tables() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : doc_.at("coefficients").items()) out.push_back(k);
    return out;
}

std::vector<HjCf> candidate_key(const SurfaceCandidate& c) {
    std::vector<HjCf> key;
    for (const auto& s : c.sings) key.push_back(s.cf.canonical());
    return key;
}

std::string cf_list_str(const std::vector<HjCf>& cfs) {
    std::string s;
    for (std::size_t i = 0; i < cfs.size(); ++i) {
        if (i) s += "+";
        s += cfs[i].str();
    }
    return s;
}

TableDiff diff_rows(const std::vector<ExpectedRow>& expected, const std::vector<SurfaceCandidate>& actual) {
    TableDiff d;
    std::map<std::vector<HjCf>, const SurfaceCandidate*> by_key;
    for (const auto& c : actual) by_key[candidate_key(c)] = &c;
    std::map<std::vector<HjCf>, bool> used;
    for (const auto& row : expected) {
        auto it = by_key.find(row.key());
        std::string tag = "row " + std::to_string(row.no) + " " + cf_list_str(row.sings);
        if (it == by_key.end()) {
            d.mismatches.push_back(tag + ": missing from survivors");
            continue;
        }
        used[row.key()] = true;
        const auto& c = *it->second;
        bool good = true;
        auto cell = [&](const std::string& name, const std::string& want, const std::string& got) {
            if (want != got) {
                d.mismatches.push_back(tag + ": " + name + " expected " + want + ", got " + got);
                good = false;
            }
        };
        std::vector<std::string> want_orders, got_orders;
        for (const auto& o : row.orders) want_orders.push_back(o.get_str());
        for (const auto& o : c.orders()) got_orders.push_back(o.get_str());
        cell("orders", nlohmann::json(want_orders).dump(), nlohmann::json(got_orders).dump());
        if (row.q) cell("q", row.q->get_str(), c.sings.back().q.get_str());
        cell("K^2", row.ks2.str(), c.ks2.str());
        cell("direction", row.cmp, c.bmy_direction());
        cell("3e_orb", row.three_e_orb.str(), c.three_e_orb().str());
        if (good) d.matched.push_back(row.no);
    }
    for (const auto& c : actual) {
        auto key = candidate_key(c);
        if (!used.count(key))
            d.mismatches.push_back("unexpected survivor " + cf_list_str(key) + " K^2 = " + c.ks2.str() + ", D = " + c.d_value.str());
    }
    return d;
}

}  // namespace qhpp
