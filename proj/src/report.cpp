#include "qhpp/report.hpp"

#include <sstream>

namespace qhpp {

bool PipelineReport::check(std::string name, const std::string& expected, const std::string& actual) {
    bool ok = expected == actual;
    checks.push_back({std::move(name), expected, actual, ok});
    return ok;
}

bool PipelineReport::check(std::string name, long expected, long actual) {
    return check(std::move(name), std::to_string(expected), std::to_string(actual));
}

bool PipelineReport::check_true(std::string name, bool ok, const std::string& detail) {
    checks.push_back({std::move(name), "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
    return ok;
}

bool PipelineReport::stages_monotone() const {
    for (std::size_t i = 1; i < stages.size(); ++i) {
        if (stages[i].second > stages[i - 1].second) return false;
    }
    return true;
}

bool PipelineReport::matches_fixture() const {
    if (!mismatches.empty()) return false;
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

const Check* PipelineReport::find_check(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

nlohmann::json to_json(const PipelineReport& r) {
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& [name, n] : r.stages) stages.push_back({name, n});
    nlohmann::json survivors = nlohmann::json::array();
    for (const auto& s : r.survivors) survivors.push_back(to_json(s));
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return {
        {"pipeline", r.pipeline},
        {"stages", stages},
        {"survivors", survivors},
        {"checks", checks},
        {"mismatches", r.mismatches},
        {"details", r.details},
        {"matches_fixture", r.matches_fixture()},
    };
}

std::string to_text(const PipelineReport& r) {
    std::ostringstream os;
    os << "pipeline " << r.pipeline << "\n";
    for (const auto& [name, n] : r.stages) os << "  stage " << name << ": " << n << "\n";
    for (const auto& s : r.survivors) {
        os << "  survivor";
        for (const auto& x : s.sings) os << " " << x.cf.str();
        os << "  K^2=" << s.ks2 << "  D=" << s.d_value << "  " << s.bmy_direction() << " 3e_orb=" << s.three_e_orb()
           << "\n";
    }
    for (const auto& c : r.checks) {
        os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (c.pass) {
            os << " = " << c.actual << "\n";
        } else {
            os << ": expected " << c.expected << ", got " << c.actual << "\n";
        }
    }
    for (const auto& m : r.mismatches) os << "  diff " << m << "\n";
    os << "  matches_fixture: " << (r.matches_fixture() ? "true" : "false") << "\n";
    return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string to_csv(const PipelineReport& r) { return to_csv(to_json(r)); }

std::string to_csv(const nlohmann::json& doc) {
    std::ostringstream os;
    os << "path,value\n";
    const auto flat = doc.flatten();
    for (const auto& [path, value] : flat.items()) {
        os << csv_field(path) << "," << csv_field(value.dump()) << "\n";
    }
    return os.str();
}

nlohmann::json flat_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    nlohmann::json flat = nlohmann::json::object();
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        auto fields = csv_split(line);
        if (fields.size() != 2) throw std::runtime_error("malformed CSV line: " + line);
        flat[fields[0]] = nlohmann::json::parse(fields[1]);
    }
    return flat;
}

}  // namespace qhpp
