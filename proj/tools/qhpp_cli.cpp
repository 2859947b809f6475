// qhpp: command-line front end for the continued-fraction, candidate and
// pipeline machinery. Exit codes: 0 success, 1 fixture mismatch, 2 bad input.

#include "qhpp/enumeration.hpp"
#include "qhpp/properties.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace qhpp;

namespace {

enum class Format { Text, Json, Csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// json and csv render the document; text uses the caller's rendering.
void emit(Format f, const nlohmann::json& doc, const std::string& text) {
    switch (f) {
        case Format::Json: std::cout << doc.dump(2) << "\n"; break;
        case Format::Csv: std::cout << to_csv(doc); break;
        case Format::Text: std::cout << text; break;
    }
}

void emit(Format f, const PipelineReport& r) {
    switch (f) {
        case Format::Json: std::cout << to_json(r).dump(2) << "\n"; break;
        case Format::Csv: std::cout << to_csv(r); break;
        case Format::Text: std::cout << to_text(r); break;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& x : split(s, ',')) out.push_back(Rational::parse(x));
    if (out.empty()) throw ParseError("empty rational list");
    return out;
}

nlohmann::json strs(const std::vector<BigInt>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

nlohmann::json strs(const std::vector<Rational>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

int cmd_cf_info(Format f, const std::string& text) {
    HjCf cf = HjCf::parse(text);
    if (cf.empty()) throw ParseError("cf-info needs a nonempty continued fraction");
    auto s = dp_data(cf);
    std::vector<Rational> vu;
    for (std::size_t j = 1; j <= cf.length(); ++j) vu.push_back(s.vu_over_q(j));
    nlohmann::json doc = {
        {"cf", cf.str()},
        {"entries", strs(cf.entries())},
        {"canonical", cf.canonical().str()},
        {"q", cf.order().get_str()},
        {"q1", cf.q1().get_str()},
        {"ql", cf.ql().get_str()},
        {"trace", cf.trace().get_str()},
        {"u", strs(cf.u_seq())},
        {"v", strs(cf.v_seq())},
        {"dp_coeffs", strs(s.dp_coeffs)},
        {"vu_over_q", strs(vu)},
        {"dp_dot_k", s.dp_dot_k.str()},
        {"dp_sq", s.dp_sq.str()},
        {"ep_sq", s.ep_sq.str()},
    };
    std::ostringstream os;
    auto row = [&](const char* k) {
        os << k << ":";
        const auto& v = doc[k];
        if (v.is_array()) {
            for (const auto& x : v) os << " " << x.get<std::string>();
        } else {
            os << " " << v.get<std::string>();
        }
        os << "\n";
    };
    for (const char* k : {"cf", "entries", "canonical", "q", "q1", "ql", "trace", "u", "v", "dp_coeffs", "vu_over_q",
                          "dp_dot_k", "dp_sq", "ep_sq"})
        row(k);
    emit(f, doc, os.str());
    return 0;
}

int cmd_candidate(Format f, const std::string& sings, long c) {
    auto cand = candidate_invariants(parse_cf_list(sings), c);
    auto doc = to_json(cand);
    std::ostringstream os;
    os << doc.dump(2) << "\n";
    emit(f, doc, os.str());
    return 0;
}

int cmd_dioph(Format f, const std::string& coeffs, const std::string& target, const std::string& quad,
              const std::string& bound) {
    DiophProblem p;
    p.coeffs = parse_rationals(coeffs);
    p.target = Rational::parse(target);
    if (quad.empty() != bound.empty()) throw UsageError("--quad and --bound go together");
    if (!quad.empty()) {
        p.quad_coeffs = parse_rationals(quad);
        p.quad_bound = Rational::parse(bound);
    }
    auto sols = to_json(solve_dioph(p));
    if (f == Format::Text) {
        std::cout << sols.dump() << "\n";
    } else {
        emit(f, {{"problem", to_json(p)}, {"solutions", sols}}, "");
    }
    return 0;
}

int cmd_gram(Format f, const std::string& diag, const std::string& edges) {
    GramConfig g;
    for (const auto& d : split(diag, ',')) g.diagonal.push_back(parse_bigint(d));
    if (g.diagonal.empty()) throw ParseError("--diag is empty");
    for (const auto& e : split(edges, ',')) {
        auto ends = split(e, '-');
        if (ends.size() != 2) throw ParseError("edge '" + e + "' is not of the form i-j");
        long i = parse_bigint(ends[0]).get_si(), j = parse_bigint(ends[1]).get_si();
        if (i < 1 || j < 1 || i > static_cast<long>(g.size()) || j > static_cast<long>(g.size()) || i == j)
            throw ParseError("edge '" + e + "' is out of range");
        g.connect(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
    BigInt det = gram_determinant(g);
    emit(f, {{"diag", strs(g.diagonal)}, {"edges", split(edges, ',')}, {"determinant", det.get_str()}},
         det.get_str() + "\n");
    return 0;
}

PipelineReport run_named(const std::string& name, const Fixtures& fx, unsigned threads, long cap) {
    if (name == "properties") return property_suites(fx, {}, threads);
    return run_pipeline(name, fx, threads, cap);
}

int cmd_enumerate(Format f, const std::string& name, unsigned threads, long cap) {
    auto fx = Fixtures::load();
    auto r = run_named(name, fx, threads, cap);
    emit(f, r);
    return r.matches_fixture() ? 0 : 1;
}

int cmd_verify(Format f, unsigned threads) {
    auto fx = Fixtures::load();
    auto names = pipeline_names();
    names.push_back("properties");
    nlohmann::json summary = nlohmann::json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& name : names) {
        auto r = run_named(name, fx, threads, 0);
        bool ok = r.matches_fixture();
        all = all && ok;
        nlohmann::json failed = nlohmann::json::array();
        os << (ok ? "ok   " : "FAIL ") << name << "\n";
        for (const auto& c : r.checks) {
            if (c.pass) continue;
            failed.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}});
            os << "       " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
        }
        for (const auto& m : r.mismatches) os << "       diff " << m << "\n";
        summary.push_back({{"pipeline", name},
                           {"matches_fixture", ok},
                           {"checks", r.checks.size()},
                           {"failed_checks", failed},
                           {"mismatches", r.mismatches}});
    }
    os << (all ? "all pipelines match the fixtures\n" : "some pipelines differ from the fixtures\n");
    emit(f, {{"pipelines", summary}, {"matches_fixture", all}, {"fixtures", fx.path()}}, os.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Q-homology projective plane candidate checks"};
    app.require_subcommand(1, 1);

    std::string format = "text";
    unsigned threads = 0;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (0 = hardware count)");
    app.fallthrough();

    auto* cf_info = app.add_subcommand("cf-info", "Continued fraction data for [n1,...,nl] or q/q1");
    std::string cf_text;
    cf_info->add_option("cf", cf_text)->required();

    auto* candidate = app.add_subcommand("candidate", "Invariants of a list of cyclic singularities");
    std::string sings;
    long c = 1;
    candidate->add_option("--sings", sings, "e.g. \"[2],[2,2],[7],[13]\"")->required();
    candidate->add_option("--c", c, "Index of the primitive closure")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "Run one pipeline");
    std::string pipeline;
    long cap = 0;
    std::vector<std::string> choices = pipeline_names();
    choices.push_back("properties");
    enumerate->add_option("--pipeline", pipeline)->required()->check(CLI::IsMember(choices));
    enumerate->add_option("--cap", cap, "Order cap for the noA2 scan");

    auto* verify = app.add_subcommand("verify", "Run every pipeline and property suite");
    bool all = false;
    verify->add_flag("--all", all)->required();

    auto* dioph = app.add_subcommand("dioph", "Non-negative solutions of sum c_i x_i = target");
    std::string coeffs, target, quad, bound;
    dioph->add_option("--coeffs", coeffs)->required();
    dioph->add_option("--target", target)->required();
    dioph->add_option("--quad", quad, "Quadratic coefficients w_i for sum w_i x_i^2 <= bound");
    dioph->add_option("--bound", bound);

    auto* gram = app.add_subcommand("gram", "Determinant of an intersection matrix");
    std::string diag, edges;
    gram->add_option("--diag", diag, "Self-intersections, e.g. -1,-2,-3,-5")->required()->allow_extra_args(false);
    gram->add_option("--edges", edges, "1-based pairs, e.g. 1-2,1-3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Format f = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    try {
        if (*cf_info) return cmd_cf_info(f, cf_text);
        if (*candidate) return cmd_candidate(f, sings, c);
        if (*enumerate) return cmd_enumerate(f, pipeline, threads, cap);
        if (*verify) return cmd_verify(f, threads);
        if (*dioph) return cmd_dioph(f, coeffs, target, quad, bound);
        if (*gram) return cmd_gram(f, diag, edges);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
