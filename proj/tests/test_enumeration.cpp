#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qhpp/enumeration.hpp"

#include <map>

using namespace qhpp;

namespace {

Rational R(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

const Fixtures& fx() {
    static const Fixtures f = Fixtures::load();
    return f;
}

std::vector<long> longs(const HjCf& cf) {
    std::vector<long> out;
    for (const auto& n : cf.entries()) out.push_back(n.get_si());
    return out;
}

/// Brute force over 2 <= q1 < q2 < q3 < q4 <= bound, pairwise coprime, e_orb >= 0.
std::vector<std::vector<long>> brute_tuples(long bound) {
    std::vector<std::vector<long>> out;
    auto term = [](long q) { return oracle::Q(q - 1, q); };
    for (long a = 2; a <= bound; ++a)
        for (long b = a + 1; b <= bound; ++b)
            for (long c = b + 1; c <= bound; ++c) {
                if (term(a) + term(b) + term(c) > 3) break;
                for (long d = c + 1; d <= bound; ++d) {
                    if (term(a) + term(b) + term(c) + term(d) > 3) break;
                    if (std::gcd(a, b) * std::gcd(a, c) * std::gcd(a, d) * std::gcd(b, c) * std::gcd(b, d) *
                            std::gcd(c, d) !=
                        1)
                        continue;
                    out.push_back({a, b, c, d});
                }
            }
    return out;
}

const PipelineReport& report(const std::string& name) {
    static std::map<std::string, PipelineReport> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, run_pipeline(name, fx(), 0, 0)).first;
    return it->second;
}

std::string actual(const PipelineReport& r, const std::string& check) {
    const Check* c = r.find_check(check);
    REQUIRE_MESSAGE(c != nullptr, check);
    return c->actual;
}

}  // namespace

TEST_CASE("parallel_map keeps input order and rethrows") {
    std::vector<int> in(1000);
    for (int i = 0; i < 1000; ++i) in[i] = i;
    auto out = parallel_map(in, [](int x) { return x * x; }, 8);
    for (int i = 0; i < 1000; ++i) CHECK(out[i] == i * i);
    CHECK_THROWS_AS(parallel_map(in, [](int x) { if (x == 500) throw std::runtime_error("x"); return x; }, 4),
                    std::runtime_error);
    CHECK(parallel_map(std::vector<int>{}, [](int x) { return x; }).empty());
}

TEST_CASE("order tuples agree with brute force") {
    auto fams = enumerate_order_tuples(120);
    std::set<std::vector<long>> mine;
    for (const auto& f : fams) {
        for (const auto& t : f.instantiate()) {
            std::vector<long> v;
            for (const auto& x : t) v.push_back(x.get_si());
            mine.insert(v);
        }
    }
    auto brute = brute_tuples(120);
    CHECK(mine == std::set<std::vector<long>>(brute.begin(), brute.end()));

    REQUIRE(fams.size() == 3);
    CHECK(fams[0].str() == "(2,3,5,q) 7 <= q, gcd(q,30)=1");
    CHECK_FALSE(fams[0].free_slot->max_q.has_value());
    CHECK(fams[1].free_slot->min_q == 11);
    CHECK(*fams[1].free_slot->max_q == 41);
    std::vector<long> sevens;
    for (const auto& q : fams[1].free_slot->instances) sevens.push_back(q.get_si());
    CHECK(sevens == std::vector<long>{11, 13, 17, 19, 23, 25, 29, 31, 37, 41});
    CHECK(fams[2].str() == "(2,3,11,13)");
}

TEST_CASE("type counts for the finite families") {
    long total = 0;
    for (long q : {11, 13, 17, 19, 23, 25, 29, 31, 37, 41}) {
        auto t = types_for_orders({2, 3, 7, q});
        CHECK(static_cast<long>(t.size()) == 4 * (euler_phi(q).get_si() + 2));
        total += static_cast<long>(t.size());
    }
    CHECK(total == 1008);
    CHECK(types_for_orders({2, 3, 11, 13}).size() == 84);
}

TEST_CASE("table1 pipeline") {
    const auto& r = report("table1");
    CHECK(r.matches_fixture());
    CHECK(r.stages_monotone());
    REQUIRE(r.stages.size() == 2);
    CHECK(r.stages[0].second == 1092);
    CHECK(r.stages[1].second == 24);
    for (const auto& s : r.survivors) {
        std::vector<std::vector<long>> sings;
        for (const auto& x : s.sings) sings.push_back(longs(x.cf));
        CHECK(s.ks2 == Rational(BigInt(oracle::ks2(sings).get_num()), BigInt(oracle::ks2(sings).get_den())));
        CHECK(s.d_square());
    }
}

TEST_CASE("noA2 closed forms and mod-3 witness") {
    auto r = noA2_scan(200, fx(), 0);
    CHECK(r.matches_fixture());
    CHECK(r.stages.back().second == 0);
    CHECK(r.details["three_divides_N"] == 0);
    CHECK_THROWS(noA2_scan(5, fx(), 0));
}

TEST_CASE("trace windows") {
    // A4: {3l-3, 3l-2}; [3,2]: {3l-5, 3l-4}; [5]: {3l-8, 3l-7}; clamped below at 2l, L <= 11
    struct Want {
        HjCf third;
        long lo, hi;
    };
    for (const auto& [third, lo, hi] : {Want{HjCf{2, 2, 2, 2}, -3, -2}, Want{HjCf{3, 2}, -5, -4}, Want{HjCf{5}, -8, -7}}) {
        const std::size_t max_l = 11 - 2 - third.length();
        for (std::size_t l = 1; l <= max_l + 2; ++l) {
            const long L = static_cast<long>(l);
            const long a = std::max(3 * L + lo, 2 * L), b = 3 * L + hi;
            auto w = q20_trace_window(third, l);
            if (l > max_l || b < a) {
                CHECK_FALSE(w);
                continue;
            }
            REQUIRE(w);
            CHECK(w->first == a);
            CHECK(w->second == b);
        }
    }
}

TEST_CASE("every BMY-compatible case lies inside a trace window") {
    // brute force over all fractions of each admissible length with a generous trace range
    for (const auto& third : {HjCf{2, 2, 2, 2}, HjCf{3, 2}, HjCf{5}}) {
        auto cases = q20_cases(third);
        std::set<HjCf> mine(cases.begin(), cases.end());
        for (std::size_t l = 1; 3 + third.length() + l <= 11; ++l) {
            const long L = static_cast<long>(l);
            for (long t = 2 * L; t <= 3 * L + 4; ++t) {
                for (const auto& cf : enumerate_cfs_by_shape(l, t)) {
                    std::vector<std::vector<long>> s{{2}, {3}, longs(third), longs(cf)};
                    auto k2 = oracle::ks2(s);
                    if (k2 > 0 && k2 <= 3 * oracle::e_orb(s))
                        CHECK_MESSAGE(mine.count(cf) == 1, (third.str() + " " + cf.str()));
                }
            }
        }
    }
}

TEST_CASE("q20 pipeline: derived counts") {
    const auto& r = report("q20");
    CHECK(r.stages_monotone());
    CHECK(r.details["cases_by_third"]["[3,2]"] == 80);
    CHECK(r.details["cases_by_third"]["[5]"] == 6);
    // independent count for A4: lengths 1..5 with the windows above
    long a4 = 0;
    for (long l = 1; l <= 5; ++l)
        for (long t = std::max(3 * l - 3, 2 * l); t <= 3 * l - 2; ++t)
            a4 += static_cast<long>(enumerate_cfs_by_shape(static_cast<std::size_t>(l), t).size());
    CHECK(r.details["cases_by_third"]["[2,2,2,2]"] == a4);
    CHECK(a4 == 40);
    CHECK(r.stages[1].second == 11);
    CHECK(r.stages[2].second == 4);
    CHECK(actual(r, "BMY rows") == "[1,2,3,4]");
    CHECK(r.mismatches.empty());
    for (const char* k : {"multisets with third [2,2,2,2]", "multisets with third [3,2]", "multisets with third [5]"})
        CHECK(r.find_check(k)->pass);
}

TEST_CASE("small q pipeline: derived survivors") {
    const auto& r = report("small-q");
    // D = 260 for the printed q = 5 row, which is not a square
    auto q5 = candidate_invariants({HjCf{2}, HjCf{3}, HjCf{2, 2, 2, 2}, HjCf{3, 2}});
    CHECK(q5.ks2 == R(26, 15));
    CHECK(q5.d_value == R(260));
    CHECK_FALSE(q5.d_square());
    CHECK(r.stages[1].second == 12);
    CHECK(r.stages[2].second == 1);
    CHECK(actual(r, "BMY q") == "9");
    for (const auto& s : r.survivors) CHECK(s.d_square());
}

TEST_CASE("aggregated equations") {
    auto row2 = candidate_invariants({HjCf{2}, HjCf{2, 2}, HjCf{7}, HjCf{3, 2, 2, 2, 2, 2, 2, 2, 2}});
    auto eq = aggregated_equation(row2, R(134, 133));
    CHECK(eq.problem.coeffs == std::vector<Rational>{R(5, 7), R(1, 19)});
    CHECK(eq.sing_index == std::vector<std::size_t>{2, 3});
    CHECK(eq.multipliers[1] == std::vector<BigInt>{9, 8, 7, 6, 5, 4, 3, 2, 1});
    CHECK(solve_dioph(eq.problem).empty());
}

TEST_CASE("lemma24 and the four rationality cases") {
    CHECK(report("lemma24").matches_fixture());
    const auto& r = report("l11");
    CHECK(r.matches_fixture());
    CHECK(r.stages.back().second == 0);
    CHECK(actual(r, "case3 solutions") == "[[0,1,27],[1,1,16],[2,1,5]]");
    CHECK(actual(r, "case2 m bound") == "1/2");
    CHECK(actual(r, "case4 targets") == "[\"647/645\",\"649/645\"]");
}

TEST_CASE("Gram configurations") {
    auto configs = step34_configurations();
    REQUIRE(configs.size() == 5);
    for (const auto& c : configs) {
        auto m = c.config.matrix();
        std::vector<std::vector<long>> lm;
        for (const auto& row : m) {
            std::vector<long> r;
            for (const auto& x : row) r.push_back(x.get_si());
            lm.push_back(r);
        }
        auto d = oracle::det(lm);
        CHECK(abs(gram_determinant(c.config)) == abs(d));
        CHECK(abs(d) == c.expected_abs);
    }
    CHECK(gram_determinant(configs[0].config) == -1);
    CHECK(report("step34").matches_fixture());
}

TEST_CASE("step5 chains") {
    CHECK(step5_chains(HjCf{5}).size() == 11);
    CHECK(step5_chains(HjCf{2, 3}).size() == 16);
    CHECK(step5_chains(HjCf{2, 2, 2, 2}).size() == 11);
    CHECK_THROWS(step5_chains(HjCf{7}));
    const auto& r = report("step5");
    CHECK(r.matches_fixture());
    CHECK(r.stages_monotone());
    CHECK(r.stages.front().second == 38);
    CHECK(r.stages.back().second == 0);
}

TEST_CASE("step6 rule assignment and sweeps") {
    const auto& r = report("step6");
    CHECK(r.matches_fixture());
    CHECK(component_name(0, 1, 1) == "A");
    CHECK(component_name(3, 2, 5) == "D2");
    auto rows = fx().rows("finite0");
    auto row = [&](int no) {
        for (const auto& x : rows)
            if (x.no == no) return candidate_invariants(x.printed);
        throw std::runtime_error("row");
    };
    CHECK(step6_min_L(row(24)) == 11);
    CHECK(row(24).L == 10);
    CHECK(step6_rule(row(1)) == "A");
    CHECK(step6_rule(row(7)) == "B");
    CHECK(step6_rule(row(5)) == "C");
    CHECK(step6_rule(row(15)).empty());

    // row 15: every surviving minimal-curve triple is rejected for a stated reason
    auto sweep = minimal_curve_sweep(row(15));
    CHECK_FALSE(sweep.empty());
    for (const auto& e : sweep) {
        CHECK(e.components.size() == 3);
        CHECK(e.verdict != "open");
        if (e.verdict == "negative") CHECK(e.value.sign() < 0);
        if (e.verdict == "non-integer") {
            REQUIRE(e.m);
            CHECK_FALSE(e.m->is_integer());
        }
    }
}
