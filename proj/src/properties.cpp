#include "qhpp/properties.hpp"

#include "qhpp/enumeration.hpp"
#include "qhpp/obstruction.hpp"

#include <random>

namespace qhpp {

namespace {

struct CfTally {
    long cfs = 0;
    long lemma24 = 0;   // violations of the u/v identities (1)-(6)
    long lemma25 = 0;   // violations of the z-inequalities
    long z_vectors = 0;
    long prop22 = 0;    // mod-3 criterion disagreeing with 3 | q
    long dp_sq = 0;     // double sum != closed form
    long dp_l1 = 0;     // l = 1 formula
    std::string first_failure;

    void fail(long& counter, const HjCf& cf, const std::string& what) {
        ++counter;
        if (first_failure.empty()) first_failure = cf.str() + ": " + what;
    }
    CfTally& operator+=(const CfTally& o) {
        cfs += o.cfs;
        lemma24 += o.lemma24;
        lemma25 += o.lemma25;
        z_vectors += o.z_vectors;
        prop22 += o.prop22;
        dp_sq += o.dp_sq;
        dp_l1 += o.dp_l1;
        if (first_failure.empty()) first_failure = o.first_failure;
        return *this;
    }
};

void check_uv_identities(const HjCf& cf, CfTally& t) {
    const std::size_t l = cf.length();
    const BigInt& q = cf.order();
    auto n = [&](std::size_t j) { return cf.entry(j); };
    auto u = [&](std::size_t j) { return cf.u(j); };
    auto v = [&](std::size_t j) { return cf.v(j); };
    if (u(0) != 0 || u(1) != 1 || v(l) != 1 || v(l + 1) != 0 || u(l + 1) != q || v(0) != q || v(1) != cf.q1() ||
        u(l) != cf.ql())
        t.fail(t.lemma24, cf, "boundary values");
    for (std::size_t j = 1; j <= l; ++j) {
        if (u(j + 1) != n(j) * u(j) - u(j - 1) || v(j - 1) != n(j) * v(j) - v(j + 1)) t.fail(t.lemma24, cf, "(1)");
        if (n(j) * v(j) * u(j) != q + v(j + 1) * u(j) + v(j) * u(j - 1)) t.fail(t.lemma24, cf, "(3)");
        if (u(j) + v(j) > q) t.fail(t.lemma24, cf, "(5)");
        // (6) against a fresh evaluation of the bumped fraction
        auto bumped = cf.entries();
        bumped[j - 1] += 1;
        BigInt order = HjCf(bumped).order();
        if (order != u(j) * v(j) + q || order <= q || cf_bump(cf, j) != order) t.fail(t.lemma24, cf, "(6)");
    }
    for (std::size_t j = 0; j <= l; ++j) {
        if (v(j) * u(j + 1) - v(j + 1) * u(j) != q) t.fail(t.lemma24, cf, "(2)");
    }
    BigInt su = 0;
    for (std::size_t s = 1; s <= l; ++s) {
        su += (n(s) - 2) * u(s);
        if (su != u(s + 1) - u(s) - 1) t.fail(t.lemma24, cf, "(4) u");
    }
    BigInt sv = 0;
    for (std::size_t s = l; s >= 1; --s) {
        sv += (n(s) - 2) * v(s);
        if (sv != v(s - 1) - v(s) - 1) t.fail(t.lemma24, cf, "(4) v");
    }
}

/// Returns false when the inequality for this z fails.
bool uv_inequality(const std::vector<long>& u, const std::vector<long>& v, const std::vector<long>& z) {
    long lhs = 0, rhs = 0, total = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        lhs += (u[j] + v[j]) * z[j];
        rhs += u[j] * v[j] * z[j] * z[j];
        total += z[j];
    }
    if (total >= 3) return lhs <= rhs;
    if (total == 2) return lhs <= rhs + 2;
    if (total == 1) return lhs <= rhs + 1;
    return true;
}

void uv_vectors(const HjCf& cf, std::vector<long>& u, std::vector<long>& v) {
    u.clear();
    v.clear();
    for (std::size_t j = 1; j <= cf.length(); ++j) {
        u.push_back(cf.u(j).get_si());
        v.push_back(cf.v(j).get_si());
    }
}

/// Every z supported on at most two components with entries up to 3.
void check_uv_small_supports(const HjCf& cf, CfTally& t) {
    const std::size_t l = cf.length();
    if (l < 5) return;
    std::vector<long> u, v;
    uv_vectors(cf, u, v);
    std::vector<long> z(l, 0);
    for (std::size_t a = 0; a < l; ++a) {
        for (long za = 1; za <= 3; ++za) {
            z[a] = za;
            ++t.z_vectors;
            if (!uv_inequality(u, v, z)) t.fail(t.lemma25, cf, "z support {" + std::to_string(a + 1) + "}");
            for (std::size_t b = a + 1; b < l; ++b) {
                for (long zb = 1; zb <= 3; ++zb) {
                    z[b] = zb;
                    ++t.z_vectors;
                    if (!uv_inequality(u, v, z)) t.fail(t.lemma25, cf, "z support {a,b}");
                }
                z[b] = 0;
            }
        }
        z[a] = 0;
    }
}

CfTally check_cf(const HjCf& cf) {
    CfTally t;
    ++t.cfs;
    check_uv_identities(cf, t);
    check_uv_small_supports(cf, t);
    if (cf_mod3_criterion(cf) != (cf.order() % 3 == 0)) t.fail(t.prop22, cf, "mod-3 criterion");
    auto s = dp_data(cf);
    if (dp_sq_double_sum(s) != dp_sq_closed_form(cf)) t.fail(t.dp_sq, cf, "dp_sq");
    if (cf.length() == 1) {
        const BigInt& n = cf.entry(1);
        if (s.dp_sq != -Rational((n - 2) * (n - 2), n)) t.fail(t.dp_l1, cf, "l = 1 dp_sq");
    }
    return t;
}

}  // namespace

std::vector<DiophSolution> dioph_grid_oracle(const DiophProblem& p) {
    const std::size_t n = p.coeffs.size();
    std::vector<BigInt> hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational h = p.target / p.coeffs[i];
        hi[i] = h.sign() < 0 ? BigInt(-1) : BigInt(h.numerator() / h.denominator());
    }
    std::vector<DiophSolution> out;
    DiophSolution x(n, 0);
    // Odometer over the whole box, first coordinate most significant.
    while (true) {
        Rational lin = 0, quad = 0;
        for (std::size_t i = 0; i < n; ++i) {
            lin += p.coeffs[i] * Rational(x[i]);
            if (p.quad_coeffs) quad += (*p.quad_coeffs)[i] * Rational(x[i] * x[i]);
        }
        bool ok = lin == p.target && (!p.quad_bound || quad <= *p.quad_bound);
        for (const auto& g : p.groups) {
            BigInt s = 0;
            for (auto i : g.indices) s += x[i];
            ok = ok && s == g.sum;
        }
        if (ok) out.push_back(x);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (x[k] < hi[k]) {
                ++x[k];
                break;
            }
            x[k] = 0;
            if (k == 0) return out;
        }
        if (n == 0) return out;
    }
}

PipelineReport property_suites(const Fixtures& fx, const PropertyOptions& opts, unsigned threads) {
    PipelineReport r;
    r.pipeline = "properties";
    std::mt19937_64 rng(opts.seed);

    // Exhaustive corpus: every fraction of order <= q_max in both orientations.
    std::vector<BigInt> qs;
    for (long q = 2; q <= opts.q_max; ++q) qs.push_back(q);
    auto per_q = parallel_map(
        qs,
        [](const BigInt& q) {
            CfTally t;
            for (const auto& cf : enumerate_cfs_of_order(q)) {
                t += check_cf(cf);
                if (!(cf.reversed() == cf)) t += check_cf(cf.reversed());
            }
            return t;
        },
        threads);
    CfTally ex;
    for (const auto& t : per_q) ex += t;
    r.stage("exhaustive fractions", ex.cfs);
    r.details["exhaustive_z_vectors"] = ex.z_vectors;

    // Random long fractions with random z vectors.
    CfTally rnd;
    std::uniform_int_distribution<int> len(5, 9), entry(2, 6), zval(0, 3);
    for (long i = 0; i < opts.random_cf_cases; ++i) {
        std::vector<BigInt> e(len(rng));
        for (auto& x : e) x = entry(rng);
        HjCf cf(e);
        ++rnd.cfs;
        check_uv_identities(cf, rnd);
        std::vector<long> u, v, z(cf.length());
        uv_vectors(cf, u, v);
        for (auto& x : z) x = zval(rng);
        ++rnd.z_vectors;
        if (!uv_inequality(u, v, z)) rnd.fail(rnd.lemma25, cf, "random z");
    }
    r.stage("random (cf, z) pairs", rnd.cfs);

    r.check("u/v identities violations", 0, ex.lemma24 + rnd.lemma24);
    r.check("uv inequality violations", 0, ex.lemma25 + rnd.lemma25);
    r.check("mod-3 equivalence violations", 0, ex.prop22);
    r.check("dp_sq double sum vs closed form", 0, ex.dp_sq);
    r.check("dp_sq for l = 1", 0, ex.dp_l1);
    if (!ex.first_failure.empty() || !rnd.first_failure.empty())
        r.mismatches.push_back(ex.first_failure.empty() ? rnd.first_failure : ex.first_failure);

    // Two-support incidences: the closed form against the general formula.
    std::vector<SurfaceCandidate> cands;
    for (const auto& row : fx.rows("finite0")) cands.push_back(candidate_invariants(row.printed));
    long esq_bad = 0;
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    std::uniform_int_distribution<int> mval(1, 6), aval(0, 4), regime(0, 1);
    for (long i = 0; i < opts.random_esq_cases; ++i) {
        const auto& cand = cands[pick(rng)];
        Incidence inc = zero_incidence(cand);
        for (auto& row : inc) {
            std::uniform_int_distribution<std::size_t> comp(0, row.size() - 1);
            row[comp(rng)] = aval(rng);
            row[comp(rng)] = aval(rng);
        }
        CurveClass c(mval(rng), regime(rng) ? Regime::KAmple : Regime::AntiKAmple, cand, inc);
        if (esq_two_component(c) != esq_formula(c)) ++esq_bad;
    }
    r.stage("random two-support incidences", opts.random_esq_cases);
    r.check("esq_two_component vs esq_formula", 0, esq_bad);

    // solve_dioph against the grid oracle.
    auto rat = [](long p, long q) { return Rational(BigInt(p), BigInt(q)); };
    std::vector<DiophProblem> problems = {
        {{rat(5, 7), rat(1, 19)}, rat(134, 133), {}, {}, {}},
        {{rat(1, 3), rat(3, 5)}, rat(16, 15), {}, {}, {}},
        {{rat(1, 3), rat(1, 5), rat(1, 33)}, rat(56, 55), {}, {}, {}},
        {{rat(1, 3), rat(1, 5), rat(1, 43)}, rat(647, 645), {}, {}, {}},
        {{rat(1, 3), rat(1, 5), rat(1, 43)}, rat(649, 645), {}, {}, {}},
    };
    const long worked_instances = static_cast<long>(problems.size());
    std::uniform_int_distribution<int> nvars(1, 3), num(1, 4), den(1, 9), tnum(0, 18), tden(1, 9), coin(0, 3);
    for (long i = 0; i < opts.random_dioph_cases; ++i) {
        DiophProblem p;
        const int n = nvars(rng);
        for (int k = 0; k < n; ++k) p.coeffs.push_back(rat(num(rng), den(rng)));
        p.target = rat(tnum(rng), tden(rng));
        if (p.target > Rational(2)) p.target = p.target / Rational(4);
        if (coin(rng) == 0) {
            std::vector<Rational> qc;
            for (int k = 0; k < n; ++k) qc.push_back(rat(num(rng) - 1, den(rng)));
            p.quad_coeffs = qc;
            p.quad_bound = rat(tnum(rng), tden(rng));
        }
        if (n >= 2 && coin(rng) == 1) p.groups.push_back({{0, 1}, BigInt(coin(rng) + 1)});
        problems.push_back(std::move(p));
    }
    auto agree = parallel_map(
        problems, [](const DiophProblem& p) { return solve_dioph(p) == dioph_grid_oracle(p); }, threads);
    long dioph_bad = 0;
    for (std::size_t i = 0; i < agree.size(); ++i) {
        if (!agree[i]) {
            ++dioph_bad;
            r.mismatches.push_back("solve_dioph disagrees with the grid on " + to_json(problems[i]).dump());
        }
    }
    r.stage("Diophantine instances", static_cast<long>(problems.size()));
    r.details["worked_dioph_instances"] = worked_instances;
    r.check("solve_dioph vs grid oracle", 0, dioph_bad);
    return r;
}

}  // namespace qhpp
