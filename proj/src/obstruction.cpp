#include "qhpp/obstruction.hpp"

#include <functional>

namespace qhpp {

namespace {

void check_shape(const SurfaceCandidate& cand, const Incidence& inc) {
    if (inc.size() != cand.sings.size())
        throw std::invalid_argument("incidence has " + std::to_string(inc.size()) + " rows for " +
                                    std::to_string(cand.sings.size()) + " singularities");
    for (std::size_t p = 0; p < inc.size(); ++p) {
        if (inc[p].size() != cand.sings[p].cf.length())
            throw std::invalid_argument("incidence row " + std::to_string(p + 1) + " has the wrong length");
        for (const auto& e : inc[p]) {
            if (e < 0) throw std::invalid_argument("incidence numbers must be >= 0");
        }
    }
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

CurveClass::CurveClass(BigInt m_, Regime regime_, SurfaceCandidate cand_, Incidence incidence_)
    : m(std::move(m_)), regime(regime_), cand(std::move(cand_)), incidence(std::move(incidence_)) {
    check_shape(cand, incidence);
}

Incidence zero_incidence(const SurfaceCandidate& cand) {
    Incidence inc;
    for (const auto& s : cand.sings) inc.emplace_back(s.cf.length(), BigInt(0));
    return inc;
}

Rational degree_sum(const SurfaceCandidate& cand, const Incidence& inc) {
    check_shape(cand, inc);
    Rational total = 0;
    for (std::size_t p = 0; p < inc.size(); ++p) {
        for (std::size_t j = 0; j < inc[p].size(); ++j) total += cand.sings[p].dp_coeffs[j] * Rational(inc[p][j]);
    }
    return total;
}

Rational sqrt_d_prime(const SurfaceCandidate& cand) {
    auto r = cand.d_prime.exact_sqrt();
    if (!r || r->sign() <= 0) throw DomainError("D' = " + cand.d_prime.str() + " is not a positive rational square");
    return *r;
}

Rational ek_formula(const CurveClass& c) {
    Rational lead = Rational(c.m) / sqrt_d_prime(c.cand) * c.cand.ks2;
    if (c.regime == Regime::AntiKAmple) lead = -lead;
    return lead - degree_sum(c);
}

Rational local_discrepancy(const CyclicSing& sing, const std::vector<BigInt>& row, std::size_t j) {
    const auto& cf = sing.cf;
    if (j < 1 || j > cf.length()) throw std::out_of_range("component index out of range");
    if (row.size() != cf.length()) throw std::invalid_argument("incidence row has the wrong length");
    BigInt num = 0;
    for (std::size_t k = 1; k <= cf.length(); ++k) {
        if (k <= j) {
            num += cf.v(j) * cf.u(k) * row[k - 1];
        } else {
            num += cf.v(k) * cf.u(j) * row[k - 1];
        }
    }
    return Rational(num, sing.q);
}

Rational esq_formula(const CurveClass& c) {
    Rational total = Rational(c.m * c.m) / sqrt_d_prime(c.cand) / sqrt_d_prime(c.cand) * c.cand.ks2;
    for (std::size_t p = 0; p < c.incidence.size(); ++p) {
        const auto& row = c.incidence[p];
        for (std::size_t j = 1; j <= row.size(); ++j) {
            if (row[j - 1] != 0) total -= local_discrepancy(c.cand.sings[p], row, j) * Rational(row[j - 1]);
        }
    }
    return total;
}

Rational esq_two_component(const CurveClass& c) {
    Rational total = Rational(c.m * c.m) / sqrt_d_prime(c.cand) / sqrt_d_prime(c.cand) * c.cand.ks2;
    for (std::size_t p = 0; p < c.incidence.size(); ++p) {
        const auto& row = c.incidence[p];
        const auto& cf = c.cand.sings[p].cf;
        const auto& q = c.cand.sings[p].q;
        std::vector<std::size_t> support;
        for (std::size_t j = 1; j <= row.size(); ++j) {
            if (row[j - 1] != 0) support.push_back(j);
        }
        if (support.size() > 2)
            throw std::invalid_argument("esq_two_component needs at most two incidences per chain");
        if (support.empty()) continue;
        std::size_t s = support.front();
        const BigInt& a = row[s - 1];
        BigInt num = cf.v(s) * cf.u(s) * a * a;
        if (support.size() == 2) {
            std::size_t t = support.back();
            const BigInt& b = row[t - 1];
            num += cf.v(t) * cf.u(t) * b * b + 2 * cf.v(t) * cf.u(s) * a * b;
        }
        total -= Rational(num, q);
    }
    return total;
}

Rational diagonal_quadratic(const SurfaceCandidate& cand, const Incidence& inc) {
    check_shape(cand, inc);
    Rational total = 0;
    for (std::size_t p = 0; p < inc.size(); ++p) {
        for (std::size_t j = 1; j <= inc[p].size(); ++j) {
            const auto& e = inc[p][j - 1];
            total += cand.sings[p].vu_over_q(j) * Rational(e * e);
        }
    }
    return total;
}

Rational m_upper_bound(const Rational& d_prime, long L) {
    if (L <= 9) throw std::invalid_argument("m_upper_bound needs L > 9");
    auto r = d_prime.exact_sqrt();
    if (!r || r->sign() <= 0) throw DomainError("D' = " + d_prime.str() + " is not a positive rational square");
    return *r / Rational(L - 9);
}

Rational minimal_curve_m(const SurfaceCandidate& cand, const Incidence& inc) {
    if (cand.ks2.sign() == 0) throw DomainError("minimal_curve_m needs K^2 != 0");
    return sqrt_d_prime(cand) * (Rational(1) - degree_sum(cand, inc)) / cand.ks2;
}

std::vector<DiophSolution> solve_dioph(const DiophProblem& pr) {
    const std::size_t n = pr.coeffs.size();
    for (const auto& c : pr.coeffs) {
        if (c.sign() <= 0) throw std::invalid_argument("Diophantine coefficients must be positive");
    }
    if (pr.quad_coeffs.has_value() != pr.quad_bound.has_value())
        throw std::invalid_argument("quadratic coefficients and bound go together");
    if (pr.quad_coeffs) {
        if (pr.quad_coeffs->size() != n) throw std::invalid_argument("quadratic coefficient count mismatch");
        for (const auto& c : *pr.quad_coeffs) {
            if (c.sign() < 0) throw std::invalid_argument("quadratic coefficients must be non-negative");
        }
    }
    std::vector<int> group_of(n, -1);
    for (std::size_t g = 0; g < pr.groups.size(); ++g) {
        for (auto i : pr.groups[g].indices) {
            if (i >= n) throw std::invalid_argument("group index out of range");
            if (group_of[i] != -1) throw std::invalid_argument("groups must be disjoint");
            group_of[i] = static_cast<int>(g);
        }
    }
    if (n == 0) return pr.target.sign() == 0 ? std::vector<DiophSolution>{{}} : std::vector<DiophSolution>{};
    if (pr.target.sign() < 0) return {};

    // Clear denominators: sum c_i x_i = T over the integers.
    BigInt den = pr.target.denominator();
    for (const auto& c : pr.coeffs) den = lcm(den, c.denominator());
    std::vector<BigInt> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = pr.coeffs[i].numerator() * (den / pr.coeffs[i].denominator());
    BigInt T = pr.target.numerator() * (den / pr.target.denominator());

    std::vector<DiophSolution> out;
    DiophSolution x(n, 0);
    std::vector<BigInt> group_sum(pr.groups.size(), 0);
    Rational quad = 0;

    std::function<void(std::size_t, const BigInt&)> rec = [&](std::size_t i, const BigInt& rest) {
        if (i == n) {
            if (rest != 0) return;
            for (std::size_t g = 0; g < pr.groups.size(); ++g) {
                if (group_sum[g] != pr.groups[g].sum) return;
            }
            out.push_back(x);
            return;
        }
        BigInt hi = rest / c[i];
        if (i + 1 == n) {
            // Last variable is forced.
            if (rest % c[i] != 0) return;
        }
        BigInt lo = (i + 1 == n) ? hi : BigInt(0);
        for (BigInt v = lo; v <= hi; ++v) {
            Rational dq = 0;
            if (pr.quad_coeffs) {
                dq = (*pr.quad_coeffs)[i] * Rational(v * v);
                if (quad + dq > *pr.quad_bound) break;  // monotone in v
            }
            int g = group_of[i];
            if (g >= 0 && group_sum[g] + v > pr.groups[g].sum) break;
            x[i] = v;
            quad += dq;
            if (g >= 0) group_sum[g] += v;
            rec(i + 1, rest - c[i] * v);
            if (g >= 0) group_sum[g] -= v;
            quad -= dq;
        }
        x[i] = 0;
    };
    rec(0, T);
    return out;
}

nlohmann::json to_json(const DiophProblem& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.str());
    nlohmann::json j = {{"coeffs", coeffs}, {"target", p.target.str()}, {"quad", nullptr}};
    if (p.quad_coeffs) {
        nlohmann::json q = nlohmann::json::array();
        for (const auto& c : *p.quad_coeffs) q.push_back(c.str());
        j["quad"] = {{"coeffs", q}, {"bound", p.quad_bound->str()}};
    }
    if (!p.groups.empty()) {
        nlohmann::json gs = nlohmann::json::array();
        for (const auto& g : p.groups) gs.push_back({{"indices", g.indices}, {"sum", g.sum.get_str()}});
        j["groups"] = gs;
    }
    return j;
}

DiophProblem dioph_from_json(const nlohmann::json& j) {
    DiophProblem p;
    for (const auto& c : j.at("coeffs")) p.coeffs.push_back(Rational::parse(c.get<std::string>()));
    p.target = Rational::parse(j.at("target").get<std::string>());
    if (j.contains("quad") && !j["quad"].is_null()) {
        std::vector<Rational> q;
        for (const auto& c : j["quad"].at("coeffs")) q.push_back(Rational::parse(c.get<std::string>()));
        p.quad_coeffs = std::move(q);
        p.quad_bound = Rational::parse(j["quad"].at("bound").get<std::string>());
    }
    if (j.contains("groups")) {
        for (const auto& g : j["groups"]) {
            p.groups.push_back({g.at("indices").get<std::vector<std::size_t>>(), parse_bigint(g.at("sum").get<std::string>())});
        }
    }
    return p;
}

nlohmann::json to_json(const std::vector<DiophSolution>& sols) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : sols) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& v : s) {
            if (v.fits_slong_p()) {
                row.push_back(v.get_si());
            } else {
                row.push_back(v.get_str());
            }
        }
        arr.push_back(row);
    }
    return arr;
}

}  // namespace qhpp
