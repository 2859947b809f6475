#include "qhpp/surface.hpp"

#include <numeric>

namespace qhpp {

namespace {

nlohmann::json big_json(const BigInt& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

Rational CyclicSing::vu_over_q(std::size_t j) const {
    if (j < 1 || j > cf.length()) throw std::out_of_range("component index out of range");
    return Rational(cf.v(j) * cf.u(j), q);
}

CyclicSing dp_data(const HjCf& cf) {
    if (cf.empty()) throw DomainError("dp_data needs a nonempty continued fraction");
    CyclicSing s{cf, cf.order(), {}, 0, 0, 0};
    for (std::size_t j = 1; j <= cf.length(); ++j) {
        Rational a = Rational(1) - Rational(cf.v(j) + cf.u(j), s.q);
        s.dp_dot_k += a * Rational(cf.entry(j) - 2);
        s.dp_coeffs.push_back(std::move(a));
    }
    s.dp_sq = -s.dp_dot_k;
    s.ep_sq = -Rational(cf.ql(), s.q);
    if (s.dp_sq != dp_sq_closed_form(cf))
        throw std::logic_error("D_p^2 disagrees with its closed form for " + cf.str());
    return s;
}

Rational dp_sq_closed_form(const HjCf& cf) {
    if (cf.empty()) throw DomainError("closed form needs a nonempty continued fraction");
    long l = static_cast<long>(cf.length());
    return Rational(BigInt(2 * l + 2) - cf.trace()) - Rational(cf.q1() + cf.ql() + 2, cf.order());
}

Rational dp_sq_double_sum(const CyclicSing& s) {
    Rational total = 0;
    const auto& a = s.dp_coeffs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total -= a[i] * a[i] * Rational(s.cf.entries()[i]);
        if (i + 1 < a.size()) total += Rational(2) * a[i] * a[i + 1];
    }
    return total;
}

std::string to_string(BmyStatus s) {
    switch (s) {
        case BmyStatus::OkKAmple: return "OK_K_AMPLE";
        case BmyStatus::ViolatesKAmple: return "VIOLATES_K_AMPLE";
        case BmyStatus::EOrbNegative: return "E_ORB_NEGATIVE";
        case BmyStatus::Ok: return "OK";
    }
    return "?";
}

std::vector<BigInt> SurfaceCandidate::orders() const {
    std::vector<BigInt> out;
    for (const auto& s : sings) out.push_back(s.q);
    return out;
}

std::vector<HjCf> SurfaceCandidate::cfs() const {
    std::vector<HjCf> out;
    for (const auto& s : sings) out.push_back(s.cf);
    return out;
}

std::string SurfaceCandidate::bmy_direction() const {
    auto t = three_e_orb();
    if (ks2 < t) return "<";
    if (ks2 > t) return ">";
    return "=";
}

SurfaceCandidate candidate_invariants(const std::vector<HjCf>& sings, const BigInt& c) {
    if (c < 1) throw DomainError("index c must be >= 1");
    SurfaceCandidate cand;
    cand.det_r = 1;
    Rational dp_total = 0;
    Rational orbifold_defect = 0;
    for (const auto& cf : sings) {
        cand.sings.push_back(dp_data(cf));
        const auto& s = cand.sings.back();
        cand.L += static_cast<long>(cf.length());
        cand.det_r *= s.q;
        dp_total += s.dp_dot_k;
        orbifold_defect += Rational(1) - Rational(BigInt(1), s.q);
    }
    for (std::size_t i = 0; i < cand.sings.size(); ++i) {
        for (std::size_t j = i + 1; j < cand.sings.size(); ++j) {
            if (gcd(cand.sings[i].q, cand.sings[j].q) != 1) cand.orders_coprime = false;
        }
    }
    if (c != 1 && cand.orders_coprime)
        throw DomainError("pairwise coprime orders force c = 1, got c = " + c.get_str());
    if (cand.det_r % (c * c) != 0)
        throw DomainError("c^2 = " + BigInt(c * c).get_str() + " does not divide det R = " + cand.det_r.get_str());
    cand.c = c;
    cand.ks2_smooth = Rational(9 - cand.L);
    cand.ks2 = cand.ks2_smooth + dp_total;
    cand.e_orb = Rational(3) - orbifold_defect;
    cand.d_value = Rational(cand.det_r) * cand.ks2;
    cand.d_prime = cand.d_value / Rational(c * c);
    return cand;
}

BmyStatus bmy_status(const SurfaceCandidate& cand) {
    if (cand.e_orb.sign() < 0) return BmyStatus::EOrbNegative;
    // K^2 <= 0 rules out K ample; only the -K nef inequality applies and it holds.
    if (cand.ks2.sign() <= 0) return BmyStatus::Ok;
    if (cand.ks2 > cand.three_e_orb()) return BmyStatus::ViolatesKAmple;
    return BmyStatus::OkKAmple;
}

nlohmann::json to_json(const SurfaceCandidate& cand) {
    nlohmann::json sings = nlohmann::json::array();
    nlohmann::json orders = nlohmann::json::array();
    for (const auto& s : cand.sings) {
        sings.push_back(s.cf.str());
        orders.push_back(big_json(s.q));
    }
    return {
        {"sings", sings},
        {"orders", orders},
        {"L", cand.L},
        {"ks2", cand.ks2.str()},
        {"detR", big_json(cand.det_r)},
        {"D", cand.d_value.str()},
        {"D_square", cand.d_square()},
        {"three_e_orb", cand.three_e_orb().str()},
        {"bmy", to_string(bmy_status(cand))},
        {"c", big_json(cand.c)},
        {"D_prime", cand.d_prime.str()},
    };
}

void GramConfig::connect(std::size_t i, std::size_t j, const BigInt& w) {
    if (i == j || i >= size() || j >= size()) throw std::out_of_range("bad Gram edge");
    if (w < 0) throw DomainError("intersection numbers between distinct curves are >= 0");
    off_diagonal[{std::min(i, j), std::max(i, j)}] = w;
}

void GramConfig::add_chain(std::size_t first, std::size_t count) {
    for (std::size_t k = first; k + 1 < first + count; ++k) connect(k, k + 1);
}

std::vector<std::vector<BigInt>> GramConfig::matrix() const {
    std::vector<std::vector<BigInt>> m(size(), std::vector<BigInt>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) m[i][i] = diagonal[i];
    for (const auto& [ij, w] : off_diagonal) {
        m[ij.first][ij.second] = w;
        m[ij.second][ij.first] = w;
    }
    return m;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt gram_determinant(const GramConfig& cfg) { return bareiss_determinant(cfg.matrix()); }

}  // namespace qhpp
