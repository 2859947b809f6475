#pragma once

// Invariants of cyclic quotient singularities and of Q-homology projective
// plane candidates built from them.

#include "qhpp/hjcf.hpp"
#include "qhpp/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qhpp {

struct CyclicSing {
    HjCf cf;
    BigInt q;
    std::vector<Rational> dp_coeffs;  // 1 - (v_j + u_j)/q, j = 1..l
    Rational dp_dot_k;                // D_p . K_{S'}
    Rational dp_sq;                   // D_p^2 = -dp_dot_k
    Rational ep_sq;                   // -q_l/q

    /// v_j u_j / q, the diagonal weights of the quadratic bound.
    Rational vu_over_q(std::size_t j) const;
};

CyclicSing dp_data(const HjCf& cf);

/// 2l - sum n_j + 2 - (q_1 + q_l + 2)/q.
Rational dp_sq_closed_form(const HjCf& cf);

/// D_p^2 as the quadratic form of the chain's intersection matrix on dp_coeffs.
Rational dp_sq_double_sum(const CyclicSing& s);

enum class BmyStatus { OkKAmple, ViolatesKAmple, EOrbNegative, Ok };

std::string to_string(BmyStatus s);

struct SurfaceCandidate {
    std::vector<CyclicSing> sings;
    long L = 0;
    Rational ks2_smooth;  // 9 - L
    Rational ks2;
    BigInt det_r;
    Rational d_value;
    Rational e_orb;
    BigInt c = 1;
    Rational d_prime;
    bool orders_coprime = true;

    std::vector<BigInt> orders() const;
    std::vector<HjCf> cfs() const;
    Rational three_e_orb() const { return Rational(3) * e_orb; }
    bool d_square() const { return is_positive_square(d_value); }
    /// "<", "=" or ">" comparing K^2 with 3 e_orb.
    std::string bmy_direction() const;
};

/// Throws DomainError if c < 1, if c > 1 while the orders are pairwise
/// coprime, or if c^2 does not divide det R.
SurfaceCandidate candidate_invariants(const std::vector<HjCf>& sings, const BigInt& c = 1);

BmyStatus bmy_status(const SurfaceCandidate& cand);

/// Canonical JSON (keys sorted by nlohmann's default map).
nlohmann::json to_json(const SurfaceCandidate& cand);

/// Small symmetric integer matrices given by self-intersections and
/// intersection numbers between distinct rows (0-based pairs).
struct GramConfig {
    std::vector<BigInt> diagonal;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> off_diagonal;

    std::size_t size() const { return diagonal.size(); }
    void connect(std::size_t i, std::size_t j, const BigInt& w = 1);
    std::vector<std::vector<BigInt>> matrix() const;

    /// A chain of curves with the given self-intersections starting at row `first`.
    void add_chain(std::size_t first, std::size_t count);
};

BigInt gram_determinant(const GramConfig& cfg);

/// Bareiss fraction-free elimination on a square integer matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

}  // namespace qhpp
