#pragma once

// Curve obstructions on the minimal resolution S' of a candidate S.
//
// A curve is described by its leading coefficient m against the generator of
// the orthogonal complement of R and by its incidences with the exceptional
// chains. Only the right-hand sides of the discrepancy relations are
// evaluated; the exceptional coefficients themselves are never materialised.

#include "qhpp/rational.hpp"
#include "qhpp/surface.hpp"

#include <json.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace qhpp {

/// incidence[p][j-1] = E . A_{j,p}
using Incidence = std::vector<std::vector<BigInt>>;

/// Sign convention for the leading coefficient: E = mM + ... when K_S is
/// ample, C = -mM + ... when -K_S is ample.
enum class Regime { KAmple, AntiKAmple };

struct CurveClass {
    BigInt m;
    Regime regime = Regime::KAmple;
    SurfaceCandidate cand;
    Incidence incidence;

    CurveClass(BigInt m, Regime regime, SurfaceCandidate cand, Incidence incidence);
};

/// Zero incidence shaped like the candidate's chains.
Incidence zero_incidence(const SurfaceCandidate& cand);

/// sum_p sum_j (1 - (v_j + u_j)/q) EA_{j,p}
Rational degree_sum(const SurfaceCandidate& cand, const Incidence& inc);
inline Rational degree_sum(const CurveClass& c) { return degree_sum(c.cand, c.incidence); }

/// sqrt(D'), exact. Throws DomainError when D' is not a rational square.
Rational sqrt_d_prime(const SurfaceCandidate& cand);

Rational ek_formula(const CurveClass& c);
Rational esq_formula(const CurveClass& c);
/// Closed form for at most two incidences per chain; throws std::invalid_argument otherwise.
Rational esq_two_component(const CurveClass& c);

/// sum_{k<=j} (v_j u_k/q) EA_k + sum_{k>j} (v_k u_j/q) EA_k
Rational local_discrepancy(const CyclicSing& sing, const std::vector<BigInt>& row, std::size_t j);

/// sum_p sum_j (v_j u_j / q) EA_{j,p}^2
Rational diagonal_quadratic(const SurfaceCandidate& cand, const Incidence& inc);

/// sqrt(D') / (L - 9). Throws std::invalid_argument for L <= 9.
Rational m_upper_bound(const Rational& d_prime, long L);

/// m = sqrt(D') (1 - degree_sum) / K^2 for a minimal curve with C^2 = -1 on
/// a log del Pezzo resolution. Throws DomainError when K^2 = 0.
Rational minimal_curve_m(const SurfaceCandidate& cand, const Incidence& inc);

struct GroupConstraint {
    std::vector<std::size_t> indices;
    BigInt sum;
};

struct DiophProblem {
    std::vector<Rational> coeffs;
    Rational target;
    std::vector<GroupConstraint> groups;
    std::optional<std::vector<Rational>> quad_coeffs;
    std::optional<Rational> quad_bound;
};

using DiophSolution = std::vector<BigInt>;

/// Every non-negative integer vector with sum coeffs_i x_i = target that
/// satisfies the group sums and the quadratic bound, lexicographically sorted.
std::vector<DiophSolution> solve_dioph(const DiophProblem& problem);

nlohmann::json to_json(const DiophProblem& p);
DiophProblem dioph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<DiophSolution>& sols);

}  // namespace qhpp
