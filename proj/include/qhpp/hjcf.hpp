#pragma once

// Hirzebruch-Jung continued fractions [n_1, ..., n_l] = n_1 - 1/(n_2 - 1/(... - 1/n_l)).
//
// A continued fraction with all entries >= 2 encodes the resolution chain of
// the cyclic quotient singularity 1/q(1, q_1). The chain's intersection matrix
// M(-n_1, ..., -n_l) is tridiagonal, and q = |det M|.

#include "qhpp/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qhpp {

class HjCf {
public:
    /// The empty continued fraction; its order is 1 and q_1, q_l are undefined.
    HjCf();
    explicit HjCf(std::vector<BigInt> entries);
    HjCf(std::initializer_list<long> entries);

    /// Accepts "[3,2,2]", "[]" or the fraction form "19/9".
    static HjCf parse(std::string_view text);

    const std::vector<BigInt>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const BigInt& entry(std::size_t j) const;  // 1-based
    BigInt trace() const;

    const BigInt& order() const { return u_.back(); }
    /// q_1 = |[n_2, ..., n_l]|. Throws DomainError on the empty fraction.
    const BigInt& q1() const;
    /// q_l = |[n_1, ..., n_{l-1}]|. Throws DomainError on the empty fraction.
    const BigInt& ql() const;

    /// u_0 = 0, u_1 = 1, u_{j+1} = n_j u_j - u_{j-1}; valid for 0 <= j <= l+1.
    const BigInt& u(std::size_t j) const { return u_.at(j); }
    /// v_{l+1} = 0, v_l = 1, v_{j-1} = n_j v_j - v_{j+1}; valid for 0 <= j <= l+1.
    const BigInt& v(std::size_t j) const { return v_.at(j); }
    const std::vector<BigInt>& u_seq() const { return u_; }
    const std::vector<BigInt>& v_seq() const { return v_; }

    HjCf reversed() const;
    /// Lexicographic minimum of the entries and the reversed entries.
    HjCf canonical() const;
    bool is_canonical() const;

    /// "[3,2,2]".
    std::string str() const;

    friend bool operator==(const HjCf& a, const HjCf& b) { return a.entries_ == b.entries_; }
    friend std::strong_ordering operator<=>(const HjCf& a, const HjCf& b);

private:
    void build();

    std::vector<BigInt> entries_;
    std::vector<BigInt> u_;
    std::vector<BigInt> v_;
};

struct CfValue {
    BigInt q;
    std::optional<BigInt> q1;  // absent for the empty fraction
};

CfValue cf_evaluate(const HjCf& cf);

/// The unique fraction with value q/q1. Requires q >= 2, 1 <= q1 < q, gcd(q, q1) = 1.
HjCf cf_from_pair(const BigInt& q, const BigInt& q1);

/// q_{a_1, ..., a_m}: |det| of the intersection matrix with the listed
/// 1-based rows and columns removed.
BigInt cf_deleted_det(const HjCf& cf, const std::set<std::size_t>& deleted);

inline HjCf cf_reverse(const HjCf& cf) { return cf.reversed(); }
inline HjCf cf_canonical(const HjCf& cf) { return cf.canonical(); }

/// Order of [n_1, ..., n_j + 1, ..., n_l].
BigInt cf_bump(const HjCf& cf, std::size_t j);

/// (q_1 + q_l + tr * q) mod 3 != 0.
bool cf_mod3_criterion(const HjCf& cf);

/// All fractions of order q up to reversal, in canonical form, sorted.
std::vector<HjCf> enumerate_cfs_of_order(const BigInt& q);

/// All entry sequences of the given length and entry sum (entries >= 2,
/// optionally capped), up to reversal, canonical and sorted.
std::vector<HjCf> enumerate_cfs_by_shape(std::size_t length, long trace,
                                         std::optional<long> max_entry = std::nullopt);

BigInt euler_phi(const BigInt& n);

/// A_n = [2, ..., 2] with n entries.
HjCf a_chain(std::size_t n);

/// "[2],[2,2],19/9" -> three fractions. Commas inside brackets belong to the entry.
std::vector<HjCf> parse_cf_list(std::string_view text);

}  // namespace qhpp
