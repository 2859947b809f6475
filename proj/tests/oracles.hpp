#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's numeric code; they work from first principles with
// plain rationals so that agreement means something.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;

/// n_1 - 1/(n_2 - 1/(... - 1/n_l)) evaluated right to left.
inline Q evaluate(const std::vector<long>& cf) {
    Q x = cf.back();
    for (std::size_t i = cf.size() - 1; i-- > 0;) x = Q(cf[i]) - 1 / x;
    return x;
}

inline Z order(const std::vector<long>& cf) {
    if (cf.empty()) return 1;
    Q x = evaluate(cf);
    x.canonicalize();
    return x.get_num();
}

/// Ceiling expansion of q/q1.
inline std::vector<long> expand(long q, long q1) {
    std::vector<long> out;
    while (q1 != 0) {
        long n = (q + q1 - 1) / q1;
        out.push_back(n);
        long r = n * q1 - q;
        q = q1;
        q1 = r;
    }
    return out;
}

inline std::vector<long> canonical(std::vector<long> cf) {
    auto r = cf;
    std::reverse(r.begin(), r.end());
    return std::min(cf, r);
}

/// Classes of order q up to reversal, as canonical entry vectors.
inline std::set<std::vector<long>> classes(long q) {
    std::set<std::vector<long>> out;
    for (long q1 = 1; q1 < q; ++q1) {
        if (std::gcd(q, q1) == 1) out.insert(canonical(expand(q, q1)));
    }
    return out;
}

/// Intersection matrix of the chain with self-intersections -n_j.
inline std::vector<std::vector<Q>> chain_matrix(const std::vector<long>& cf) {
    const std::size_t l = cf.size();
    std::vector<std::vector<Q>> m(l, std::vector<Q>(l, 0));
    for (std::size_t i = 0; i < l; ++i) {
        m[i][i] = -cf[i];
        if (i + 1 < l) m[i][i + 1] = m[i + 1][i] = 1;
    }
    return m;
}

/// Solves m x = b by Gauss-Jordan elimination over Q.
inline std::vector<Q> solve(std::vector<std::vector<Q>> m, std::vector<Q> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Q f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
    return b;
}

/// Coefficients a_j of D_p from the adjunction conditions D_p.A_j = 2 - n_j.
inline std::vector<Q> discrepancy(const std::vector<long>& cf) {
    std::vector<Q> rhs;
    for (long n : cf) rhs.push_back(2 - n);
    return solve(chain_matrix(cf), rhs);
}

inline Q dp_square(const std::vector<long>& cf) {
    auto a = discrepancy(cf);
    auto m = chain_matrix(cf);
    Q s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) s += a[i] * m[i][j] * a[j];
    return s;
}

/// K^2 of the singular surface: 9 - L - sum D_p^2.
inline Q ks2(const std::vector<std::vector<long>>& sings) {
    Q k = 9;
    for (const auto& s : sings) k -= Q(static_cast<long>(s.size())) + dp_square(s);
    return k;
}

inline Q e_orb(const std::vector<std::vector<long>>& sings) {
    Q e = 3;
    for (const auto& s : sings) e -= 1 - Q(1) / Q(order(s));
    return e;
}

/// Determinant by cofactor expansion; fine for the handful of small matrices tested.
inline Z det(const std::vector<std::vector<long>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Z total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Z term = Z(m[0][c]) * det(minor);
        total += (c % 2 == 0) ? term : Z(-term);
    }
    return total;
}

/// All non-negative x with sum c_i x_i = target, found by trying every point of the box.
inline std::vector<std::vector<long>> dioph(const std::vector<Q>& c, const Q& target) {
    std::vector<std::vector<long>> out;
    std::vector<long> x(c.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == c.size()) {
            Q s = 0;
            for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * x[k];
            if (s == target) out.push_back(x);
            return;
        }
        for (long v = 0; Q(c[i] * v) <= target; ++v) {
            x[i] = v;
            rec(i + 1);
        }
        x[i] = 0;
    };
    rec(0);
    return out;
}

}  // namespace oracle
