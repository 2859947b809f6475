#include "qhpp/hjcf.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace qhpp {

HjCf::HjCf() { build(); }

HjCf::HjCf(std::vector<BigInt> entries) : entries_(std::move(entries)) {
    for (const auto& n : entries_) {
        if (n < 2) throw DomainError("continued fraction entries must be >= 2, got " + n.get_str());
    }
    build();
}

HjCf::HjCf(std::initializer_list<long> entries)
    : HjCf(std::vector<BigInt>(entries.begin(), entries.end())) {}

void HjCf::build() {
    const std::size_t l = entries_.size();
    u_.assign(l + 2, 0);
    v_.assign(l + 2, 0);
    u_[0] = 0;
    u_[1] = 1;
    for (std::size_t j = 1; j <= l; ++j) u_[j + 1] = entries_[j - 1] * u_[j] - u_[j - 1];
    v_[l + 1] = 0;
    v_[l] = 1;
    for (std::size_t j = l; j >= 1; --j) v_[j - 1] = entries_[j - 1] * v_[j] - v_[j + 1];
    if (l == 0) {
        // u = (0, 1), v = (1, 0): both read q = 1 for the empty chain.
        u_.assign({0, 1});
        v_.assign({1, 0});
    }
}

const BigInt& HjCf::entry(std::size_t j) const {
    if (j < 1 || j > entries_.size()) throw std::out_of_range("entry index out of range");
    return entries_[j - 1];
}

BigInt HjCf::trace() const {
    BigInt t = 0;
    for (const auto& n : entries_) t += n;
    return t;
}

const BigInt& HjCf::q1() const {
    if (empty()) throw DomainError("q_1 is undefined for the empty continued fraction");
    return v_[1];
}

const BigInt& HjCf::ql() const {
    if (empty()) throw DomainError("q_l is undefined for the empty continued fraction");
    return u_[length()];
}

HjCf HjCf::reversed() const {
    std::vector<BigInt> r(entries_.rbegin(), entries_.rend());
    return HjCf(std::move(r));
}

bool HjCf::is_canonical() const {
    return !std::lexicographical_compare(entries_.rbegin(), entries_.rend(), entries_.begin(),
                                         entries_.end());
}

HjCf HjCf::canonical() const { return is_canonical() ? *this : reversed(); }

std::string HjCf::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += entries_[i].get_str();
    }
    return s + "]";
}

std::strong_ordering operator<=>(const HjCf& a, const HjCf& b) {
    const auto& x = a.entries_;
    const auto& y = b.entries_;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        int c = cmp(x[i], y[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return x.size() <=> y.size();
}

HjCf HjCf::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw ParseError("empty continued fraction text");
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated continued fraction '" + s + "'");
        std::string body = s.substr(1, s.size() - 2);
        std::vector<BigInt> entries;
        if (!body.empty()) {
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ',')) entries.push_back(parse_bigint(item));
            if (body.back() == ',') throw ParseError("trailing comma in '" + s + "'");
        }
        try {
            return HjCf(std::move(entries));
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) throw ParseError("expected '[n1,...]' or 'q/q1', got '" + s + "'");
    BigInt q = parse_bigint(s.substr(0, slash));
    BigInt q1 = parse_bigint(s.substr(slash + 1));
    try {
        return cf_from_pair(q, q1);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

CfValue cf_evaluate(const HjCf& cf) {
    if (cf.empty()) return {1, std::nullopt};
    return {cf.order(), cf.q1()};
}

HjCf cf_from_pair(const BigInt& q, const BigInt& q1) {
    if (q < 2 || q1 < 1 || q1 >= q)
        throw std::invalid_argument("cf_from_pair needs q >= 2 and 1 <= q1 < q");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), q1.get_mpz_t());
    if (g != 1) throw std::invalid_argument("cf_from_pair needs gcd(q, q1) = 1");
    std::vector<BigInt> entries;
    BigInt num = q, den = q1;
    while (den != 0) {
        BigInt n;
        mpz_cdiv_q(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        entries.push_back(n);
        BigInt next = n * den - num;
        num = den;
        den = next;
    }
    return HjCf(std::move(entries));
}

BigInt cf_deleted_det(const HjCf& cf, const std::set<std::size_t>& deleted) {
    for (auto i : deleted) {
        if (i < 1 || i > cf.length()) throw std::out_of_range("deleted index out of range");
    }
    // Removing rows/columns of a tridiagonal matrix splits the chain into
    // independent pieces; the determinant factors over them.
    BigInt product = 1;
    std::vector<BigInt> piece;
    auto flush = [&] {
        if (!piece.empty()) product *= HjCf(piece).order();
        piece.clear();
    };
    for (std::size_t j = 1; j <= cf.length(); ++j) {
        if (deleted.count(j)) {
            flush();
        } else {
            piece.push_back(cf.entry(j));
        }
    }
    flush();
    return product;
}

BigInt cf_bump(const HjCf& cf, std::size_t j) {
    if (j < 1 || j > cf.length()) throw std::out_of_range("bump index out of range");
    auto entries = cf.entries();
    entries[j - 1] += 1;
    return HjCf(std::move(entries)).order();
}

bool cf_mod3_criterion(const HjCf& cf) {
    if (cf.empty()) throw DomainError("mod-3 criterion needs a nonempty continued fraction");
    BigInt s = cf.q1() + cf.ql() + cf.trace() * cf.order();
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), 3);
    return r != 0;
}

std::vector<HjCf> enumerate_cfs_of_order(const BigInt& q) {
    if (q < 2) throw std::invalid_argument("enumerate_cfs_of_order needs q >= 2");
    std::set<HjCf> classes;
    for (BigInt q1 = 1; q1 < q; ++q1) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), q1.get_mpz_t());
        if (g == 1) classes.insert(cf_from_pair(q, q1).canonical());
    }
    return {classes.begin(), classes.end()};
}

std::vector<HjCf> enumerate_cfs_by_shape(std::size_t length, long trace, std::optional<long> max_entry) {
    if (length < 1) throw std::invalid_argument("shape length must be >= 1");
    std::set<HjCf> classes;
    if (trace < 2 * static_cast<long>(length)) return {};
    std::vector<long> current;
    std::function<void(std::size_t, long)> rec = [&](std::size_t left, long budget) {
        if (left == 0) {
            if (budget == 0) classes.insert(HjCf(std::vector<BigInt>(current.begin(), current.end())).canonical());
            return;
        }
        long hi = budget - 2 * static_cast<long>(left - 1);
        if (max_entry) hi = std::min(hi, *max_entry);
        for (long n = 2; n <= hi; ++n) {
            current.push_back(n);
            rec(left - 1, budget - n);
            current.pop_back();
        }
    };
    rec(length, trace);
    return {classes.begin(), classes.end()};
}

BigInt euler_phi(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("euler_phi needs n >= 1");
    BigInt result = n, m = n;
    for (BigInt p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

HjCf a_chain(std::size_t n) { return HjCf(std::vector<BigInt>(n, 2)); }

std::vector<HjCf> parse_cf_list(std::string_view text) {
    std::vector<HjCf> out;
    std::string item;
    int depth = 0;
    auto flush = [&] {
        bool blank = item.find_first_not_of(" \t") == std::string::npos;
        if (blank) throw ParseError("empty item in continued fraction list");
        out.push_back(HjCf::parse(item));
        item.clear();
    };
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (depth < 0) throw ParseError("unbalanced ']' in '" + std::string(text) + "'");
        if (c == ',' && depth == 0) {
            flush();
        } else {
            item += c;
        }
    }
    if (depth != 0) throw ParseError("unbalanced '[' in '" + std::string(text) + "'");
    flush();
    return out;
}

}  // namespace qhpp
