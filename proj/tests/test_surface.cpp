#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qhpp/surface.hpp"

#include <random>

using namespace qhpp;

namespace {

std::vector<long> longs(const HjCf& cf) {
    std::vector<long> out;
    for (const auto& n : cf.entries()) out.push_back(n.get_si());
    return out;
}

Rational from(const oracle::Q& q) { return Rational(BigInt(q.get_num()), BigInt(q.get_den())); }

Rational R(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

const HjCf kRow2Long{3, 2, 2, 2, 2, 2, 2, 2, 2};

}  // namespace

TEST_CASE("discrepancy coefficients of single singularities") {
    auto seven = dp_data(HjCf{7});
    CHECK(seven.dp_coeffs == std::vector<Rational>{R(5, 7)});
    CHECK(seven.dp_dot_k == R(25, 7));
    auto a5 = dp_data(a_chain(5));
    for (const auto& a : a5.dp_coeffs) CHECK(a.sign() == 0);
    CHECK(a5.dp_dot_k.sign() == 0);
    auto ft = dp_data(HjCf{3, 2});
    CHECK(ft.dp_coeffs == std::vector<Rational>{R(2, 5), R(1, 5)});
    CHECK(ft.ep_sq == R(-3, 5));
    CHECK_THROWS(dp_data(HjCf{}));
}

TEST_CASE("coefficients agree with solving the adjunction system") {
    for (long q = 2; q <= 60; ++q) {
        for (const auto& cf : enumerate_cfs_of_order(q)) {
            for (const auto& w : {cf, cf.reversed()}) {
                auto s = dp_data(w);
                auto a = oracle::discrepancy(longs(w));
                REQUIRE(a.size() == s.dp_coeffs.size());
                for (std::size_t j = 0; j < a.size(); ++j) {
                    CHECK(s.dp_coeffs[j] == from(a[j]));
                    CHECK(s.dp_coeffs[j] >= Rational(0));
                    CHECK(s.dp_coeffs[j] < Rational(1));
                }
                CHECK(s.dp_sq == from(oracle::dp_square(longs(w))));
                CHECK(s.dp_dot_k == -s.dp_sq);
                CHECK(s.ep_sq == -Rational(w.ql(), w.order()));
                bool all_two = std::all_of(w.entries().begin(), w.entries().end(), [](const BigInt& n) { return n == 2; });
                CHECK((s.dp_dot_k.sign() == 0) == all_two);
                CHECK(s.dp_dot_k.sign() >= 0);
            }
        }
    }
}

TEST_CASE("closed form and double sum for D_p squared") {
    for (long q = 2; q <= 200; ++q) {
        for (const auto& cf : enumerate_cfs_of_order(q)) {
            auto s = dp_data(cf);
            CHECK(dp_sq_double_sum(s) == dp_sq_closed_form(cf));
            if (cf.length() == 1) {
                const BigInt& n = cf.entry(1);
                CHECK(s.dp_sq == -Rational((n - 2) * (n - 2), n));
            }
        }
    }
}

TEST_CASE("table1 row 1 invariants") {
    auto c = candidate_invariants({HjCf{2}, HjCf{2, 2}, HjCf{7}, HjCf{13}});
    CHECK(c.L == 5);
    CHECK(c.ks2_smooth == R(4));
    CHECK(c.ks2 == R(1536, 91));
    CHECK(c.three_e_orb() == R(29, 182));
    CHECK(c.det_r == 546);
    CHECK(c.d_value == R(9216));
    CHECK(c.d_square());
    CHECK(is_positive_square(R(9216)));
    CHECK(c.bmy_direction() == ">");
    CHECK(bmy_status(c) == BmyStatus::ViolatesKAmple);
    // independent recomputation
    std::vector<std::vector<long>> s{{2}, {2, 2}, {7}, {13}};
    CHECK(c.ks2 == from(oracle::ks2(s)));
    CHECK(c.e_orb == from(oracle::e_orb(s)));
}

TEST_CASE("lemma24 candidate") {
    auto c = candidate_invariants({HjCf{2}, HjCf{2, 2}, HjCf{7}, kRow2Long});
    CHECK(c.ks2 == R(6, 133));
    CHECK(c.d_value == R(36));
    CHECK(c.L == 13);
    CHECK(c.three_e_orb() == R(23, 266));
    CHECK(bmy_status(c) == BmyStatus::OkKAmple);
    CHECK(c.bmy_direction() == "<");
}

TEST_CASE("index c divides out of D") {
    auto c = candidate_invariants({HjCf{2}, HjCf{3}, HjCf{5}, a_chain(8)}, 3);
    CHECK(c.d_value == R(36));
    CHECK(c.d_prime == R(4));
    CHECK(c.c == 3);
    CHECK_FALSE(c.orders_coprime);
    CHECK_THROWS_AS(candidate_invariants({HjCf{2}, HjCf{3}, HjCf{5}, a_chain(8)}, 0), DomainError);
    // coprime orders force c = 1
    CHECK_THROWS_AS(candidate_invariants({HjCf{2}, HjCf{2, 2}, HjCf{7}, HjCf{13}}, 2), DomainError);
    // c^2 must divide det R
    CHECK_THROWS_AS(candidate_invariants({HjCf{2}, HjCf{3}, HjCf{5}, a_chain(8)}, 2), DomainError);
}

TEST_CASE("square test") {
    CHECK(is_positive_square(R(9216)));
    CHECK_FALSE(is_positive_square(R(6, 133)));
    CHECK_FALSE(is_positive_square(R(0)));
    CHECK_FALSE(is_positive_square(R(-4)));
    CHECK_FALSE(is_positive_square(R(260)));
}

TEST_CASE("negative orbifold Euler number") {
    auto c = candidate_invariants({HjCf{2}, HjCf{3}, HjCf{7}, HjCf{43}});
    CHECK(c.e_orb == R(3) - R(1, 2) - R(2, 3) - R(6, 7) - R(42, 43));
    CHECK(c.e_orb.sign() < 0);
    CHECK(bmy_status(c) == BmyStatus::EOrbNegative);
}

TEST_CASE("non-positive K^2 passes the K-ample test vacuously") {
    auto c = candidate_invariants({HjCf{2}, HjCf{3}, HjCf{2, 3}, a_chain(6)});
    CHECK(c.ks2 == R(-4, 15));
    CHECK(bmy_status(c) == BmyStatus::Ok);
}

TEST_CASE("reversing any singularity leaves the invariants unchanged") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(1, 5), ent(2, 6);
    for (int i = 0; i < 300; ++i) {
        std::vector<HjCf> sings;
        for (int k = 0; k < 4; ++k) {
            std::vector<BigInt> e(len(rng));
            for (auto& x : e) x = ent(rng);
            sings.emplace_back(e);
        }
        auto a = candidate_invariants(sings);
        auto rev = sings;
        rev[i % 4] = rev[i % 4].reversed();
        auto b = candidate_invariants(rev);
        CHECK(a.ks2 == b.ks2);
        CHECK(a.e_orb == b.e_orb);
        CHECK(a.d_value == b.d_value);
        CHECK(a.det_r == b.det_r);
    }
}

TEST_CASE("e_orb decreases as an order grows") {
    for (long q = 2; q < 60; ++q) {
        auto a = candidate_invariants({HjCf{2}, HjCf{3}, HjCf{q}});
        auto b = candidate_invariants({HjCf{2}, HjCf{3}, HjCf{q + 1}});
        CHECK(b.e_orb < a.e_orb);
    }
}

TEST_CASE("JSON form of a candidate") {
    auto c = candidate_invariants({HjCf{2}, HjCf{2, 2}, HjCf{7}, HjCf{13}});
    auto j = to_json(c);
    CHECK(j["ks2"] == "1536/91");
    CHECK(j["D"] == "9216");
    CHECK(j["D_square"] == true);
    CHECK(j["three_e_orb"] == "29/182");
    CHECK(j["L"] == 5);
    CHECK(j["sings"].size() == 4);
}

TEST_CASE("Gram determinants") {
    GramConfig star;
    star.diagonal = {-1, -2, -3, -5};
    star.connect(0, 1);
    star.connect(0, 2);
    star.connect(0, 3);
    CHECK(gram_determinant(star) == -1);

    GramConfig one;
    one.diagonal = {-2};
    CHECK(gram_determinant(one) == -2);

    GramConfig g;
    g.diagonal = {-1, -2, -3, -2, -3};
    g.connect(0, 1);
    g.connect(0, 2);
    g.connect(0, 3);
    g.connect(3, 4);
    CHECK(abs(gram_determinant(g)) == 13);

    // a chain's determinant is the order of its continued fraction up to sign
    GramConfig chain;
    chain.diagonal = {-3, -2, -2, -2, -2, -2, -2, -2, -2};
    chain.add_chain(0, 9);
    CHECK(abs(gram_determinant(chain)) == 19);
}

TEST_CASE("Bareiss agrees with cofactor expansion up to size 6") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> size(1, 6), diag(-6, -1), off(0, 2), coin(0, 2);
    for (int t = 0; t < 400; ++t) {
        GramConfig g;
        const int n = size(rng);
        for (int i = 0; i < n; ++i) g.diagonal.push_back(diag(rng));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) == 0) g.connect(i, j, off(rng));
        auto m = g.matrix();
        std::vector<std::vector<long>> lm;
        for (const auto& row : m) {
            std::vector<long> r;
            for (const auto& x : row) r.push_back(x.get_si());
            lm.push_back(r);
        }
        CHECK(gram_determinant(g) == oracle::det(lm));
    }
    // pivot swaps: zero in the top-left corner
    CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(bareiss_determinant({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}}) == oracle::det({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}}));
}
