#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <limits>
#include <random>

#include "doctest.h"
#include "skewsym/qpoly.hpp"

using namespace skewsym;

TEST_CASE("canonical form strips trailing zeros") {
    QPoly a(std::vector<std::int64_t>{1, 2, 0, 0});
    CHECK(a.degree() == 1);
    CHECK(a == QPoly(std::vector<std::int64_t>{1, 2}));
    CHECK(QPoly(std::vector<std::int64_t>{0, 0}).is_zero());
    CHECK(QPoly(0).is_zero());
    CHECK(QPoly(1).is_one());
}

TEST_CASE("arithmetic basics") {
    QPoly q = QPoly::q();
    QPoly a = QPoly(1) - q;           // 1 - q
    QPoly b = QPoly(1) + q;           // 1 + q
    CHECK(a * b == QPoly(std::vector<std::int64_t>{1, 0, -1}));
    CHECK(a + b == QPoly(2));
    CHECK(b - a == QPoly(std::vector<std::int64_t>{0, 2}));
    CHECK(-a == QPoly(std::vector<std::int64_t>{-1, 1}));
    CHECK(a.power(0).is_one());
    CHECK(a.power(2) == QPoly(std::vector<std::int64_t>{1, -2, 1}));
    CHECK(QPoly::monomial(-3, 2) == QPoly(std::vector<std::int64_t>{0, 0, -3}));
}

TEST_CASE("distributivity over pseudo-random inputs") {
    std::minstd_rand rng(12345);
    auto random_poly = [&]() {
        std::vector<std::int64_t> c;
        int deg = static_cast<int>(rng() % 5);
        for (int i = 0; i <= deg; ++i) c.push_back(static_cast<std::int64_t>(rng() % 21) - 10);
        return QPoly(std::move(c));
    };
    for (int trial = 0; trial < 200; ++trial) {
        QPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("eval_int agrees with coefficient arithmetic") {
    QPoly p(std::vector<std::int64_t>{1, -2, 1});  // (1-q)^2
    CHECK(p.eval_int(0) == 1);
    CHECK(p.eval_int(1) == 0);
    CHECK(p.eval_int(3) == 4);
    CHECK(p.eval_int(-1) == 4);
}

TEST_CASE("exact division and its failure signal") {
    QPoly one_minus_q(std::vector<std::int64_t>{1, -1});
    QPoly one_minus_q2(std::vector<std::int64_t>{1, 0, -1});
    CHECK(one_minus_q2.div_exact(one_minus_q) == QPoly(std::vector<std::int64_t>{1, 1}));
    CHECK(QPoly().div_exact(one_minus_q).is_zero());
    CHECK_THROWS_AS(QPoly(std::vector<std::int64_t>{1, 0, 1}).div_exact(one_minus_q),
                    not_divisible);
    CHECK_THROWS_AS(QPoly(1).div_exact(QPoly()), std::invalid_argument);
    // quotient times divisor restores the dividend over a sweep
    for (int e = 1; e <= 6; ++e) {
        QPoly prod = one_minus_q.power(e) * QPoly(std::vector<std::int64_t>{2, 3});
        CHECK(prod.div_exact(one_minus_q.power(e)) == QPoly(std::vector<std::int64_t>{2, 3}));
    }
}

TEST_CASE("overflow is detected, not wrapped") {
    QPoly big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + big, overflow_error);
    CHECK_THROWS_AS(big * QPoly(2), overflow_error);
    CHECK_THROWS_AS(big * big, overflow_error);
}

TEST_CASE("rendering and parsing round trip") {
    QPoly p(std::vector<std::int64_t>{1, -2, 1});
    CHECK(p.to_string() == "1 - 2*q + q^2");
    CHECK(QPoly().to_string() == "0");
    CHECK(QPoly::q().to_string() == "q");
    CHECK(QPoly(std::vector<std::int64_t>{0, 0, -1}).to_string() == "-q^2");
    std::minstd_rand rng(999);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> c;
        int deg = static_cast<int>(rng() % 6);
        for (int i = 0; i <= deg; ++i) c.push_back(static_cast<std::int64_t>(rng() % 9) - 4);
        QPoly p2(std::move(c));
        CHECK(QPoly::parse(p2.to_string()) == p2);
    }
}

TEST_CASE("Gaussian binomials") {
    CHECK(q_binomial(2, 1) == QPoly(std::vector<std::int64_t>{1, 1}));
    CHECK(q_binomial(4, 2) == QPoly(std::vector<std::int64_t>{1, 1, 2, 1, 1}));
    CHECK(q_binomial(3, 0).is_one());
    CHECK(q_binomial(3, 3).is_one());
    CHECK(q_binomial(3, 4).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
    // q=1 specialization is the ordinary binomial; symmetry in k
    auto binom = [](int n, int k) {
        long b = 1;
        for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
        return b;
    };
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k).eval_int(1) == binom(n, k));
            CHECK(q_binomial(n, k) == q_binomial(n, n - k));
        }
    }
}
