#include <doctest.h>

#include <future>
#include <vector>

#include "oracles.hpp"
#include "stirling_kit/domains.hpp"
#include "stirling_kit/egf.hpp"
#include "stirling_kit/stirling.hpp"

using namespace stirling_kit;

TEST_CASE("first kind values") {
    CHECK(stirling1(3, 1) == 2);
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(5, -1) == 0);
    CHECK(stirling1(3, 4) == 0);
    CHECK(stirling1(0, 0) == 1);
    for (int n = 0; n <= 20; ++n) {
        const auto c = oracle::falling_factorial_coefficients(n);
        for (int k = 0; k <= n; ++k) REQUIRE(stirling1(n, k) == Integer(static_cast<long>(c[static_cast<std::size_t>(k)])));
        REQUIRE(stirling1(n, 0) == (n == 0 ? 1 : 0));
    }
}

TEST_CASE("second kind and r-Stirling values match partition enumeration") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(4, -1) == 0);
    CHECK(r_stirling2(2, 5, 2) == 8);
    CHECK(r_stirling2(1, 3, 2) == 3);
    CHECK(r_stirling2(2, 4, 3) == 5);
    CHECK(r_stirling2(3, 2, 1) == 0);
    for (int r = 0; r <= 4; ++r) {
        for (int n = 0; n <= 10; ++n) {
            for (int k = 0; k <= n; ++k) {
                REQUIRE(r_stirling2(r, n, k) == Integer(static_cast<long>(oracle::count_partitions(n, k, r))));
            }
        }
    }
}

TEST_CASE("r-Stirling boundary cases") {
    for (int r = 0; r <= 6; ++r) {
        for (int k = 0; k <= 8; ++k) CHECK(r_stirling2(r, r, k) == (k == r ? 1 : 0));
        for (int n = r; n <= 20; ++n) {
            Integer power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n - r));
            REQUIRE(r_stirling2(r, n, r) == power);
        }
    }
    for (int n = 0; n <= 15; ++n) {
        for (int k = 0; k <= n; ++k) REQUIRE(r_stirling2(0, n, k) == stirling2(n, k));
    }
}

TEST_CASE("triangle objects agree with cached queries") {
    Stirling1Triangle s1(5);
    s1.grow(12);
    RStirlingTriangle t(3, 4);
    t.grow(14);
    CHECK(s1.n_max() == 12);
    CHECK(t.n_max() == 14);
    for (int n = 0; n <= 12; ++n) {
        for (int k = -1; k <= n + 1; ++k) REQUIRE(s1(n, k) == stirling1(n, k));
    }
    for (int n = 0; n <= 14; ++n) {
        for (int k = -1; k <= n + 1; ++k) REQUIRE(t(n, k) == r_stirling2(3, n, k));
    }
}

TEST_CASE("identity between neighbouring r") {
    CHECK(verify_tig_identity(1, 10, 10));
    CHECK(verify_tig_identity(3, 12, 12));
    CHECK(verify_tig_identity(6, 8, 8));
    CHECK_THROWS(verify_tig_identity(0, 3, 3));
}

TEST_CASE("orthogonality of the two kinds") {
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= 12; ++m) {
            Integer sum = 0;
            for (int k = 0; k <= 12; ++k) sum += stirling1(n, k) * stirling2(k, m);
            REQUIRE(sum == (n == m ? 1 : 0));
        }
    }
}

TEST_CASE("powers expand in falling factorials") {
    for (int n = 0; n <= 12; ++n) {
        RationalPolynomial sum;
        for (int k = 0; k <= n; ++k) sum += falling_factorial_polynomial(k) * Rational(stirling2(n, k));
        std::vector<Rational> xn(static_cast<std::size_t>(n) + 1, 0);
        xn.back() = 1;
        REQUIRE(sum == RationalPolynomial(std::move(xn)));
    }
}

TEST_CASE("exponential generating functions of the triangles") {
    const int order = 14;
    for (long r = 0; r <= 4; ++r) {
        RationalEGF power = one_series(order);
        for (int k = 0; k <= 6; ++k) {
            if (k > 0) power = series_multiply(power, exp_minus_one_series(order));
            const auto series = series_multiply(exp_rz_series(r, order), power);
            for (int n = 0; n <= order; ++n) {
                // [z^n/n!] (1/k!) e^{rz}(e^z-1)^k = {n+r k+r}_r
                REQUIRE(series[n] / Rational(factorial(static_cast<unsigned>(k))) ==
                        Rational(r_stirling2(static_cast<int>(r), n + static_cast<int>(r), k + static_cast<int>(r))));
            }
        }
    }
    RationalEGF power = one_series(order);
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) power = series_multiply(power, log1p_series(order));
        for (int n = 0; n <= order; ++n) {
            REQUIRE(power[n] / Rational(factorial(static_cast<unsigned>(k))) == Rational(stirling1(n, k)));
        }
    }
}

TEST_CASE("concurrent point queries") {
    std::vector<std::future<Integer>> jobs;
    for (int t = 0; t < 8; ++t) {
        jobs.push_back(std::async(std::launch::async, [t] {
            Integer acc = 0;
            for (int n = 0; n <= 40 + t; ++n) {
                for (int k = 0; k <= n; ++k) acc += r_stirling2(t % 4, n, k) + stirling1(n, k);
            }
            return acc;
        }));
    }
    std::vector<Integer> results;
    for (auto& j : jobs) results.push_back(j.get());
    for (int t = 0; t < 8; ++t) {
        Integer acc = 0;
        for (int n = 0; n <= 40 + t; ++n) {
            for (int k = 0; k <= n; ++k) acc += r_stirling2(t % 4, n, k) + stirling1(n, k);
        }
        CHECK(results[static_cast<std::size_t>(t)] == acc);
    }
}
