#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "stirling_kit/hankel.hpp"
#include "stirling_kit/sequences.hpp"
#include "support.hpp"

using namespace stirling_kit;
using test_support::ints;

namespace {

std::vector<std::vector<Integer>> random_matrix(std::mt19937_64& rng, int dim, long bound) {
    std::vector<std::vector<Integer>> m;
    for (int i = 0; i < dim; ++i) m.push_back(test_support::random_ints(rng, static_cast<std::size_t>(dim), bound));
    return m;
}

}  // namespace

TEST_CASE("Hankel matrices") {
    CHECK(hankel_matrix(bell(3), 1).rows() == std::vector<std::vector<Integer>>{ints({1, 1}), ints({1, 2})});
    CHECK(hankel_matrix(ints({7}), 0).rows() == std::vector<std::vector<Integer>>{ints({7})});
    CHECK(hankel_matrix(catalan(5), 2).rows() == std::vector<std::vector<Integer>>{ints({1, 1, 2}), ints({1, 2, 5}), ints({2, 5, 14})});
    CHECK_THROWS_AS(hankel_matrix(catalan(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(SquareMatrix<Integer>({ints({1, 2})}), std::invalid_argument);
}

TEST_CASE("determinant examples") {
    CHECK(determinant(SquareMatrix<Integer>({ints({2, 0}), ints({0, 3})})) == 6);
    const std::vector<std::vector<Integer>> bell_h{ints({1, 1, 2}), ints({1, 2, 5}), ints({2, 5, 15})};
    const std::vector<std::vector<Integer>> cat_h{ints({1, 1, 2}), ints({1, 2, 5}), ints({2, 5, 14})};
    CHECK(oracle::cofactor_determinant(bell_h) == 2);
    CHECK(determinant(SquareMatrix<Integer>(bell_h)) == 2);
    CHECK(determinant(SquareMatrix<Integer>(cat_h)) == 1);
    CHECK(determinant(SquareMatrix<Integer>({ints({0, 1}), ints({1, 0})})) == -1);
    CHECK(determinant(SquareMatrix<Integer>({ints({1, 2}), ints({2, 4})})) == 0);
}

TEST_CASE("elimination strategies agree with cofactor expansion") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int t = 0; t < 1000; ++t) {
        const auto m = random_matrix(rng, dim(rng), t % 3 == 0 ? 2 : 1000);
        const auto expected = oracle::cofactor_determinant(m);
        REQUIRE(determinant_bareiss(SquareMatrix<Integer>(m)) == expected);
        REQUIRE(determinant_by_minors(SquareMatrix<Integer>(m)) == expected);
    }
    for (int t = 0; t < 200; ++t) {
        const int d = 1 + t % 8;
        const auto m = random_matrix(rng, d, t % 2 == 0 ? 1 : 50);
        std::vector<std::vector<Rational>> q;
        for (const auto& row : m) q.emplace_back(row.begin(), row.end());
        REQUIRE(Rational(determinant_bareiss(SquareMatrix<Integer>(m))) == determinant_field(SquareMatrix<Rational>(q)));
    }
}

TEST_CASE("determinants over the other domains") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        const int d = 1 + t % 4;
        std::vector<std::vector<QuadraticSurd>> s;
        std::vector<std::vector<RationalPolynomial>> p;
        for (int i = 0; i < d; ++i) {
            auto& srow = s.emplace_back();
            auto& prow = p.emplace_back();
            for (int j = 0; j < d; ++j) {
                srow.emplace_back(5, test_support::random_rational(rng, 5), test_support::random_rational(rng, 5));
                prow.push_back(RationalPolynomial({test_support::random_rational(rng, 5), test_support::random_rational(rng, 5)}));
            }
        }
        REQUIRE(determinant(SquareMatrix<QuadraticSurd>(s)) == oracle::cofactor_determinant(s));
        REQUIRE(determinant(SquareMatrix<RationalPolynomial>(p)) == oracle::cofactor_determinant(p));
    }
}

TEST_CASE("column operations preserve the determinant and swaps flip its sign") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        const int d = 2 + t % 4;
        auto m = random_matrix(rng, d, 20);
        const auto base = determinant(SquareMatrix<Integer>(m));
        auto added = m;
        for (auto& row : added) row[0] += Integer(t - 100) * row[static_cast<std::size_t>(d - 1)];
        REQUIRE(determinant(SquareMatrix<Integer>(added)) == base);
        std::swap(m[0], m[1]);
        REQUIRE(determinant(SquareMatrix<Integer>(m)) == -base);
    }
}

TEST_CASE("Hankel transforms") {
    CHECK(hankel_transform(catalan(7), 3) == ints({1, 1, 1, 1}));
    CHECK(hankel_transform(catalan(13), 6) == ints({1, 1, 1, 1, 1, 1, 1}));
    CHECK(hankel_transform(bell(7), 3) == ints({1, 1, 2, 12}));
    CHECK(hankel_transform(ints({5, 5, 5, 5, 5, 5, 5}), 3) == ints({5, 0, 0, 0}));
    CHECK_THROWS_AS(hankel_transform(catalan(6), 3), std::invalid_argument);
}

TEST_CASE("block determinant equals Hankel determinant of the first column") {
    CHECK(theorem5_check(catalan(5), 2) == std::pair<Integer, Integer>(1, 1));
    CHECK(theorem5_check(bell(5), 2) == std::pair<Integer, Integer>(2, 2));
    CHECK(theorem5_check(ints({9}), 0) == std::pair<Integer, Integer>(9, 9));
    CHECK_THROWS_AS(theorem5_check(bell(4), 2), std::invalid_argument);
    const auto block = build_from_final(catalan(5), 2, 2);
    CHECK(block.entries() == std::vector<std::vector<Integer>>{ints({1, 1, 1}), ints({1, 2, 3}), ints({2, 5, 9})});

    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        const auto a = test_support::random_ints(rng, 17, 100);
        for (int n = 0; n <= 8; ++n) {
            const auto [lhs, rhs] = theorem5_check(a, n);
            REQUIRE(lhs == rhs);
        }
    }
    const auto poly = theorem5_check(bernoulli_polynomials(9), 4);
    CHECK(poly.first == poly.second);
}

TEST_CASE("corollary and binomial invariance") {
    for (int n = 0; n <= 4; ++n) {
        CHECK(corollary_check(ones(9), n));
        CHECK(corollary_check(signed_derangements(9), n));
    }
    CHECK_THROWS_AS(corollary_check(ones(3), 2), std::invalid_argument);
    CHECK(binomial_hankel_invariance_check(motzkin(7), 3));
    CHECK(binomial_hankel_invariance_check(ints({0, 0, 0, 0, 0, 0, 0}), 3));
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        REQUIRE(binomial_hankel_invariance_check(test_support::random_ints(rng, 9, 50), 3));
    }
    CHECK_THROWS_AS(binomial_hankel_invariance_check(ones(5), 3), std::invalid_argument);
}
