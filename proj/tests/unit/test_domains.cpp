#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "stirling_kit/domains.hpp"
#include "support.hpp"

using namespace stirling_kit;
using test_support::random_rational;

namespace {

QuadraticSurd random_surd(std::mt19937_64& rng) {
    return QuadraticSurd(5, random_rational(rng, 20), random_rational(rng, 20));
}

RationalPolynomial random_polynomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> degree(-1, 3);
    std::vector<Rational> c;
    for (int i = 0, d = degree(rng); i <= d; ++i) c.push_back(random_rational(rng, 9));
    return RationalPolynomial(std::move(c));
}

template <class T, class Gen>
void check_ring_axioms(Gen gen, int cases) {
    for (int i = 0; i < cases; ++i) {
        const T x = gen();
        const T y = gen();
        const T z = gen();
        const T zero = zero_like(x);
        const T one = one_like(x);
        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x + zero == x);
        REQUIRE(x * one == x);
        REQUIRE(x + (-x) == zero);
        REQUIRE(x - y == x + (-y));
        REQUIRE(scaled(x, Integer(3)) == x + x + x);
    }
}

}  // namespace

TEST_CASE("rational_normalize reduces and fixes the sign") {
    CHECK(rational_normalize(6, -4) == Rational(Integer(-3), Integer(2)));
    CHECK(to_string(rational_normalize(6, -4)) == "-3/2");
    CHECK(rational_normalize(0, 7).denominator() == 1);
    CHECK(rational_normalize(0, 7).is_zero());
    CHECK(rational_normalize(2, 2) == Rational(1));
    CHECK_THROWS_AS(rational_normalize(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("surd multiplication in Q(sqrt 5)") {
    const auto alpha = golden_alpha();
    const auto beta = golden_beta();
    CHECK(surd_multiply(alpha, beta) == QuadraticSurd(5, -1, 0));
    CHECK(surd_multiply(alpha, alpha) == QuadraticSurd(5, Rational(Integer(3), Integer(2)), Rational(Integer(1), Integer(2))));
    CHECK(surd_multiply(QuadraticSurd(5), alpha).is_zero());
    CHECK(alpha + beta == QuadraticSurd(5, 1, 0));
    CHECK(alpha - beta == QuadraticSurd::root(5));
    CHECK_THROWS_AS(surd_multiply(alpha, QuadraticSurd(2, 1, 1)), std::domain_error);
    CHECK_THROWS_AS(QuadraticSurd(4, 1, 1), std::domain_error);
    CHECK_THROWS_AS(QuadraticSurd(1, 1, 1), std::domain_error);
    CHECK(alpha * inverse(alpha) == one_like(alpha));
    CHECK_THROWS_AS(inverse(QuadraticSurd(5)), std::domain_error);
}

TEST_CASE("surd_to_rational") {
    CHECK(surd_to_rational(QuadraticSurd(5, Rational(Integer(5), Integer(2)), 0)) == Rational(Integer(5), Integer(2)));
    CHECK(surd_to_rational((golden_alpha() - golden_beta()) / QuadraticSurd::root(5)) == Rational(1));
    CHECK_THROWS_AS(surd_to_rational(QuadraticSurd(5, 1, 1)), std::domain_error);
}

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(Integer(7), 0) == 1);
    CHECK(rising_factorial(-golden_alpha(), 2) == QuadraticSurd(5, 1, 0));
    CHECK(rising_factorial(Integer(3), 3) == 60);
}

TEST_CASE("falling factorial polynomial matches the expansion oracle") {
    CHECK(falling_factorial_polynomial(0) == RationalPolynomial(1));
    CHECK(falling_factorial_polynomial(3) == RationalPolynomial({0, 2, -3, 1}));
    CHECK(falling_factorial_polynomial(4).coefficient(2) == 11);
    for (int n = 0; n <= 20; ++n) {
        const auto p = falling_factorial_polynomial(n);
        const auto expected = oracle::falling_factorial_coefficients(n);
        REQUIRE(p.degree() == n);
        for (int k = 0; k <= n; ++k) REQUIRE(p.coefficient(k) == Rational(expected[static_cast<std::size_t>(k)]));
        REQUIRE(p.evaluate(n) == Rational(factorial(static_cast<unsigned>(n))));
    }
}

TEST_CASE("rising and falling factorials are related by x -> -x") {
    const auto x = RationalPolynomial::x();
    for (int n = 0; n <= 15; ++n) {
        const auto falling = falling_factorial_polynomial(n);
        // (-x)_n as a polynomial in x: substitute coefficient signs
        std::vector<Rational> c;
        for (int k = 0; k <= n; ++k) c.push_back(k % 2 == 0 ? falling.coefficient(k) : -falling.coefficient(k));
        RationalPolynomial expected(std::move(c));
        if (n % 2 == 1) expected = -expected;
        REQUIRE(rising_factorial(x, n) == expected);
    }
}

TEST_CASE("polynomial multiplication") {
    const auto x = RationalPolynomial::x();
    CHECK(polynomial_multiply(x, x - RationalPolynomial(1)) == RationalPolynomial({0, -1, 1}));
    const RationalPolynomial p({Rational(Integer(1), Integer(6)), -1, 1});
    CHECK(polynomial_multiply(p, RationalPolynomial(1)) == p);
    CHECK(polynomial_multiply(p, RationalPolynomial()).is_zero());
    CHECK(RationalPolynomial({1, 2, 0, 0}).degree() == 1);
    CHECK(RationalPolynomial().degree() == -1);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20241);
    std::uniform_int_distribution<long> big(-1'000'000'000'000L, 1'000'000'000'000L);
    check_ring_axioms<Integer>([&] { return Integer(big(rng)) * Integer(big(rng)); }, 1000);
    check_ring_axioms<Rational>([&] { return random_rational(rng, 1000); }, 1000);
    check_ring_axioms<QuadraticSurd>([&] { return random_surd(rng); }, 1000);
    check_ring_axioms<RationalPolynomial>([&] { return random_polynomial(rng); }, 1000);
}

TEST_CASE("canonical text and parsing") {
    CHECK(to_string(Rational(Integer(-3), Integer(2))) == "-3/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(to_string(golden_alpha()) == "1/2+1/2*sqrt(5)");
    CHECK(to_string(golden_beta()) == "1/2-1/2*sqrt(5)");
    CHECK(to_string(RationalPolynomial({Rational(Integer(1), Integer(6)), -1, 1})) == "[1/6,-1,1]");
    CHECK(to_string(RationalPolynomial()) == "[]");

    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const auto q = random_rational(rng, 100000);
        REQUIRE(parse_rational(to_string(q)) == q);
        const auto s = random_surd(rng);
        REQUIRE(parse_surd(to_string(s)) == s);
        const auto p = random_polynomial(rng);
        REQUIRE(parse_polynomial(to_string(p)) == p);
    }
    CHECK_THROWS(parse_integer("12x"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_surd("1+2*sqrt(4)"));
    CHECK_THROWS(parse_polynomial("1,2"));
}
