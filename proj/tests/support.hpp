#pragma once

#include <random>
#include <vector>

#include "stirling_kit/domains.hpp"

namespace test_support {

using stirling_kit::Integer;
using stirling_kit::Rational;

inline std::vector<Integer> ints(std::initializer_list<long> values) {
    std::vector<Integer> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline std::vector<Integer> random_ints(std::mt19937_64& rng, std::size_t length, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < length; ++i) out.emplace_back(dist(rng));
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t length, long bound) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(random_rational(rng, bound));
    return out;
}

/// Element type that counts how often two elements are multiplied.
struct CountingInt {
    long value = 0;
    static inline long multiplications = 0;
    static inline long additions = 0;

    friend CountingInt operator+(CountingInt a, CountingInt b) { ++additions; return {a.value + b.value}; }
    friend CountingInt operator-(CountingInt a, CountingInt b) { ++additions; return {a.value - b.value}; }
    friend CountingInt operator-(CountingInt a) { return {-a.value}; }
    friend CountingInt operator*(CountingInt a, CountingInt b) { ++multiplications; return {a.value * b.value}; }
    friend bool operator==(CountingInt, CountingInt) = default;
};

inline CountingInt scaled(CountingInt x, const Integer& k) { return {x.value * k.get_si()}; }
inline CountingInt zero_like(CountingInt) { return {0}; }
inline CountingInt one_like(CountingInt) { return {1}; }

}  // namespace test_support
