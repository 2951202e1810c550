#include "stirling_kit/egf.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace stirling_kit {

int default_egf_order() {
    constexpr int kDefault = 16;
    const char* env = std::getenv("STIRLING_KIT_ORDER");
    if (env == nullptr) return kDefault;
    std::string_view text(env);
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < 0) {
        throw std::invalid_argument("STIRLING_KIT_ORDER must be a nonnegative integer, got \"" + std::string(text) + "\"");
    }
    return value;
}

namespace {

void check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

}  // namespace

RationalEGF exp_minus_one_series(int order) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(1));
    c[0] = 0;
    return RationalEGF(std::move(c));
}

RationalEGF log1p_series(int order) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int k = 1; k <= order; ++k) {
        Integer v = factorial(static_cast<unsigned>(k - 1));
        if (k % 2 == 0) v = -v;
        c[static_cast<std::size_t>(k)] = Rational(v);
    }
    return RationalEGF(std::move(c));
}

RationalEGF exp_rz_series(long r, int order) {
    check_order(order);
    std::vector<Rational> c;
    Integer power = 1;
    for (int k = 0; k <= order; ++k) {
        c.emplace_back(power);
        power *= r;
    }
    return RationalEGF(std::move(c));
}

RationalEGF identity_series(int order) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    if (order >= 1) c[1] = 1;
    return RationalEGF(std::move(c));
}

RationalEGF one_series(int order) {
    check_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    return RationalEGF(std::move(c));
}

RationalEGF hypergeometric_1f1(const Rational& p, const Rational& q, long scale, int order) {
    check_order(order);
    std::vector<Rational> c;
    Rational num = 1;
    Rational den = 1;
    Rational power = 1;
    for (int n = 0; n <= order; ++n) {
        if (den.is_zero()) {
            throw std::domain_error("1F1 lower parameter " + to_string(q) + " makes <q>_" + std::to_string(n) + " vanish");
        }
        c.push_back(power * num / den);
        num *= p + Rational(n);
        den *= q + Rational(n);
        power *= Rational(scale);
    }
    return RationalEGF(std::move(c));
}

RationalPolynomial bernoulli_row_formula(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli_row_formula needs m >= 0");
    RationalPolynomial sum;
    RationalPolynomial falling(1);
    for (int i = 0; i <= m; ++i) {
        Rational weight(factorial(static_cast<unsigned>(m)),
                        factorial(static_cast<unsigned>(i)) * Integer(m - i + 1));
        if ((m - i) % 2 == 1) weight = -weight;
        sum += falling * weight;
        falling *= RationalPolynomial(std::vector<Rational>{Rational(-i), 1});
    }
    return sum;
}

RationalEGF egf_from_integers(std::span<const Integer> values) {
    std::vector<Rational> c(values.begin(), values.end());
    return RationalEGF(std::move(c));
}

}  // namespace stirling_kit
