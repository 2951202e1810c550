#pragma once

// Truncated exponential generating functions sum_{k<=N} c_k z^k / k! with
// exact coefficients.  Coefficients are Rational or RationalPolynomial; the
// inner series of a composition is always Rational.

#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "stirling_kit/domains.hpp"

namespace stirling_kit {

/// Truncation order used when none is given: 16, or STIRLING_KIT_ORDER.
int default_egf_order();

template <RingDomain T>
class TruncatedEGF {
public:
    /// Coefficients c_0..c_N; throws std::invalid_argument when empty.
    explicit TruncatedEGF(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
    }

    /// Builds from ordinary coefficients f_k (c_k = k! f_k).
    static TruncatedEGF from_ordinary(std::vector<T> ordinary) {
        for (std::size_t k = 0; k < ordinary.size(); ++k) {
            ordinary[k] = scaled(ordinary[k], factorial(static_cast<unsigned>(k)));
        }
        return TruncatedEGF(std::move(ordinary));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<T>& coefficients() const { return coeffs_; }

    /// [z^m] of the series, i.e. c_m / m!.
    T ordinary_coefficient(int m) const {
        return scaled((*this)[m], Rational(Integer(1), factorial(static_cast<unsigned>(m))));
    }
    std::vector<T> ordinary_coefficients() const {
        std::vector<T> out;
        out.reserve(coeffs_.size());
        for (int k = 0; k <= order(); ++k) out.push_back(ordinary_coefficient(k));
        return out;
    }

    /// Same series cut to a lower order; std::invalid_argument if n > order().
    TruncatedEGF truncated(int n) const {
        if (n < 0 || n > order()) throw std::invalid_argument("cannot truncate to order " + std::to_string(n));
        return TruncatedEGF(std::vector<T>(coeffs_.begin(), coeffs_.begin() + n + 1));
    }

    /// d/dz: c_n <- c_{n+1}; the result has order one less.
    TruncatedEGF derivative() const {
        if (order() == 0) throw std::invalid_argument("derivative of an order-0 series");
        return TruncatedEGF(std::vector<T>(coeffs_.begin() + 1, coeffs_.end()));
    }

    friend bool operator==(const TruncatedEGF&, const TruncatedEGF&) = default;

private:
    std::vector<T> coeffs_;
};

using RationalEGF = TruncatedEGF<Rational>;

namespace detail {

template <class T, class U>
T product(const T& x, const U& y) {
    if constexpr (std::is_same_v<T, U>) {
        return x * y;
    } else {
        return scaled(x, y);
    }
}

inline void check_orders(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("series orders differ: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace detail

/// EGF product: c_n(fg) = sum_k C(n,k) c_k(f) c_{n-k}(g).
template <RingDomain T, RingDomain U>
TruncatedEGF<T> series_multiply(const TruncatedEGF<T>& f, const TruncatedEGF<U>& g) {
    detail::check_orders(f.order(), g.order());
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(f.order()) + 1);
    for (int n = 0; n <= f.order(); ++n) {
        T sum = zero_like(f[0]);
        for (int k = 0; k <= n; ++k) {
            sum = sum + scaled(detail::product(f[k], g[n - k]), binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        }
        out.push_back(std::move(sum));
    }
    return TruncatedEGF<T>(std::move(out));
}

/// f(g(z)) through the common order; g must have zero constant term
/// (std::domain_error otherwise).
template <RingDomain T>
TruncatedEGF<T> series_compose(const TruncatedEGF<T>& f, const RationalEGF& g) {
    detail::check_orders(f.order(), g.order());
    if (!g[0].is_zero()) throw std::domain_error("inner series of a composition must vanish at z = 0");
    const int order = f.order();
    const std::vector<Rational> inner = g.ordinary_coefficients();
    const std::vector<T> outer = f.ordinary_coefficients();

    std::vector<T> result(static_cast<std::size_t>(order) + 1, zero_like(f[0]));
    std::vector<Rational> power(static_cast<std::size_t>(order) + 1);  // ordinary coefficients of g^k
    power[0] = 1;
    for (int k = 0; k <= order; ++k) {
        // g^k starts at z^k.
        for (int n = k; n <= order; ++n) {
            const auto& p = power[static_cast<std::size_t>(n)];
            if (!p.is_zero()) result[static_cast<std::size_t>(n)] = result[static_cast<std::size_t>(n)] + scaled(outer[static_cast<std::size_t>(k)], p);
        }
        std::vector<Rational> next(power.size());
        for (int n = k + 1; n <= order; ++n) {
            Rational acc;
            for (int j = 1; j <= n - k; ++j) acc += inner[static_cast<std::size_t>(j)] * power[static_cast<std::size_t>(n - j)];
            next[static_cast<std::size_t>(n)] = std::move(acc);
        }
        power = std::move(next);
    }
    return TruncatedEGF<T>::from_ordinary(std::move(result));
}

/// e^z - 1: coefficients (0, 1, 1, ...).
RationalEGF exp_minus_one_series(int order);
/// ln(1+z): c_k = (-1)^{k-1} (k-1)! for k >= 1.
RationalEGF log1p_series(int order);
/// e^{rz}: c_k = r^k.
RationalEGF exp_rz_series(long r, int order);
/// The series z.
RationalEGF identity_series(int order);
/// The constant series 1.
RationalEGF one_series(int order);

/// Given A = sum a(0,k+r) z^k/k!, returns sum_n a(n,r) z^n/n! = e^{rz} A(e^z - 1).
template <RingDomain T>
TruncatedEGF<T> theorem3_apply(const TruncatedEGF<T>& initial_tail, long r) {
    if (r < 0) throw std::invalid_argument("column index r must be nonnegative");
    const int order = initial_tail.order();
    return series_multiply(series_compose(initial_tail, exp_minus_one_series(order)), exp_rz_series(r, order));
}

/// Given B = sum a(k+r,0) z^k/k! (the caller shifts the final sequence by r),
/// returns sum_m a(r,m) z^m/m! = B(ln(1+z)).
template <RingDomain T>
TruncatedEGF<T> theorem4_apply(const TruncatedEGF<T>& final_tail, long r) {
    if (r < 0) throw std::invalid_argument("row index r must be nonnegative");
    return series_compose(final_tail, log1p_series(final_tail.order()));
}

/// c_n = scale^n <p>_n / <q>_n, i.e. the EGF of 1F1(p; q; scale z).
/// std::domain_error if <q>_n vanishes for some n <= order.
RationalEGF hypergeometric_1f1(const Rational& p, const Rational& q, long scale, int order);

/// m! [z^m] (1+z)^x ln(1+z)/z = m! sum_i (-1)^{m-i} (x)_i / (i! (m-i+1)).
RationalPolynomial bernoulli_row_formula(int m);

/// Promotes integer sequences into rational series.
RationalEGF egf_from_integers(std::span<const Integer> values);

}  // namespace stirling_kit
