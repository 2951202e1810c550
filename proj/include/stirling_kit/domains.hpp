#pragma once

// Exact coefficient domains: big integers, reduced rationals, elements of
// Q(sqrt d), and dense polynomials over Q.  Every entry of every sequence,
// matrix and series in this library lives in one of these types.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stirling_kit {

using Integer = mpz_class;

/// Reduced fraction with positive denominator.  Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

/// `p / q` reduced, with positive denominator.  Throws std::domain_error if q == 0.
Rational rational_normalize(const Integer& p, const Integer& q);

/// a + b*sqrt(d) with d >= 2 square-free.  Equality is componentwise.
class QuadraticSurd {
public:
    /// Throws std::domain_error unless d >= 2 and square-free.
    explicit QuadraticSurd(long d, Rational rational_part = 0, Rational surd_part = 0);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    long radicand() const { return d_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// The element sqrt(d) itself.
    static QuadraticSurd root(long d) { return QuadraticSurd(d, 0, 1); }

    QuadraticSurd& operator+=(const QuadraticSurd& o);
    QuadraticSurd& operator-=(const QuadraticSurd& o);
    QuadraticSurd& operator*=(const QuadraticSurd& o);
    QuadraticSurd& operator/=(const QuadraticSurd& o);

    friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
    friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
    friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
    friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }
    friend QuadraticSurd operator-(const QuadraticSurd& a) { return QuadraticSurd(a.d_, -a.a_, -a.b_); }
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    void require_same_field(const QuadraticSurd& o) const;

    long d_;
    Rational a_;
    Rational b_;
};

/// (x*y) in Q(sqrt d).  Throws std::domain_error on mismatched radicands.
QuadraticSurd surd_multiply(const QuadraticSurd& x, const QuadraticSurd& y);

/// Rational value of a surd whose sqrt(d) part vanishes; throws std::domain_error otherwise.
Rational surd_to_rational(const QuadraticSurd& x);

/// (1 + sqrt 5)/2 and (1 - sqrt 5)/2.
QuadraticSurd golden_alpha();
QuadraticSurd golden_beta();

/// Dense polynomial over Q, index = degree.  The zero polynomial has no
/// coefficients and degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    RationalPolynomial(long c) : RationalPolynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RationalPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    /// The indeterminate x.
    static RationalPolynomial x();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^k, zero beyond the degree.
    Rational coefficient(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational evaluate(const Rational& at) const;

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
    friend RationalPolynomial operator-(RationalPolynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

RationalPolynomial polynomial_multiply(const RationalPolynomial& p, const RationalPolynomial& q);

/// (x)_n = x(x-1)...(x-n+1); the coefficient of x^k is s(n,k).
RationalPolynomial falling_factorial_polynomial(int n);

// --- the arithmetic contract --------------------------------------------------
//
// Transforms need only the additive group plus scaling by integers.  EGF and
// Hankel code additionally multiply elements.  Element constructors that need
// context (the radicand of a surd) go through zero_like / one_like.

inline Integer scaled(const Integer& x, const Integer& k) { return x * k; }
inline Rational scaled(const Rational& x, const Integer& k) { return x * Rational(k); }
QuadraticSurd scaled(const QuadraticSurd& x, const Integer& k);
RationalPolynomial scaled(const RationalPolynomial& x, const Integer& k);

inline Rational scaled(const Rational& x, const Rational& k) { return x * k; }
QuadraticSurd scaled(const QuadraticSurd& x, const Rational& k);
inline RationalPolynomial scaled(const RationalPolynomial& x, const Rational& k) { return x * k; }

inline Integer zero_like(const Integer&) { return 0; }
inline Rational zero_like(const Rational&) { return 0; }
inline QuadraticSurd zero_like(const QuadraticSurd& x) { return QuadraticSurd(x.radicand()); }
inline RationalPolynomial zero_like(const RationalPolynomial&) { return {}; }

inline Integer one_like(const Integer&) { return 1; }
inline Rational one_like(const Rational&) { return 1; }
inline QuadraticSurd one_like(const QuadraticSurd& x) { return QuadraticSurd(x.radicand(), 1); }
inline RationalPolynomial one_like(const RationalPolynomial&) { return RationalPolynomial(1); }

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadraticSurd& x) { return x.is_zero(); }
inline bool is_zero(const RationalPolynomial& x) { return x.is_zero(); }

/// Multiplicative inverse in the field domains; std::domain_error on zero.
Rational inverse(const Rational& x);
QuadraticSurd inverse(const QuadraticSurd& x);

template <class T>
concept AdditiveDomain = std::equality_comparable<T> && requires(const T& x, const T& y, const Integer& k) {
    { x + y } -> std::convertible_to<T>;
    { x - y } -> std::convertible_to<T>;
    { -x } -> std::convertible_to<T>;
    { scaled(x, k) } -> std::convertible_to<T>;
    { zero_like(x) } -> std::convertible_to<T>;
    { one_like(x) } -> std::convertible_to<T>;
};

template <class T>
concept RingDomain = AdditiveDomain<T> && requires(const T& x, const T& y) {
    { x * y } -> std::convertible_to<T>;
};

template <class T>
concept FieldDomain = RingDomain<T> && requires(const T& x) {
    { inverse(x) } -> std::convertible_to<T>;
};

/// <x>_n = x(x+1)...(x+n-1), <x>_0 = 1.
template <RingDomain T>
T rising_factorial(const T& x, int n) {
    T result = one_like(x);
    for (int i = 0; i < n; ++i) result = result * (x + scaled(one_like(x), Integer(i)));
    return result;
}

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// --- canonical text -----------------------------------------------------------
//
// Integers in decimal, rationals as "p/q" or "p", surds as "a+b*sqrt(d)" (the
// sign of b is folded into the operator), polynomials as "[c0,c1,...]".

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const QuadraticSurd& x);
std::string to_string(const RationalPolynomial& x);

// Parsers throw std::invalid_argument on malformed text.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
QuadraticSurd parse_surd(std::string_view text);
RationalPolynomial parse_polynomial(std::string_view text);

template <class T> T parse_element(std::string_view text);
template <> inline Integer parse_element<Integer>(std::string_view t) { return parse_integer(t); }
template <> inline Rational parse_element<Rational>(std::string_view t) { return parse_rational(t); }
template <> inline QuadraticSurd parse_element<QuadraticSurd>(std::string_view t) { return parse_surd(t); }
template <> inline RationalPolynomial parse_element<RationalPolynomial>(std::string_view t) {
    return parse_polynomial(t);
}

}  // namespace stirling_kit
