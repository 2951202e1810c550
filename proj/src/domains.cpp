#include "stirling_kit/domains.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace stirling_kit {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational rational_normalize(const Integer& p, const Integer& q) { return Rational(p, q); }

Rational inverse(const Rational& x) { return Rational(1) / x; }

// --- QuadraticSurd ------------------------------------------------------------

namespace {

bool square_free(long d) {
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
    }
    return true;
}

}  // namespace

QuadraticSurd::QuadraticSurd(long d, Rational rational_part, Rational surd_part)
    : d_(d), a_(std::move(rational_part)), b_(std::move(surd_part)) {
    if (d < 2 || !square_free(d)) {
        throw std::domain_error("radicand " + std::to_string(d) + " is not a square-free integer >= 2");
    }
}

void QuadraticSurd::require_same_field(const QuadraticSurd& o) const {
    if (d_ != o.d_) {
        throw std::domain_error("mismatched radicands sqrt(" + std::to_string(d_) + ") and sqrt(" +
                                std::to_string(o.d_) + ")");
    }
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
    require_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
    require_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
    require_same_field(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
    Rational b = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
    require_same_field(o);
    return *this *= inverse(o);
}

QuadraticSurd inverse(const QuadraticSurd& x) {
    // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - d b^2); the norm is nonzero
    // for nonzero x because d is not a perfect square.
    Rational norm = x.rational_part() * x.rational_part() -
                    Rational(x.radicand()) * x.surd_part() * x.surd_part();
    if (norm.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt d)");
    return QuadraticSurd(x.radicand(), x.rational_part() / norm, -x.surd_part() / norm);
}

QuadraticSurd surd_multiply(const QuadraticSurd& x, const QuadraticSurd& y) { return x * y; }

Rational surd_to_rational(const QuadraticSurd& x) {
    if (!x.surd_part().is_zero()) {
        throw std::domain_error("surd " + to_string(x) + " is not rational");
    }
    return x.rational_part();
}

QuadraticSurd golden_alpha() { return QuadraticSurd(5, Rational(1, 2), Rational(1, 2)); }
QuadraticSurd golden_beta() { return QuadraticSurd(5, Rational(1, 2), Rational(-1, 2)); }

QuadraticSurd scaled(const QuadraticSurd& x, const Integer& k) {
    return QuadraticSurd(x.radicand(), scaled(x.rational_part(), k), scaled(x.surd_part(), k));
}

QuadraticSurd scaled(const QuadraticSurd& x, const Rational& k) {
    return QuadraticSurd(x.radicand(), x.rational_part() * k, x.surd_part() * k);
}

// --- RationalPolynomial -------------------------------------------------------

RationalPolynomial::RationalPolynomial(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

RationalPolynomial RationalPolynomial::x() { return RationalPolynomial(std::vector<Rational>{0, 1}); }

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPolynomial::evaluate(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

RationalPolynomial polynomial_multiply(const RationalPolynomial& p, const RationalPolynomial& q) { return p * q; }

RationalPolynomial scaled(const RationalPolynomial& x, const Integer& k) { return x * Rational(k); }

RationalPolynomial falling_factorial_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("falling factorial of negative order");
    RationalPolynomial result(1);
    for (int i = 0; i < n; ++i) result *= RationalPolynomial(std::vector<Rational>{Rational(-i), 1});
    return result;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// --- text ---------------------------------------------------------------------

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.is_integer()) return x.numerator().get_str();
    return x.numerator().get_str() + "/" + x.denominator().get_str();
}

std::string to_string(const QuadraticSurd& x) {
    std::string out = to_string(x.rational_part());
    if (x.surd_part().sign() < 0) {
        out += "-" + to_string(-x.surd_part());
    } else {
        out += "+" + to_string(x.surd_part());
    }
    return out + "*sqrt(" + std::to_string(x.radicand()) + ")";
}

std::string to_string(const RationalPolynomial& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
        if (i) out += ",";
        out += to_string(x.coefficients()[i]);
    }
    return out + "]";
}

namespace {

[[noreturn]] void malformed(std::string_view what, std::string_view text) {
    throw std::invalid_argument("malformed " + std::string(what) + ": \"" + std::string(text) + "\"");
}

bool is_decimal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_decimal(text)) malformed("integer", text);
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_decimal(text)) malformed("rational", text);
        return Rational(Integer(std::string(text), 10));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_decimal(num) || !is_decimal(den) || den.front() == '-') malformed("rational", text);
    Integer d(std::string(den), 10);
    if (sgn(d) == 0) throw std::domain_error("rational with zero denominator: \"" + std::string(text) + "\"");
    return Rational(Integer(std::string(num), 10), d);
}

QuadraticSurd parse_surd(std::string_view text) {
    constexpr std::string_view marker = "*sqrt(";
    auto star = text.find(marker);
    if (star == std::string_view::npos || text.back() != ')') malformed("surd", text);
    auto radicand = text.substr(star + marker.size(), text.size() - star - marker.size() - 1);
    if (!is_decimal(radicand) || radicand.front() == '-') malformed("surd", text);
    auto head = text.substr(0, star);
    // The rational part carries at most a leading sign, so the first '+' or
    // '-' after position 0 separates the two parts.
    auto op = head.find_first_of("+-", 1);
    if (op == std::string_view::npos) malformed("surd", text);
    Rational a = parse_rational(head.substr(0, op));
    std::string_view bpart = head.substr(op + 1);
    if (head[op] == '-' && !bpart.empty() && bpart.front() == '-') malformed("surd", text);
    Rational b = parse_rational(bpart);
    if (head[op] == '-') b = -b;
    return QuadraticSurd(std::stol(std::string(radicand)), std::move(a), std::move(b));
}

RationalPolynomial parse_polynomial(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') malformed("polynomial", text);
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Rational> coeffs;
    if (!body.empty()) {
        std::size_t start = 0;
        while (true) {
            auto comma = body.find(',', start);
            coeffs.push_back(parse_rational(body.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return RationalPolynomial(std::move(coeffs));
}

}  // namespace stirling_kit
