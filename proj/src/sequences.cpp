#include "stirling_kit/sequences.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "stirling_kit/transform.hpp"

namespace stirling_kit {

std::string_view domain_name(DomainTag tag) {
    switch (tag) {
        case DomainTag::integer: return "int";
        case DomainTag::rational: return "rational";
        case DomainTag::surd5: return "surd5";
        case DomainTag::polynomial: return "poly";
    }
    return "?";
}

DomainTag parse_domain_tag(std::string_view text) {
    if (text == "int") return DomainTag::integer;
    if (text == "rational") return DomainTag::rational;
    if (text == "surd5") return DomainTag::surd5;
    if (text == "poly") return DomainTag::polynomial;
    throw std::invalid_argument("unknown domain \"" + std::string(text) + "\" (expected int, rational, surd5 or poly)");
}

DomainTag SequenceRecord::domain() const {
    return std::visit([](const auto& v) { return domain_tag_of<typename std::decay_t<decltype(v)>::value_type>(); },
                      values);
}

std::size_t SequenceRecord::size() const {
    return std::visit([](const auto& v) { return v.size(); }, values);
}

SequenceRecord SequenceRecord::shifted(std::size_t count) const {
    if (count >= size()) {
        throw std::invalid_argument("shifting " + name + " by " + std::to_string(count) + " leaves no terms");
    }
    SequenceRecord out{name, {}, meta};
    out.values = std::visit(
        [count](const auto& v) -> SequenceValues {
            using Vec = std::decay_t<decltype(v)>;
            return Vec(v.begin() + static_cast<std::ptrdiff_t>(count), v.end());
        },
        values);
    if (count > 0) out.meta["shift"] = std::to_string(count);
    return out;
}

SequenceRecord SequenceRecord::prefix(std::size_t count) const {
    SequenceRecord out{name, {}, meta};
    out.values = std::visit(
        [count](const auto& v) -> SequenceValues {
            using Vec = std::decay_t<decltype(v)>;
            return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(count, v.size())));
        },
        values);
    return out;
}

namespace {

std::size_t checked_length(int length) {
    if (length < 1) throw std::invalid_argument("sequence length must be at least 1, got " + std::to_string(length));
    return static_cast<std::size_t>(length);
}

}  // namespace

std::vector<Integer> ones(int length) { return std::vector<Integer>(checked_length(length), Integer(1)); }

std::vector<Integer> fibonacci(int length) {
    std::vector<Integer> out;
    Integer a = 0;
    Integer b = 1;
    for (std::size_t i = 0; i < checked_length(length); ++i) {
        out.push_back(a);
        a += b;
        std::swap(a, b);
    }
    return out;
}

std::vector<Integer> lucas(int length) {
    std::vector<Integer> out;
    Integer a = 2;
    Integer b = 1;
    for (std::size_t i = 0; i < checked_length(length); ++i) {
        out.push_back(a);
        a += b;
        std::swap(a, b);
    }
    return out;
}

std::vector<Integer> fibonacci_initial(int length) {
    const std::size_t n = checked_length(length);
    const QuadraticSurd minus_alpha = -golden_alpha();
    const QuadraticSurd minus_beta = -golden_beta();
    const QuadraticSurd inv_root5 = inverse(QuadraticSurd::root(5));
    std::vector<Integer> out;
    // <x>_{m+1} = <x>_m (x + m), so keep both running products.
    QuadraticSurd ra = one_like(minus_alpha);
    QuadraticSurd rb = one_like(minus_beta);
    for (std::size_t m = 0; m < n; ++m) {
        QuadraticSurd value = (ra - rb) * inv_root5;
        if (m % 2 == 1) value = -value;
        Rational q = surd_to_rational(value);
        if (!q.is_integer()) throw std::logic_error("fibonacci_initial term " + std::to_string(m) + " is not an integer");
        out.push_back(q.numerator());
        const QuadraticSurd shift(5, Rational(static_cast<long>(m)));
        ra *= minus_alpha + shift;
        rb *= minus_beta + shift;
    }
    return out;
}

std::vector<Integer> derangements(int length) {
    const std::size_t n = checked_length(length);
    std::vector<Integer> out{1};
    for (std::size_t m = 1; m < n; ++m) {
        Integer next = Integer(static_cast<unsigned long>(m)) * out.back();
        next += (m % 2 == 0) ? 1 : -1;
        out.push_back(std::move(next));
    }
    out.resize(n);
    return out;
}

std::vector<Integer> signed_derangements(int length) {
    auto out = derangements(length);
    for (std::size_t m = 1; m < out.size(); m += 2) out[m] = -out[m];
    return out;
}

std::vector<Integer> bell(int length) { return stirling_transform(ones(length)); }

std::vector<Integer> singleton_free(int length) { return stirling_transform(signed_derangements(length)); }

std::vector<Integer> catalan(int length) {
    const std::size_t n = checked_length(length);
    std::vector<Integer> out{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // C_{k+1} = C_k * 2(2k+1)/(k+2), exact.
        Integer next = out.back() * Integer(static_cast<unsigned long>(2 * (2 * k + 1)));
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 2));
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Integer> motzkin(int length) {
    const std::size_t n = checked_length(length);
    const auto c = catalan(static_cast<int>(n / 2 + 1));
    std::vector<Integer> out;
    for (std::size_t m = 0; m < n; ++m) {
        Integer sum = 0;
        for (std::size_t k = 0; 2 * k <= m; ++k) sum += binomial(static_cast<unsigned>(m), static_cast<unsigned>(2 * k)) * c[k];
        out.push_back(std::move(sum));
    }
    return out;
}

std::vector<Integer> r_sequence(int length) { return inverse_stirling_transform(catalan(length)); }

std::vector<Rational> bernoulli_numbers(int length) {
    const std::size_t n = checked_length(length);
    std::vector<Rational> out{Rational(1)};
    for (std::size_t m = 1; m < n; ++m) {
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rational acc;
        for (std::size_t k = 0; k < m; ++k) acc += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(k))) * out[k];
        out.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return out;
}

std::vector<RationalPolynomial> bernoulli_polynomials(int length) {
    const std::size_t n = checked_length(length);
    const auto b = bernoulli_numbers(length);
    std::vector<RationalPolynomial> out;
    for (std::size_t m = 0; m < n; ++m) {
        // B_m(x) = sum_k C(m,k) B_k x^{m-k}
        std::vector<Rational> coeffs(m + 1);
        for (std::size_t k = 0; k <= m; ++k) coeffs[m - k] = Rational(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k))) * b[k];
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

namespace {

QuadraticSurd surd_power(const QuadraticSurd& x, int n) {
    QuadraticSurd r = one_like(x);
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

QuadraticSurd fibonacci_binet(int n) {
    return (surd_power(golden_alpha(), n) - surd_power(golden_beta(), n)) / QuadraticSurd::root(5);
}

QuadraticSurd lucas_binet(int n) { return surd_power(golden_alpha(), n) + surd_power(golden_beta(), n); }

namespace {

using Generator = std::function<SequenceValues(int)>;

const std::vector<std::pair<std::string, Generator>>& registry() {
    static const std::vector<std::pair<std::string, Generator>> table = {
        {"ones", [](int n) { return SequenceValues(ones(n)); }},
        {"fibonacci", [](int n) { return SequenceValues(fibonacci(n)); }},
        {"lucas", [](int n) { return SequenceValues(lucas(n)); }},
        {"fibonacci_initial", [](int n) { return SequenceValues(fibonacci_initial(n)); }},
        {"derangements", [](int n) { return SequenceValues(derangements(n)); }},
        {"signed_derangements", [](int n) { return SequenceValues(signed_derangements(n)); }},
        {"bell", [](int n) { return SequenceValues(bell(n)); }},
        {"singleton_free", [](int n) { return SequenceValues(singleton_free(n)); }},
        {"catalan", [](int n) { return SequenceValues(catalan(n)); }},
        {"motzkin", [](int n) { return SequenceValues(motzkin(n)); }},
        {"r_sequence", [](int n) { return SequenceValues(r_sequence(n)); }},
        {"bernoulli_numbers", [](int n) { return SequenceValues(bernoulli_numbers(n)); }},
        {"bernoulli_polynomials", [](int n) { return SequenceValues(bernoulli_polynomials(n)); }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& registry_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, gen] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SequenceRecord generate(std::string_view name, int length) {
    for (const auto& [key, gen] : registry()) {
        if (key == name) {
            return SequenceRecord{key, gen(length), {{"generator", key}, {"length", std::to_string(length)}}};
        }
    }
    std::string known;
    for (const auto& n : registry_names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown sequence \"" + std::string(name) + "\"; known: " + known);
}

}  // namespace stirling_kit
