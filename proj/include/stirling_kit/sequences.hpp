#pragma once

// Generators for the classical sequences used as transform inputs.  Each one
// has a definition that does not go through the transform engine, except
// where the sequence is itself defined as a transform (bell, singleton_free,
// r_sequence).

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stirling_kit/domains.hpp"

namespace stirling_kit {

enum class DomainTag { integer, rational, surd5, polynomial };

std::string_view domain_name(DomainTag tag);
/// Accepts "int", "rational", "surd5", "poly"; std::invalid_argument otherwise.
DomainTag parse_domain_tag(std::string_view text);

using SequenceValues = std::variant<std::vector<Integer>, std::vector<Rational>, std::vector<QuadraticSurd>,
                                    std::vector<RationalPolynomial>>;

template <class T> constexpr DomainTag domain_tag_of();
template <> constexpr DomainTag domain_tag_of<Integer>() { return DomainTag::integer; }
template <> constexpr DomainTag domain_tag_of<Rational>() { return DomainTag::rational; }
template <> constexpr DomainTag domain_tag_of<QuadraticSurd>() { return DomainTag::surd5; }
template <> constexpr DomainTag domain_tag_of<RationalPolynomial>() { return DomainTag::polynomial; }

/// A named, nonempty sequence of elements from one domain.
struct SequenceRecord {
    std::string name;
    SequenceValues values;
    std::map<std::string, std::string> meta;

    DomainTag domain() const;
    std::size_t size() const;
    /// Drops the first `count` terms; std::invalid_argument if nothing would remain.
    SequenceRecord shifted(std::size_t count) const;
    /// Keeps the first `count` terms.
    SequenceRecord prefix(std::size_t count) const;
};

// Each generator returns terms 0..length-1 and throws std::invalid_argument
// when length < 1.

std::vector<Integer> ones(int length);
std::vector<Integer> fibonacci(int length);
std::vector<Integer> lucas(int length);
/// a_m = (-1)^m (<-alpha>_m - <-beta>_m)/sqrt 5, evaluated in Q(sqrt 5).
std::vector<Integer> fibonacci_initial(int length);
std::vector<Integer> derangements(int length);
std::vector<Integer> signed_derangements(int length);
std::vector<Integer> bell(int length);
std::vector<Integer> singleton_free(int length);
std::vector<Integer> catalan(int length);
std::vector<Integer> motzkin(int length);
/// Inverse Stirling transform of the Catalan numbers.
std::vector<Integer> r_sequence(int length);
std::vector<Rational> bernoulli_numbers(int length);
std::vector<RationalPolynomial> bernoulli_polynomials(int length);

/// Binet forms (alpha^n - beta^n)/sqrt 5 and alpha^n + beta^n, kept in Q(sqrt 5).
QuadraticSurd fibonacci_binet(int n);
QuadraticSurd lucas_binet(int n);

/// Names understood by generate(), in registry order.
const std::vector<std::string>& registry_names();
/// Runs a registered generator; std::invalid_argument for unknown names.
SequenceRecord generate(std::string_view name, int length);

}  // namespace stirling_kit
