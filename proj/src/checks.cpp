#include "stirling_kit/checks.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stirling_kit/egf.hpp"
#include "stirling_kit/hankel.hpp"
#include "stirling_kit/io.hpp"
#include "stirling_kit/sequences.hpp"
#include "stirling_kit/stirling.hpp"
#include "stirling_kit/transform.hpp"

#ifndef STIRLING_KIT_FIXTURE_DIR
#define STIRLING_KIT_FIXTURE_DIR "fixtures"
#endif

namespace stirling_kit {

bool CheckReport::passed() const {
    for (const auto& row : rows) {
        if (!row.passed) return false;
    }
    return true;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (!r.passed()) return false;
    }
    return true;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("STIRLING_KIT_FIXTURES")) return env;
    return STIRLING_KIT_FIXTURE_DIR;
}

namespace {

using Counterexample = std::optional<std::string>;

class RowSink {
public:
    explicit RowSink(std::vector<CheckRow>& rows) : rows_(rows) {}

    void add(std::string identity, std::string range, const std::function<Counterexample()>& body) {
        CheckRow row{std::move(identity), std::move(range), true, {}};
        try {
            if (auto cx = body()) {
                row.passed = false;
                row.counterexample = std::move(*cx);
            }
        } catch (const std::exception& e) {
            row.passed = false;
            row.counterexample = std::string("exception: ") + e.what();
        }
        rows_.push_back(std::move(row));
    }

private:
    std::vector<CheckRow>& rows_;
};

std::string range_text(const std::string& vars, int hi) { return vars + " <= " + std::to_string(hi); }

template <class T>
std::string mismatch(const std::string& where, const T& lhs, const T& rhs) {
    return where + ": " + to_string(lhs) + " != " + to_string(rhs);
}

std::string at(std::initializer_list<std::pair<const char*, long>> idx) {
    std::string out;
    for (const auto& [name, v] : idx) out += (out.empty() ? "" : ", ") + std::string(name) + "=" + std::to_string(v);
    return out;
}

template <class T>
Counterexample compare_sequences(const std::vector<T>& got, const std::vector<T>& want, const std::string& label) {
    if (got.size() != want.size()) {
        return label + ": length " + std::to_string(got.size()) + " != " + std::to_string(want.size());
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (!(got[i] == want[i])) return mismatch(label + " at " + std::to_string(i), got[i], want[i]);
    }
    return std::nullopt;
}

Rational lift(const Integer& v) { return Rational(v); }
const RationalPolynomial& lift(const RationalPolynomial& v) { return v; }

template <class T>
auto lifted(std::span<const T> values) {
    using F = std::decay_t<decltype(lift(values[0]))>;
    std::vector<F> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(lift(v));
    return out;
}

std::vector<RationalPolynomial> bernoulli_row_sequence(int length) {
    std::vector<RationalPolynomial> out;
    for (int m = 0; m < length; ++m) out.push_back(bernoulli_row_formula(m));
    return out;
}

std::vector<QuadraticSurd> rising_minus_alpha(int length) {
    std::vector<QuadraticSurd> out;
    for (int m = 0; m < length; ++m) out.push_back(rising_factorial(-golden_alpha(), m));
    return out;
}

std::vector<Integer> random_integers(std::mt19937_64& rng, int length, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Integer> out;
    for (int i = 0; i < length; ++i) out.emplace_back(dist(rng));
    return out;
}

// --- ega -------------------------------------------------------------------------

template <AdditiveDomain T>
Counterexample ega_holds(const std::vector<T>& a, int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= max_n; ++m) {
            auto [lhs, rhs] = generalized_identity_sides(a, n, m);
            if (!(lhs == rhs)) return mismatch(at({{"n", n}, {"m", m}}), lhs, rhs);
        }
    }
    return std::nullopt;
}

void ega_suite(RowSink& sink, int k) {
    const int len = 2 * k + 1;
    const std::string range = range_text("0 <= n,m", k);
    sink.add("ega[ones]", range, [&] { return ega_holds(ones(len), k); });
    sink.add("ega[fibonacci_initial]", range, [&] { return ega_holds(fibonacci_initial(len), k); });
    sink.add("ega[signed_derangements]", range, [&] { return ega_holds(signed_derangements(len), k); });
    sink.add("ega[r_sequence]", range, [&] { return ega_holds(r_sequence(len), k); });
    sink.add("ega[r_sequence shifted]", range, [&] {
        auto r = r_sequence(len + 1);
        r.erase(r.begin());
        return ega_holds(r, k);
    });
    sink.add("ega[bernoulli_numbers]", range, [&] { return ega_holds(bernoulli_numbers(len), k); });
    sink.add("ega[bernoulli rows, poly]", range, [&] { return ega_holds(bernoulli_row_sequence(len), k); });
    sink.add("ega[<-alpha>_m, surd5]", range, [&] { return ega_holds(rising_minus_alpha(len), k); });
    sink.add("ega[random int x20]", range, [&]() -> Counterexample {
        std::mt19937_64 rng(0x5eed0001);
        for (int t = 0; t < 20; ++t) {
            if (auto cx = ega_holds(random_integers(rng, len, 1000), k)) return "case " + std::to_string(t) + ": " + *cx;
        }
        return std::nullopt;
    });
    sink.add("stirling_transform(r_sequence) = catalan", range_text("n", 2 * k), [&] {
        return compare_sequences(stirling_transform(r_sequence(len)), catalan(len), "b");
    });
    sink.add("stirling_transform(bernoulli rows) = B_n(x)", range_text("n", 2 * k), [&] {
        return compare_sequences(stirling_transform(bernoulli_row_sequence(len)), bernoulli_polynomials(len), "b");
    });
}

// --- egf -------------------------------------------------------------------------

// Column r of the block against theorem3_apply and row r against theorem4_apply.
template <AdditiveDomain T>
Counterexample egf_block_holds(const SMatrix<T>& block, int order, int r_max) {
    for (int r = 0; r <= r_max; ++r) {
        const auto& row0 = block.row(0);
        const auto col0 = block.column(0);
        const auto initial_tail = lifted(std::span<const T>(row0).subspan(static_cast<std::size_t>(r), static_cast<std::size_t>(order) + 1));
        const auto final_tail = lifted(std::span<const T>(col0).subspan(static_cast<std::size_t>(r), static_cast<std::size_t>(order) + 1));
        const auto column = block.column(r);
        const auto row = block.row(r);

        using F = typename decltype(initial_tail)::value_type;
        const auto col_series = theorem3_apply(TruncatedEGF<F>(initial_tail), r);
        const auto row_series = theorem4_apply(TruncatedEGF<F>(final_tail), r);
        for (int n = 0; n <= order; ++n) {
            const F want_col = lift(column[static_cast<std::size_t>(n)]);
            if (!(col_series[n] == want_col)) return mismatch("column " + at({{"r", r}, {"n", n}}), col_series[n], want_col);
            const F want_row = lift(row[static_cast<std::size_t>(n)]);
            if (!(row_series[n] == want_row)) return mismatch("row " + at({{"r", r}, {"m", n}}), row_series[n], want_row);
        }
    }
    return std::nullopt;
}

void egf_suite(RowSink& sink, int k) {
    const int side = k + 3;  // r <= 3 plus `k+1` coefficients
    const int len = 2 * side + 1;
    const std::string range = "r <= 3, order " + std::to_string(k);
    sink.add("theorem3/4[ones]", range, [&] { return egf_block_holds(build_from_initial(ones(len), side, side), k, 3); });
    sink.add("theorem3/4[fibonacci_initial]", range,
             [&] { return egf_block_holds(build_from_initial(fibonacci_initial(len), side, side), k, 3); });
    sink.add("theorem3/4[signed_derangements]", range,
             [&] { return egf_block_holds(build_from_initial(signed_derangements(len), side, side), k, 3); });
    sink.add("theorem3/4[r_sequence shifted]", range, [&] {
        auto r = r_sequence(len + 1);
        r.erase(r.begin());
        return egf_block_holds(build_from_initial(r, side, side), k, 3);
    });
    sink.add("theorem3/4[catalan final]", range, [&] { return egf_block_holds(build_from_final(catalan(len), side, side), k, 3); });
    sink.add("theorem3/4[bernoulli_polynomials final]", range,
             [&] { return egf_block_holds(build_from_final(bernoulli_polynomials(len), side, side), k, 3); });

    const int order = std::max(k, 16);
    sink.add("(e^z-1) o ln(1+z) = z", "order " + std::to_string(order), [&]() -> Counterexample {
        if (!(series_compose(exp_minus_one_series(order), log1p_series(order)) == identity_series(order))) return "mismatch";
        if (!(series_compose(log1p_series(order), exp_minus_one_series(order)) == identity_series(order))) return "reverse mismatch";
        return std::nullopt;
    });
    sink.add("exp(e^z-1) = Bell EGF", "order " + std::to_string(k), [&] {
        const auto got = series_compose(exp_rz_series(1, k), exp_minus_one_series(k));
        return compare_sequences(got.coefficients(), lifted(std::span<const Integer>(bell(k + 1))), "c");
    });
    sink.add("exp(e^z-z-1) = singleton-free EGF", "order " + std::to_string(k), [&] {
        auto inner = exp_minus_one_series(k).coefficients();
        if (k >= 1) inner[1] -= 1;
        const auto closed = series_compose(exp_rz_series(1, k), RationalEGF(inner));
        const auto via_theorem = theorem3_apply(egf_from_integers(signed_derangements(k + 1)), 0);
        if (auto cx = compare_sequences(via_theorem.coefficients(), closed.coefficients(), "theorem3 vs closed form")) return cx;
        return compare_sequences(closed.coefficients(), lifted(std::span<const Integer>(singleton_free(k + 1))), "c");
    });
}

// --- rstirling ---------------------------------------------------------------------

void rstirling_suite(RowSink& sink, int k) {
    const int n_hi = std::max(k, 20);
    sink.add("{n k}_r boundary cases", "r <= 6, k <= n <= " + std::to_string(n_hi), [&]() -> Counterexample {
        for (int r = 0; r <= 6; ++r) {
            for (int n = 0; n <= n_hi; ++n) {
                for (int kk = -1; kk <= n + 1; ++kk) {
                    const Integer& v = r_stirling2(r, n, kk);
                    Integer want;
                    if (n < r || kk < 0 || kk > n) {
                        want = 0;
                    } else if (n == r) {
                        want = (kk == r) ? 1 : 0;
                    } else {
                        want = kk * r_stirling2(r, n - 1, kk) + r_stirling2(r, n - 1, kk - 1);
                    }
                    if (v != want) return mismatch(at({{"r", r}, {"n", n}, {"k", kk}}), v, want);
                }
            }
        }
        return std::nullopt;
    });
    sink.add("{n r}_r = r^(n-r)", "r <= 6, n <= " + std::to_string(n_hi), [&]() -> Counterexample {
        for (int r = 0; r <= 6; ++r) {
            for (int n = r; n <= n_hi; ++n) {
                Integer want;
                mpz_ui_pow_ui(want.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(n - r));
                if (r_stirling2(r, n, r) != want) return mismatch(at({{"r", r}, {"n", n}}), r_stirling2(r, n, r), want);
            }
        }
        return std::nullopt;
    });
    sink.add("tig identity", "1 <= r <= 6, n,k <= " + std::to_string(k), [&]() -> Counterexample {
        for (int r = 1; r <= 6; ++r) {
            if (!verify_tig_identity(r, k, k)) return "fails for r=" + std::to_string(r);
        }
        return std::nullopt;
    });
    const int order = std::max(k, 14);
    sink.add("EGF (1/k!) e^{rz}(e^z-1)^k", "r <= 4, k <= 6, order " + std::to_string(order), [&]() -> Counterexample {
        for (int r = 0; r <= 4; ++r) {
            RationalEGF power = one_series(order);
            for (int kk = 0; kk <= 6; ++kk) {
                const auto series = series_multiply(exp_rz_series(r, order), power);
                const Rational inv_fact(Integer(1), factorial(static_cast<unsigned>(kk)));
                for (int n = 0; n <= order; ++n) {
                    const Rational got = series[n] * inv_fact;
                    const Rational want(r_stirling2(r, n + r, kk + r));
                    if (!(got == want)) return mismatch(at({{"r", r}, {"k", kk}, {"n", n}}), got, want);
                }
                power = series_multiply(power, exp_minus_one_series(order));
            }
        }
        return std::nullopt;
    });
    sink.add("EGF (1/k!) ln(1+z)^k = s(n,k)", "k <= 6, order " + std::to_string(order), [&]() -> Counterexample {
        RationalEGF power = one_series(order);
        for (int kk = 0; kk <= 6; ++kk) {
            const Rational inv_fact(Integer(1), factorial(static_cast<unsigned>(kk)));
            for (int n = 0; n <= order; ++n) {
                const Rational got = power[n] * inv_fact;
                const Rational want(stirling1(n, kk));
                if (!(got == want)) return mismatch(at({{"k", kk}, {"n", n}}), got, want);
            }
            power = series_multiply(power, log1p_series(order));
        }
        return std::nullopt;
    });
    sink.add("sum_k s(n,k){k m} = delta", range_text("n,m", k), [&]() -> Counterexample {
        for (int n = 0; n <= k; ++n) {
            for (int m = 0; m <= k; ++m) {
                Integer sum = 0;
                for (int j = 0; j <= n; ++j) sum += stirling1(n, j) * stirling2(j, m);
                const Integer want = (n == m) ? 1 : 0;
                if (sum != want) return mismatch(at({{"n", n}, {"m", m}}), sum, want);
            }
        }
        return std::nullopt;
    });
    sink.add("x^n = sum_k {n k}(x)_k", range_text("n", k), [&]() -> Counterexample {
        RationalPolynomial power(1);
        for (int n = 0; n <= k; ++n) {
            RationalPolynomial sum;
            for (int j = 0; j <= n; ++j) sum += falling_factorial_polynomial(j) * Rational(stirling2(n, j));
            if (!(sum == power)) return mismatch(at({{"n", n}}), sum, power);
            power *= RationalPolynomial::x();
        }
        return std::nullopt;
    });
    sink.add("(x)_n coefficients = s(n,k)", range_text("n", k), [&]() -> Counterexample {
        for (int n = 0; n <= k; ++n) {
            const auto p = falling_factorial_polynomial(n);
            for (int j = 0; j <= n; ++j) {
                if (!(p.coefficient(j) == Rational(stirling1(n, j)))) {
                    return mismatch(at({{"n", n}, {"k", j}}), p.coefficient(j), Rational(stirling1(n, j)));
                }
            }
        }
        return std::nullopt;
    });
}

// --- hankel ------------------------------------------------------------------------

template <RingDomain T>
Counterexample theorem5_holds(const std::vector<T>& final_seq, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        auto [block_det, hankel_det] = theorem5_check(final_seq, n);
        if (!(block_det == hankel_det)) return mismatch(at({{"n", n}}), block_det, hankel_det);
    }
    return std::nullopt;
}

void hankel_suite(RowSink& sink, int k) {
    const int n5 = std::min(k, 8);
    const int nc = std::min(k, 6);
    const int nb = std::min(k, 4);
    for (const auto& name : registry_names()) {
        sink.add("theorem5[" + name + "]", range_text("n", n5), [&] {
            const auto record = generate(name, 2 * n5 + 1);
            return std::visit([&](const auto& v) { return theorem5_holds(v, n5); }, record.values);
        });
    }
    sink.add("theorem5[random int x200]", range_text("n", n5), [&]() -> Counterexample {
        std::mt19937_64 rng(0x5eed0005);
        for (int t = 0; t < 200; ++t) {
            if (auto cx = theorem5_holds(random_integers(rng, 2 * n5 + 1, 50), n5)) return "case " + std::to_string(t) + ": " + *cx;
        }
        return std::nullopt;
    });
    const auto corollary_row = [&](const std::string& label, auto make) {
        sink.add("corollary[" + label + "]", range_text("n", nc), [&, make]() -> Counterexample {
            const auto a = make(2 * nc + 1);
            for (int n = 0; n <= nc; ++n) {
                if (!corollary_check(a, n)) return "fails at n=" + std::to_string(n);
            }
            return std::nullopt;
        });
    };
    corollary_row("ones", [](int l) { return ones(l); });
    corollary_row("signed_derangements", [](int l) { return signed_derangements(l); });
    corollary_row("fibonacci_initial", [](int l) { return fibonacci_initial(l); });
    corollary_row("r_sequence", [](int l) { return r_sequence(l); });
    sink.add("corollary[random int x50]", range_text("n", nc), [&]() -> Counterexample {
        std::mt19937_64 rng(0x5eed0006);
        for (int t = 0; t < 50; ++t) {
            const auto a = random_integers(rng, 2 * nc + 1, 50);
            for (int n = 0; n <= nc; ++n) {
                if (!corollary_check(a, n)) return "case " + std::to_string(t) + " fails at n=" + std::to_string(n);
            }
        }
        return std::nullopt;
    });
    sink.add("binomial Hankel invariance[motzkin]", range_text("n", nb), [&]() -> Counterexample {
        if (!binomial_hankel_invariance_check(motzkin(2 * nb + 1), nb)) return "fails";
        return std::nullopt;
    });
    sink.add("binomial Hankel invariance[random int x200]", range_text("n", nb), [&]() -> Counterexample {
        std::mt19937_64 rng(0x5eed0007);
        for (int t = 0; t < 200; ++t) {
            if (!binomial_hankel_invariance_check(random_integers(rng, 2 * nb + 1, 100), nb)) return "case " + std::to_string(t);
        }
        return std::nullopt;
    });
    sink.add("Hankel transform of catalan is all ones", range_text("n", std::min(k, 6)), [&] {
        const int n = std::min(k, 6);
        return compare_sequences(hankel_transform(catalan(2 * n + 1), n), std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(1)), "det");
    });
}

// --- catalan-motzkin -----------------------------------------------------------------

void catalan_motzkin_suite(RowSink& sink, int k) {
    const int n3 = k + 3;
    const int len = 2 * k + 4;
    const auto C = catalan(2 * n3 + 4);
    const auto M = motzkin(2 * n3 + 4);
    sink.add("sum s(n,k)M_k = sum s(n+1,k)C_k", range_text("n", n3), [&]() -> Counterexample {
        for (int n = 0; n <= n3; ++n) {
            Integer lhs = 0;
            Integer rhs = 0;
            for (int j = 0; j <= n; ++j) lhs += stirling1(n, j) * M[static_cast<std::size_t>(j)];
            for (int j = 0; j <= n + 1; ++j) rhs += stirling1(n + 1, j) * C[static_cast<std::size_t>(j)];
            if (lhs != rhs) return mismatch(at({{"n", n}}), lhs, rhs);
        }
        return std::nullopt;
    });
    sink.add("C_n and M_n double-sum inversions", range_text("n", k), [&]() -> Counterexample {
        for (int n = 0; n <= k; ++n) {
            Integer c = (n == 0) ? 1 : 0;
            for (int j = 1; j <= n; ++j) {
                for (int i = 0; i <= j - 1; ++i) c += stirling2(n, j) * stirling1(j - 1, i) * M[static_cast<std::size_t>(i)];
            }
            if (c != C[static_cast<std::size_t>(n)]) return mismatch("C " + at({{"n", n}}), c, C[static_cast<std::size_t>(n)]);
            Integer m = 0;
            for (int j = 0; j <= n; ++j) {
                for (int i = 0; i <= j + 1; ++i) m += stirling2(n, j) * stirling1(j + 1, i) * C[static_cast<std::size_t>(i)];
            }
            if (m != M[static_cast<std::size_t>(n)]) return mismatch("M " + at({{"n", n}}), m, M[static_cast<std::size_t>(n)]);
        }
        return std::nullopt;
    });
    // R from the series route, independent of the inverse-transform route.
    const auto r_series = theorem4_apply(egf_from_integers(catalan(len)), 0);
    std::vector<Integer> R;
    for (const auto& c : r_series.coefficients()) R.push_back(c.numerator());
    sink.add("R via theorem4(Catalan EGF) = inverse transform of catalan", "order " + std::to_string(len - 1), [&]() -> Counterexample {
        for (const auto& c : r_series.coefficients()) {
            if (!c.is_integer()) return "non-integer coefficient " + to_string(c);
        }
        return compare_sequences(R, r_sequence(len), "R");
    });
    sink.add("sum s(m,k)C_{n+k} = sum {n+m k+m}_m R_{m+k}", range_text("0 <= n,m", k), [&]() -> Counterexample {
        for (int n = 0; n <= k; ++n) {
            for (int m = 0; m <= k; ++m) {
                const Integer lhs = entry_via_theorem2(C, n, m);
                const Integer rhs = entry_via_theorem1(R, n, m);
                if (lhs != rhs) return mismatch(at({{"n", n}, {"m", m}}), lhs, rhs);
            }
        }
        return std::nullopt;
    });
    sink.add("sum s(m,k)M_{n+k} = sum {n+m k+m}_m R_{m+k+1}", range_text("0 <= n,m", k), [&]() -> Counterexample {
        const std::vector<Integer> shifted(R.begin() + 1, R.end());
        for (int n = 0; n <= k; ++n) {
            for (int m = 0; m <= k; ++m) {
                const Integer lhs = entry_via_theorem2(M, n, m);
                const Integer rhs = entry_via_theorem1(shifted, n, m);
                if (lhs != rhs) return mismatch(at({{"n", n}, {"m", m}}), lhs, rhs);
            }
        }
        return std::nullopt;
    });
    const int order_1f1 = std::max(k, 14);
    sink.add("1F1(1/2;2;4z) = Catalan EGF", "order " + std::to_string(order_1f1), [&] {
        return compare_sequences(hypergeometric_1f1(Rational(1, 2), Rational(2), 4, order_1f1).coefficients(),
                                 lifted(std::span<const Integer>(catalan(order_1f1 + 1))), "c");
    });
    sink.add("1F1(3/2;3;4z) = C_{n+1}", "order " + std::to_string(order_1f1), [&] {
        const auto c = catalan(order_1f1 + 2);
        return compare_sequences(hypergeometric_1f1(Rational(3, 2), Rational(3), 4, order_1f1).coefficients(),
                                 lifted(std::span<const Integer>(c).subspan(1)), "c");
    });
    sink.add("C_{n+1} = binomial transform of M", range_text("n", n3), [&]() -> Counterexample {
        const std::vector<Integer> m(M.begin(), M.begin() + n3 + 1);
        const std::vector<Integer> c(C.begin() + 1, C.begin() + n3 + 2);
        if (auto cx = compare_sequences(binomial_transform(m), c, "forward")) return cx;
        return compare_sequences(inverse_binomial_transform(c), m, "inverse");
    });
    sink.add("d/dz Catalan EGF * e^{-z} = Motzkin EGF", "order " + std::to_string(k), [&] {
        const auto cat = egf_from_integers(catalan(k + 2)).derivative();
        const auto got = series_multiply(cat, exp_rz_series(-1, k));
        return compare_sequences(got.coefficients(), lifted(std::span<const Integer>(motzkin(k + 1))), "c");
    });
    sink.add("column 0 of the array from R_{m+1} = Motzkin", range_text("n", k), [&] {
        auto r = r_sequence(2 * k + 2);
        r.erase(r.begin());
        return compare_sequences(build_from_initial(r, k, k).column(0), motzkin(k + 1), "a(n,0)");
    });
}

// --- bernoulli -----------------------------------------------------------------------

void bernoulli_suite(RowSink& sink, int k) {
    const int ke = std::min(k, 8);
    sink.add("row formula = theorem2(B_n(x), 0, m)", range_text("m", k), [&]() -> Counterexample {
        const auto b = bernoulli_polynomials(k + 1);
        for (int m = 0; m <= k; ++m) {
            const auto via_theorem = entry_via_theorem2(b, 0, m);
            const auto formula = bernoulli_row_formula(m);
            if (!(via_theorem == formula)) return mismatch(at({{"m", m}}), formula, via_theorem);
        }
        return std::nullopt;
    });
    sink.add("sum s(m,k)B_{n+k}(x) = sum {n+m k+m}_m row(m+k)", range_text("0 <= n,m", ke), [&]() -> Counterexample {
        const auto b = bernoulli_polynomials(2 * ke + 1);
        const auto rows = bernoulli_row_sequence(2 * ke + 1);
        for (int n = 0; n <= ke; ++n) {
            for (int m = 0; m <= ke; ++m) {
                const auto lhs = entry_via_theorem2(b, n, m);
                const auto rhs = entry_via_theorem1(rows, n, m);
                if (!(lhs == rhs)) return mismatch(at({{"n", n}, {"m", m}}), lhs, rhs);
            }
        }
        return std::nullopt;
    });
    sink.add("theorem4(B_n(x) EGF) = row formula", "order " + std::to_string(k), [&] {
        const auto row = theorem4_apply(TruncatedEGF<RationalPolynomial>(bernoulli_polynomials(k + 1)), 0);
        return compare_sequences(row.coefficients(), bernoulli_row_sequence(k + 1), "a(0,m)");
    });
    sink.add("B_n(0) = B_n", range_text("n", k), [&]() -> Counterexample {
        const auto p = bernoulli_polynomials(k + 1);
        const auto b = bernoulli_numbers(k + 1);
        for (int n = 0; n <= k; ++n) {
            const auto v = p[static_cast<std::size_t>(n)].evaluate(0);
            if (!(v == b[static_cast<std::size_t>(n)])) return mismatch(at({{"n", n}}), v, b[static_cast<std::size_t>(n)]);
        }
        return std::nullopt;
    });
}

// --- matrices ------------------------------------------------------------------------

void matrices_suite(RowSink& sink, const std::string& dir) {
    for (const auto& name : matrix_fixture_names()) {
        sink.add("golden " + name, "byte-exact", [&]() -> Counterexample {
            const std::string path = dir + "/" + name;
            std::ifstream in(path, std::ios::binary);
            if (!in) return "cannot open " + path;
            std::stringstream buffer;
            buffer << in.rdbuf();
            const std::string regenerated = regenerate_matrix_fixture(name);
            if (buffer.str() != regenerated) return "regenerated block differs from " + path;
            return std::nullopt;
        });
    }
}

}  // namespace

const std::vector<std::string>& matrix_fixture_names() {
    static const std::vector<std::string> names = {
        "fibonacci_initial.json",
        "signed_derangements.json",
        "catalan_final.json",
        "r_sequence_shifted.json",
    };
    return names;
}

std::string regenerate_matrix_fixture(std::string_view fixture_name) {
    if (fixture_name == "fibonacci_initial.json") {
        return render_matrix(matrix_text(build_from_initial(fibonacci_initial(14), 7, 6), "fibonacci_initial"), OutputFormat::json);
    }
    if (fixture_name == "signed_derangements.json") {
        return render_matrix(matrix_text(build_from_initial(signed_derangements(11), 5, 5), "signed_derangements"), OutputFormat::json);
    }
    if (fixture_name == "catalan_final.json") {
        return render_matrix(matrix_text(build_from_final(catalan(14), 6, 7), "catalan"), OutputFormat::json);
    }
    if (fixture_name == "r_sequence_shifted.json") {
        auto r = r_sequence(15);
        r.erase(r.begin());
        return render_matrix(matrix_text(build_from_initial(r, 6, 7), "r_sequence_shifted"), OutputFormat::json);
    }
    throw std::invalid_argument("unknown fixture \"" + std::string(fixture_name) + "\"");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"ega", "egf", "hankel", "rstirling", "catalan-motzkin", "bernoulli", "matrices"};
    return names;
}

CheckReport run_suite(std::string_view name, const CheckOptions& options) {
    if (options.max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
    CheckReport report{std::string(name), {}};
    RowSink sink(report.rows);
    const int k = options.max_n;
    if (name == "ega") {
        ega_suite(sink, k);
    } else if (name == "egf") {
        egf_suite(sink, k);
    } else if (name == "hankel") {
        hankel_suite(sink, k);
    } else if (name == "rstirling") {
        rstirling_suite(sink, k);
    } else if (name == "catalan-motzkin") {
        catalan_motzkin_suite(sink, k);
    } else if (name == "bernoulli") {
        bernoulli_suite(sink, k);
    } else if (name == "matrices") {
        matrices_suite(sink, options.fixture_dir.empty() ? default_fixture_dir() : options.fixture_dir);
    } else {
        std::string known = "all";
        for (const auto& s : suite_names()) known += ", " + s;
        throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"; known: " + known);
    }
    return report;
}

std::vector<CheckReport> run_checks(std::string_view selection, const CheckOptions& options) {
    if (selection != "all") return {run_suite(selection, options)};
    std::vector<std::future<CheckReport>> pending;
    for (const auto& name : suite_names()) {
        pending.push_back(std::async(std::launch::async, [name, options] { return run_suite(name, options); }));
    }
    std::vector<CheckReport> out;
    for (auto& f : pending) out.push_back(f.get());
    return out;
}

std::string render_report_text(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& report : reports) {
        for (const auto& row : report.rows) {
            out += std::string(row.passed ? "PASS" : "FAIL") + "  " + report.suite + "  " + row.identity + "  [" + row.range + "]\n";
            if (!row.passed) out += "      counterexample: " + row.counterexample + "\n";
        }
    }
    out += std::string("overall: ") + (all_passed(reports) ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string render_report_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json doc;
    doc["suites"] = nlohmann::ordered_json::array();
    for (const auto& report : reports) {
        nlohmann::ordered_json s;
        s["suite"] = report.suite;
        s["passed"] = report.passed();
        s["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : report.rows) {
            nlohmann::ordered_json r;
            r["identity"] = row.identity;
            r["range"] = row.range;
            r["passed"] = row.passed;
            if (!row.passed) r["counterexample"] = row.counterexample;
            s["rows"].push_back(std::move(r));
        }
        doc["suites"].push_back(std::move(s));
    }
    doc["passed"] = all_passed(reports);
    return doc.dump(2) + "\n";
}

}  // namespace stirling_kit
