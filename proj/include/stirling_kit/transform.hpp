#pragma once

// The two-way array a(n,m) generated from its first row (the initial
// sequence) by
//
//     a(n+1,m) = a(n,m+1) + m a(n,m)
//
// or from its first column (the final sequence) by
//
//     a(n,m+1) = a(n+1,m) - m a(n,m).
//
// Column 0 of the array built from a sequence is its Stirling transform and
// row 0 of the array built from a sequence is its inverse Stirling transform.
// Everything here uses only addition, subtraction and integer scaling of the
// elements.

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirling_kit/domains.hpp"
#include "stirling_kit/stirling.hpp"

namespace stirling_kit {

enum class BuiltFrom { initial, final };

namespace detail {

// Recurrence indices are naturals; anything beyond this is a caller bug.
inline constexpr int kMaxIndex = 1 << 20;

inline void check_index(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + std::to_string(v));
    if (v > kMaxIndex) throw std::invalid_argument(std::string(what) + " = " + std::to_string(v) + " is too large");
}

inline void check_length(std::size_t have, std::size_t need, const char* what) {
    if (have < need) {
        throw std::invalid_argument(std::string(what) + " needs at least " + std::to_string(need) +
                                    " terms, got " + std::to_string(have));
    }
}

}  // namespace detail

/// Rows 0..N and columns 0..M of the array, with the sequence it was built from.
template <AdditiveDomain T>
class SMatrix {
public:
    SMatrix(std::vector<std::vector<T>> entries, BuiltFrom built_from, std::vector<T> source)
        : entries_(std::move(entries)), built_from_(built_from), source_(std::move(source)) {}

    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return entries_.empty() ? 0 : static_cast<int>(entries_.front().size()); }
    const T& at(int n, int m) const { return entries_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(m)); }
    const std::vector<T>& row(int n) const { return entries_.at(static_cast<std::size_t>(n)); }
    std::vector<T> column(int m) const {
        std::vector<T> out;
        out.reserve(entries_.size());
        for (const auto& r : entries_) out.push_back(r.at(static_cast<std::size_t>(m)));
        return out;
    }
    const std::vector<std::vector<T>>& entries() const { return entries_; }
    BuiltFrom built_from() const { return built_from_; }
    const std::vector<T>& source() const { return source_; }

    /// Top-left (n+1)x(m+1) block.
    SMatrix block(int n, int m) const {
        std::vector<std::vector<T>> out;
        for (int i = 0; i <= n; ++i) {
            const auto& r = row(i);
            out.emplace_back(r.begin(), r.begin() + m + 1);
        }
        return SMatrix(std::move(out), built_from_, source_);
    }

    friend bool operator==(const SMatrix& a, const SMatrix& b) { return a.entries_ == b.entries_; }

private:
    std::vector<std::vector<T>> entries_;
    BuiltFrom built_from_;
    std::vector<T> source_;
};

/// Rows 0..N, columns 0..M from the first row.  Needs initial[0..N+M].
template <AdditiveDomain T>
SMatrix<T> build_from_initial(std::span<const T> initial, int N, int M) {
    detail::check_index(N, "N");
    detail::check_index(M, "M");
    const auto width = static_cast<std::size_t>(N + M + 1);
    detail::check_length(initial.size(), width, "initial sequence");

    // Row n is known on columns 0..N+M-n; keep the full strip and cut to M+1.
    std::vector<T> strip(initial.begin(), initial.begin() + static_cast<std::ptrdiff_t>(width));
    std::vector<std::vector<T>> entries;
    entries.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0;; ++n) {
        entries.emplace_back(strip.begin(), strip.begin() + M + 1);
        if (n == N) break;
        for (std::size_t m = 0; m + 1 < strip.size(); ++m) strip[m] = strip[m + 1] + scaled(strip[m], Integer(static_cast<unsigned long>(m)));
        strip.pop_back();
    }
    return SMatrix<T>(std::move(entries), BuiltFrom::initial,
                      std::vector<T>(initial.begin(), initial.begin() + static_cast<std::ptrdiff_t>(width)));
}

/// Rows 0..N, columns 0..M from the first column.  Needs final[0..N+M].
template <AdditiveDomain T>
SMatrix<T> build_from_final(std::span<const T> final_seq, int N, int M) {
    detail::check_index(N, "N");
    detail::check_index(M, "M");
    const auto height = static_cast<std::size_t>(N + M + 1);
    detail::check_length(final_seq.size(), height, "final sequence");

    std::vector<T> strip(final_seq.begin(), final_seq.begin() + static_cast<std::ptrdiff_t>(height));
    std::vector<std::vector<T>> entries(static_cast<std::size_t>(N) + 1);
    for (int m = 0;; ++m) {
        for (int n = 0; n <= N; ++n) entries[static_cast<std::size_t>(n)].push_back(strip[static_cast<std::size_t>(n)]);
        if (m == M) break;
        const Integer factor = m;
        for (std::size_t n = 0; n + 1 < strip.size(); ++n) strip[n] = strip[n + 1] - scaled(strip[n], factor);
        strip.pop_back();
    }
    return SMatrix<T>(std::move(entries), BuiltFrom::final,
                      std::vector<T>(final_seq.begin(), final_seq.begin() + static_cast<std::ptrdiff_t>(height)));
}

/// b_n = sum_k {n k} a_k, computed along anti-diagonals with one working array.
template <AdditiveDomain T>
std::vector<T> stirling_transform(std::span<const T> a) {
    if (a.empty()) throw std::invalid_argument("stirling_transform of an empty sequence");
    // Before pass n, work[m] = a(n-1-m, m); after it, work[m] = a(n-m, m).
    std::vector<T> work;
    std::vector<T> b;
    work.reserve(a.size());
    b.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        work.push_back(a[n]);
        for (std::size_t m = n; m >= 1; --m) {
            work[m - 1] = scaled(work[m - 1], Integer(static_cast<unsigned long>(m - 1))) + work[m];
        }
        b.push_back(work[0]);
    }
    return b;
}

/// a_m = sum_k s(m,k) b_k, the inverse of stirling_transform.
template <AdditiveDomain T>
std::vector<T> inverse_stirling_transform(std::span<const T> b) {
    if (b.empty()) throw std::invalid_argument("inverse_stirling_transform of an empty sequence");
    // Before pass m, work[n] = a(n, m-1-n); after it, work[n] = a(n, m-n).
    std::vector<T> work;
    std::vector<T> a;
    work.reserve(b.size());
    a.reserve(b.size());
    for (std::size_t m = 0; m < b.size(); ++m) {
        work.push_back(b[m]);
        for (std::size_t n = m; n >= 1; --n) {
            work[n - 1] = work[n] - scaled(work[n - 1], Integer(static_cast<unsigned long>(m - n)));
        }
        a.push_back(work[0]);
    }
    return a;
}

/// a(n,m) = sum_{k=0}^{n} {n+m k+m}_m a(0,m+k).
template <AdditiveDomain T>
T entry_via_theorem1(std::span<const T> initial, int n, int m) {
    detail::check_index(n, "n");
    detail::check_index(m, "m");
    detail::check_length(initial.size(), static_cast<std::size_t>(n + m + 1), "initial sequence");
    T sum = zero_like(initial[0]);
    for (int k = 0; k <= n; ++k) {
        sum = sum + scaled(initial[static_cast<std::size_t>(m + k)], r_stirling2(m, n + m, k + m));
    }
    return sum;
}

/// a(n,m) = sum_{k=0}^{m} s(m,k) a(n+k,0).
template <AdditiveDomain T>
T entry_via_theorem2(std::span<const T> final_seq, int n, int m) {
    detail::check_index(n, "n");
    detail::check_index(m, "m");
    detail::check_length(final_seq.size(), static_cast<std::size_t>(n + m + 1), "final sequence");
    T sum = zero_like(final_seq[0]);
    for (int k = 0; k <= m; ++k) {
        sum = sum + scaled(final_seq[static_cast<std::size_t>(n + k)], stirling1(m, k));
    }
    return sum;
}

/// Both sides of sum_k s(m,k) b_{n+k} = sum_k {n+m k+m}_m a_{m+k}, with b the
/// Stirling transform of a.
template <AdditiveDomain T>
std::pair<T, T> generalized_identity_sides(std::span<const T> a, int n, int m) {
    detail::check_index(n, "n");
    detail::check_index(m, "m");
    const auto need = static_cast<std::size_t>(n + m + 1);
    detail::check_length(a.size(), need, "sequence");
    const std::vector<T> b = stirling_transform(a.first(need));
    return {entry_via_theorem2(std::span<const T>(b), n, m), entry_via_theorem1(a, n, m)};
}

/// beta_n = sum_k C(n,k) alpha_k.
template <AdditiveDomain T>
std::vector<T> binomial_transform(std::span<const T> a) {
    if (a.empty()) throw std::invalid_argument("binomial_transform of an empty sequence");
    std::vector<T> out;
    out.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        T sum = zero_like(a[0]);
        for (std::size_t k = 0; k <= n; ++k) sum = sum + scaled(a[k], binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        out.push_back(std::move(sum));
    }
    return out;
}

/// alpha_n = sum_k (-1)^{n-k} C(n,k) beta_k.
template <AdditiveDomain T>
std::vector<T> inverse_binomial_transform(std::span<const T> b) {
    if (b.empty()) throw std::invalid_argument("inverse_binomial_transform of an empty sequence");
    std::vector<T> out;
    out.reserve(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
        T sum = zero_like(b[0]);
        for (std::size_t k = 0; k <= n; ++k) {
            Integer c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
            if ((n - k) % 2 == 1) c = -c;
            sum = sum + scaled(b[k], c);
        }
        out.push_back(std::move(sum));
    }
    return out;
}

// Convenience overloads for owning containers.
template <AdditiveDomain T>
SMatrix<T> build_from_initial(const std::vector<T>& initial, int N, int M) {
    return build_from_initial(std::span<const T>(initial), N, M);
}
template <AdditiveDomain T>
SMatrix<T> build_from_final(const std::vector<T>& final_seq, int N, int M) {
    return build_from_final(std::span<const T>(final_seq), N, M);
}
template <AdditiveDomain T>
std::vector<T> stirling_transform(const std::vector<T>& a) {
    return stirling_transform(std::span<const T>(a));
}
template <AdditiveDomain T>
std::vector<T> inverse_stirling_transform(const std::vector<T>& b) {
    return inverse_stirling_transform(std::span<const T>(b));
}
template <AdditiveDomain T>
T entry_via_theorem1(const std::vector<T>& initial, int n, int m) {
    return entry_via_theorem1(std::span<const T>(initial), n, m);
}
template <AdditiveDomain T>
T entry_via_theorem2(const std::vector<T>& final_seq, int n, int m) {
    return entry_via_theorem2(std::span<const T>(final_seq), n, m);
}
template <AdditiveDomain T>
std::pair<T, T> generalized_identity_sides(const std::vector<T>& a, int n, int m) {
    return generalized_identity_sides(std::span<const T>(a), n, m);
}
template <AdditiveDomain T>
std::vector<T> binomial_transform(const std::vector<T>& a) {
    return binomial_transform(std::span<const T>(a));
}
template <AdditiveDomain T>
std::vector<T> inverse_binomial_transform(const std::vector<T>& b) {
    return inverse_binomial_transform(std::span<const T>(b));
}

}  // namespace stirling_kit
