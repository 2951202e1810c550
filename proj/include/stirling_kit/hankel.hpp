#pragma once

// Hankel matrices and exact determinants.
//
// determinant() picks an elimination strategy from what the element type
// supports:
//   Integer                   fraction-free (Bareiss) elimination, exact divisions
//   Rational, QuadraticSurd   Gaussian elimination over the field with pivot search
//   RationalPolynomial        division-free expansion by minors
// Every strategy is also callable directly so they can be cross-checked.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirling_kit/domains.hpp"
#include "stirling_kit/transform.hpp"

namespace stirling_kit {

template <RingDomain T>
class SquareMatrix {
public:
    /// Throws std::invalid_argument unless `rows` is nonempty and square.
    explicit SquareMatrix(std::vector<std::vector<T>> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw std::invalid_argument("empty matrix");
        for (const auto& r : rows_) {
            if (r.size() != rows_.size()) throw std::invalid_argument("matrix is not square");
        }
    }

    int dimension() const { return static_cast<int>(rows_.size()); }
    const T& operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    T& operator()(int i, int j) { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<T>>& rows() const { return rows_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::vector<std::vector<T>> rows_;
};

/// (seq[i+j]) for 0 <= i,j <= n.  Needs 2n+1 terms.
template <RingDomain T>
SquareMatrix<T> hankel_matrix(std::span<const T> seq, int n) {
    detail::check_index(n, "n");
    detail::check_length(seq.size(), static_cast<std::size_t>(2 * n + 1), "Hankel matrix");
    std::vector<std::vector<T>> rows;
    for (int i = 0; i <= n; ++i) {
        rows.emplace_back(seq.begin() + i, seq.begin() + i + n + 1);
    }
    return SquareMatrix<T>(std::move(rows));
}

/// Bareiss elimination.  Every division is exact.
inline Integer determinant_bareiss(SquareMatrix<Integer> m) {
    const int n = m.dimension();
    int sign = 1;
    Integer previous = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(m(k, k)) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (sgn(m(i, k)) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m(i, j) = std::move(v);
            }
        }
        previous = m(k, k);
    }
    Integer det = m(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

/// Gaussian elimination in a field.
template <FieldDomain T>
T determinant_field(SquareMatrix<T> m) {
    const int n = m.dimension();
    T det = one_like(m(0, 0));
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (!is_zero(m(i, k))) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return zero_like(m(0, 0));
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det = det * m(k, k);
        const T inv = inverse(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (is_zero(m(i, k))) continue;
            const T factor = m(i, k) * inv;
            for (int j = k; j < n; ++j) m(i, j) = m(i, j) - factor * m(k, j);
        }
    }
    return det;
}

/// Laplace expansion along rows, memoized over the set of columns still
/// available.  Ring operations only; practical up to dimension ~16.
template <RingDomain T>
T determinant_by_minors(const SquareMatrix<T>& m) {
    const int n = m.dimension();
    if (n > 20) throw std::invalid_argument("expansion by minors limited to dimension 20");
    // minors[mask] = det of rows n-popcount(mask)..n-1 restricted to columns in mask.
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<T> minors(static_cast<std::size_t>(full) + 1, zero_like(m(0, 0)));
    minors[0] = one_like(m(0, 0));
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int row = n - __builtin_popcount(mask);
        T sum = zero_like(m(0, 0));
        int position = 0;
        for (int col = 0; col < n; ++col) {
            const std::uint32_t bit = std::uint32_t{1} << col;
            if (!(mask & bit)) continue;
            const T term = m(row, col) * minors[mask ^ bit];
            if (position % 2 == 0) {
                sum = sum + term;
            } else {
                sum = sum - term;
            }
            ++position;
        }
        minors[mask] = std::move(sum);
    }
    return minors[full];
}

inline Integer determinant(const SquareMatrix<Integer>& m) { return determinant_bareiss(m); }
inline Rational determinant(const SquareMatrix<Rational>& m) { return determinant_field(m); }
inline QuadraticSurd determinant(const SquareMatrix<QuadraticSurd>& m) { return determinant_field(m); }
inline RationalPolynomial determinant(const SquareMatrix<RationalPolynomial>& m) { return determinant_by_minors(m); }

/// det(hankel_matrix(seq, n)) for n = 0..n_max.
template <RingDomain T>
std::vector<T> hankel_transform(std::span<const T> seq, int n_max) {
    detail::check_index(n_max, "n_max");
    detail::check_length(seq.size(), static_cast<std::size_t>(2 * n_max + 1), "Hankel transform");
    std::vector<T> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(determinant(hankel_matrix(seq, n)));
    return out;
}

/// (det of the array block a(i,j), 0 <= i,j <= n, built from the final
///  sequence; det(final[i+j])).  The two agree.
template <RingDomain T>
std::pair<T, T> theorem5_check(std::span<const T> final_seq, int n) {
    detail::check_index(n, "n");
    detail::check_length(final_seq.size(), static_cast<std::size_t>(2 * n + 1), "final sequence");
    const auto block = build_from_final(final_seq, n, n);
    return {determinant(SquareMatrix<T>(block.entries())), determinant(hankel_matrix(final_seq, n))};
}

/// det(b[i+j]) == det(sum_k {i+j k+j}_j a[k+j]) with b the Stirling transform of a.
template <RingDomain T>
bool corollary_check(std::span<const T> a, int n) {
    detail::check_index(n, "n");
    const auto need = static_cast<std::size_t>(2 * n + 1);
    detail::check_length(a.size(), need, "sequence");
    const auto head = a.first(need);
    const std::vector<T> b = stirling_transform(head);
    std::vector<std::vector<T>> rows(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) rows[static_cast<std::size_t>(i)].push_back(entry_via_theorem1(head, i, j));
    }
    return determinant(hankel_matrix(std::span<const T>(b), n)) == determinant(SquareMatrix<T>(std::move(rows)));
}

/// Hankel transforms of a and of its binomial transform agree through n_max.
template <RingDomain T>
bool binomial_hankel_invariance_check(std::span<const T> a, int n_max) {
    detail::check_index(n_max, "n_max");
    const auto need = static_cast<std::size_t>(2 * n_max + 1);
    detail::check_length(a.size(), need, "sequence");
    const auto head = a.first(need);
    const std::vector<T> beta = binomial_transform(head);
    return hankel_transform(head, n_max) == hankel_transform(std::span<const T>(beta), n_max);
}

template <RingDomain T>
SquareMatrix<T> hankel_matrix(const std::vector<T>& seq, int n) {
    return hankel_matrix(std::span<const T>(seq), n);
}
template <RingDomain T>
std::vector<T> hankel_transform(const std::vector<T>& seq, int n_max) {
    return hankel_transform(std::span<const T>(seq), n_max);
}
template <RingDomain T>
std::pair<T, T> theorem5_check(const std::vector<T>& final_seq, int n) {
    return theorem5_check(std::span<const T>(final_seq), n);
}
template <RingDomain T>
bool corollary_check(const std::vector<T>& a, int n) {
    return corollary_check(std::span<const T>(a), n);
}
template <RingDomain T>
bool binomial_hankel_invariance_check(const std::vector<T>& a, int n_max) {
    return binomial_hankel_invariance_check(std::span<const T>(a), n_max);
}

}  // namespace stirling_kit
