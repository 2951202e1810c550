#pragma once

// Stirling numbers by recurrence.
//
//   s(n+1,k)   = s(n,k-1) - n s(n,k),           s(0,0) = 1
//   {n k}_r    = k {n-1 k}_r + {n-1 k-1}_r      (n > r),  {r k}_r = delta(k,r)
//
// The r = 0 triangle is the ordinary second-kind triangle.  Indices outside
// the triangle evaluate to zero.

#include <deque>
#include <vector>

#include "stirling_kit/domains.hpp"

namespace stirling_kit {

/// Signed Stirling numbers of the first kind for 0 <= n <= n_max.
class Stirling1Triangle {
public:
    explicit Stirling1Triangle(int n_max = 0);

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    /// Extends the triangle through row n.
    void grow(int n);
    /// s(n,k); zero for k < 0 or k > n.  n must be within n_max().
    const Integer& operator()(int n, int k) const;

private:
    std::deque<std::vector<Integer>> rows_;
};

/// r-Stirling numbers of the second kind {n k}_r for a fixed r.
class RStirlingTriangle {
public:
    explicit RStirlingTriangle(int r, int n_max = 0);

    int r() const { return r_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    void grow(int n);
    /// {n k}_r; zero for n < r or k outside [0, n].  n must be within n_max().
    const Integer& operator()(int n, int k) const;

private:
    int r_;
    std::deque<std::vector<Integer>> rows_;  // rows_[n] holds k = 0..n
};

// Point queries backed by a process-wide, internally synchronized cache.
// Returned references stay valid for the lifetime of the process.

const Integer& stirling1(int n, int k);
const Integer& stirling2(int n, int k);
const Integer& r_stirling2(int r, int n, int k);

/// {n+r k+r}_r == {n+r k+r}_{r-1} - (r-1){n+r-1 k+r}_{r-1} for 0 <= n <= n_max, 0 <= k <= k_max.
bool verify_tig_identity(int r, int n_max, int k_max);

}  // namespace stirling_kit
