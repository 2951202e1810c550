#include "stirling_kit/stirling.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace stirling_kit {

namespace {

const Integer& zero_integer() {
    static const Integer zero = 0;
    return zero;
}

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative, got " + std::to_string(v));
}

}  // namespace

Stirling1Triangle::Stirling1Triangle(int n_max) {
    require_nonnegative(n_max, "n_max");
    rows_.push_back({Integer(1)});
    grow(n_max);
}

void Stirling1Triangle::grow(int n) {
    while (n_max() < n) {
        const int prev = n_max();
        const auto& last = rows_.back();
        std::vector<Integer> row(static_cast<std::size_t>(prev) + 2);
        for (int k = 0; k <= prev + 1; ++k) {
            Integer v = 0;
            if (k >= 1) v += last[static_cast<std::size_t>(k - 1)];
            if (k <= prev) v -= prev * last[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

const Integer& Stirling1Triangle::operator()(int n, int k) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("row " + std::to_string(n) + " not cached");
    if (k < 0 || k > n) return zero_integer();
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

RStirlingTriangle::RStirlingTriangle(int r, int n_max) : r_(r) {
    require_nonnegative(r, "r");
    require_nonnegative(n_max, "n_max");
    grow(n_max);
}

void RStirlingTriangle::grow(int n) {
    while (n_max() < n) {
        const int row_index = n_max() + 1;
        std::vector<Integer> row(static_cast<std::size_t>(row_index) + 1);
        if (row_index == r_) {
            row[static_cast<std::size_t>(r_)] = 1;
        } else if (row_index > r_) {
            const auto& last = rows_.back();
            for (int k = 0; k <= row_index; ++k) {
                Integer v = 0;
                if (k < row_index) v += k * last[static_cast<std::size_t>(k)];
                if (k >= 1) v += last[static_cast<std::size_t>(k - 1)];
                row[static_cast<std::size_t>(k)] = std::move(v);
            }
        }
        rows_.push_back(std::move(row));
    }
}

const Integer& RStirlingTriangle::operator()(int n, int k) const {
    if (n < 0 || n > n_max()) throw std::out_of_range("row " + std::to_string(n) + " not cached");
    if (k < 0 || k > n) return zero_integer();
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

// Rows already handed out are never moved (deque growth keeps element
// addresses), so readers only need the shared lock while locating an entry.
class TriangleCache {
public:
    const Integer& first_kind(int n, int k) {
        if (k < 0 || k > n) return zero_integer();
        {
            std::shared_lock lock(mutex_);
            if (first_.n_max() >= n) return first_(n, k);
        }
        std::unique_lock lock(mutex_);
        first_.grow(n);
        return first_(n, k);
    }

    const Integer& r_kind(int r, int n, int k) {
        if (k < 0 || k > n || n < r) return zero_integer();
        {
            std::shared_lock lock(mutex_);
            auto it = second_.find(r);
            if (it != second_.end() && it->second->n_max() >= n) return (*it->second)(n, k);
        }
        std::unique_lock lock(mutex_);
        auto& slot = second_[r];
        if (!slot) slot = std::make_unique<RStirlingTriangle>(r);
        slot->grow(n);
        return (*slot)(n, k);
    }

private:
    std::shared_mutex mutex_;
    Stirling1Triangle first_;
    std::map<int, std::unique_ptr<RStirlingTriangle>> second_;
};

TriangleCache& cache() {
    static TriangleCache instance;
    return instance;
}

}  // namespace

const Integer& stirling1(int n, int k) {
    require_nonnegative(n, "n");
    return cache().first_kind(n, k);
}

const Integer& stirling2(int n, int k) { return r_stirling2(0, n, k); }

const Integer& r_stirling2(int r, int n, int k) {
    require_nonnegative(r, "r");
    require_nonnegative(n, "n");
    return cache().r_kind(r, n, k);
}

bool verify_tig_identity(int r, int n_max, int k_max) {
    if (r < 1) throw std::invalid_argument("tig identity needs r >= 1");
    // Fresh triangles: the check must not lean on the shared cache it is
    // meant to validate.
    RStirlingTriangle lhs(r, n_max + r);
    RStirlingTriangle rhs(r - 1, n_max + r);
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= k_max; ++k) {
            Integer expected = rhs(n + r, k + r);
            if (n + r - 1 >= 0) expected -= (r - 1) * rhs(n + r - 1, k + r);
            if (lhs(n + r, k + r) != expected) return false;
        }
    }
    return true;
}

}  // namespace stirling_kit
