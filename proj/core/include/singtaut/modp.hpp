#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace singtaut {

/// Domain error raised by every core operation on invalid input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::int64_t n);

/// Throws Error unless `p` is prime.
void require_prime(std::int64_t p);

/// Arithmetic in the prime field F_p with representatives in [0, p).
class Fp {
public:
    explicit Fp(std::int64_t p);

    std::int64_t p() const { return p_; }
    std::int64_t norm(std::int64_t a) const {
        a %= p_;
        return a < 0 ? a + p_ : a;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return norm(a + b); }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return norm(a - b); }
    /// Products of reduced values fit in 64 bits because p <= 1000003.
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return norm(a) * norm(b) % p_; }
    std::int64_t pow(std::int64_t a, std::uint64_t e) const;
    /// Throws Error on zero.
    std::int64_t inv(std::int64_t a) const;
    /// C(n, k) mod p for n, k >= 0 by Lucas' theorem.
    std::int64_t binom(std::int64_t n, std::int64_t k) const;
    /// Generalized binomial C(n, k) mod p for any integer n and k >= 0.
    std::int64_t binom_any(std::int64_t n, std::int64_t k) const;

private:
    std::int64_t small_binom(std::int64_t n, std::int64_t k) const {
        if (k < 0 || k > n) return 0;
        return fact_[static_cast<std::size_t>(n)] * inv_fact_[static_cast<std::size_t>(k)] % p_ *
               inv_fact_[static_cast<std::size_t>(n - k)] % p_;
    }

    std::int64_t p_;
    std::vector<std::int64_t> fact_;
    std::vector<std::int64_t> inv_fact_;
};

/// Sparse vector over F_p keyed by column index.
using SparseVec = std::map<std::int64_t, std::int64_t>;

/// Incremental row echelon basis over F_p.
///
/// Rows are reduced against existing pivots on insertion; the pivot of a
/// stored row is its largest column index.
class SparseEchelon {
public:
    explicit SparseEchelon(std::int64_t p) : f_(p) {}

    /// Inserts `v` and returns true if it increased the rank.
    bool insert(SparseVec v);
    /// True if `v` lies in the current span.
    bool contains(SparseVec v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    void reduce(SparseVec& v) const;

    Fp f_;
    std::map<std::int64_t, SparseVec> rows_;
};

}  // namespace singtaut
