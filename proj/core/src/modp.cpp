#include "singtaut/modp.hpp"

namespace singtaut {


bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
}

Fp::Fp(std::int64_t p) : p_(p) {
    require_prime(p);
    if (p > 1'000'003) throw Error("characteristic too large for table-based binomials");
    fact_.resize(static_cast<std::size_t>(p));
    inv_fact_.resize(static_cast<std::size_t>(p));
    fact_[0] = 1;
    for (std::int64_t i = 1; i < p; ++i) fact_[i] = fact_[i - 1] * i % p;
    inv_fact_[p - 1] = pow(fact_[p - 1], static_cast<std::uint64_t>(p - 2));
    for (std::int64_t i = p - 1; i > 0; --i) inv_fact_[i - 1] = inv_fact_[i] * i % p;
}

std::int64_t Fp::pow(std::int64_t a, std::uint64_t e) const {
    std::int64_t base = norm(a), acc = 1 % p_;
    while (e) {
        if (e & 1U) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return acc;
}

std::int64_t Fp::inv(std::int64_t a) const {
    a = norm(a);
    if (a == 0) throw Error("division by zero in F_" + std::to_string(p_));
    return pow(a, static_cast<std::uint64_t>(p_ - 2));
}

std::int64_t Fp::binom(std::int64_t n, std::int64_t k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    std::int64_t acc = 1;
    while (n > 0 || k > 0) {
        acc = mul(acc, small_binom(n % p_, k % p_));
        if (acc == 0) return 0;
        n /= p_;
        k /= p_;
    }
    return acc;
}

std::int64_t Fp::binom_any(std::int64_t n, std::int64_t k) const {
    if (k < 0) return 0;
    if (n >= 0) return binom(n, k);
    // C(-m, k) = (-1)^k C(m + k - 1, k)
    std::int64_t v = binom(-n + k - 1, k);
    return (k % 2 == 0) ? v : norm(-v);
}

void SparseEchelon::reduce(SparseVec& v) const {
    while (!v.empty()) {
        auto top = std::prev(v.end());
        auto it = rows_.find(top->first);
        if (it == rows_.end()) return;
        const std::int64_t factor = top->second;
        for (const auto& [col, c] : it->second) {
            std::int64_t nv = f_.sub(v[col], f_.mul(factor, c));
            if (nv == 0)
                v.erase(col);
            else
                v[col] = nv;
        }
    }
}

bool SparseEchelon::insert(SparseVec v) {
    for (auto it = v.begin(); it != v.end();) {
        it->second = f_.norm(it->second);
        it = (it->second == 0) ? v.erase(it) : std::next(it);
    }
    reduce(v);
    if (v.empty()) return false;
    const std::int64_t lead_inv = f_.inv(std::prev(v.end())->second);
    for (auto& [col, c] : v) c = f_.mul(c, lead_inv);
    const std::int64_t pivot = std::prev(v.end())->first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

bool SparseEchelon::contains(SparseVec v) const {
    for (auto it = v.begin(); it != v.end();) {
        it->second = f_.norm(it->second);
        it = (it->second == 0) ? v.erase(it) : std::next(it);
    }
    reduce(v);
    return v.empty();
}

}  // namespace singtaut
