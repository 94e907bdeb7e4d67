#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

#include "singtaut/fedder.hpp"

namespace singtaut {

FpPoly::FpPoly(std::int64_t p) : f_(p) {}

FpPoly FpPoly::constant(std::int64_t c, std::int64_t p) { return monomial({0, 0, 0}, c, p); }

FpPoly FpPoly::monomial(const Exponent& e, std::int64_t c, std::int64_t p) {
    FpPoly out(p);
    out.add_term(e, c);
    return out;
}

std::int64_t FpPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void FpPoly::add_term(const Exponent& e, std::int64_t c) {
    for (auto k : e)
        if (k < 0) throw Error("negative exponent in polynomial");
    c = f_.norm(c);
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (fresh) return;
    it->second = f_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

void FpPoly::check_same_field(const FpPoly& o) const {
    if (p() != o.p()) throw Error("polynomials over different fields");
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    check_same_field(o);
    FpPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    check_same_field(o);
    FpPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, p() - c);
    return out;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    check_same_field(o);
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max() / 2;
    FpPoly out(p());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e;
            for (int k = 0; k < 3; ++k) {
                if (ea[k] > kMax || eb[k] > kMax) throw Error("exponent overflow");
                e[k] = ea[k] + eb[k];
            }
            out.add_term(e, f_.mul(ca, cb));
        }
    return out;
}

FpPoly FpPoly::rescale(std::int64_t u, std::int64_t v, std::int64_t w) const {
    FpPoly out(p());
    for (const auto& [e, c] : terms_) {
        auto k = f_.mul(f_.mul(f_.pow(f_.norm(u), e[0]), f_.pow(f_.norm(v), e[1])), f_.pow(f_.norm(w), e[2]));
        out.add_term(e, f_.mul(c, k));
    }
    return out;
}

FpPoly FpPoly::permute(const std::array<int, 3>& perm) const {
    FpPoly out(p());
    for (const auto& [e, c] : terms_) out.add_term({e[perm[0]], e[perm[1]], e[perm[2]]}, c);
    return out;
}

std::string FpPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, std::int64_t>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        auto da = a.first[0] + a.first[1] + a.first[2];
        auto db = b.first[0] + b.first[1] + b.first[2];
        if (da != db) return da > db;
        return a.first > b.first;
    });
    static const char* names[3] = {"x", "y", "z"};
    std::string out;
    for (const auto& [e, c] : v) {
        if (!out.empty()) out += "+";
        std::string mono;
        for (int k = 0; k < 3; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty()) out += std::to_string(c);
        else if (c == 1) out += mono;
        else out += std::to_string(c) + "*" + mono;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, std::int64_t p) : s_(s), p_(p) {}

    FpPoly parse() {
        FpPoly out(p_);
        skip();
        if (at_end()) fail("empty polynomial");
        int sign = 1;
        for (;;) {
            auto [e, c] = term();
            out.add_term(e, sign > 0 ? c : p_ - c);
            skip();
            if (at_end()) break;
            if (s_[i_] == '+') sign = 1;
            else if (s_[i_] == '-') sign = -1;
            else fail(std::string("unexpected '") + s_[i_] + "'");
            ++i_;
            skip();
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, i_ + 1); }
    bool at_end() const { return i_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    std::optional<std::int64_t> uint_opt() {
        skip();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) return std::nullopt;
        std::int64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large");
            v = v * 10 + (s_[i_] - '0');
            ++i_;
        }
        return v;
    }

    std::int64_t uint_req() {
        auto v = uint_opt();
        if (!v) fail("expected unsigned integer");
        return *v;
    }

    void factor(Exponent& e) {
        skip();
        if (at_end()) fail("expected variable");
        char c = s_[i_];
        int k = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
        if (k < 0) {
            if (std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unknown variable '") + c + "'");
            fail("expected variable");
        }
        ++i_;
        skip();
        std::int64_t pw = 1;
        if (!at_end() && s_[i_] == '^') {
            ++i_;
            pw = uint_req();
        }
        e[k] += pw;
    }

    void powprod(Exponent& e) {
        factor(e);
        for (;;) {
            skip();
            if (at_end() || s_[i_] != '*') return;
            ++i_;
            factor(e);
        }
    }

    std::pair<Exponent, std::int64_t> term() {
        Exponent e{0, 0, 0};
        std::int64_t c = 1;
        if (auto v = uint_opt()) {
            c = *v % p_;
            skip();
            if (!at_end() && s_[i_] == '*') {
                ++i_;
                powprod(e);
            }
        } else {
            powprod(e);
        }
        return {e, c};
    }

    const std::string& s_;
    std::int64_t p_;
    std::size_t i_ = 0;
};

}  // namespace

FpPoly poly_parse(const std::string& text, std::int64_t p) {
    require_prime(p);
    return PolyParser(text, p).parse();
}

FpPoly poly_pow(const FpPoly& f, std::uint64_t e) {
    FpPoly result = FpPoly::constant(1, f.p());
    FpPoly base = f;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

}  // namespace singtaut
