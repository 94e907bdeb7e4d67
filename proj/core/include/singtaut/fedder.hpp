#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "singtaut/graph.hpp"

namespace singtaut {

/// Exponents of x, y, z.
using Exponent = std::array<std::int64_t, 3>;

/// Sparse polynomial in x, y, z over F_p. Zero coefficients are never stored.
class FpPoly {
public:
    explicit FpPoly(std::int64_t p);

    static FpPoly constant(std::int64_t c, std::int64_t p);
    static FpPoly monomial(const Exponent& e, std::int64_t c, std::int64_t p);

    std::int64_t p() const { return f_.p(); }
    const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t coefficient(const Exponent& e) const;

    /// Adds c * x^e, dropping the term if it cancels.
    void add_term(const Exponent& e, std::int64_t c);

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    bool operator==(const FpPoly& o) const { return p() == o.p() && terms_ == o.terms_; }

    /// Substitutes x -> u x, y -> v y, z -> w z.
    FpPoly rescale(std::int64_t u, std::int64_t v, std::int64_t w) const;
    /// Variable k of the result is variable perm[k] of the input.
    FpPoly permute(const std::array<int, 3>& perm) const;

    /// Canonical text: descending total degree, then lexicographically descending exponents.
    std::string to_string() const;

private:
    void check_same_field(const FpPoly& o) const;

    Fp f_;
    std::map<Exponent, std::int64_t> terms_;
};

/// Parses `term (('+'|'-') term)*` with `term := uint | uint '*' powprod | powprod`
/// and `powprod := var ('^' uint)? ('*' var ('^' uint)?)*` over x, y, z.
/// Throws ParseError with a 1-based column on bad input.
FpPoly poly_parse(const std::string& text, std::int64_t p);

/// f^e by binary exponentiation.
FpPoly poly_pow(const FpPoly& f, std::uint64_t e);

/// Fedder's test at the origin: f^(p-1) has a monomial with every exponent
/// at most p - 1. Throws Error if f has a constant term.
bool fedder_is_f_pure(const FpPoly& f);

struct RDPRecord {
    /// Dual graph label such as "A3", "D6", "E8".
    std::string graph_label;
    /// Artin normal form name such as "E8^4" or "D6^1".
    std::string artin_type;
    std::int64_t p = 0;
    std::string equation_text;
    FpPoly equation{2};
    bool expected_f_pure = false;
};

/// Artin's normal forms for characteristic p, family parameters up to n_max.
///
/// p = 2: A_n (1 <= n <= n_max), D_{2n}^r and D_{2n+1}^r for 2 <= n <= n_max
/// and 0 <= r <= n - 1, E6^0..1, E7^0..3, E8^0..4.
/// p = 3, 5: A_n, D_n (4 <= n <= n_max), and the E forms listed for p.
/// p >= 7: one form per graph.
std::vector<RDPRecord> rdp_catalog(std::int64_t p, std::int64_t n_max);

struct UniquenessRow {
    std::string graph_label;
    std::vector<std::string> f_pure_types;
    std::size_t mismatches = 0;

    bool operator==(const UniquenessRow&) const = default;
};

struct UniquenessReport {
    std::int64_t p = 0;
    std::int64_t n_max = 0;
    std::vector<UniquenessRow> rows;
    /// Every label has exactly one F-pure type and every flag matches.
    bool pass = false;

    bool operator==(const UniquenessReport&) const = default;
};

/// Runs Fedder's test over the catalog and checks that each graph label has
/// a single F-pure normal form.
UniquenessReport verify_f_pure_uniqueness(std::int64_t p, std::int64_t n_max);

}  // namespace singtaut
