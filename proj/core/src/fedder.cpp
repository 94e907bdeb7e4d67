#include <algorithm>

#include "singtaut/fedder.hpp"

namespace singtaut {

namespace {

// Product truncated modulo (x^p, y^p, z^p): the ideal is monomial, so
// dropping its members never changes membership of the final power.
FpPoly truncated_mul(const FpPoly& a, const FpPoly& b) {
    const auto p = a.p();
    FpPoly out(p);
    Fp f(p);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (e[0] >= p || e[1] >= p || e[2] >= p) continue;
            out.add_term(e, f.mul(ca, cb));
        }
    return out;
}

FpPoly truncate(const FpPoly& a) { return truncated_mul(a, FpPoly::constant(1, a.p())); }

std::string n(std::int64_t v) { return std::to_string(v); }

std::string pw(const char* var, std::int64_t e) { return e == 1 ? std::string(var) : std::string(var) + "^" + n(e); }

void push(std::vector<RDPRecord>& out, std::int64_t p, const std::string& label, const std::string& type,
          const std::string& eq, bool pure) {
    RDPRecord r;
    r.graph_label = label;
    r.artin_type = type;
    r.p = p;
    r.equation_text = eq;
    r.equation = poly_parse(eq, p);
    r.expected_f_pure = pure;
    out.push_back(std::move(r));
}

}  // namespace

bool fedder_is_f_pure(const FpPoly& f) {
    if (f.coefficient({0, 0, 0}) != 0) throw Error("polynomial has a constant term; not singular at the origin");
    const auto p = f.p();
    std::uint64_t e = static_cast<std::uint64_t>(p - 1);
    FpPoly result = FpPoly::constant(1, p);
    FpPoly base = truncate(f);
    while (e) {
        if (e & 1) result = truncated_mul(result, base);
        e >>= 1;
        if (e) base = truncated_mul(base, base);
    }
    return !result.is_zero();
}

std::vector<RDPRecord> rdp_catalog(std::int64_t p, std::int64_t n_max) {
    require_prime(p);
    std::vector<RDPRecord> out;
    for (std::int64_t k = 1; k <= n_max; ++k) push(out, p, "A" + n(k), "A" + n(k), pw("z", k + 1) + "+x*y", true);
    if (p == 2) {
        for (std::int64_t k = 2; k <= n_max; ++k) {
            const std::string lab = "D" + n(2 * k);
            const std::string base = "z^2+x^2*y+x*" + pw("y", k);
            push(out, p, lab, lab + "^0", base, false);
            for (std::int64_t r = 1; r <= k - 1; ++r)
                push(out, p, lab, lab + "^" + n(r), base + "+x*" + pw("y", k - r) + "*z", r == k - 1);
        }
        for (std::int64_t k = 2; k <= n_max; ++k) {
            const std::string lab = "D" + n(2 * k + 1);
            const std::string base = "z^2+x^2*y+" + pw("y", k) + "*z";
            push(out, p, lab, lab + "^0", base, false);
            for (std::int64_t r = 1; r <= k - 1; ++r)
                push(out, p, lab, lab + "^" + n(r), base + "+x*" + pw("y", k - r) + "*z", r == k - 1);
        }
        push(out, p, "E6", "E6^0", "z^2+x^3+y^2*z", false);
        push(out, p, "E6", "E6^1", "z^2+x^3+y^2*z+x*y*z", true);
        push(out, p, "E7", "E7^0", "z^2+x^3+x*y^3", false);
        push(out, p, "E7", "E7^1", "z^2+x^3+x*y^3+x^2*y*z", false);
        push(out, p, "E7", "E7^2", "z^2+x^3+x*y^3+y^3*z", false);
        push(out, p, "E7", "E7^3", "z^2+x^3+x*y^3+x*y*z", true);
        push(out, p, "E8", "E8^0", "z^2+x^3+y^5", false);
        push(out, p, "E8", "E8^1", "z^2+x^3+y^5+x*y^3*z", false);
        push(out, p, "E8", "E8^2", "z^2+x^3+y^5+x*y^2*z", false);
        push(out, p, "E8", "E8^3", "z^2+x^3+y^5+y^3*z", false);
        push(out, p, "E8", "E8^4", "z^2+x^3+y^5+x*y*z", true);
        return out;
    }
    for (std::int64_t k = 4; k <= n_max; ++k) push(out, p, "D" + n(k), "D" + n(k), "z^2+x^2*y+" + pw("y", k - 1), true);
    if (p == 3) {
        push(out, p, "E6", "E6^0", "z^2+x^3+y^4", false);
        push(out, p, "E6", "E6^1", "z^2+x^3+y^4+x^2*y^2", true);
        push(out, p, "E7", "E7^0", "z^2+x^3+x*y^3", false);
        push(out, p, "E7", "E7^1", "z^2+x^3+x*y^3+x^2*y^2", true);
        push(out, p, "E8", "E8^0", "z^2+x^3+y^5", false);
        push(out, p, "E8", "E8^1", "z^2+x^3+y^5+x^2*y^3", false);
        push(out, p, "E8", "E8^2", "z^2+x^3+y^5+x^2*y^2", true);
        return out;
    }
    push(out, p, "E6", "E6", "z^2+x^3+y^4", true);
    push(out, p, "E7", "E7", "z^2+x^3+x*y^3", true);
    if (p == 5) {
        push(out, p, "E8", "E8^0", "z^2+x^3+y^5", false);
        push(out, p, "E8", "E8^1", "z^2+x^3+y^5+x*y^4", true);
    } else {
        push(out, p, "E8", "E8", "z^2+x^3+y^5", true);
    }
    return out;
}

UniquenessReport verify_f_pure_uniqueness(std::int64_t p, std::int64_t n_max) {
    UniquenessReport rep;
    rep.p = p;
    rep.n_max = n_max;
    for (const auto& r : rdp_catalog(p, n_max)) {
        auto it = std::find_if(rep.rows.begin(), rep.rows.end(),
                               [&](const UniquenessRow& u) { return u.graph_label == r.graph_label; });
        if (it == rep.rows.end()) {
            rep.rows.push_back({r.graph_label, {}, 0});
            it = std::prev(rep.rows.end());
        }
        bool pure = fedder_is_f_pure(r.equation);
        if (pure) it->f_pure_types.push_back(r.artin_type);
        if (pure != r.expected_f_pure) ++it->mismatches;
    }
    rep.pass = !rep.rows.empty() && std::all_of(rep.rows.begin(), rep.rows.end(), [](const UniquenessRow& u) {
        return u.f_pure_types.size() == 1 && u.mismatches == 0;
    });
    return rep;
}

}  // namespace singtaut
