// Internal univariate view: a polynomial in one main variable with Poly
// coefficients in the remaining variables. Shared by the PRS-based gcd
// and subresultant code; not part of the public headers.
#ifndef CHORDALCAD_SRC_UPOLY_HPP
#define CHORDALCAD_SRC_UPOLY_HPP

#include "chordalcad/poly.hpp"

#include <cassert>
#include <vector>

namespace chordalcad::detail {

struct UPoly {
    // c[i] is the coefficient of x^i; trailing zeros trimmed, so
    // degree == c.size() - 1 for nonzero values.
    std::vector<Poly> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Poly& leading() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    static UPoly from_poly(const Poly& f, VarId x) {
        UPoly u;
        if (f.is_zero()) return u;
        auto cs = coeffs(f, x);  // [a_s .. a_0]
        u.c.assign(cs.rbegin(), cs.rend());
        u.trim();
        return u;
    }

    Poly to_poly(VarId x) const {
        Poly out;
        for (std::size_t i = 0; i < c.size(); ++i)
            out += c[i] * Poly::term(BigInt(1), Monomial::variable(x, static_cast<std::uint32_t>(i)));
        return out;
    }

    UPoly operator-(const UPoly& rhs) const {
        UPoly out;
        out.c.resize(std::max(c.size(), rhs.c.size()));
        for (std::size_t i = 0; i < out.c.size(); ++i) {
            if (i < c.size()) out.c[i] += c[i];
            if (i < rhs.c.size()) out.c[i] -= rhs.c[i];
        }
        out.trim();
        return out;
    }

    UPoly mul_ground(const Poly& k) const {
        UPoly out;
        if (k.is_zero()) return out;
        out.c.reserve(c.size());
        for (const auto& a : c) out.c.push_back(a * k);
        return out;
    }

    // Exact division of every coefficient by k; asserts divisibility.
    UPoly quo_ground(const Poly& k) const {
        UPoly out;
        out.c.reserve(c.size());
        for (const auto& a : c) out.c.push_back(a.divide_exact(k).value());
        return out;
    }

    // *this times k * x^j.
    UPoly mul_term(const Poly& k, std::size_t j) const {
        UPoly out;
        if (k.is_zero()) return out;
        out.c.assign(j, Poly());
        for (const auto& a : c) out.c.push_back(a * k);
        out.trim();
        return out;
    }
};

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, with the usual
// early-exit power fixup. g must be nonzero.
inline UPoly prem(const UPoly& f, const UPoly& g) {
    assert(!g.is_zero());
    int df = f.degree(), dg = g.degree();
    UPoly r = f;
    if (df < dg) return r;
    int n = df - dg + 1;
    const Poly& lc_g = g.leading();
    int dr = df;
    while (true) {
        const Poly lc_r = r.leading();
        int j = dr - dg;
        --n;
        r = r.mul_ground(lc_g) - g.mul_term(lc_r, static_cast<std::size_t>(j));
        int prev = dr;
        dr = r.degree();
        if (dr < dg) break;
        assert(dr < prev && "pseudo-division failed to reduce degree");
        (void)prev;
    }
    if (n > 0) {
        Poly fix = lc_g.pow(static_cast<std::uint32_t>(n));
        r = r.mul_ground(fix);
    }
    return r;
}

}  // namespace chordalcad::detail

#endif
