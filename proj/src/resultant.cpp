#include "chordalcad/resultant.hpp"

#include "upoly.hpp"

#include <cassert>
#include <utility>

namespace chordalcad {

namespace {

using detail::UPoly;

// Subresultant PRS after W. S. Brown (1978). R is the remainder sequence
// starting with f, g; S holds the nonzero scalar subresultants, with
// S.back() the resultant whenever the sequence ends in degree 0.
// Requires deg f >= deg g >= 0 and both nonzero.
struct InnerResult {
    std::vector<UPoly> R;
    std::vector<Poly> S;
};

InnerResult inner_subresultants(UPoly f, UPoly g) {
    InnerResult out;
    assert(!f.is_zero() && !g.is_zero() && f.degree() >= g.degree());
    out.R = {f, g};
    int m = g.degree();
    int d = f.degree() - m;

    Poly b = Poly::constant((d + 1) % 2 == 0 ? 1 : -1);
    UPoly h = detail::prem(f, g).mul_ground(b);
    Poly lc = g.leading();
    Poly c = lc.pow(static_cast<std::uint32_t>(d));
    out.S = {Poly::constant(1), c};
    c = -c;

    while (!h.is_zero()) {
        int k = h.degree();
        out.R.push_back(h);
        f = std::move(g);
        g = h;
        d = m - k;
        m = k;

        b = -(lc * c.pow(static_cast<std::uint32_t>(d)));
        h = detail::prem(f, g).quo_ground(b);
        lc = g.leading();
        if (d > 1) {  // the sequence skipped degrees
            Poly num = (-lc).pow(static_cast<std::uint32_t>(d));
            c = num.divide_exact(c.pow(static_cast<std::uint32_t>(d - 1))).value();
        } else {
            c = -lc;
        }
        out.S.push_back(-c);
    }
    return out;
}

struct Prepared {
    UPoly a, b;
    bool swapped;       // true when deg f < deg g and the pair was flipped
    int deg_f, deg_g;   // original degrees
};

Prepared prepare(const Poly& f, const Poly& g, VarId x, const char* who) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument(std::string(who) + ": zero polynomial");
    Prepared p;
    p.a = UPoly::from_poly(f, x);
    p.b = UPoly::from_poly(g, x);
    p.deg_f = p.a.degree();
    p.deg_g = p.b.degree();
    if (p.deg_f < 1 || p.deg_g < 1)
        throw std::invalid_argument(std::string(who) + ": both arguments need positive degree in x");
    p.swapped = p.deg_f < p.deg_g;
    if (p.swapped) std::swap(p.a, p.b);
    return p;
}

}  // namespace

Poly resultant_raw(const Poly& f, const Poly& g, VarId x) {
    Prepared p = prepare(f, g, x, "resultant");
    InnerResult inner = inner_subresultants(std::move(p.a), std::move(p.b));
    Poly res;
    if (inner.R.back().degree() == 0) res = inner.S.back();
    // res(f, g) = (-1)^{deg f * deg g} res(g, f)
    if (p.swapped && (p.deg_f % 2) && (p.deg_g % 2)) res = -res;
    return res;
}

Poly resultant(const Poly& f, const Poly& g, VarId x) {
    return resultant_raw(f, g, x).sign_normalized();
}

std::vector<Poly> subresultant_chain(const Poly& f, const Poly& g, VarId x) {
    Prepared p = prepare(f, g, x, "subresultant_chain");
    InnerResult inner = inner_subresultants(std::move(p.a), std::move(p.b));
    std::vector<Poly> chain;
    chain.reserve(inner.R.size() + 1);
    for (const auto& u : inner.R) chain.push_back(u.to_poly(x));
    if (inner.R.back().degree() > 0) {
        chain.push_back(Poly::zero());  // nontrivial common factor: S_0 = 0
    } else if (chain.back() != inner.S.back()) {
        chain.push_back(inner.S.back());  // defective tail: last remainder is not S_0
    }
    return chain;
}

Poly discriminant(const Poly& f, VarId x) {
    if (f.is_zero()) throw std::invalid_argument("discriminant: zero polynomial");
    std::uint32_t s = f.degree(x);
    if (s < 2) throw std::invalid_argument("discriminant: degree in x must be at least 2");
    Poly fp = f.derivative(x);
    Poly res = resultant_raw(f, fp, x);
    if (res.is_zero()) return res;
    Poly q = res.divide_exact(lc(f, x)).value();
    Poly dis = ((s * (s - 1) / 2) % 2 == 0) ? q : -q;
    return dis.sign_normalized();
}

}  // namespace chordalcad
