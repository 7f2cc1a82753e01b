#include "chordalcad/gcd.hpp"

#include "upoly.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace chordalcad {

namespace {

VarId max_var(const Poly& f, const Poly& g) {
    VarId best = 0;
    bool seen = false;
    for (const Poly* p : {&f, &g})
        for (const auto& [m, c] : p->terms())
            for (const auto& [v, e] : m.powers())
                if (!seen || v > best) { best = v; seen = true; }
    assert(seen);
    return best;
}

// Primitive PRS gcd of two polynomials that both have positive degree in x
// and are primitive w.r.t. x.
Poly primitive_prs_gcd(Poly f, Poly g, VarId x) {
    using detail::UPoly;
    UPoly a = UPoly::from_poly(f, x);
    UPoly b = UPoly::from_poly(g, x);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (true) {
        UPoly r = detail::prem(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) return Poly::constant(1);
        Poly rp = r.to_poly(x);
        rp = rp.divide_exact(cont(rp, x)).value();
        a = b;
        b = UPoly::from_poly(rp, x);
    }
    Poly h = b.to_poly(x);
    return h.divide_exact(cont(h, x)).value();
}

}  // namespace

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    if (f.is_zero()) return g.sign_normalized();
    if (g.is_zero()) return f.sign_normalized();
    if (f.is_constant() || g.is_constant()) {
        BigInt a = f.is_constant() ? f.canonical_leading_coeff() : f.integer_content();
        BigInt b = g.is_constant() ? g.canonical_leading_coeff() : g.integer_content();
        BigInt r;
        mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return Poly::constant(r);
    }
    VarId x = max_var(f, g);
    if (!f.contains_var(x)) return gcd(f, cont(g, x));
    if (!g.contains_var(x)) return gcd(cont(f, x), g);
    Poly cf = cont(f, x);
    Poly cg = cont(g, x);
    Poly c = gcd(cf, cg);
    Poly pf = f.divide_exact(cf).value();
    Poly pg = g.divide_exact(cg).value();
    Poly h = primitive_prs_gcd(std::move(pf), std::move(pg), x);
    return (c * h).sign_normalized();
}

Poly squarefree_part(const Poly& f) {
    if (f.is_constant())
        throw std::invalid_argument("squarefree_part of a constant");
    Poly g = f;
    for (VarId v : f.vars()) g = gcd(g, f.derivative(v));
    return f.divide_exact(g).value().primitive_normalized();
}

namespace {

bool is_homogeneous(const Poly& p) {
    std::uint32_t d = p.terms().front().first.total_degree();
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() != d) return false;
    return true;
}

std::vector<BigInt> signed_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    BigInt a = abs(n);
    for (BigInt i = 1; i * i <= a; ++i) {
        if (a % i == 0) {
            out.push_back(i);
            out.push_back(-i);
            BigInt j = a / i;
            if (j != i) {
                out.push_back(j);
                out.push_back(-j);
            }
        }
    }
    return out;
}

// Splits off rational linear factors of a squarefree univariate p (in v).
// Returns the factors plus the root-free remainder; empty when nothing split.
std::vector<Poly> rational_linear_split(const Poly& p, VarId v) {
    std::vector<Poly> factors;
    Poly rest = p;
    // monomial factor v^k
    while (rest.degree(v) > 0) {
        auto q = rest.divide_exact(Poly::variable(v));
        if (!q) break;
        if (factors.empty() || factors.back() != Poly::variable(v))
            factors.push_back(Poly::variable(v));
        rest = *q;
    }
    if (rest.degree(v) >= 2) {
        auto cs = coeffs(rest, v);
        BigInt lead = cs.front().canonical_leading_coeff();
        BigInt trail = cs.back().canonical_leading_coeff();
        for (const BigInt& w : signed_divisors(lead)) {
            if (w < 0) continue;  // scale sign lives in u
            bool again = true;
            while (again && rest.degree(v) >= 2) {
                again = false;
                for (const BigInt& u : signed_divisors(trail)) {
                    BigInt common;
                    mpz_gcd(common.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t());
                    if (common != 1) continue;
                    Poly cand = Poly::variable(v) * w - Poly::constant(u);
                    auto q = rest.divide_exact(cand);
                    if (q) {
                        factors.push_back(cand);
                        rest = *q;
                        trail = coeffs(rest, v).back().is_zero()
                                    ? BigInt(1)
                                    : coeffs(rest, v).back().canonical_leading_coeff();
                        again = true;
                        break;
                    }
                }
            }
        }
    }
    if (factors.empty()) return {};
    if (!rest.is_constant()) factors.push_back(rest);
    return factors;
}

// Linear factors of a homogeneous bivariate polynomial via the
// dehomogenization p(v1, 1); factors are re-homogenized.
std::vector<Poly> homogeneous_bivariate_split(const Poly& p, VarId v1, VarId v2) {
    Poly rest = p;
    std::vector<Poly> factors;
    auto strip = [&](VarId v) {
        while (!rest.is_constant()) {
            auto q = rest.divide_exact(Poly::variable(v));
            if (!q) break;
            if (factors.empty() || factors.back() != Poly::variable(v))
                factors.push_back(Poly::variable(v));
            rest = *q;
        }
    };
    strip(v1);
    strip(v2);
    if (!rest.is_constant() && rest.vars().size() == 2) {
        // dehomogenize: substituting v2 = 1 keeps the v1-degrees
        Poly dehom;
        for (const auto& [m, c] : rest.terms())
            dehom += Poly::term(c, Monomial::variable(v1, m.exponent(v1)));
        auto uni = rational_linear_split(dehom, v1);
        if (!uni.empty()) {
            for (const auto& fac : uni) {
                Poly hom;
                std::uint32_t df = fac.degree(v1);
                for (const auto& [m, c] : fac.terms()) {
                    std::uint32_t e = m.exponent(v1);
                    Monomial hm = Monomial::variable(v1, e) * Monomial::variable(v2, df - e);
                    hom += Poly::term(c, hm);
                }
                factors.push_back(hom);
            }
            rest = Poly::constant(1);
        }
    }
    if (factors.empty()) return {};
    if (!rest.is_constant()) factors.push_back(rest);
    return factors;
}

// One elementary split step; empty result means p is reduced.
std::vector<Poly> split_step(const Poly& p) {
    for (VarId v : p.vars()) {
        Poly c = cont(p, v);
        if (!c.is_constant())
            return {c, p.divide_exact(c).value()};
    }
    Poly s = squarefree_part(p);
    if (s != p.primitive_normalized()) return {s};
    auto vs = p.vars();
    if (vs.size() == 1) {
        auto lin = rational_linear_split(p, *vs.begin());
        if (lin.size() > 1) return lin;
    } else if (vs.size() == 2 && is_homogeneous(p)) {
        auto it = vs.begin();
        VarId v1 = *it++;
        VarId v2 = *it;
        auto lin = homogeneous_bivariate_split(p, v1, v2);
        if (lin.size() > 1) return lin;
    }
    return {};
}

}  // namespace

PolySet finest_basis(const PolySet& A) {
    std::deque<Poly> queue(A.begin(), A.end());
    std::vector<Poly> basis;
    while (!queue.empty()) {
        Poly p = queue.front().primitive_normalized();
        queue.pop_front();
        if (p.is_constant()) continue;
        auto parts = split_step(p);
        if (!parts.empty()) {
            for (auto& q : parts) queue.push_back(std::move(q));
            continue;
        }
        bool requeued = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Poly g = gcd(p, basis[i]).primitive_normalized();
            if (g.is_constant()) continue;
            if (g == basis[i]) {
                p = p.divide_exact(basis[i]).value().primitive_normalized();
                if (p.is_constant()) { requeued = true; break; }
                // squarefree p: the cofactor is coprime to basis[i], keep scanning
                continue;
            }
            // proper overlap: break basis[i] apart and reprocess everything
            Poly b = basis[i];
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            queue.push_back(g);
            queue.push_back(b.divide_exact(g).value());
            queue.push_back(p);
            requeued = true;
            break;
        }
        if (!requeued && !p.is_constant()) basis.push_back(p);
    }
    PolySet out;
    for (auto& b : basis) out.insert(b);
    return out;
}

}  // namespace chordalcad
