#include "chordalcad/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace chordalcad {

// --- VarTable -----------------------------------------------------------

VarId VarTable::intern(std::string_view name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    VarId id = static_cast<VarId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<VarId> VarTable::find(std::string_view name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& VarTable::name(VarId v) const {
    if (v >= names_.size()) throw std::out_of_range("VarTable::name: unknown variable id");
    return names_[v];
}

// --- Monomial -----------------------------------------------------------

Monomial Monomial::variable(VarId v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.powers_.emplace_back(v, e);
    return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
    for (const auto& [var, e] : powers_)
        if (var == v) return e;
    return 0;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [var, e] : powers_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.powers_.reserve(powers_.size() + rhs.powers_.size());
    auto a = powers_.begin(), b = rhs.powers_.begin();
    while (a != powers_.end() && b != rhs.powers_.end()) {
        if (a->first < b->first) out.powers_.push_back(*a++);
        else if (b->first < a->first) out.powers_.push_back(*b++);
        else {
            out.powers_.emplace_back(a->first, a->second + b->second);
            ++a; ++b;
        }
    }
    out.powers_.insert(out.powers_.end(), a, powers_.end());
    out.powers_.insert(out.powers_.end(), b, rhs.powers_.end());
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& rhs) const {
    Monomial out;
    auto a = powers_.begin();
    for (const auto& [var, e] : rhs.powers_) {
        while (a != powers_.end() && a->first < var) out.powers_.push_back(*a++);
        if (a == powers_.end() || a->first != var || a->second < e) return std::nullopt;
        if (a->second > e) out.powers_.emplace_back(var, a->second - e);
        ++a;
    }
    out.powers_.insert(out.powers_.end(), a, powers_.end());
    return out;
}

Monomial Monomial::without(VarId v) const {
    Monomial out;
    for (const auto& p : powers_)
        if (p.first != v) out.powers_.push_back(p);
    return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.powers_.begin(), ib = b.powers_.begin();
    while (ia != a.powers_.end() && ib != b.powers_.end()) {
        if (ia->first != ib->first)
            return ia->first < ib->first ? 1 : -1;  // positive power on a smaller id wins
        if (ia->second != ib->second)
            return ia->second < ib->second ? -1 : 1;
        ++ia; ++ib;
    }
    assert(ia == a.powers_.end() && ib == b.powers_.end());
    return 0;
}

// --- Poly ---------------------------------------------------------------

namespace {
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};
}  // namespace

void Poly::assert_valid() const {
#ifndef NDEBUG
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        assert(terms_[i].second != 0);
        if (i + 1 < terms_.size())
            assert(Monomial::compare(terms_[i].first, terms_[i + 1].first) > 0);
    }
#endif
}

Poly Poly::constant(BigInt c) {
    Poly p;
    if (c != 0) p.terms_.emplace_back(Monomial{}, std::move(c));
    return p;
}

Poly Poly::variable(VarId v) {
    Poly p;
    p.terms_.emplace_back(Monomial::variable(v), BigInt(1));
    return p;
}

Poly Poly::term(BigInt coeff, Monomial m) {
    Poly p;
    if (coeff != 0) p.terms_.emplace_back(std::move(m), std::move(coeff));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

const BigInt& Poly::canonical_leading_coeff() const {
    if (terms_.empty()) throw std::invalid_argument("leading coefficient of the zero polynomial");
    return terms_[0].second;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly out;
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin(), b = rhs.terms_.begin();
    while (a != terms_.end() && b != rhs.terms_.end()) {
        int c = Monomial::compare(a->first, b->first);
        if (c > 0) out.terms_.push_back(*a++);
        else if (c < 0) out.terms_.push_back(*b++);
        else {
            BigInt s = a->second + b->second;
            if (s != 0) out.terms_.emplace_back(a->first, std::move(s));
            ++a; ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, rhs.terms_.end());
    out.assert_valid();
    return out;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
    if (is_zero() || rhs.is_zero()) return Poly();
    std::map<Monomial, BigInt, MonomialGreater> acc;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma * mb;
            auto [it, inserted] = acc.try_emplace(std::move(m), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    Poly out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.emplace_back(m, std::move(c));
    out.assert_valid();
    return out;
}

Poly Poly::operator*(const BigInt& c) const {
    if (c == 0) return Poly();
    Poly out = *this;
    for (auto& t : out.terms_) t.second *= c;
    return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& rhs) const {
    if (rhs.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    Poly rem = *this;
    Poly quot;
    // Leading-term cancellation: exact when rhs divides, since leading
    // monomials multiply without cancellation.
    while (!rem.is_zero()) {
        const auto& lt_r = rem.terms_[0];
        const auto& lt_d = rhs.terms_[0];
        auto m = lt_r.first.divide(lt_d.first);
        if (!m) return std::nullopt;
        if (!mpz_divisible_p(lt_r.second.get_mpz_t(), lt_d.second.get_mpz_t()))
            return std::nullopt;
        BigInt c;
        mpz_divexact(c.get_mpz_t(), lt_r.second.get_mpz_t(), lt_d.second.get_mpz_t());
        Poly t = Poly::term(std::move(c), std::move(*m));
        quot += t;
        rem -= t * rhs;
    }
    return quot;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly out = Poly::constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) out *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return out;
}

Poly Poly::derivative(VarId v) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial dm = m.without(v);
        if (e > 1) dm = dm * Monomial::variable(v, e - 1);
        out += Poly::term(c * e, dm);
    }
    return out;
}

std::uint32_t Poly::degree(VarId v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

bool Poly::contains_var(VarId v) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) > 0) return true;
    return false;
}

std::set<VarId> Poly::vars() const {
    std::set<VarId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, e] : m.powers()) out.insert(var);
    return out;
}

BigInt Poly::integer_content() const {
    BigInt g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::sign_normalized() const {
    if (is_zero() || terms_[0].second > 0) return *this;
    return -*this;
}

bool Poly::is_sign_normalized() const {
    return is_zero() || terms_[0].second > 0;
}

Poly Poly::primitive_normalized() const {
    if (is_zero()) return *this;
    BigInt g = integer_content();
    if (terms_[0].second < 0) g = -g;
    if (g == 1) return *this;
    Poly out = *this;
    for (auto& t : out.terms_)
        mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), g.get_mpz_t());
    return out;
}

int Poly::compare(const Poly& a, const Poly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        int c = Monomial::compare(ia->first, ib->first);
        if (c != 0) return c;
        c = cmp(ia->second, ib->second);
        if (c != 0) return c;
        ++ia; ++ib;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string Poly::to_string(const VarTable& table) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool need_coeff = m.is_unit() || abs_c != 1;
        if (need_coeff) os << abs_c.get_str();
        bool need_star = need_coeff;
        for (const auto& [var, e] : m.powers()) {
            if (need_star) os << "*";
            os << table.name(var);
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

// --- single-polynomial operations ----------------------------------------

std::uint32_t degree(const Poly& f, VarId x) {
    if (f.is_zero()) throw std::invalid_argument("degree of the zero polynomial is undefined");
    return f.degree(x);
}

std::vector<Poly> coeffs(const Poly& f, VarId x) {
    if (f.is_zero()) throw std::invalid_argument("coefficients of the zero polynomial are undefined");
    std::uint32_t s = f.degree(x);
    std::vector<Poly> out(s + 1);
    for (const auto& [m, c] : f.terms()) {
        std::uint32_t e = m.exponent(x);
        out[s - e] += Poly::term(c, m.without(x));
    }
    return out;
}

Poly lc(const Poly& f, VarId x) {
    return coeffs(f, x).front();
}

// cont and primitive_part defer to the multivariate gcd (gcd.cpp).
Poly gcd(const Poly& f, const Poly& g);

Poly cont(const Poly& f, VarId x) {
    Poly g;
    const Poly one = Poly::constant(1);
    for (const auto& a : coeffs(f, x)) {
        if (a.is_zero()) continue;
        g = gcd(g, a);
        if (g.sign_normalized() == one) break;
    }
    return g.sign_normalized();
}

Poly primitive_part(const Poly& f, VarId x) {
    return f.divide_exact(cont(f, x)).value();
}

// --- PolySet --------------------------------------------------------------

PolySet::PolySet(std::vector<Poly> polys) {
    for (auto& p : polys) insert(p);
}

bool PolySet::insert(const Poly& p) {
    if (p.is_constant()) return false;
    Poly q = p.primitive_normalized();
    auto it = std::lower_bound(elems_.begin(), elems_.end(), q,
                               [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    if (it != elems_.end() && *it == q) return false;
    elems_.insert(it, std::move(q));
    return true;
}

void PolySet::insert_all(const PolySet& other) {
    for (const auto& p : other.elems_) insert(p);
}

bool PolySet::contains(const Poly& p) const {
    if (p.is_constant()) return false;
    Poly q = p.primitive_normalized();
    return std::binary_search(elems_.begin(), elems_.end(), q,
                              [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
}

std::set<VarId> PolySet::vars() const {
    std::set<VarId> out;
    for (const auto& p : elems_) {
        auto vs = p.vars();
        out.insert(vs.begin(), vs.end());
    }
    return out;
}

}  // namespace chordalcad
