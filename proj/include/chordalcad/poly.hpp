#ifndef CHORDALCAD_POLY_HPP
#define CHORDALCAD_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chordalcad {

using BigInt = mpz_class;
using VarId = std::uint32_t;

/// Write-once symbol table mapping variable names to dense ids 0..n-1.
/// Frozen by convention after parsing/generation; lookups are const.
class VarTable {
public:
    VarId intern(std::string_view name);
    std::optional<VarId> find(std::string_view name) const;
    const std::string& name(VarId v) const;
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::map<std::string, VarId, std::less<>> ids_;
};

/// Sparse power product. Exponents are kept sorted by variable id and
/// are always >= 1; the empty product is the unit monomial.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(VarId v, std::uint32_t e = 1);

    bool is_unit() const { return powers_.empty(); }
    std::uint32_t exponent(VarId v) const;
    std::uint32_t total_degree() const;
    const std::vector<std::pair<VarId, std::uint32_t>>& powers() const { return powers_; }

    Monomial operator*(const Monomial& rhs) const;
    /// Exact division; nullopt when rhs does not divide *this.
    std::optional<Monomial> divide(const Monomial& rhs) const;
    /// Removes every power of v.
    Monomial without(VarId v) const;

    /// Graded lexicographic order over variable ids: total degree first,
    /// ties by exponent of the smallest id. Returns <0, 0, >0.
    static int compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& rhs) const = default;

private:
    std::vector<std::pair<VarId, std::uint32_t>> powers_;
};

/// Sparse multivariate polynomial over the integers. Terms are held in
/// strictly decreasing graded-lex order; no zero coefficients, no
/// duplicate monomials.
class Poly {
public:
    using Term = std::pair<Monomial, BigInt>;

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(BigInt c);
    static Poly constant(long c) { return constant(BigInt(c)); }
    static Poly variable(VarId v);
    static Poly term(BigInt coeff, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Leading coefficient under the canonical (graded-lex) order.
    const BigInt& canonical_leading_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
    Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }
    Poly operator*(const BigInt& c) const;

    /// Exact division; nullopt when rhs does not divide *this.
    std::optional<Poly> divide_exact(const Poly& rhs) const;

    Poly pow(std::uint32_t e) const;
    Poly derivative(VarId v) const;

    std::uint32_t degree(VarId v) const;  // 0 when v absent; zero poly rejected by op layer
    std::uint32_t total_degree() const;
    bool contains_var(VarId v) const;
    std::set<VarId> vars() const;

    /// GCD of all integer coefficients, positive; 0 for the zero polynomial.
    BigInt integer_content() const;
    /// *this with the integer content and the canonical sign removed.
    Poly primitive_normalized() const;
    /// Canonical-leading coefficient made positive.
    Poly sign_normalized() const;
    bool is_sign_normalized() const;

    bool operator==(const Poly& rhs) const = default;
    /// Total order usable for set storage; refines the graded-lex order.
    static int compare(const Poly& a, const Poly& b);

    /// Canonical text: graded-lex term order, explicit '*' and '^',
    /// '-' folded into coefficients. Re-parses to an equal Poly.
    std::string to_string(const VarTable& table) const;

private:
    std::vector<Term> terms_;  // invariant: strictly decreasing monomials
    void assert_valid() const;
};

inline Poly operator*(const BigInt& c, const Poly& p) { return p * c; }

// --- polyring operations on single polynomials -------------------------

/// Degree of f in x. f must be nonzero.
std::uint32_t degree(const Poly& f, VarId x);

/// Coefficient list [a_s, ..., a_0] with f = sum a_i x^i; zero entries kept.
std::vector<Poly> coeffs(const Poly& f, VarId x);

/// Leading coefficient of f w.r.t. x.
Poly lc(const Poly& f, VarId x);

/// Content of f w.r.t. x: sign-normalized gcd of the coefficients.
Poly cont(const Poly& f, VarId x);

/// f / cont(f, x); exact by construction.
Poly primitive_part(const Poly& f, VarId x);

/// Deduplicated-up-to-sign set of non-constant polynomials. Elements are
/// stored primitive (integer content removed) and sign-normalized;
/// constants and zeros are dropped on insertion.
class PolySet {
public:
    PolySet() = default;
    explicit PolySet(std::vector<Poly> polys);

    /// Normalizes and inserts; constants vanish. Returns true if added.
    bool insert(const Poly& p);
    void insert_all(const PolySet& other);

    bool contains(const Poly& p) const;  // after the same normalization
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<Poly>& elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    std::set<VarId> vars() const;
    bool operator==(const PolySet& rhs) const = default;

private:
    std::vector<Poly> elems_;  // sorted by Poly::compare, unique
};

}  // namespace chordalcad

#endif
