#include "chordalcad/complexity.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordalcad {

namespace {

BigInt pow_big(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

BigInt two_pow(unsigned long e) { return pow_big(2, e); }

void check_pair(const MDPair& p) {
    if (p.m < 1 || p.d < 1) throw std::invalid_argument("MDPair: m and d must be positive");
}

// The closed forms contain double exponents; past ~2^26 the exact values
// stop being printable, let alone useful.
void check_depth(std::uint32_t levels, const char* who) {
    if (levels > 26) throw std::invalid_argument(std::string(who) + ": exact bounds are limited to 26 levels");
}

}  // namespace

BigInt md_capital(const BigInt& m) {
    return (m + 1) * (m + 1) / 2;  // floor division
}

std::uint32_t combined_degree(const PolySet& A) {
    if (A.empty()) throw std::invalid_argument("combined_degree: empty set");
    std::uint32_t best = 0;
    for (VarId v : A.vars()) {
        std::uint32_t sum = 0;
        for (const auto& f : A) sum += f.degree(v);
        best = std::max(best, sum);
    }
    return best;
}

MDPair md_witness(const PolySet& A, std::uint32_t d) {
    auto own_combined = [](const Poly& f) {
        std::uint32_t best = 0;
        for (VarId v : f.vars()) best = std::max(best, f.degree(v));
        return best;
    };
    std::vector<Poly> sorted(A.begin(), A.end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Poly& a, const Poly& b) {
        return own_combined(a) > own_combined(b);
    });
    // bins as per-variable degree sums; first fit
    std::vector<std::map<VarId, std::uint32_t>> bins;
    for (const auto& f : sorted) {
        if (own_combined(f) > d)
            throw std::invalid_argument("md_witness: an element exceeds the degree bound");
        bool placed = false;
        for (auto& bin : bins) {
            bool fits = true;
            for (VarId v : f.vars())
                if (bin.count(v) && bin[v] + f.degree(v) > d) { fits = false; break; }
            if (!fits) continue;
            for (VarId v : f.vars()) bin[v] += f.degree(v);
            placed = true;
            break;
        }
        if (!placed) {
            std::map<VarId, std::uint32_t> bin;
            for (VarId v : f.vars()) bin[v] = f.degree(v);
            bins.push_back(std::move(bin));
        }
    }
    return MDPair{BigInt(static_cast<unsigned long>(std::max<std::size_t>(bins.size(), 1))),
                  BigInt(static_cast<unsigned long>(d))};
}

MDPair md_step_general(const MDPair& p, bool refined) {
    check_pair(p);
    BigInt m2 = (refined && p.m > 1) ? p.m * p.m : md_capital(p.m);
    return MDPair{m2, 2 * p.d * p.d};
}

MDPair md_step_tree(const MDPair& p, const BigInt& children, bool refined) {
    check_pair(p);
    BigInt m2 = (refined && p.m > 1) ? p.m * p.m : md_capital(p.m);
    return MDPair{(children + 1) * m2, 2 * p.d * p.d};
}

GrowthTable growth_table_general(const MDPair& p, std::uint32_t n) {
    check_pair(p);
    if (n < 1) throw std::invalid_argument("growth_table_general: n must be positive");
    check_depth(n, "growth_table_general");
    GrowthTable t;
    t.rows.push_back({n, p.m, p.d});
    BigInt M = md_capital(p.m);
    for (std::uint32_t r = 1; r < n; ++r) {
        // closed form: number M^(2^(r-1)), degree 2^(2^r - 1) d^(2^r)
        BigInt number = pow_big(M, 1ul << (r - 1));
        BigInt degree = two_pow((1ul << r) - 1) * pow_big(p.d, 1ul << r);
        t.rows.push_back({n - r, number, degree});
    }
    return t;
}

GrowthTable growth_table_tree(const MDPair& p, std::uint32_t w, std::uint32_t h) {
    check_pair(p);
    check_depth(h, "growth_table_tree");
    GrowthTable t;
    t.rows.push_back({0, p.m, p.d});
    BigInt M = md_capital(p.m);
    BigInt w1 = BigInt(w) + 1;
    for (std::uint32_t r = 1; r <= h; ++r) {
        BigInt number = pow_big(w1, (1ul << r) - 1) * pow_big(M, 1ul << (r - 1));
        BigInt degree = two_pow((1ul << r) - 1) * pow_big(p.d, 1ul << r);
        t.rows.push_back({r, number, degree});
    }
    return t;
}

BigInt cell_bound_general(const MDPair& p, std::uint32_t n) {
    check_pair(p);
    if (n < 1) throw std::invalid_argument("cell_bound_general: n must be positive");
    check_depth(n, "cell_bound_general");
    BigInt out = 2 * p.m * p.d + 1;
    BigInt M = md_capital(p.m);
    for (std::uint32_t r = 1; r < n; ++r) {
        BigInt k = two_pow((1ul << r) - 1) * pow_big(M, 1ul << (r - 1)) * pow_big(p.d, 1ul << r);
        out *= 2 * k + 1;
    }
    return out;
}

BigInt cell_bound_tree(const CellBoundInput& input) {
    const ElimTree& T = input.tree;
    std::uint32_t w = input.w_override
                          ? *input.w_override
                          : static_cast<std::uint32_t>(T.max_children());
    BigInt out = 1;
    for (VarId v : T.ordering().ranked()) {
        auto it = input.per_var.find(v);
        if (it == input.per_var.end())
            throw std::invalid_argument("cell_bound_tree: missing (m,d) pair for a variable");
        const MDPair& p = it->second;
        check_pair(p);
        BigInt k;
        if (T.children(v).empty()) {
            k = p.m * p.d;
        } else {
            // height of v = longest downward path to a leaf
            std::size_t h = 0;
            for (VarId u : T.ordering().ranked())
                if (T.is_ancestor(v, u))
                    h = std::max(h, T.depth(u) - T.depth(v));
            check_depth(static_cast<std::uint32_t>(h), "cell_bound_tree");
            BigInt M = md_capital(p.m);
            k = pow_big(2 * (BigInt(w) + 1), (1ul << h) - 1) * pow_big(M, 1ul << (h - 1)) *
                pow_big(p.d, 1ul << h);
        }
        out *= 2 * k + 1;
    }
    return out;
}

}  // namespace chordalcad
