#include "chordalcad/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace chordalcad {

// --- Rational -------------------------------------------------------------

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

// --- Ordering ---------------------------------------------------------------

Ordering::Ordering(std::vector<VarId> ranked) : ranked_(std::move(ranked)) {
    for (std::size_t i = 0; i < ranked_.size(); ++i) {
        auto [it, inserted] = rank_.emplace(ranked_[i], i);
        if (!inserted) throw std::invalid_argument("Ordering: duplicate variable");
    }
}

std::size_t Ordering::rank(VarId v) const {
    auto it = rank_.find(v);
    if (it == rank_.end()) throw std::invalid_argument("Ordering: variable not ranked");
    return it->second;
}

VarId Ordering::smallest() const {
    if (ranked_.empty()) throw std::invalid_argument("Ordering: empty");
    return ranked_.back();
}

// --- VarGraph ---------------------------------------------------------------

void VarGraph::add_vertex(VarId v) { adj_.try_emplace(v); }

void VarGraph::add_edge(VarId a, VarId b) {
    if (a == b) throw std::invalid_argument("VarGraph: self-loop");
    adj_[a].insert(b);
    adj_[b].insert(a);
}

bool VarGraph::has_edge(VarId a, VarId b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) != 0;
}

const std::set<VarId>& VarGraph::neighbors(VarId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("VarGraph: unknown vertex");
    return it->second;
}

std::set<VarId> VarGraph::vertices() const {
    std::set<VarId> out;
    for (const auto& [v, nbrs] : adj_) out.insert(v);
    return out;
}

std::size_t VarGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& [v, nbrs] : adj_) twice += nbrs.size();
    return twice / 2;
}

std::vector<std::pair<VarId, VarId>> VarGraph::edges() const {
    std::vector<std::pair<VarId, VarId>> out;
    for (const auto& [v, nbrs] : adj_)
        for (VarId u : nbrs)
            if (v < u) out.emplace_back(v, u);
    return out;
}

bool VarGraph::is_subgraph_of(const VarGraph& other) const {
    for (const auto& [v, nbrs] : adj_) {
        if (!other.has_vertex(v)) return false;
        for (VarId u : nbrs)
            if (!other.has_edge(v, u)) return false;
    }
    return true;
}

VarGraph associated_graph(const PolySet& F) {
    VarGraph g;
    for (const auto& f : F) {
        auto vs = f.vars();
        for (auto it = vs.begin(); it != vs.end(); ++it) {
            g.add_vertex(*it);
            for (auto jt = std::next(it); jt != vs.end(); ++jt)
                g.add_edge(*it, *jt);
        }
    }
    return g;
}

// --- PEO verification and MCS ------------------------------------------------

bool verify_peo(const VarGraph& G, const Ordering& o) {
    if (o.size() != G.vertex_count())
        throw std::invalid_argument("verify_peo: ordering does not rank the vertex set");
    for (VarId v : o.ranked())
        if (!G.has_vertex(v))
            throw std::invalid_argument("verify_peo: ordering ranks an unknown vertex");
    for (VarId v : o.ranked()) {
        std::vector<VarId> smaller;
        for (VarId u : G.neighbors(v))
            if (o.rank(u) > o.rank(v)) smaller.push_back(u);
        for (std::size_t i = 0; i < smaller.size(); ++i)
            for (std::size_t j = i + 1; j < smaller.size(); ++j)
                if (!G.has_edge(smaller[i], smaller[j])) return false;
    }
    return true;
}

namespace {

// Shortest a-b path avoiding `banned`; empty when none exists.
std::vector<VarId> bfs_path(const VarGraph& G, VarId a, VarId b, const std::set<VarId>& banned) {
    std::map<VarId, VarId> pred;
    std::deque<VarId> queue{a};
    pred[a] = a;
    while (!queue.empty()) {
        VarId v = queue.front();
        queue.pop_front();
        if (v == b) {
            std::vector<VarId> path{b};
            while (path.back() != a) path.push_back(pred[path.back()]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (VarId u : G.neighbors(v)) {
            if (banned.count(u) || pred.count(u)) continue;
            pred[u] = v;
            queue.push_back(u);
        }
    }
    return {};
}

// A chordless cycle of length >= 4 in a non-chordal graph: for a vertex v
// with nonadjacent neighbors a, b, a shortest a-b path outside N[v]
// closes into a chordless cycle through v.
std::vector<VarId> find_chordless_cycle(const VarGraph& G) {
    for (VarId v : G.vertices()) {
        const auto& nbrs = G.neighbors(v);
        for (auto it = nbrs.begin(); it != nbrs.end(); ++it)
            for (auto jt = std::next(it); jt != nbrs.end(); ++jt) {
                VarId a = *it, b = *jt;
                if (G.has_edge(a, b)) continue;
                std::set<VarId> banned{v};
                for (VarId u : nbrs)
                    if (u != a && u != b) banned.insert(u);
                auto path = bfs_path(G, a, b, banned);
                if (path.size() >= 3) {
                    std::vector<VarId> cycle{v};
                    cycle.insert(cycle.end(), path.begin(), path.end());
                    return cycle;
                }
            }
    }
    return {};
}

}  // namespace

ChordalityResult mcs_peo(const VarGraph& G) {
    ChordalityResult out;
    std::map<VarId, std::size_t> weight;
    std::set<VarId> unnumbered = G.vertices();
    for (VarId v : unnumbered) weight[v] = 0;

    // Selection order: max weight, ties to the smallest id. The reverse of
    // the selection order is the candidate elimination ordering.
    std::vector<VarId> selected;
    selected.reserve(unnumbered.size());
    while (!unnumbered.empty()) {
        VarId best = *unnumbered.begin();
        for (VarId v : unnumbered)
            if (weight[v] > weight[best]) best = v;
        selected.push_back(best);
        unnumbered.erase(best);
        for (VarId u : G.neighbors(best))
            if (unnumbered.count(u)) ++weight[u];
    }
    std::reverse(selected.begin(), selected.end());
    Ordering candidate{selected};
    if (verify_peo(G, candidate)) {
        out.chordal = true;
        out.ordering = std::move(candidate);
        return out;
    }
    out.chordal = false;
    out.witness = find_chordless_cycle(G);
    if (out.witness.size() < 4)
        throw std::logic_error("mcs_peo: failed to certify a non-chordal graph");
    return out;
}

// --- elimination game, min-fill, minimality ----------------------------------

EliminationGameResult elimination_game(const VarGraph& G, const Ordering& o) {
    if (o.size() != G.vertex_count())
        throw std::invalid_argument("elimination_game: ordering does not rank the vertex set");
    EliminationGameResult out;
    out.completion = G;
    VarGraph work = G;
    std::set<VarId> eliminated;
    for (VarId v : o.ranked()) {
        std::vector<VarId> live;
        for (VarId u : work.neighbors(v))
            if (!eliminated.count(u)) live.push_back(u);
        for (std::size_t i = 0; i < live.size(); ++i)
            for (std::size_t j = i + 1; j < live.size(); ++j)
                if (!work.has_edge(live[i], live[j])) {
                    work.add_edge(live[i], live[j]);
                    out.completion.add_edge(live[i], live[j]);
                    out.fill_edges.emplace_back(std::min(live[i], live[j]),
                                                std::max(live[i], live[j]));
                }
        eliminated.insert(v);
    }
    std::sort(out.fill_edges.begin(), out.fill_edges.end());
    return out;
}

Ordering min_fill_ordering(const VarGraph& G) {
    VarGraph work = G;
    std::set<VarId> remaining = G.vertices();
    std::vector<VarId> order;
    order.reserve(remaining.size());
    while (!remaining.empty()) {
        VarId best = 0;
        std::size_t best_fill = SIZE_MAX;
        for (VarId v : remaining) {
            std::vector<VarId> live;
            for (VarId u : work.neighbors(v))
                if (remaining.count(u)) live.push_back(u);
            std::size_t fill = 0;
            for (std::size_t i = 0; i < live.size(); ++i)
                for (std::size_t j = i + 1; j < live.size(); ++j)
                    if (!work.has_edge(live[i], live[j])) ++fill;
            if (fill < best_fill) { best_fill = fill; best = v; }
        }
        std::vector<VarId> live;
        for (VarId u : work.neighbors(best))
            if (remaining.count(u)) live.push_back(u);
        for (std::size_t i = 0; i < live.size(); ++i)
            for (std::size_t j = i + 1; j < live.size(); ++j)
                if (!work.has_edge(live[i], live[j])) work.add_edge(live[i], live[j]);
        remaining.erase(best);
        order.push_back(best);
    }
    return Ordering{order};
}

bool is_minimal_completion(const VarGraph& G, const VarGraph& Ghat) {
    if (!G.is_subgraph_of(Ghat) || G.vertex_count() != Ghat.vertex_count())
        throw std::invalid_argument("is_minimal_completion: Ghat must complete G");
    if (!mcs_peo(Ghat).chordal)
        throw std::invalid_argument("is_minimal_completion: Ghat is not chordal");
    for (const auto& [a, b] : Ghat.edges()) {
        if (G.has_edge(a, b)) continue;
        VarGraph trimmed;
        for (VarId v : Ghat.vertices()) trimmed.add_vertex(v);
        for (const auto& [c, d] : Ghat.edges())
            if (!(c == a && d == b)) trimmed.add_edge(c, d);
        if (mcs_peo(trimmed).chordal) return false;
    }
    return true;
}

// --- elimination tree ---------------------------------------------------------

ElimTree::ElimTree(const VarGraph& G, const Ordering& o) : ordering_(o) {
    if (!verify_peo(G, o))
        throw std::invalid_argument("elimination_tree: the ordering is not a PEO of G");
    for (VarId v : o.ranked()) {
        std::optional<VarId> p;
        for (VarId u : G.neighbors(v)) {
            if (o.rank(u) <= o.rank(v)) continue;  // not smaller than v
            if (!p || o.rank(u) < o.rank(*p)) p = u;  // largest smaller neighbor
        }
        if (p) {
            parent_.emplace(v, *p);
            children_[*p].push_back(v);
        } else {
            roots_.push_back(v);
        }
    }
    for (auto& [v, kids] : children_) std::sort(kids.begin(), kids.end());
    std::sort(roots_.begin(), roots_.end());
}

std::optional<VarId> ElimTree::parent(VarId v) const {
    auto it = parent_.find(v);
    if (it == parent_.end()) return std::nullopt;
    return it->second;
}

std::vector<VarId> ElimTree::children(VarId v) const {
    auto it = children_.find(v);
    if (it == children_.end()) return {};
    return it->second;
}

std::size_t ElimTree::depth(VarId v) const {
    std::size_t d = 0;
    VarId cur = v;
    for (;;) {
        auto p = parent(cur);
        if (!p) return d;
        cur = *p;
        ++d;
        if (d > ordering_.size())
            throw std::logic_error("ElimTree: parent map contains a cycle");
    }
}

std::size_t ElimTree::height() const {
    std::size_t h = 0;
    for (VarId v : ordering_.ranked()) h = std::max(h, depth(v));
    return h;
}

std::size_t ElimTree::max_children() const {
    std::size_t w = 0;
    for (const auto& [v, kids] : children_) w = std::max(w, kids.size());
    return w;
}

bool ElimTree::is_ancestor(VarId anc, VarId v) const {
    VarId cur = v;
    std::size_t guard = 0;
    for (;;) {
        if (cur == anc) return true;
        auto p = parent(cur);
        if (!p) return false;
        cur = *p;
        if (++guard > ordering_.size()) return false;
    }
}

void ElimTree::corrupt_parent(VarId v, VarId new_parent) {
    parent_[v] = new_parent;
    children_.clear();
    for (const auto& [c, p] : parent_) children_[p].push_back(c);
}

bool tree_path_check(const VarGraph& G, const ElimTree& T) {
    const Ordering& o = T.ordering();
    for (const auto& [a, b] : G.edges()) {
        VarId smaller = o.greater(a, b) ? b : a;
        VarId larger = o.greater(a, b) ? a : b;
        if (!T.is_ancestor(smaller, larger)) return false;
    }
    return true;
}

Rational fill_metric(const VarGraph& G, const VarGraph& Ghat) {
    if (!G.is_subgraph_of(Ghat))
        throw std::invalid_argument("fill_metric: Ghat must contain G");
    long long h = static_cast<long long>(Ghat.edge_count());
    if (h == 0) throw std::invalid_argument("fill_metric: completion has no edges");
    long long g = static_cast<long long>(G.edge_count());
    return Rational{h - g, h};
}

// --- PEO enumeration and height minimization ----------------------------------

namespace {

bool is_simplicial(const VarGraph& G, VarId v, const std::set<VarId>& remaining) {
    std::vector<VarId> live;
    for (VarId u : G.neighbors(v))
        if (remaining.count(u)) live.push_back(u);
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j)
            if (!G.has_edge(live[i], live[j])) return false;
    return true;
}

// Depth-first over simplicial-vertex choices; visit returns false to stop.
bool for_each_peo(const VarGraph& G, std::set<VarId>& remaining, std::vector<VarId>& prefix,
                  const std::function<bool(const std::vector<VarId>&)>& visit) {
    if (remaining.empty()) return visit(prefix);
    for (VarId v : std::set<VarId>(remaining)) {
        if (!is_simplicial(G, v, remaining)) continue;
        remaining.erase(v);
        prefix.push_back(v);
        bool keep_going = for_each_peo(G, remaining, prefix, visit);
        prefix.pop_back();
        remaining.insert(v);
        if (!keep_going) return false;
    }
    return true;
}

void require_chordal(const VarGraph& G, const char* who) {
    if (!mcs_peo(G).chordal)
        throw std::invalid_argument(std::string(who) + ": graph is not chordal");
}

}  // namespace

std::vector<Ordering> enumerate_peos(const VarGraph& G, std::size_t cap) {
    require_chordal(G, "enumerate_peos");
    std::vector<Ordering> out;
    std::set<VarId> remaining = G.vertices();
    std::vector<VarId> prefix;
    for_each_peo(G, remaining, prefix, [&](const std::vector<VarId>& peo) {
        out.emplace_back(peo);
        return out.size() < cap;
    });
    return out;
}

std::pair<Ordering, std::size_t> min_height_peo(const VarGraph& G, unsigned restarts,
                                                std::uint64_t seed) {
    require_chordal(G, "min_height_peo");
    if (G.vertex_count() == 0) return {Ordering{}, 0};
    constexpr std::size_t kExhaustiveLimit = 9;

    std::optional<std::vector<VarId>> best;
    std::size_t best_height = SIZE_MAX;
    auto consider = [&](const std::vector<VarId>& peo) {
        std::size_t h = ElimTree(G, Ordering{peo}).height();
        if (h < best_height || (h == best_height && best && peo < *best)) {
            best = peo;
            best_height = h;
        }
    };

    if (G.vertex_count() <= kExhaustiveLimit) {
        std::set<VarId> remaining = G.vertices();
        std::vector<VarId> prefix;
        for_each_peo(G, remaining, prefix, [&](const std::vector<VarId>& peo) {
            consider(peo);
            return true;
        });
    } else {
        std::mt19937_64 rng(seed);
        for (unsigned r = 0; r < restarts; ++r) {
            std::set<VarId> remaining = G.vertices();
            std::vector<VarId> peo;
            peo.reserve(remaining.size());
            while (!remaining.empty()) {
                std::vector<VarId> candidates;
                for (VarId v : remaining)
                    if (is_simplicial(G, v, remaining)) candidates.push_back(v);
                assert(!candidates.empty());
                std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
                VarId v = candidates[pick(rng)];
                remaining.erase(v);
                peo.push_back(v);
            }
            consider(peo);
        }
    }
    assert(best.has_value());
    return {Ordering{*best}, best_height};
}

}  // namespace chordalcad
