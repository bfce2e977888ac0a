#include "spantree/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace spantree {

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Adjacency rows as bitmasks; workhorse for every subset-enumeration oracle.
std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    return adj;
}

int components_of_mask(const std::vector<std::uint32_t>& adj, std::uint32_t live) {
    int components = 0;
    while (live) {
        ++components;
        std::uint32_t comp = live & -live;
        while (true) {
            std::uint32_t grow = comp;
            std::uint32_t scan = comp;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= adj[v] & live;
            }
            if (grow == comp) break;
            comp = grow;
        }
        live &= ~comp;
    }
    return components;
}

bool complete_graph(const Graph& g) {
    return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

}  // namespace

Toughness Toughness::infinity() {
    Toughness t;
    t.infinite = true;
    return t;
}

Toughness Toughness::ratio(long long num, long long den) {
    detail::require(den > 0 && num >= 0, "toughness ratio must be nonnegative");
    Toughness t;
    long long g = num == 0 ? den : gcd_ll(num, den);
    t.num = num / g;
    t.den = den / g;
    return t;
}

bool Toughness::less_than(long long p, long long q) const {
    detail::require(q > 0, "comparison denominator must be positive");
    if (infinite) return false;
    return num * q < p * den;
}

std::string Toughness::str() const {
    if (infinite) return "infinity";
    return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<ViolationCertificate> check_condition_bruteforce(const Graph& g,
                                                               const DegreeBudget& f,
                                                               int limit) {
    const int n = g.n();
    detail::require(n <= limit && n <= 30, "graph too large for exhaustive condition check");
    detail::require(f.size() == n, "budget size does not match graph");
    auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;

    std::vector<int> best;  // lexicographically smallest violating set
    ViolationCertificate cert;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int budget = 0;
        std::uint32_t scan = s;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            budget += f(v) - 1;
        }
        int observed = components_of_mask(adj, full & ~s);
        if (observed <= budget) continue;
        std::vector<int> members;
        scan = s;
        while (scan) {
            members.push_back(std::countr_zero(scan));
            scan &= scan - 1;
        }
        if (best.empty() || std::lexicographical_compare(members.begin(), members.end(),
                                                         best.begin(), best.end())) {
            best = members;
            cert.U = VertexSet(n);
            for (int v : members) cert.U.insert(v);
            cert.observed = observed;
            cert.budget = budget;
        }
    }
    if (best.empty()) return std::nullopt;
    return cert;
}

Toughness toughness(const Graph& g, int limit) {
    const int n = g.n();
    detail::require(n <= limit && n <= 30, "graph too large for exhaustive toughness");
    if (complete_graph(g)) return Toughness::infinity();
    auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;

    long long best_num = -1, best_den = 1;
    for (std::uint32_t s = 0; s < full; ++s) {  // s == full leaves no vertices
        int c = components_of_mask(adj, full & ~s);
        if (c < 2) continue;
        long long size = std::popcount(s);
        if (best_num < 0 || size * best_den < best_num * c) {
            best_num = size;
            best_den = c;
        }
    }
    detail::check(best_num >= 0, "non-complete graph without a disconnecting set");
    return Toughness::ratio(best_num, best_den);
}

bool exists_degree_bounded_spanning_tree(const Graph& g, const DegreeBudget& f,
                                         const VertexSet& marked, int limit) {
    const int n = g.n();
    detail::require(n <= limit, "graph too large for spanning tree enumeration");
    detail::require(f.size() == n, "budget size does not match graph");
    detail::require(marked.universe() == n, "marked set universe does not match graph");
    if (n <= 1) return true;
    if (!g.is_connected()) return false;

    std::vector<int> cap(n);
    for (int v = 0; v < n; ++v) cap[v] = f(v) - (marked.contains(v) ? 1 : 0);

    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<int> deg(n, 0);

    // Kruskal-style: scan edges in order, each chosen edge must join two
    // components, so exactly the spanning trees are enumerated.
    std::function<bool(int, int, std::vector<int>)> rec = [&](int idx, int chosen,
                                                              std::vector<int> parent) -> bool {
        if (chosen == n - 1) return true;
        if (m - idx < n - 1 - chosen) return false;
        if (idx == m) return false;
        auto find = [&parent](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        auto [u, v] = edges[idx];
        int a = find(u), b = find(v);
        if (a != b && deg[u] < cap[u] && deg[v] < cap[v]) {
            auto next = parent;
            next[a] = b;
            ++deg[u];
            ++deg[v];
            if (rec(idx + 1, chosen + 1, std::move(next))) return true;
            --deg[u];
            --deg[v];
        }
        return rec(idx + 1, chosen, std::move(parent));
    };
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    return rec(0, 0, std::move(parent));
}

bool hamiltonian_path(const Graph& g, const std::optional<VertexSet>& both_ends_in, int limit) {
    const int n = g.n();
    detail::require(n >= 1 && n <= limit, "graph too large for Hamiltonian path DP");
    if (both_ends_in)
        detail::require(both_ends_in->universe() == n, "endpoint set universe mismatch");
    if (n == 1) return both_ends_in ? both_ends_in->contains(0) : true;
    if (!g.is_connected()) return false;

    auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::uint32_t ends = full;
    if (both_ends_in) {
        ends = 0;
        for (int v : both_ends_in->to_vector()) ends |= std::uint32_t{1} << v;
        if (std::popcount(ends) < 2) return false;
    }

    // reach[mask] = set of possible last vertices for paths covering mask.
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v)
        if (ends >> v & 1) reach[std::uint32_t{1} << v] |= std::uint32_t{1} << v;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t last = reach[mask];
        if (!last) continue;
        if (mask == full) return (last & ends) != 0;
        while (last) {
            int v = std::countr_zero(last);
            last &= last - 1;
            std::uint32_t nexts = adj[v] & ~mask;
            while (nexts) {
                int w = std::countr_zero(nexts);
                nexts &= nexts - 1;
                reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return (reach[full] & ends) != 0;
}

bool hamiltonian_cycle(const Graph& g, int limit) {
    const int n = g.n();
    detail::require(n >= 1 && n <= limit, "graph too large for Hamiltonian cycle DP");
    if (n < 3) return false;
    if (!g.is_connected()) return false;

    auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    reach[1] = 1;  // paths anchored at vertex 0
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t last = reach[mask];
        if (!last) continue;
        while (last) {
            int v = std::countr_zero(last);
            last &= last - 1;
            std::uint32_t nexts = adj[v] & ~mask;
            while (nexts) {
                int w = std::countr_zero(nexts);
                nexts &= nexts - 1;
                reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return (reach[full] & adj[0]) != 0;
}

bool has_k4_minor(const Graph& g, int limit) {
    const int n = g.n();
    detail::require(n <= limit, "graph too large for minor search");
    if (n < 4 || g.edge_count() < 6) return false;

    auto adj = adjacency_masks(g);
    std::vector<int> branch(4);
    std::vector<char> blocked(n, 0);

    // Six internally disjoint paths between the four branch vertices.
    std::function<bool(int, const std::vector<std::pair<int, int>>&)> connect =
        [&](int k, const std::vector<std::pair<int, int>>& pairs) -> bool {
        if (k == 6) return true;
        auto [a, b] = pairs[k];
        std::function<bool(int)> walk = [&](int cur) -> bool {
            if (adj[cur] >> b & 1)
                if (connect(k + 1, pairs)) return true;
            for (int w : g.neighbors(cur)) {
                if (blocked[w] || w == b) continue;
                blocked[w] = 1;
                if (walk(w)) return true;
                blocked[w] = 0;
            }
            return false;
        };
        return walk(a);
    };

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::fill(blocked.begin(), blocked.end(), 0);
                    blocked[a] = blocked[b] = blocked[c] = blocked[d] = 1;
                    std::vector<std::pair<int, int>> pairs{{a, b}, {a, c}, {a, d},
                                                           {b, c}, {b, d}, {c, d}};
                    if (connect(0, pairs)) return true;
                }
    return false;
}

namespace {

// Minimum adjacency encoding over all vertex orderings, with prefix
// pruning.  Bits appear column by column: placing position i contributes
// the i bits toward positions 0..i-1.  n <= 8 keeps the code in 28 bits.
std::uint32_t canonical_code(const Graph& g) {
    const int n = g.n();
    bool adj[8][8] = {};
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    const int total_bits = n * (n - 1) / 2;

    // Seed with the identity ordering so prefix comparisons always have a
    // complete reference value.
    std::uint32_t best = 0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) best = (best << 1) | (adj[j][i] ? 1 : 0);

    int perm[8];
    bool used[8] = {};
    std::function<void(int, std::uint32_t, int)> place = [&](int level, std::uint32_t cur,
                                                             int len) {
        if (level == n) {
            best = std::min(best, cur);
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            std::uint32_t bits = 0;
            for (int j = 0; j < level; ++j) bits = (bits << 1) | (adj[perm[j]][cand] ? 1 : 0);
            std::uint32_t next = (cur << level) | bits;
            int next_len = len + level;
            if (next > (best >> (total_bits - next_len))) continue;
            used[cand] = true;
            perm[level] = cand;
            place(level + 1, next, next_len);
            used[cand] = false;
        }
    };
    place(0, 0, 0);
    return best;
}

Graph decode_code(std::uint32_t code, int n) {
    const int total_bits = n * (n - 1) / 2;
    std::vector<Edge> edges;
    int pos = 0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            if (code >> (total_bits - 1 - pos) & 1) edges.push_back({j, i});
            ++pos;
        }
    return Graph(n, edges);
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n,
                                              const std::function<bool(const Graph&)>& keep) {
    detail::require(n >= 1 && n <= 8, "enumeration supports 1..8 vertices");

    std::vector<Graph> level{Graph(1, {})};
    if (keep && !keep(level[0])) level.clear();
    for (int sz = 2; sz <= n; ++sz) {
        std::set<std::uint32_t> codes;
        for (const Graph& g : level) {
            const int prev = g.n();
            auto base_edges = g.edges();
            for (std::uint32_t attach = 1; attach < (std::uint32_t{1} << prev); ++attach) {
                auto edges = base_edges;
                for (int v = 0; v < prev; ++v)
                    if (attach >> v & 1) edges.push_back({v, prev});
                Graph h(sz, edges);
                if (keep && !keep(h)) continue;
                codes.insert(canonical_code(h));
            }
        }
        level.clear();
        for (std::uint32_t code : codes) level.push_back(decode_code(code, sz));
    }
    return level;
}

}  // namespace spantree
