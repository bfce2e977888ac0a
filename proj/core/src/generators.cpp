#include "spantree/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace spantree {

std::vector<int> simplicial_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        bool clique = true;
        for (size_t i = 0; i < nb.size() && clique; ++i)
            for (size_t j = i + 1; j < nb.size() && clique; ++j)
                if (!g.has_edge(nb[i], nb[j])) clique = false;
        if (clique) out.push_back(v);
    }
    return out;
}

std::pair<LabeledGraph, DegreeBudget> triangle_pendants(int fx, int fy, int fz) {
    detail::require(fx >= 2 && fy >= 2 && fz >= 2, "corner budgets must be at least 2");
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
    std::vector<int> budgets{fx, fy, fz};
    int next = 3;
    for (int corner = 0; corner < 3; ++corner) {
        int pendants = budgets[corner] - 1;
        for (int i = 0; i < pendants; ++i) {
            edges.push_back(make_edge(corner, next++));
            budgets.push_back(2);
        }
    }
    LabeledGraph lg;
    lg.graph = Graph(next, edges);
    lg.labels = {{"x", 0}, {"y", 1}, {"z", 2}};
    return {std::move(lg), DegreeBudget(std::move(budgets))};
}

std::pair<Graph, DegreeBudget> pendant_augment(const Graph& g, const DegreeBudget& f) {
    detail::require(f.size() == g.n(), "budget size does not match graph");
    auto edges = g.edges();
    std::vector<int> budgets = f.values();
    int next = g.n();
    for (int v = 0; v < g.n(); ++v)
        for (int i = 0; i < f(v) - 2; ++i) {
            edges.push_back(make_edge(v, next++));
            budgets.push_back(2);
        }
    return {Graph(next, edges), DegreeBudget(std::move(budgets))};
}

LabeledGraph dillencourt_t() {
    // Corners A=0, B=1, C=2; inner hubs 3..7; simplicial vertices 8..14.
    const std::vector<Edge> edges{
        {0, 1},  {1, 2},  {0, 2},   // outer triangle A B C
        {0, 3},  {3, 4},  {4, 5},  {1, 5},                    // spine A-3-4-5-B
        {1, 9},  {6, 9},  {0, 6},                             // B-9, 9-6, 6-A
        {0, 8},  {3, 8},  {3, 6},                             // A-8, 8-3, 3-6
        {6, 10}, {3, 10}, {3, 7},                              // 6-10, 10-3, 3-7
        {7, 11}, {4, 11}, {4, 6},  {5, 6},                    // 7-11, 11-4, 4-6, 5-6
        {5, 12}, {4, 12}, {4, 13}, {7, 13},                   // 5-12, 12-4, 4-13, 13-7
        {5, 7},  {5, 14}, {7, 14}, {2, 7},  {2, 5},           // 5-7, 5-14, 14-7, C-7, C-5
        {6, 8},  {1, 6},  {0, 7},  {5, 9},  {4, 10}, {4, 7},  // 6-8, B-6, A-7, 9-5, 10-4, 4-7
        {6, 12}, {3, 11}, {5, 13}, {2, 14},                   // 6-12, 3-11, 5-13, C-14
    };
    LabeledGraph lg;
    lg.graph = Graph(15, edges);
    lg.labels = {{"A", 0}, {"B", 1}, {"C", 2}};
    return lg;
}

LabeledGraph dillencourt_gn(int n) {
    detail::require(n >= 1, "level must be at least 1");
    LabeledGraph current = dillencourt_t();
    const LabeledGraph tile = dillencourt_t();
    const auto tile_edges = tile.graph.edges();

    for (int level = 2; level <= n; ++level) {
        const Graph& g = current.graph;
        auto simp = simplicial_vertices(g);
        std::set<int> gone(simp.begin(), simp.end());

        std::vector<int> compact(g.n(), -1);
        int next = 0;
        for (int v = 0; v < g.n(); ++v)
            if (!gone.count(v)) compact[v] = next++;

        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (compact[u] != -1 && compact[v] != -1)
                edges.push_back(make_edge(compact[u], compact[v]));

        for (int u : simp) {
            const auto& nb = g.neighbors(u);
            detail::check(nb.size() == 3, "substituted vertex must have three neighbors");
            int x = compact[nb[0]], y = compact[nb[1]], z = compact[nb[2]];
            detail::check(x != -1 && y != -1 && z != -1,
                          "simplicial vertices must not be adjacent");
            const int base = next;
            for (auto [a, b] : tile_edges) edges.push_back(make_edge(base + a, base + b));
            // wire the copy's corners into the vacated triangle
            edges.push_back(make_edge(base + 0, x));
            edges.push_back(make_edge(base + 0, y));
            edges.push_back(make_edge(base + 1, y));
            edges.push_back(make_edge(base + 1, z));
            edges.push_back(make_edge(base + 2, z));
            edges.push_back(make_edge(base + 2, x));
            next += tile.graph.n();
        }

        LabeledGraph out;
        out.graph = Graph(next, edges);
        for (const auto& [name, id] : current.labels)
            if (compact[id] != -1) out.labels[name] = compact[id];
        current = std::move(out);
    }
    return current;
}

Graph theta_graph() {
    return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

Graph cycle_graph(int n) {
    detail::require(n >= 3, "cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    return Graph(n, edges);
}

Graph path_graph(int n) {
    detail::require(n >= 1, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

namespace {

struct SpBuilder {
    std::mt19937_64 rng;
    std::set<Edge> edges;
    int next_id = 0;

    int pick(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Two-terminal series-parallel graph between s and t with exactly
    // k - 2 fresh internal vertices.
    void grow(int s, int t, int k) {
        if (k == 2) {
            edges.insert(make_edge(s, t));
            return;
        }
        const bool series = k == 3 || rng() % 2 == 0;  // parallel needs room for two branches
        if (series) {
            int k1 = pick(2, k - 1);
            int mid = next_id++;
            grow(s, mid, k1);
            grow(mid, t, k - k1 + 1);
        } else {
            // both branch sizes land in [3, k-1], so both strictly shrink
            int k1 = pick(3, k - 1);
            grow(s, t, k1);
            grow(s, t, k - k1 + 2);
            if (rng() % 3 == 0) edges.insert(make_edge(s, t));
        }
    }
};

}  // namespace

Graph random_series_parallel(int n, std::uint64_t seed) {
    detail::require(n >= 2, "series-parallel generation needs at least two vertices");
    SpBuilder b;
    b.rng.seed(seed);
    b.next_id = 2;
    b.grow(0, 1, n);
    detail::check(b.next_id == n, "series-parallel size bookkeeping is off");
    return Graph(n, std::vector<Edge>(b.edges.begin(), b.edges.end()));
}

Graph maximal_outerplanar(int n, std::uint64_t seed) {
    detail::require(n >= 1, "need at least one vertex");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::set<Edge> edges;
    for (int v = 0; v < n; ++v) edges.insert(make_edge(v, (v + 1) % n));
    // random ear split of the polygon 0..n-1
    std::function<void(int, int)> triangulate = [&](int lo, int hi) {
        if (hi - lo < 2) return;
        int k = lo + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo - 1));
        edges.insert(make_edge(lo, k));
        edges.insert(make_edge(k, hi));
        triangulate(lo, k);
        triangulate(k, hi);
    };
    triangulate(0, n - 1);
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace spantree
