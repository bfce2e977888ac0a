#include "spantree/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace spantree {

VertexSet::VertexSet(int universe) : n_(universe) {
    detail::require(universe >= 0, "VertexSet universe must be nonnegative");
    words_.assign((universe + 63) / 64, 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
}

void VertexSet::check_range(int v) const {
    detail::require(v >= 0 && v < n_, "vertex id " + std::to_string(v) + " out of range");
}

bool VertexSet::contains(int v) const {
    check_range(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
}

void VertexSet::insert(int v) {
    check_range(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
    check_range(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if ((words_[v >> 6] >> (v & 63)) & 1u) out.push_back(v);
    return out;
}

Graph::Graph(int n, const std::vector<Edge>& edges) {
    detail::require(n >= 0, "vertex count must be nonnegative");
    adj_.assign(n, {});
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) {
        detail::require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
        detail::require(u != v, "self-loops are not allowed");
        es.push_back(make_edge(u, v));
    }
    std::sort(es.begin(), es.end());
    detail::require(std::adjacent_find(es.begin(), es.end()) == es.end(),
                    "parallel edges are not allowed");
    for (auto [u, v] : es) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    m_ = static_cast<int>(es.size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    detail::require(v >= 0 && v < n(), "vertex id out of range");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    detail::require(u >= 0 && u < n() && v >= 0 && v < n(), "vertex id out of range");
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n() <= 1) return true;
    std::vector<char> seen(n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n();
}

int BridgeReport::nontrivial_count() const {
    int c = 0;
    for (const auto& b : bridges)
        if (!b.trivial) ++c;
    return c;
}

int component_count(const Graph& g, const VertexSet& removed) {
    detail::require(removed.universe() == g.n(), "vertex set universe does not match graph");
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    int components = 0;
    for (int start = 0; start < g.n(); ++start) {
        if (seen[start] || removed.contains(start)) continue;
        ++components;
        seen[start] = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w] && !removed.contains(w)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return components;
}

BridgeReport bridges(const Graph& g, const VertexSet& s) {
    detail::require(s.universe() == g.n(), "vertex set universe does not match graph");
    detail::require(!s.empty(), "bridges() needs a nonempty vertex set");

    BridgeReport report;

    // Trivial bridges: edges with both endpoints in S.
    for (auto [u, v] : g.edges()) {
        if (s.contains(u) && s.contains(v)) {
            Bridge b;
            b.trivial = true;
            b.vertices = VertexSet::of(g.n(), {u, v});
            b.attachments = b.vertices;
            report.bridges.push_back(std::move(b));
        }
    }

    // Nontrivial bridges: components of G-S plus their attachments in S.
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int start = 0; start < g.n(); ++start) {
        if (seen[start] || s.contains(start)) continue;
        Bridge b;
        b.vertices = VertexSet(g.n());
        b.attachments = VertexSet(g.n());
        seen[start] = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            b.vertices.insert(v);
            for (int w : g.neighbors(v)) {
                if (s.contains(w)) {
                    b.attachments.insert(w);
                } else if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        report.bridges.push_back(std::move(b));
    }
    return report;
}

int c_pair(const Graph& g, int u, int v) {
    detail::require(u != v, "c_pair needs two distinct vertices");
    detail::require(u >= 0 && u < g.n() && v >= 0 && v < g.n(), "vertex id out of range");

    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    int count = 0;
    for (int start = 0; start < g.n(); ++start) {
        if (seen[start] || start == u || start == v) continue;
        bool at_u = false, at_v = false;
        seen[start] = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(x)) {
                if (w == u) {
                    at_u = true;
                } else if (w == v) {
                    at_v = true;
                } else if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (at_u && at_v) ++count;
    }
    return count;
}

InducedSubgraph induced_without(const Graph& g, const VertexSet& removed) {
    detail::require(removed.universe() == g.n(), "vertex set universe does not match graph");
    detail::require(removed.count() < g.n(), "cannot remove every vertex");
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!removed.contains(v)) keep.push_back(v);
    return induced_on(g, keep);
}

InducedSubgraph induced_on(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        int v = vertices[i];
        detail::require(v >= 0 && v < g.n(), "vertex id out of range");
        detail::require(local[v] == -1, "duplicate vertex in induced_on");
        local[v] = i;
    }
    std::vector<Edge> es;
    for (int v : vertices)
        for (int w : g.neighbors(v))
            if (v < w && local[w] != -1) es.push_back(make_edge(local[v], local[w]));
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(vertices.size()), es);
    out.to_parent = vertices;
    return out;
}

}  // namespace spantree
