#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "spantree/errors.hpp"

namespace spantree {

/// Undirected edge, always stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Subset of the vertex range 0..n-1 with bitset semantics.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet of(int universe, std::initializer_list<int> vs);

    int universe() const { return n_; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<int> to_vector() const;  // ascending

    bool operator==(const VertexSet&) const = default;

private:
    void check_range(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once constructed; construction rejects loops, duplicate edges
/// and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;  // sorted lexicographically, u < v
    bool is_connected() const;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

/// One bridge of a vertex set S: either a single edge with both ends in S
/// (trivial) or a component of G-S (nontrivial).  For a trivial bridge
/// `vertices` holds its two endpoints; for a nontrivial one it holds the
/// component's interior.  `attachments` is the subset of S the bridge
/// touches.
struct Bridge {
    bool trivial = false;
    VertexSet vertices;
    VertexSet attachments;
};

struct BridgeReport {
    std::vector<Bridge> bridges;
    int nontrivial_count() const;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new id -> old id, ascending
};

/// Number of connected components of G-S.  Returns 0 iff S covers all of G.
int component_count(const Graph& g, const VertexSet& removed);

/// All bridges of a nonempty vertex set S.
BridgeReport bridges(const Graph& g, const VertexSet& s);

/// Number of nontrivial {u,v}-bridges attaching at both u and v.
/// Defined whether or not uv is an edge.
int c_pair(const Graph& g, int u, int v);

/// G-S with the id mapping back to G.  S must be a proper subset of V(G).
InducedSubgraph induced_without(const Graph& g, const VertexSet& removed);

/// Induced subgraph on an ascending vertex list (helper for block handling).
InducedSubgraph induced_on(const Graph& g, const std::vector<int>& vertices);

}  // namespace spantree
