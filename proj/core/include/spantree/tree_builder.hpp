#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "spantree/decomposition.hpp"
#include "spantree/graph.hpp"
#include "spantree/weights.hpp"

namespace spantree {

struct SpanningTree {
    std::vector<Edge> edges;  // sorted
    bool contains(Edge e) const;
};

/// Closed walk as a cyclic vertex sequence (the edge from the last vertex
/// back to the first is implicit).
struct ClosedWalk {
    std::vector<int> sequence;
    int max_repeats() const;
};

/// Everything the recursive builder needs: the graph, budgets satisfying
/// the weight equations together with omega, a rooted block tree whose
/// special edges all have c(G, rs) <= 1, and the set of edges that were
/// introduced by enclosing splits (absent from the original input).
struct BuildInstance {
    Graph g;
    DegreeBudget f;
    WeightAssignment omega;
    RootedBlockTree rooted;
    std::set<Edge> virtual_edges;
};

/// Special edge with its bridge count, for membership checks:
/// c == 0 forces the edge into the tree, c == 1 keeps it out.
struct RsEdge {
    std::pair<int, int> edge;  // ordered (r, s)
    int c_value = 0;
};

struct TreeResult {
    SpanningTree tree;
    VertexSet marked;                 // vertices guaranteed d_T <= f-1
    std::vector<RsEdge> special_edges;
};

using TreeOutcome = std::variant<TreeResult, ViolationCertificate>;

/// Recursive construction: splits at a nontrivial 2-cut while one exists,
/// otherwise takes per-block Hamiltonian paths of the outerplanar blocks.
/// The result spans G, respects f everywhere, respects f-1 at the root
/// vertex and at every special-edge partner, and satisfies the
/// special-edge membership rules.
SpanningTree build(const BuildInstance& instance);

/// End-to-end: weight assignment (or certificate), root-edge selection at
/// `at` (default: vertex 0), block tree with special edges, then build.
/// The returned tree is re-verified before being handed back.
TreeOutcome build_degree_bounded_tree(const Graph& g, const DegreeBudget& f,
                                      std::optional<int> at = std::nullopt);

/// Closed walk traversing every edge of the spanning tree exactly twice;
/// vertex v appears exactly d_T(v) times.  Starts at vertex 0 and visits
/// children in ascending order.
ClosedWalk tree_to_walk(const Graph& g, const SpanningTree& t);

/// Post-hoc validation.  Returns human-readable violations of: spanning /
/// acyclic / connected, d_T(v) <= f(v), d_T(v) <= f(v)-1 on marked, and
/// the special-edge membership rules.  Empty report means valid.
std::vector<std::string> verify_tree(const Graph& g, const DegreeBudget& f,
                                     const SpanningTree& t, const VertexSet& marked,
                                     const std::vector<RsEdge>& rs_edges);

}  // namespace spantree
