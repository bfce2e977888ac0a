#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

/// Nontrivial 2-cut: a vertex pair {u,v} with c(G,uv) >= 3.
struct N2C {
    int u = -1, v = -1;   // u < v
    int multiplicity = 0; // c(G, uv)
    Edge pair() const { return {u, v}; }
};

/// Per-vertex degree caps f(v) >= 2.
class DegreeBudget {
public:
    DegreeBudget() = default;
    explicit DegreeBudget(std::vector<int> f);
    static DegreeBudget uniform(int n, int k);

    int size() const { return static_cast<int>(f_.size()); }
    int operator()(int v) const;
    const std::vector<int>& values() const { return f_; }

private:
    std::vector<int> f_;
};

/// Nonnegative weights on (N2C, endpoint) pairs.  For every cut {u,v} the
/// two weights sum to c(G,uv)-2, and for every vertex the incident weights
/// fit within f(u)-c(G-u)-1.
class WeightAssignment {
public:
    bool empty() const { return w_.size() == 0; }
    int at(Edge cut, int endpoint) const;
    int total_at(int v) const;
    void set(Edge cut, int w_lo, int w_hi);   // weights at min/max endpoint
    const std::map<Edge, std::pair<int, int>>& entries() const { return w_; }

private:
    std::map<Edge, std::pair<int, int>> w_;
};

/// Nonempty U with c(G-U) strictly above its budget sum.
struct ViolationCertificate {
    VertexSet U;
    int observed = 0;  // c(G-U)
    int budget = 0;    // sum over U of f(v)-1
};

using ConditionOutcome = std::variant<WeightAssignment, ViolationCertificate>;

/// All nontrivial 2-cuts of a connected graph, sorted by vertex pair.
std::vector<N2C> enumerate_n2cs(const Graph& g);

/// Lower bound on c(G-U) when U induces a connected subgraph of the graph
/// whose edges are the given cuts:
///   sum over cut edges inside U of (c(G,uv)-2)
/// + sum over w in U of (c(G-w)-1) + |U|.
int counting_lower_bound(const Graph& g, const std::vector<N2C>& cuts, const VertexSet& U);

/// Either a weight assignment obtained from a maximum flow over the cut
/// network, or a certificate set violating the component-count condition.
/// Certificates are always revalidated by direct computation before being
/// returned.
ConditionOutcome assign_weights(const Graph& g, const DegreeBudget& f);

/// Post-hoc arithmetic check of a weight assignment, independent of how it
/// was produced.  Returns human-readable violations; empty means valid.
std::vector<std::string> check_weight_equations(const Graph& g, const DegreeBudget& f,
                                                const WeightAssignment& w);

/// Recompute a certificate's numbers and confirm observed > budget.
bool certificate_is_valid(const Graph& g, const DegreeBudget& f, const ViolationCertificate& c);

namespace detail {

/// Flow network of the weight-assignment reduction: source, one node per
/// cut, one node per vertex used by some cut, sink.  Arc capacities:
/// source->cut = c(G,F)-2, cut->endpoint = total+1 (effectively unbounded),
/// vertex->sink = f(u)-c(G-u)-1.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int flow = 0;
        int rev;  // index of the reverse arc in adj[to]
    };
    int nodes = 0;
    int source = 0, sink = 0;
    std::vector<std::vector<Arc>> adj;
    std::vector<int> cut_node;        // per cut index
    std::map<int, int> vertex_node;   // graph vertex -> node
    int total = 0;                    // sum of source-arc capacities

    void add_arc(int from, int to, int cap);
};

FlowNetwork build_flow_network(const Graph& g, const DegreeBudget& f,
                               const std::vector<N2C>& cuts);
int max_flow(FlowNetwork& net);

}  // namespace detail

}  // namespace spantree
