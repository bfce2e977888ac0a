#include "spantree/weights.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "spantree/decomposition.hpp"

namespace spantree {

DegreeBudget::DegreeBudget(std::vector<int> f) : f_(std::move(f)) {
    for (int v = 0; v < static_cast<int>(f_.size()); ++v)
        detail::require(f_[v] >= 2, "degree budget below 2 at vertex " + std::to_string(v));
}

DegreeBudget DegreeBudget::uniform(int n, int k) {
    detail::require(k >= 2, "uniform budget must be at least 2");
    return DegreeBudget(std::vector<int>(n, k));
}

int DegreeBudget::operator()(int v) const {
    detail::require(v >= 0 && v < size(), "vertex id out of range");
    return f_[v];
}

int WeightAssignment::at(Edge cut, int endpoint) const {
    auto it = w_.find(cut);
    detail::require(it != w_.end(), "no weight entry for this cut");
    detail::require(endpoint == cut.first || endpoint == cut.second,
                    "endpoint does not belong to the cut");
    return endpoint == cut.first ? it->second.first : it->second.second;
}

int WeightAssignment::total_at(int v) const {
    int total = 0;
    for (const auto& [cut, w] : w_) {
        if (cut.first == v) total += w.first;
        if (cut.second == v) total += w.second;
    }
    return total;
}

void WeightAssignment::set(Edge cut, int w_lo, int w_hi) {
    detail::require(cut.first < cut.second, "cut pair must be normalized");
    detail::require(w_lo >= 0 && w_hi >= 0, "weights must be nonnegative");
    w_[cut] = {w_lo, w_hi};
}

std::vector<N2C> enumerate_n2cs(const Graph& g) {
    detail::require(g.is_connected(), "N2C enumeration needs a connected graph");
    std::vector<N2C> out;
    if (g.n() < 5) return out;  // three nontrivial bridges need three interiors

    // A pair with c(G,uv) > 0 lies in a common block, and c >= 3 forces the
    // block to have at least five vertices; only scan such pairs.
    auto decomp = blocks_and_cutvertices(g);
    for (const auto& b : decomp.blocks) {
        if (b.vertices.size() < 5) continue;
        for (size_t i = 0; i < b.vertices.size(); ++i)
            for (size_t j = i + 1; j < b.vertices.size(); ++j) {
                int u = b.vertices[i], v = b.vertices[j];
                int c = c_pair(g, u, v);
                if (c >= 3) out.push_back(N2C{u, v, c});
            }
    }
    std::sort(out.begin(), out.end(),
              [](const N2C& a, const N2C& b) { return a.pair() < b.pair(); });
    return out;
}

int counting_lower_bound(const Graph& g, const std::vector<N2C>& cuts, const VertexSet& U) {
    detail::require(U.universe() == g.n(), "vertex set universe does not match graph");
    detail::require(!U.empty(), "U must be nonempty");

    auto members = U.to_vector();
    std::vector<int> idx(g.n(), -1);
    for (int i = 0; i < static_cast<int>(members.size()); ++i) idx[members[i]] = i;

    // Edges of J = H1[U]: the given cuts with both endpoints inside U.
    std::vector<std::pair<int, int>> j_edges;
    for (const auto& c : cuts) {
        if (idx[c.u] == -1 || idx[c.v] == -1) continue;
        detail::require(c_pair(g, c.u, c.v) >= 3, "cut list contains a pair that is not an N2C");
        j_edges.emplace_back(idx[c.u], idx[c.v]);
    }

    // J must be connected.
    std::vector<int> comp(members.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (auto [a, b] : j_edges) comp[find(a)] = find(b);
    for (size_t i = 0; i < members.size(); ++i)
        detail::require(find(i) == find(0), "U does not induce a connected cut graph");

    int bound = static_cast<int>(members.size());
    for (const auto& c : cuts)
        if (idx[c.u] != -1 && idx[c.v] != -1) bound += c_pair(g, c.u, c.v) - 2;
    for (int w : members) bound += component_count(g, VertexSet::of(g.n(), {w})) - 1;
    return bound;
}

namespace detail {

void FlowNetwork::add_arc(int from, int to, int cap) {
    adj[from].push_back(Arc{to, cap, 0, static_cast<int>(adj[to].size())});
    adj[to].push_back(Arc{from, 0, 0, static_cast<int>(adj[from].size()) - 1});
}

FlowNetwork build_flow_network(const Graph& g, const DegreeBudget& f,
                               const std::vector<N2C>& cuts) {
    FlowNetwork net;
    std::vector<int> used;
    for (const auto& c : cuts) {
        used.push_back(c.u);
        used.push_back(c.v);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    net.nodes = 2 + static_cast<int>(cuts.size()) + static_cast<int>(used.size());
    net.source = 0;
    net.sink = net.nodes - 1;
    net.adj.assign(net.nodes, {});
    for (int i = 0; i < static_cast<int>(cuts.size()); ++i) net.cut_node.push_back(1 + i);
    for (int i = 0; i < static_cast<int>(used.size()); ++i)
        net.vertex_node[used[i]] = 1 + static_cast<int>(cuts.size()) + i;

    for (const auto& c : cuts) net.total += c.multiplicity - 2;
    for (int i = 0; i < static_cast<int>(cuts.size()); ++i) {
        net.add_arc(net.source, net.cut_node[i], cuts[i].multiplicity - 2);
        net.add_arc(net.cut_node[i], net.vertex_node.at(cuts[i].u), net.total + 1);
        net.add_arc(net.cut_node[i], net.vertex_node.at(cuts[i].v), net.total + 1);
    }
    for (int u : used) {
        int cap = f(u) - component_count(g, VertexSet::of(g.n(), {u})) - 1;
        check(cap >= 0, "sink capacity negative; singleton check missed a violation");
        net.add_arc(net.vertex_node.at(u), net.sink, cap);
    }
    return net;
}

int max_flow(FlowNetwork& net) {
    // Edmonds-Karp; capacities are tiny and all paths have length three.
    int value = 0;
    while (true) {
        std::vector<std::pair<int, int>> prev(net.nodes, {-1, -1});
        std::queue<int> q;
        q.push(net.source);
        prev[net.source] = {net.source, -1};
        while (!q.empty() && prev[net.sink].first == -1) {
            int v = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(net.adj[v].size()); ++i) {
                const auto& a = net.adj[v][i];
                if (a.cap - a.flow <= 0 || prev[a.to].first != -1) continue;
                prev[a.to] = {v, i};
                q.push(a.to);
            }
        }
        if (prev[net.sink].first == -1) break;
        int push = net.total + 1;
        for (int v = net.sink; v != net.source;) {
            auto [pv, pi] = prev[v];
            push = std::min(push, net.adj[pv][pi].cap - net.adj[pv][pi].flow);
            v = pv;
        }
        for (int v = net.sink; v != net.source;) {
            auto [pv, pi] = prev[v];
            auto& a = net.adj[pv][pi];
            a.flow += push;
            net.adj[a.to][a.rev].flow -= push;
            v = pv;
        }
        value += push;
    }
    return value;
}

}  // namespace detail

ConditionOutcome assign_weights(const Graph& g, const DegreeBudget& f) {
    detail::require(g.is_connected(), "weight assignment needs a connected graph");
    detail::require(f.size() == g.n(), "budget size does not match graph");

    // Singleton check first: a vertex whose removal leaves more components
    // than its budget allows is already a certificate.
    for (int v = 0; v < g.n(); ++v) {
        int c = component_count(g, VertexSet::of(g.n(), {v}));
        if (c > f(v) - 1) {
            ViolationCertificate cert{VertexSet::of(g.n(), {v}), c, f(v) - 1};
            detail::check(certificate_is_valid(g, f, cert), "invalid singleton certificate");
            return cert;
        }
    }

    auto cuts = enumerate_n2cs(g);
    auto net = detail::build_flow_network(g, f, cuts);
    int value = detail::max_flow(net);

    if (value == net.total) {
        WeightAssignment w;
        for (int i = 0; i < static_cast<int>(cuts.size()); ++i) {
            int wu = 0, wv = 0;
            for (const auto& a : net.adj[net.cut_node[i]]) {
                if (a.to == net.vertex_node.at(cuts[i].u) && a.cap > 0) wu = a.flow;
                if (a.to == net.vertex_node.at(cuts[i].v) && a.cap > 0) wv = a.flow;
            }
            w.set(cuts[i].pair(), wu, wv);
        }
        detail::check(check_weight_equations(g, f, w).empty(),
                      "flow produced an invalid weight assignment");
        return w;
    }

    // Max flow fell short: the min cut marks cuts and vertices whose demands
    // exceed their budgets.  Source side = nodes reachable in the residual
    // network.
    std::vector<char> reach(net.nodes, 0);
    reach[net.source] = 1;
    std::vector<int> stack{net.source};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& a : net.adj[v])
            if (a.cap - a.flow > 0 && !reach[a.to]) {
                reach[a.to] = 1;
                stack.push_back(a.to);
            }
    }

    std::vector<int> cut_side;  // indices into cuts
    std::vector<int> w1;        // graph vertices on the source side
    for (int i = 0; i < static_cast<int>(cuts.size()); ++i)
        if (reach[net.cut_node[i]]) cut_side.push_back(i);
    for (const auto& [vtx, node] : net.vertex_node)
        if (reach[node]) w1.push_back(vtx);

    // Components of the graph on W1 with the marked cuts as edges; scan in
    // order of smallest vertex id and return the first whose combined demand
    // exceeds its budget.  The pigeonhole argument guarantees one exists.
    std::vector<int> idx(g.n(), -1);
    for (int i = 0; i < static_cast<int>(w1.size()); ++i) idx[w1[i]] = i;
    std::vector<int> comp(w1.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (int i : cut_side) {
        detail::check(idx[cuts[i].u] != -1 && idx[cuts[i].v] != -1,
                      "cut on the source side with an endpoint outside it");
        comp[find(idx[cuts[i].u])] = find(idx[cuts[i].v]);
    }

    // Scan each component once, at its smallest member; w1 is ascending.
    for (int start = 0; start < static_cast<int>(w1.size()); ++start) {
        bool smallest = true;
        for (int j = 0; j < start; ++j)
            if (find(j) == find(start)) {
                smallest = false;
                break;
            }
        if (!smallest) continue;

        VertexSet U(g.n());
        int lhs = 0, rhs = 0;
        for (int j = 0; j < static_cast<int>(w1.size()); ++j) {
            if (find(j) != find(start)) continue;
            int vtx = w1[j];
            U.insert(vtx);
            lhs += component_count(g, VertexSet::of(g.n(), {vtx})) - 1;
            rhs += f(vtx) - 2;
        }
        for (int i : cut_side)
            if (U.contains(cuts[i].u) && U.contains(cuts[i].v)) lhs += cuts[i].multiplicity - 2;
        if (lhs > rhs) {
            ViolationCertificate cert;
            cert.U = U;
            cert.observed = component_count(g, U);
            cert.budget = 0;
            for (int vtx : U.to_vector()) cert.budget += f(vtx) - 1;
            detail::check(certificate_is_valid(g, f, cert),
                          "min-cut component does not violate the condition");
            return cert;
        }
    }
    throw internal_error("min cut produced no violating component");
}

std::vector<std::string> check_weight_equations(const Graph& g, const DegreeBudget& f,
                                                const WeightAssignment& w) {
    std::vector<std::string> issues;
    auto cuts = enumerate_n2cs(g);

    std::map<Edge, int> mult;
    for (const auto& c : cuts) mult[c.pair()] = c.multiplicity;
    for (const auto& [cut, ws] : w.entries())
        if (!mult.count(cut))
            issues.push_back("weight entry for a pair that is not an N2C: (" +
                             std::to_string(cut.first) + "," + std::to_string(cut.second) + ")");

    for (const auto& c : cuts) {
        int wu, wv;
        try {
            wu = w.at(c.pair(), c.u);
            wv = w.at(c.pair(), c.v);
        } catch (const input_error&) {
            issues.push_back("missing weight entry for N2C (" + std::to_string(c.u) + "," +
                             std::to_string(c.v) + ")");
            continue;
        }
        if (wu + wv != c.multiplicity - 2)
            issues.push_back("pair equation violated at (" + std::to_string(c.u) + "," +
                             std::to_string(c.v) + ")");
    }
    for (int v = 0; v < g.n(); ++v) {
        int cap = f(v) - component_count(g, VertexSet::of(g.n(), {v})) - 1;
        if (w.total_at(v) > cap)
            issues.push_back("vertex budget violated at " + std::to_string(v));
    }
    return issues;
}

bool certificate_is_valid(const Graph& g, const DegreeBudget& f, const ViolationCertificate& c) {
    if (c.U.universe() != g.n() || c.U.empty()) return false;
    int observed = component_count(g, c.U);
    int budget = 0;
    for (int v : c.U.to_vector()) budget += f(v) - 1;
    return observed == c.observed && budget == c.budget && observed > budget;
}

}  // namespace spantree
