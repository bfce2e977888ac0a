#include "spantree/tree_builder.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace spantree {

bool SpanningTree::contains(Edge e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

int ClosedWalk::max_repeats() const {
    std::map<int, int> count;
    for (int v : sequence) ++count[v];
    int best = 0;
    for (const auto& [v, c] : count) best = std::max(best, c);
    return best;
}

namespace {

int singleton_components(const Graph& g, int v) {
    return component_count(g, VertexSet::of(g.n(), {v}));
}

// Union-find based sanity check: n-1 edges, all in G, no cycle.
void check_spanning(const Graph& g, const SpanningTree& t) {
    detail::check(static_cast<int>(t.edges.size()) == g.n() - 1, "tree has wrong edge count");
    std::vector<int> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : t.edges) {
        detail::check(g.has_edge(u, v), "tree edge is not a graph edge");
        int a = find(u), b = find(v);
        detail::check(a != b, "tree contains a cycle");
        parent[a] = b;
    }
}

// Invariants of a build instance, re-established at every recursion level.
// Children are constructed to satisfy these; a failure here means the
// bookkeeping of a split went wrong.
void validate_instance(const BuildInstance& inst, const std::vector<N2C>& cuts) {
    const Graph& g = inst.g;
    detail::require(g.n() >= 2, "build needs at least two vertices");
    detail::require(g.is_connected(), "build needs a connected graph");
    detail::require(inst.f.size() == g.n(), "budget size does not match graph");
    detail::require(is_k4_minor_free(g), "build needs a K4-minor-free graph");

    const auto& rt = inst.rooted;
    const int nb = static_cast<int>(rt.blocks.blocks.size());
    detail::require(nb > 0 && static_cast<int>(rt.special.size()) == nb &&
                        static_cast<int>(rt.parent_vertex.size()) == nb,
                    "rooted block tree is incomplete");
    detail::require(rt.root_block >= 0 && rt.root_block < nb, "root block out of range");
    for (int b = 0; b < nb; ++b) {
        auto [r, s] = rt.special[b];
        detail::require(r >= 0 && s >= 0 && g.has_edge(r, s), "special edge is not a graph edge");
        auto it = rt.blocks.block_of_edge.find(make_edge(r, s));
        detail::require(it != rt.blocks.block_of_edge.end() && it->second == b,
                        "special edge lies outside its block");
        detail::require(c_pair(g, r, s) <= 1, "special edge has two or more bridges");
        if (b != rt.root_block)
            detail::require(r == rt.parent_vertex[b],
                            "special edge must start at the block's root vertex");
    }

    // Weight equations: each cut's weights sum to c(G,F)-2, and each
    // vertex's incident weights plus its cut components fit under f(v)-2.
    std::map<Edge, int> mult;
    for (const auto& c : cuts) mult[c.pair()] = c.multiplicity;
    for (const auto& [cut, w] : inst.omega.entries())
        detail::require(mult.count(cut) > 0, "weight entry for a pair that is not an N2C");
    for (const auto& c : cuts) {
        int wu = inst.omega.at(c.pair(), c.u);
        int wv = inst.omega.at(c.pair(), c.v);
        detail::require(wu + wv == c.multiplicity - 2, "cut weight equation violated");
    }
    for (int v = 0; v < g.n(); ++v)
        detail::require(
            inst.omega.total_at(v) + singleton_components(g, v) - 1 <= inst.f(v) - 2,
            "vertex weight equation violated at vertex " + std::to_string(v));

    for (Edge e : inst.virtual_edges)
        detail::require(g.has_edge(e.first, e.second), "virtual edge missing from graph");
}

// No nontrivial 2-cut: every block is outerplanar.  Blocks with a cut edge
// contribute that edge; 2-connected blocks contribute their outer
// Hamiltonian cycle minus the special edge.
SpanningTree case_no_cuts(const BuildInstance& inst) {
    const Graph& g = inst.g;
    std::set<Edge> tree;
    const int nb = static_cast<int>(inst.rooted.blocks.blocks.size());
    for (int b = 0; b < nb; ++b) {
        auto [r, s] = inst.rooted.special[b];
        const auto& blk = inst.rooted.blocks.blocks[b];
        int c = c_pair(g, r, s);
        if (c == 0) {
            detail::check(blk.edges.size() == 1, "0-bridge special edge in a non-edge block");
            tree.insert(make_edge(r, s));
            continue;
        }
        detail::check(c == 1, "special edge with c >= 2 reached the no-cut case");
        auto sub = induced_on(g, blk.vertices);
        auto cycle = outer_hamiltonian_cycle(sub.graph);
        const int len = static_cast<int>(cycle.order.size());
        const Edge drop = make_edge(r, s);
        bool dropped = false;
        for (int i = 0; i < len; ++i) {
            int a = sub.to_parent[cycle.order[i]];
            int bb = sub.to_parent[cycle.order[(i + 1) % len]];
            Edge e = make_edge(a, bb);
            if (e == drop) {
                dropped = true;
                continue;
            }
            tree.insert(e);
        }
        detail::check(dropped, "special edge missing from the outer cycle");
    }
    SpanningTree t;
    t.edges.assign(tree.begin(), tree.end());
    check_spanning(g, t);
    return t;
}

// One side of a split: the subgraph on a vertex list plus the edge xy,
// with its cuts listed both in local and in parent ids.
struct SubGraph {
    Graph g;
    std::vector<int> to_parent;
    std::vector<int> to_local;
    Edge local_xy;
    std::set<Edge> virtuals;
    std::vector<N2C> cuts;         // local ids
    std::vector<N2C> cuts_parent;  // parent ids, index-aligned with cuts
};

SubGraph make_subgraph(const BuildInstance& inst, const std::vector<int>& vertices, int x,
                       int y) {
    SubGraph s;
    s.to_parent = vertices;  // ascending
    s.to_local.assign(inst.g.n(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) s.to_local[vertices[i]] = i;
    detail::check(s.to_local[x] != -1 && s.to_local[y] != -1, "cut endpoints left out of a side");

    std::vector<Edge> es;
    for (int v : vertices)
        for (int w : inst.g.neighbors(v))
            if (v < w && s.to_local[w] != -1) es.push_back(make_edge(s.to_local[v], s.to_local[w]));
    s.local_xy = make_edge(s.to_local[x], s.to_local[y]);
    const bool xy_real = inst.g.has_edge(x, y);
    if (!xy_real) es.push_back(s.local_xy);
    s.g = Graph(static_cast<int>(vertices.size()), es);

    for (Edge e : inst.virtual_edges)
        if (s.to_local[e.first] != -1 && s.to_local[e.second] != -1)
            s.virtuals.insert(make_edge(s.to_local[e.first], s.to_local[e.second]));
    if (!xy_real) s.virtuals.insert(s.local_xy);

    s.cuts = enumerate_n2cs(s.g);
    for (const auto& c : s.cuts) {
        // to_parent is ascending, so local order equals parent order.
        s.cuts_parent.push_back(N2C{s.to_parent[c.u], s.to_parent[c.v], c.multiplicity});
    }
    return s;
}

// Rooted block tree of a side, special edges inherited from the parent:
// any real edge of a non-root block identifies its parent block, whose
// special edge carries over unchanged.
RootedBlockTree inherit_rooted(const BuildInstance& inst, const SubGraph& s,
                               std::pair<int, int> local_root_edge) {
    return root_block_tree(
        s.g, local_root_edge,
        [&](const BlockDecomposition& dec, int blk, int root_vertex) -> std::pair<int, int> {
            for (Edge le : dec.blocks[blk].edges) {
                Edge pe = make_edge(s.to_parent[le.first], s.to_parent[le.second]);
                auto it = inst.rooted.blocks.block_of_edge.find(pe);
                if (it == inst.rooted.blocks.block_of_edge.end()) continue;  // the added edge
                auto [r, ss] = inst.rooted.special[it->second];
                int lr = s.to_local[r], ls = s.to_local[ss];
                detail::check(lr != -1 && ls != -1, "inherited special edge lost an endpoint");
                detail::check(lr == root_vertex, "inherited special edge starts off-root");
                detail::check(c_pair(s.g, lr, ls) == c_pair(inst.g, r, ss),
                              "special edge bridge count changed across the split");
                return {lr, ls};
            }
            throw internal_error("no inheritable edge in a split-side block");
        });
}

SpanningTree build_impl(const BuildInstance& inst);

// Split at the lexicographically smallest nontrivial 2-cut {x,y}: peel off
// one admissible {x,y}-bridge D as its own subproblem rooted at the edge
// xy, solve the remainder with the original root, then merge the two trees
// and delete one edge of the cycle they close at y.
SpanningTree case_split(const BuildInstance& inst, const std::vector<N2C>& cuts) {
    const Graph& g = inst.g;
    const int n = g.n();
    const N2C target = cuts.front();

    const int m = inst.rooted.blocks.block_with_pair(target.u, target.v);
    detail::check(m >= 0, "cut endpoints share no block");
    auto [r0, s0] = inst.rooted.special[inst.rooted.root_block];
    auto [rm, sm] = inst.rooted.special[m];

    // Admissible bridges: nontrivial, attached at both endpoints, and not
    // containing the root edge or the block's special edge (an edge lies in
    // a bridge iff one of its endpoints is interior).  At least one of the
    // >= 3 bridges survives the two exclusions.
    auto rep = bridges(g, VertexSet::of(n, {target.u, target.v}));
    int chosen = -1, chosen_min = n;
    for (int i = 0; i < static_cast<int>(rep.bridges.size()); ++i) {
        const auto& b = rep.bridges[i];
        if (b.trivial) continue;
        if (!b.attachments.contains(target.u) || !b.attachments.contains(target.v)) continue;
        if (b.vertices.contains(r0) || b.vertices.contains(s0) || b.vertices.contains(rm) ||
            b.vertices.contains(sm))
            continue;
        int mn = b.vertices.to_vector().front();
        if (mn < chosen_min) {
            chosen_min = mn;
            chosen = i;
        }
    }
    detail::check(chosen >= 0, "no admissible bridge at the chosen cut");
    const Bridge& D = rep.bridges[chosen];

    // Orient the cut so at least one unit of weight sits at x.
    int x = target.u, y = target.v;
    if (inst.omega.at(target.pair(), x) < 1) {
        std::swap(x, y);
        detail::check(inst.omega.at(target.pair(), x) >= 1, "cut carries no weight at all");
    }

    std::map<Edge, int> parent_mult;
    for (const auto& c : cuts) parent_mult[c.pair()] = c.multiplicity;

    // ----- D side: G2 = D + xy, rooted at xy -----
    std::vector<int> v2 = D.vertices.to_vector();
    v2.push_back(x);
    v2.push_back(y);
    std::sort(v2.begin(), v2.end());
    SubGraph s2 = make_subgraph(inst, v2, x, y);
    detail::check(static_cast<int>(v2.size()) < n, "D side failed to shrink");
    detail::check(c_pair(s2.g, s2.local_xy.first, s2.local_xy.second) == 1,
                  "peeled bridge does not make xy a 1-bridge pair");

    int sum_x = 0, sum_y = 0;  // weight already committed to x resp. y inside D
    WeightAssignment omega2;
    for (size_t i = 0; i < s2.cuts.size(); ++i) {
        const auto& pc = s2.cuts_parent[i];
        detail::check(pc.pair() != target.pair(), "split cut survived on the D side");
        auto it = parent_mult.find(pc.pair());
        detail::check(it != parent_mult.end() && it->second == pc.multiplicity,
                      "D-side cut changed multiplicity");
        int wu = inst.omega.at(pc.pair(), pc.u);
        int wv = inst.omega.at(pc.pair(), pc.v);
        omega2.set(s2.cuts[i].pair(), wu, wv);
        if (pc.u == x) sum_x += wu;
        if (pc.v == x) sum_x += wv;
        if (pc.u == y) sum_y += wu;
        if (pc.v == y) sum_y += wv;
    }

    std::vector<int> f2(v2.size());
    for (int i = 0; i < static_cast<int>(v2.size()); ++i) f2[i] = inst.f(v2[i]);
    f2[s2.to_local[x]] = sum_x + 2;
    f2[s2.to_local[y]] = sum_y + 2;

    BuildInstance child2{s2.g, DegreeBudget(f2), omega2,
                         inherit_rooted(inst, s2, {s2.to_local[x], s2.to_local[y]}),
                         s2.virtuals};

    // ----- remainder side: G1 = G - interior(D) + xy, original root -----
    std::vector<int> v1;
    for (int v = 0; v < n; ++v)
        if (!D.vertices.contains(v)) v1.push_back(v);
    SubGraph s1 = make_subgraph(inst, v1, x, y);
    detail::check(static_cast<int>(v1.size()) < n, "remainder failed to shrink");
    detail::check(c_pair(s1.g, s1.local_xy.first, s1.local_xy.second) == target.multiplicity - 1,
                  "remainder lost a wrong number of bridges at the cut");

    WeightAssignment omega1;
    for (size_t i = 0; i < s1.cuts.size(); ++i) {
        const auto& pc = s1.cuts_parent[i];
        int wu, wv;
        if (pc.pair() == target.pair()) {
            detail::check(pc.multiplicity == target.multiplicity - 1,
                          "surviving split cut has a wrong multiplicity");
            wu = inst.omega.at(pc.pair(), pc.u);
            wv = inst.omega.at(pc.pair(), pc.v);
            if (pc.u == x)
                --wu;
            else
                --wv;
            detail::check(wu >= 0 && wv >= 0, "split made a cut weight negative");
        } else {
            auto it = parent_mult.find(pc.pair());
            detail::check(it != parent_mult.end() && it->second == pc.multiplicity,
                          "remainder cut changed multiplicity");
            wu = inst.omega.at(pc.pair(), pc.u);
            wv = inst.omega.at(pc.pair(), pc.v);
        }
        omega1.set(s1.cuts[i].pair(), wu, wv);
    }

    // Every cut except the split one lands on exactly one side.
    {
        std::set<Edge> seen;
        for (const auto& pc : s1.cuts_parent)
            if (pc.pair() != target.pair()) seen.insert(pc.pair());
        for (const auto& pc : s2.cuts_parent) {
            detail::check(seen.count(pc.pair()) == 0, "cut appears on both sides of the split");
            seen.insert(pc.pair());
        }
        for (const auto& c : cuts)
            if (c.pair() != target.pair())
                detail::check(seen.count(c.pair()) > 0, "cut vanished in the split");
    }

    std::vector<int> f1(v1.size());
    for (int i = 0; i < static_cast<int>(v1.size()); ++i) f1[i] = inst.f(v1[i]);
    f1[s1.to_local[x]] = inst.f(x) - 1 - sum_x;
    f1[s1.to_local[y]] = inst.f(y) - sum_y;
    detail::check(f1[s1.to_local[x]] >= 2 && f1[s1.to_local[y]] >= 2,
                  "split budget dropped below 2");

    detail::check(s1.to_local[r0] != -1 && s1.to_local[s0] != -1,
                  "root edge lost in the remainder");
    BuildInstance child1{s1.g, DegreeBudget(f1), omega1,
                         inherit_rooted(inst, s1, {s1.to_local[r0], s1.to_local[s0]}),
                         s1.virtuals};

    // ----- recurse and merge -----
    auto lift = [](const SpanningTree& t, const std::vector<int>& to_parent) {
        SpanningTree out;
        for (auto [u, v] : t.edges) out.edges.push_back(make_edge(to_parent[u], to_parent[v]));
        std::sort(out.edges.begin(), out.edges.end());
        return out;
    };
    SpanningTree t2 = lift(build_impl(child2), s2.to_parent);
    SpanningTree t1 = lift(build_impl(child1), s1.to_parent);

    const Edge xy = target.pair();
    detail::check(!t2.contains(xy), "xy entered the D-side tree despite its membership rule");

    std::set<Edge> merged(t1.edges.begin(), t1.edges.end());
    for (Edge e : t2.edges) {
        detail::check(merged.insert(e).second, "split sides share a tree edge");
    }

    Edge removed;
    if (t1.contains(xy)) {
        // The cycle through x and y uses xy itself; drop it (it may not even
        // be an edge of the original graph).
        removed = xy;
    } else {
        // Drop the edge of the D-side tree's xy-path incident with y.
        std::map<int, std::vector<int>> adj;
        for (auto [u, v] : t2.edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::map<int, int> prev;
        std::vector<int> stack{x};
        prev[x] = x;
        while (!stack.empty() && prev.find(y) == prev.end()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (prev.find(w) == prev.end()) {
                    prev[w] = v;
                    stack.push_back(w);
                }
        }
        detail::check(prev.count(y) > 0, "no xy-path in the D-side tree");
        removed = make_edge(prev[y], y);
    }
    detail::check(merged.erase(removed) == 1, "merge deletion edge missing");

    SpanningTree t;
    t.edges.assign(merged.begin(), merged.end());
    check_spanning(g, t);
    return t;
}

SpanningTree build_impl(const BuildInstance& inst) {
    auto cuts = enumerate_n2cs(inst.g);
    validate_instance(inst, cuts);
    if (inst.g.n() == 2) {
        Edge e = make_edge(0, 1);
        detail::check(inst.virtual_edges.count(e) == 0, "two-vertex base case on a virtual edge");
        return SpanningTree{{e}};
    }
    if (cuts.empty()) return case_no_cuts(inst);
    return case_split(inst, cuts);
}

}  // namespace

SpanningTree build(const BuildInstance& instance) { return build_impl(instance); }

TreeOutcome build_degree_bounded_tree(const Graph& g, const DegreeBudget& f,
                                      std::optional<int> at) {
    detail::require(g.n() >= 1, "graph must have at least one vertex");
    detail::require(f.size() == g.n(), "budget size does not match graph");
    detail::require(g.is_connected(), "graph must be connected");
    detail::require(is_k4_minor_free(g), "graph must be K4-minor-free");
    const int x = at.value_or(0);
    detail::require(x >= 0 && x < g.n(), "chosen vertex out of range");

    if (g.n() == 1) {
        TreeResult res;
        res.marked = VertexSet::of(1, {0});
        return res;
    }

    auto outcome = assign_weights(g, f);
    if (std::holds_alternative<ViolationCertificate>(outcome))
        return std::get<ViolationCertificate>(outcome);
    auto omega = std::get<WeightAssignment>(std::move(outcome));

    auto decomp = blocks_and_cutvertices(g);
    auto at_blocks = decomp.blocks_at(x);
    detail::check(!at_blocks.empty(), "vertex belongs to no block");
    auto root_edge = find_special_edge(g, decomp.blocks[at_blocks.front()], x);

    BuildInstance inst{g, f, std::move(omega), root_block_tree(g, root_edge), {}};
    TreeResult res;
    res.tree = build(inst);
    res.marked = VertexSet(g.n());
    res.marked.insert(root_edge.first);
    for (const auto& [r, s] : inst.rooted.special) res.marked.insert(s);
    for (const auto& sp : inst.rooted.special)
        res.special_edges.push_back(RsEdge{sp, c_pair(g, sp.first, sp.second)});

    auto issues = verify_tree(g, f, res.tree, res.marked, res.special_edges);
    detail::check(issues.empty(), "built tree failed verification");
    return res;
}

ClosedWalk tree_to_walk(const Graph& g, const SpanningTree& t) {
    detail::require(static_cast<int>(t.edges.size()) == g.n() - 1,
                    "not a spanning tree: wrong edge count");
    std::vector<std::vector<int>> adj(g.n());
    {
        std::vector<int> parent(g.n());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [u, v] : t.edges) {
            detail::require(g.has_edge(u, v), "not a spanning tree: edge outside the graph");
            int a = find(u), b = find(v);
            detail::require(a != b, "not a spanning tree: contains a cycle");
            parent[a] = b;
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    if (g.n() == 1) return ClosedWalk{{0}};
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    ClosedWalk walk;
    std::function<void(int, int)> euler = [&](int v, int parent) {
        walk.sequence.push_back(v);
        for (int w : adj[v])
            if (w != parent) {
                euler(w, v);
                walk.sequence.push_back(v);
            }
    };
    euler(0, -1);
    walk.sequence.pop_back();  // the closing return to the start is implicit
    return walk;
}

std::vector<std::string> verify_tree(const Graph& g, const DegreeBudget& f,
                                     const SpanningTree& t, const VertexSet& marked,
                                     const std::vector<RsEdge>& rs_edges) {
    std::vector<std::string> issues;
    const int n = g.n();

    bool edges_ok = true;
    for (auto [u, v] : t.edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v)) {
            issues.push_back("tree edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not a graph edge");
            edges_ok = false;
        }
    }
    if (static_cast<int>(t.edges.size()) != n - 1)
        issues.push_back("tree has " + std::to_string(t.edges.size()) + " edges, expected " +
                         std::to_string(n - 1));

    if (edges_ok) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int components = n;
        for (auto [u, v] : t.edges) {
            int a = find(u), b = find(v);
            if (a == b) {
                issues.push_back("tree contains a cycle through (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
            } else {
                parent[a] = b;
                --components;
            }
        }
        if (components != 1)
            issues.push_back("tree is not spanning: " + std::to_string(components) +
                             " components");

        std::vector<int> deg(n, 0);
        for (auto [u, v] : t.edges) {
            ++deg[u];
            ++deg[v];
        }
        for (int v = 0; v < n; ++v) {
            if (f.size() == n && deg[v] > f(v))
                issues.push_back("degree bound violated at " + std::to_string(v) + ": " +
                                 std::to_string(deg[v]) + " > " + std::to_string(f(v)));
        }
        if (marked.universe() == n) {
            for (int v : marked.to_vector())
                if (f.size() == n && deg[v] > f(v) - 1)
                    issues.push_back("marked bound violated at " + std::to_string(v) + ": " +
                                     std::to_string(deg[v]) + " > " + std::to_string(f(v) - 1));
        } else {
            issues.push_back("marked set universe does not match graph");
        }
    }

    for (const auto& rs : rs_edges) {
        Edge e = make_edge(rs.edge.first, rs.edge.second);
        bool in_tree = t.contains(e);
        if (rs.c_value == 0 && !in_tree)
            issues.push_back("special edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ") with c=0 missing from tree");
        if (rs.c_value == 1 && in_tree)
            issues.push_back("special edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ") with c=1 present in tree");
    }
    return issues;
}

}  // namespace spantree
