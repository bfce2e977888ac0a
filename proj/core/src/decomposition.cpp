#include "spantree/decomposition.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace spantree {

bool BlockDecomposition::Block::contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool BlockDecomposition::Block::contains_edge(Edge e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

int BlockDecomposition::block_with_pair(int u, int v) const {
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (blocks[i].contains_vertex(u) && blocks[i].contains_vertex(v)) return i;
    return -1;
}

std::vector<int> BlockDecomposition::blocks_at(int v) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (blocks[i].contains_vertex(v)) out.push_back(i);
    return out;
}

BlockDecomposition blocks_and_cutvertices(const Graph& g) {
    detail::require(g.n() >= 2, "block decomposition needs at least two vertices");
    detail::require(g.is_connected(), "block decomposition needs a connected graph");

    const int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> raw_blocks;
    VertexSet cut(n);
    int timer = 0;

    // Hopcroft-Tarjan lowpoint DFS with an explicit edge stack.
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (w == parent) {
                parent = -2;  // skip the tree edge back to the parent exactly once
                continue;
            }
            if (disc[w] == -1) {
                ++children;
                edge_stack.push_back(make_edge(v, w));
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if ((disc[v] == 0 && children > 1) || (disc[v] > 0 && low[w] >= disc[v])) {
                    cut.insert(v);
                }
                if (low[w] >= disc[v]) {
                    // v closes a block; pop it off the stack.
                    std::vector<Edge> blk;
                    Edge top = make_edge(v, w);
                    while (true) {
                        Edge e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e);
                        if (e == top) break;
                    }
                    raw_blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(make_edge(v, w));
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    dfs(0, -1);
    detail::check(edge_stack.empty(), "block DFS left edges unassigned");

    BlockDecomposition out;
    out.cutvertices = cut;
    for (auto& blk : raw_blocks) {
        BlockDecomposition::Block b;
        std::sort(blk.begin(), blk.end());
        b.edges = std::move(blk);
        std::set<int> vs;
        for (auto [u, v] : b.edges) {
            vs.insert(u);
            vs.insert(v);
        }
        b.vertices.assign(vs.begin(), vs.end());
        out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
    for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i)
        for (Edge e : out.blocks[i].edges) out.block_of_edge[e] = i;
    return out;
}

std::pair<int, int> find_special_edge(const Graph& g, const BlockDecomposition::Block& b, int x) {
    detail::require(b.contains_vertex(x), "vertex not in block");
    for (int y : g.neighbors(x)) {
        if (!b.contains_edge(make_edge(x, y))) continue;
        if (c_pair(g, x, y) <= 1) return {x, y};
    }
    // Guaranteed to exist for every block and every vertex of it.
    throw internal_error("no special edge found at vertex " + std::to_string(x));
}

namespace {

// Candidate outer cycle of a 2-connected graph with >= 3 vertices.
// For n >= 4 an edge is on the outer cycle iff removing its endpoints
// leaves the graph connected (chords are exactly the 2-separators);
// a triangle is its own cycle.  Returns the stitched cycle or nullopt
// when the selected edges do not form one.
std::optional<std::vector<int>> try_outer_cycle(const Graph& g) {
    const int n = g.n();
    if (n < 3) return std::nullopt;

    std::vector<std::vector<int>> sel(n);
    for (auto [u, v] : g.edges()) {
        bool on_cycle;
        if (n == 3) {
            on_cycle = true;
        } else {
            on_cycle = component_count(g, VertexSet::of(n, {u, v})) == 1;
        }
        if (on_cycle) {
            sel[u].push_back(v);
            sel[v].push_back(u);
        }
    }
    for (int v = 0; v < n; ++v)
        if (sel[v].size() != 2) return std::nullopt;

    std::vector<int> cycle{0};
    int prev = -1, cur = 0;
    // Deterministic orientation: leave vertex 0 toward its smaller selected neighbor.
    int next = std::min(sel[0][0], sel[0][1]);
    while (next != 0) {
        cycle.push_back(next);
        prev = cur;
        cur = next;
        next = sel[cur][0] == prev ? sel[cur][1] : sel[cur][0];
    }
    if (static_cast<int>(cycle.size()) != n) return std::nullopt;
    return cycle;
}

// With cycle positions fixed, two chords cross iff exactly one endpoint of
// one lies strictly between the endpoints of the other.
bool chords_cross_free(const Graph& g, const std::vector<int>& cycle) {
    const int n = g.n();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[cycle[i]] = i;
    std::vector<std::pair<int, int>> chords;
    for (auto [u, v] : g.edges()) {
        int a = pos[u], b = pos[v];
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1)) continue;  // cycle edge
        chords.emplace_back(a, b);
    }
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            bool c_in = a < c && c < b;
            bool d_in = a < d && d < b;
            if (c_in != d_in) return false;
        }
    return true;
}

bool block_graph_outerplanar(const Graph& bg) {
    if (bg.n() <= 2) return true;
    auto cyc = try_outer_cycle(bg);
    if (!cyc) return false;
    return chords_cross_free(bg, *cyc);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int start = 0; start < g.n(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        seen[start] = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Series-parallel reduction on a scratch multigraph.  True iff the block
// collapses to a single edge.
bool sp_reduces(const Graph& block_graph) {
    const int n = block_graph.n();
    if (n <= 2) return true;

    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (auto [u, v] : block_graph.edges()) mult[u][v] = mult[v][u] = 1;
    std::vector<char> alive(n, 1);
    int alive_count = n;

    auto degree = [&](int v) {
        int d = 0;
        for (int w = 0; w < n; ++w)
            if (alive[w]) d += mult[v][w];
        return d;
    };

    while (alive_count > 2) {
        bool merged = false;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (alive[u] && alive[v] && mult[u][v] > 1) {
                    mult[u][v] = mult[v][u] = 1;
                    merged = true;
                }
        if (merged) continue;

        int w = -1;
        for (int v = 0; v < n && w == -1; ++v)
            if (alive[v] && degree(v) == 2) w = v;
        if (w == -1) return false;

        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && mult[w][v] > 0) (a == -1 ? a : b) = v;
        detail::check(a != -1 && b != -1 && a != b, "degree-2 suppression lost a neighbor");
        mult[w][a] = mult[a][w] = 0;
        mult[w][b] = mult[b][w] = 0;
        ++mult[a][b];
        ++mult[b][a];
        alive[w] = 0;
        --alive_count;
    }
    return true;
}

}  // namespace

bool is_outerplanar(const Graph& g) {
    if (g.n() <= 1) return true;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() <= 2) continue;
        auto sub = induced_on(g, comp);
        for (const auto& b : blocks_and_cutvertices(sub.graph).blocks) {
            if (b.vertices.size() <= 2) continue;
            if (!block_graph_outerplanar(induced_on(sub.graph, b.vertices).graph)) return false;
        }
    }
    return true;
}

OuterCycle outer_hamiltonian_cycle(const Graph& g) {
    detail::require(g.n() >= 3, "outer cycle needs at least three vertices");
    detail::require(g.is_connected(), "outer cycle needs a connected graph");
    detail::require(blocks_and_cutvertices(g).blocks.size() == 1,
                    "outer cycle needs a 2-connected graph");
    auto cyc = try_outer_cycle(g);
    detail::require(cyc.has_value() && chords_cross_free(g, *cyc),
                    "graph is not outerplanar");
    return OuterCycle{*cyc};
}

bool is_k4_minor_free(const Graph& g) {
    if (g.n() <= 2) return true;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() <= 2) continue;
        auto sub = induced_on(g, comp);
        for (const auto& b : blocks_and_cutvertices(sub.graph).blocks) {
            if (b.vertices.size() <= 2) continue;
            if (!sp_reduces(induced_on(sub.graph, b.vertices).graph)) return false;
        }
    }
    return true;
}

RootedBlockTree root_block_tree(const Graph& g, std::pair<int, int> root_edge) {
    return root_block_tree(g, root_edge,
                           [](const BlockDecomposition&, int, int) -> std::pair<int, int> {
                               return {-1, -1};
                           });
}

RootedBlockTree root_block_tree(const Graph& g, std::pair<int, int> root_edge,
                                const SpecialEdgeChooser& choose_special) {
    detail::require(g.has_edge(root_edge.first, root_edge.second), "root edge not in graph");

    RootedBlockTree t;
    t.blocks = blocks_and_cutvertices(g);
    auto it = t.blocks.block_of_edge.find(make_edge(root_edge.first, root_edge.second));
    detail::check(it != t.blocks.block_of_edge.end(), "root edge missing from block map");
    t.root_block = it->second;

    const int nb = static_cast<int>(t.blocks.blocks.size());
    t.parent_vertex.assign(nb, -1);
    t.special.assign(nb, {-1, -1});
    t.special[t.root_block] = root_edge;

    // BFS over the block-cutvertex structure from the root block.
    std::vector<char> visited(nb, 0);
    visited[t.root_block] = 1;
    std::vector<int> queue{t.root_block};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int b = queue[qi];
        for (int v : t.blocks.blocks[b].vertices) {
            if (!t.blocks.cutvertices.contains(v)) continue;
            for (int b2 : t.blocks.blocks_at(v)) {
                if (visited[b2]) continue;
                visited[b2] = 1;
                t.parent_vertex[b2] = v;
                queue.push_back(b2);
            }
        }
    }
    detail::check(static_cast<int>(queue.size()) == nb, "block tree BFS missed a block");

    for (int b = 0; b < nb; ++b) {
        if (b == t.root_block) continue;
        auto sp = choose_special(t.blocks, b, t.parent_vertex[b]);
        if (sp.first < 0) sp = find_special_edge(g, t.blocks.blocks[b], t.parent_vertex[b]);
        t.special[b] = sp;
    }
    return t;
}

}  // namespace spantree
