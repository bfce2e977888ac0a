#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

/// Blocks (maximal 2-connected subgraphs or single edges) and cutvertices
/// of a connected graph.  Every edge lies in exactly one block; two blocks
/// share at most one vertex, and shared vertices are exactly the
/// cutvertices.
struct BlockDecomposition {
    struct Block {
        std::vector<int> vertices;  // ascending
        std::vector<Edge> edges;    // sorted
        bool contains_vertex(int v) const;
        bool contains_edge(Edge e) const;
    };

    std::vector<Block> blocks;  // sorted by vertex list
    VertexSet cutvertices;
    std::map<Edge, int> block_of_edge;

    /// Index of the unique block containing both u and v, or -1.
    int block_with_pair(int u, int v) const;
    /// Ascending indices of blocks containing v.
    std::vector<int> blocks_at(int v) const;
};

BlockDecomposition blocks_and_cutvertices(const Graph& g);

/// The first edge xy of block `b` incident with x (ascending y) for which
/// c(G,xy) <= 1.  Such an edge always exists; failure to find one is a bug.
std::pair<int, int> find_special_edge(const Graph& g, const BlockDecomposition::Block& b, int x);

/// True iff the graph has neither a K4 minor nor a K2,3 minor.
bool is_outerplanar(const Graph& g);

/// The unique Hamiltonian cycle of a 2-connected outerplanar graph.
/// Canonical orientation: starts at vertex 0, smaller neighbor first.
struct OuterCycle {
    std::vector<int> order;
};
OuterCycle outer_hamiltonian_cycle(const Graph& g);

/// True iff no block of the graph contains a K4 minor, decided per block by
/// series-parallel reduction (suppress degree-2 vertices, merge the
/// resulting parallel edges; a block reduces to a single edge iff it is
/// series-parallel).
bool is_k4_minor_free(const Graph& g);

/// Block tree rooted at the block containing a chosen root edge.  Each
/// non-root block records its parent cutvertex r and an ordered special
/// edge (r, s) with c(G, rs) <= 1; the root block's special edge is the
/// root edge itself.
struct RootedBlockTree {
    BlockDecomposition blocks;
    int root_block = -1;
    std::vector<int> parent_vertex;             // -1 for the root block
    std::vector<std::pair<int, int>> special;   // ordered (r, s) per block
};

RootedBlockTree root_block_tree(const Graph& g, std::pair<int, int> root_edge);

/// Same, but special edges of non-root blocks come from the supplied
/// chooser (used when a caller inherits them from a larger graph).
using SpecialEdgeChooser = std::function<std::pair<int, int>(
    const BlockDecomposition& blocks, int block, int root_vertex)>;
RootedBlockTree root_block_tree(const Graph& g, std::pair<int, int> root_edge,
                                const SpecialEdgeChooser& choose_special);

}  // namespace spantree
