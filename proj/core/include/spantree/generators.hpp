#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/weights.hpp"

namespace spantree {

struct LabeledGraph {
    Graph graph;
    std::map<std::string, int> labels;  // injective
};

/// Vertices whose neighborhood induces a clique.
std::vector<int> simplicial_vertices(const Graph& g);

/// Triangle xyz with fx-1, fy-1, fz-1 pendant leaves at x, y, z; budgets
/// fx, fy, fz on the corners and 2 on every leaf.  For all such budgets the
/// graph satisfies the component condition with one unit of slack yet has
/// no tree meeting the budgets, which is what makes the condition tight.
std::pair<LabeledGraph, DegreeBudget> triangle_pendants(int fx, int fy, int fz);

/// Attach f(v)-2 pendant leaves to each vertex; leaves get budget 2.
std::pair<Graph, DegreeBudget> pendant_augment(const Graph& g, const DegreeBudget& f);

/// The 15-vertex 1-tough nonhamiltonian maximal planar graph with corner
/// labels A, B, C.  Its seven simplicial vertices are ids 8..14.
LabeledGraph dillencourt_t();

/// Iterated substitution: every simplicial vertex of the previous level is
/// replaced by a fresh copy of the 15-vertex graph, wired to the three old
/// neighbors x < y < z via Ax, Ay, By, Bz, Cz, Cx.
LabeledGraph dillencourt_gn(int n);

Graph theta_graph();  // two hubs joined by three length-2 paths
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Random two-terminal series-parallel composition with exactly n vertices,
/// simplified to a simple graph.  Deterministic per seed; always connected
/// and K4-minor-free.
Graph random_series_parallel(int n, std::uint64_t seed);

/// Random triangulation of an n-gon: maximal outerplanar, 2n-3 edges.
Graph maximal_outerplanar(int n, std::uint64_t seed);

}  // namespace spantree
