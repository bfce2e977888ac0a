#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/weights.hpp"

namespace spantree {

/// Exact toughness: min over cutsets S with c(G-S) >= 2 of |S|/c(G-S),
/// as a reduced fraction; infinite for complete graphs.
struct Toughness {
    long long num = 0;
    long long den = 1;
    bool infinite = false;

    static Toughness infinity();
    static Toughness ratio(long long num, long long den);

    bool operator==(const Toughness&) const = default;
    /// this < p/q (an infinite toughness compares above everything).
    bool less_than(long long p, long long q) const;
    std::string str() const;
};

/// Exhaustive check of c(G-S) <= sum over S of f(v)-1 for every nonempty S.
/// Returns the lexicographically first violating S, or nullopt when the
/// condition holds.  Enumeration is 2^n; refuses n above the limit.
std::optional<ViolationCertificate> check_condition_bruteforce(const Graph& g,
                                                               const DegreeBudget& f,
                                                               int limit = 20);

Toughness toughness(const Graph& g, int limit = 20);

/// True iff some spanning tree has d_T(v) <= f(v) everywhere and
/// d_T(v) <= f(v)-1 on the marked set.  Backtracking over edge subsets.
bool exists_degree_bounded_spanning_tree(const Graph& g, const DegreeBudget& f,
                                         const VertexSet& marked, int limit = 10);

/// Bitmask DP.  With `both_ends_in` given, only paths whose two endpoints
/// both lie in that set count.
bool hamiltonian_path(const Graph& g,
                      const std::optional<VertexSet>& both_ends_in = std::nullopt,
                      int limit = 24);

bool hamiltonian_cycle(const Graph& g, int limit = 24);

/// Ground truth for K4-minor detection: search for four vertices joined by
/// six internally disjoint paths (for K4, minors and subdivisions coincide).
bool has_k4_minor(const Graph& g, int limit = 12);

/// All connected graphs on n vertices up to isomorphism, built by vertex
/// augmentation with canonical-form deduplication (minimum adjacency
/// encoding over all permutations).  An optional hereditary filter (a
/// property preserved by vertex deletion, e.g. K4-minor-freeness) prunes
/// the search at every level.
std::vector<Graph> enumerate_connected_graphs(
    int n, const std::function<bool(const Graph&)>& keep = nullptr);

}  // namespace spantree
